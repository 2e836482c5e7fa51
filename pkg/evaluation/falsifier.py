"""
Falsifier - refute equations by random testing
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from config.prover_config import INT_RANGE, SIZE_BOUND
from evaluation.evaluator import Evaluator
from evaluation.generator import gen_value
from evaluation.values import Value, show_value
from lang.syntax import Equation, Spec, Type, var_order

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CounterExample:
    assignment: tuple[tuple[str, Value], ...]
    lhs_value: Value
    rhs_value: Value

    def describe(self) -> str:
        binds = ", ".join(f"{name} = {show_value(v)}" for name, v in self.assignment)
        return f"{binds}: lhs = {show_value(self.lhs_value)}, rhs = {show_value(self.rhs_value)}"

    def to_json(self) -> dict:
        return {
            "assignment": {name: show_value(v) for name, v in self.assignment},
            "lhs": show_value(self.lhs_value),
            "rhs": show_value(self.rhs_value),
        }


def random_assignments(names: list[str], env: Mapping[str, Type], spec: Spec, n_tests: int,
                       rng: np.random.Generator, size_bound: int = SIZE_BOUND,
                       int_range: tuple[int, int] = INT_RANGE) -> list[dict[str, Value]]:
    """One independent stream per test index"""
    out = []
    for child in rng.spawn(n_tests):
        out.append({n: gen_value(env[n], size_bound, child, spec, int_range) for n in names})
    return out


def falsify(eq: Equation, spec: Spec, n_tests: int, rng: np.random.Generator, *,
            env: Mapping[str, Type] | None = None, size_bound: int = SIZE_BOUND,
            int_range: tuple[int, int] = INT_RANGE,
            evaluator: Evaluator | None = None) -> CounterExample | None:
    """First random assignment on which the two sides differ, or None"""
    types = dict(env or {})
    types.update(eq.env)
    names = list(eq.binder_names) + [n for n in var_order(eq.lhs, eq.rhs) if n not in eq.env]
    evaluator = evaluator or Evaluator(spec)
    for assignment in random_assignments(names, types, spec, n_tests, rng, size_bound, int_range):
        left = evaluator.evaluate(eq.lhs, assignment)
        right = evaluator.evaluate(eq.rhs, assignment)
        if left != right or type(left) is not type(right):
            logger.debug("counterexample found for %s", eq)
            return CounterExample(tuple(assignment.items()), left, right)
    return None
