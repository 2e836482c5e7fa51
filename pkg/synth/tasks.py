"""
Synthesis tasks - one per constructor of the recursion variable's type
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from config.prover_config import ProverConfig
from evaluation.evaluator import Evaluator
from evaluation.falsifier import random_assignments
from evaluation.values import Value
from lang.errors import FuelExhausted, SynthesisFailed
from lang.names import fresh_fields, fresh_name
from lang.syntax import CtorApp, Spec, Term, Type, Var, var_order
from lang.typecheck import type_of
from rewrite.substitution import substitute

logger = logging.getLogger(__name__)

BASE = "base"
COMB = "comb"


@dataclass(frozen=True)
class SynthTask:
    kind: str
    ctor: str
    target: Term
    allowed_vars: tuple[tuple[str, Type], ...]
    field_names: tuple[str, ...]
    recursive_binder: str | None
    result_var: str | None
    tests: tuple[dict[str, Value], ...]     # bindings of allowed_vars
    outputs: tuple[Value, ...]
    output_type: Type


def prefix_params(ps: Term, v: str, env: Mapping[str, Type]) -> tuple[tuple[str, Type], ...]:
    """Free variables of ps other than v, in order of first occurrence"""
    return tuple((n, env[n]) for n in var_order(ps) if n != v)


def make_tasks(ps: Term, v: str, spec: Spec, env: Mapping[str, Type], config: ProverConfig,
               rng: np.random.Generator) -> list[SynthTask]:
    """Specifications ps[v := c fields] = base_c(...) and, for recursive constructors,
    ps[v := c fields] = comb_c(..., r) with r bound to ps[v := t]"""
    prefix = prefix_params(ps, v, env)
    adt = spec.adt_of(env[v])
    output_type = type_of(ps, env, spec)
    evaluator = Evaluator(spec, config.fuel)
    avoid = set(env) | spec.global_names()
    tasks = []
    for ctor in adt.constructors:
        names, rec = fresh_fields(spec, ctor.name, avoid)
        target = substitute(ps, {v: CtorApp(ctor.name, tuple(Var(n) for n in names))})
        types = dict(prefix)
        types.update(zip(names, ctor.fields))
        result_var = None
        allowed = list(prefix) + [(n, t) for n, t in zip(names, ctor.fields) if n != rec]
        if rec is not None:
            result_var = fresh_name("r", avoid | set(names))
            allowed.append((result_var, output_type))
        inputs = random_assignments(list(types), types, spec, config.synth_tests, rng,
                                    config.size_bound, config.int_range)
        tests, outputs = [], []
        try:
            for assignment in inputs:
                row = dict(assignment)
                if rec is not None:
                    row[result_var] = evaluator.evaluate(substitute(ps, {v: Var(rec)}), assignment)
                tests.append({n: row[n] for n, _ in allowed})
                outputs.append(evaluator.evaluate(target, assignment))
        except FuelExhausted as exc:
            raise SynthesisFailed(f"tests for {ctor.name} ran out of fuel") from exc
        tasks.append(SynthTask(COMB if rec is not None else BASE, ctor.name, target, tuple(allowed),
                               names, rec, result_var, tuple(tests), tuple(outputs), output_type))
    logger.debug("%d synthesis tasks for %s on %s", len(tasks), ps, v)
    return tasks
