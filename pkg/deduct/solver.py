"""
Deductive solver - normalization, case splits on conditions and a bounded
breadth-first search over premise rewrites
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from config.prover_config import ProverConfig
from deduct.normalize import FALSE, TRUE, Normalizer
from engine.goals import Goal
from evaluation.falsifier import CounterExample, falsify
from evaluation.generator import derive_rng
from lang.errors import FuelExhausted
from lang.printer import pretty_print
from lang.syntax import Equation, Ite, Term, iter_subterms
from rewrite.matching import DIRECTIONS, rewrite_with
from rewrite.substitution import replace_subterm

logger = logging.getLogger(__name__)

PROVED = "proved"
DISPROVED = "disproved"
UNKNOWN = "unknown"

State = tuple[Term, Term]


@dataclass(frozen=True)
class DeductOutcome:
    status: str
    steps: tuple = ()
    counterexample: CounterExample | None = None
    explored: int = 0

    @property
    def proved(self) -> bool:
        return self.status == PROVED

    @property
    def disproved(self) -> bool:
        return self.status == DISPROVED

    def to_json(self) -> dict:
        out = {"status": self.status, "steps": list(self.steps), "explored": self.explored}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
        return out


def split_condition(lhs: Term, rhs: Term) -> Term | None:
    """Condition of the leftmost-outermost conditional whose condition has none inside"""
    for side in (lhs, rhs):
        for sub in iter_subterms(side):
            if isinstance(sub, Ite) and not any(isinstance(t, Ite) for t in iter_subterms(sub.cond)):
                return sub.cond
    return None


def prepare_rules(premises: Sequence[Equation], normalizer: Normalizer) -> list[tuple[str, Equation]]:
    """Normalized premises keyed by their printed form, trivial ones dropped"""
    rules = []
    for premise in premises:
        rule = normalizer.equation(premise)
        if rule.lhs != rule.rhs:
            rules.append((pretty_print(premise), rule))
    return rules


class DeductiveSolver:
    def __init__(self, spec, config: ProverConfig, normalizer: Normalizer | None = None):
        self.spec = spec
        self.config = config
        self.normalize = normalizer or Normalizer(spec)

    def refute(self, goal: Goal, rng: np.random.Generator | None = None) -> CounterExample | None:
        rng = rng if rng is not None else derive_rng(self.config.seed, "deduct", goal.key())
        try:
            return falsify(goal.target, self.spec, self.config.falsify_tests, rng,
                           env=dict(goal.context), size_bound=self.config.size_bound,
                           int_range=self.config.int_range)
        except FuelExhausted:
            logger.debug("falsification ran out of fuel on %s", goal.key())
            return None

    def try_deductive(self, goal: Goal, rng: np.random.Generator | None = None) -> DeductOutcome:
        cex = self.refute(goal, rng)
        if cex is not None:
            return DeductOutcome(DISPROVED, counterexample=cex)
        rules = prepare_rules(goal.premises, self.normalize)
        self._explored = 0
        lhs, rhs = self.normalize(goal.target.lhs), self.normalize(goal.target.rhs)
        steps = self._prove(lhs, rhs, rules, self.config.split_depth)
        if steps is None:
            logger.debug("deduct gave up on %s after %d states", goal.key(), self._explored)
            return DeductOutcome(UNKNOWN, explored=self._explored)
        return DeductOutcome(PROVED, tuple(steps), explored=self._explored)

    def _prove(self, lhs: Term, rhs: Term, rules, splits: int) -> list | None:
        if lhs == rhs:
            return []
        cond = split_condition(lhs, rhs) if splits > 0 else None
        if cond is not None:
            branches = []
            for value in (TRUE, FALSE):
                sub = self._prove(self.normalize(replace_subterm(lhs, cond, value)),
                                  self.normalize(replace_subterm(rhs, cond, value)), rules, splits - 1)
                if sub is None:
                    break
                branches.append(sub)
            else:
                return [{"split": pretty_print(cond), "then": branches[0], "else": branches[1]}]
        return self._search(lhs, rhs, rules)

    def _search(self, lhs: Term, rhs: Term, rules) -> list | None:
        if not rules:
            return None
        start: State = (lhs, rhs)
        parent: dict[State, tuple[State, dict] | None] = {start: None}
        queue = deque([(start, 0)])
        while queue:
            state, depth = queue.popleft()
            if depth >= self.config.deduct_depth:
                continue
            for side_index, side in enumerate(state):
                for text, rule in rules:
                    for direction in DIRECTIONS:
                        for pos, rewritten in rewrite_with(rule, direction, side):
                            new = self.normalize(rewritten)
                            nxt = (new, state[1]) if side_index == 0 else (state[0], new)
                            if nxt in parent:
                                continue
                            self._explored += 1
                            step = {"side": "lhs" if side_index == 0 else "rhs", "premise": text,
                                    "direction": direction, "position": list(pos)}
                            parent[nxt] = (state, step)
                            if nxt[0] == nxt[1]:
                                return self._path(parent, nxt)
                            if self._explored >= self.config.deduct_budget:
                                return None
                            queue.append((nxt, depth + 1))
        return None

    @staticmethod
    def _path(parent, state: State) -> list[dict]:
        steps = []
        while parent[state] is not None:
            state, step = parent[state]
            steps.append(step)
        return steps[::-1]


def try_deductive(goal: Goal, spec, config: ProverConfig) -> DeductOutcome:
    return DeductiveSolver(spec, config).try_deductive(goal)
