"""
Prover - the proof loop
Deduction first; then induction when the goal is friendly; otherwise a lemma
tactic (1 before 2) followed by the transformed goal; induction on a relaxed
single-call side as the last resort.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from config.prover_config import AUDIT_TESTS, ProverConfig
from deduct.normalize import Normalizer
from deduct.solver import DeductiveSolver
from engine.goals import Goal
from engine.induction import InductionCase, induct, split_induction, split_induction_f2
from engine.tactics import apply_tactic, tactic1_precond, tactic2_precond
from engine.trace import DeductStep, Failure, InductionStep, ProofNode, TacticStep, count_nodes
from evaluation.falsifier import falsify
from evaluation.generator import derive_rng
from forms.friendly import is_induction_friendly, relaxed_f11
from lang.errors import (
    FuelExhausted, NoCsrOccurrence, NoExtraction, NotFriendly, ProgressViolation, SynthesisFailed,
)
from lang.printer import pretty_print
from lang.syntax import Equation, Spec

logger = logging.getLogger(__name__)

PROVED = "Proved"
DISPROVED = "Disproved"
UNKNOWN = "Unknown"

TACTIC_ERRORS = (SynthesisFailed, NoExtraction, NoCsrOccurrence, NotFriendly)


@dataclass
class ProofResult:
    verdict: str
    trace: ProofNode
    spec: Spec
    wall_time_ms: int
    timed_out: bool = False
    stats: dict = field(default_factory=dict)

    def lemmas(self) -> list[Equation]:
        return [n.lemma for n in self.trace.walk() if isinstance(n, TacticStep) and n.lemma is not None]


class Prover:
    def __init__(self, spec: Spec, config: ProverConfig | None = None):
        self.config = config or ProverConfig()
        self.spec = spec
        self.normalizer = Normalizer(spec)
        self.solver = DeductiveSolver(spec, self.config, self.normalizer)
        self.deadline = float("inf")
        self.timed_out = False

    def _extend_spec(self, spec: Spec) -> None:
        if spec is not self.spec:
            self.spec = spec
            self.normalizer.spec = spec
            self.solver.spec = spec

    def _expired(self) -> bool:
        if not self.timed_out and time.monotonic() > self.deadline:
            logger.warning("timeout of %.1fs reached", self.config.timeout)
            self.timed_out = True
        return self.timed_out

    # ----- entry point -----

    def prove(self) -> ProofResult:
        if self.spec.goal is None:
            raise NotFriendly("no Goal declared")
        start = time.monotonic()
        self.deadline = start + self.config.timeout
        root = self.prove_goal(Goal(self.spec.goal))
        if root.complete:
            verdict = PROVED
        elif isinstance(root, DeductStep) and root.outcome.disproved:
            verdict = DISPROVED
        else:
            verdict = UNKNOWN
        elapsed = int((time.monotonic() - start) * 1000)
        logger.info("%s: %s in %d ms", pretty_print(self.spec.goal), verdict, elapsed)
        return ProofResult(verdict, root, self.spec, elapsed, self.timed_out, count_nodes(root))

    # ----- the loop -----

    def prove_goal(self, goal: Goal) -> ProofNode:
        if self._expired():
            return Failure(goal, reason="timeout")
        if goal.depth > self.config.max_depth:
            return Failure(goal, reason="depth limit")
        logger.debug("goal at depth %d: %s", goal.depth, goal.key())
        outcome = self.solver.try_deductive(goal)
        if outcome.proved:
            return DeductStep(goal, outcome=outcome)
        if outcome.disproved:
            if goal.depth == 0:
                return DeductStep(goal, outcome=outcome)
            return Failure(goal, reason=f"refuted: {outcome.counterexample.describe()}")

        eq = goal.target
        if goal.induct_on is not None:
            pinned = relaxed_f11(eq, goal.induct_on)
            if pinned is not None:
                return self._induction(goal, "pinned", lambda: induct(
                    goal, pinned.recursive_var, self.spec, self.normalizer, self.config, side=pinned.side),
                    pinned.recursive_var)

        report = is_induction_friendly(eq)
        if report.f1:
            return self._induction(goal, "f1", lambda: split_induction(
                goal, self.spec, self.normalizer, self.config), report.f11.recursive_var)
        if report.f2 is not None:
            return self._induction(goal, "f2", lambda: split_induction_f2(
                goal, self.spec, self.normalizer, self.config), report.f2.lhs_var)

        tactic = 1 if tactic1_precond(eq) else 2 if tactic2_precond(eq) else None
        node = None
        if tactic is not None:
            node = self._tactic(goal, tactic)
            if node.complete or self.timed_out:
                return node
        fallback = relaxed_f11(eq)
        if fallback is not None:
            logger.info("falling back to induction on %s", fallback.recursive_var)
            attempt = self._induction(goal, "fallback", lambda: induct(
                goal, fallback.recursive_var, self.spec, self.normalizer, self.config, side=fallback.side),
                fallback.recursive_var)
            if attempt.complete or node is None:
                return attempt
        return node or Failure(goal, reason="no rule applies")

    def _induction(self, goal: Goal, route: str, split, variable: str) -> ProofNode:
        try:
            cases: list[InductionCase] = split()
        except NotFriendly as exc:
            return Failure(goal, reason=str(exc))
        logger.info("induction on %s (%s) for %s", variable, route, goal.key())
        node = InductionStep(goal, variable=variable, route=route, cases=[c.info for c in cases])
        for case in cases:
            child = self.prove_goal(case.goal)
            node.children.append(child)
            if not child.complete:
                break
        return node

    def _tactic(self, goal: Goal, tactic: int) -> ProofNode:
        rng = derive_rng(self.config.seed, "synth", goal.key())
        try:
            out = apply_tactic(goal.target, tactic, self.spec, goal.env, self.config, rng)
        except TACTIC_ERRORS as exc:
            logger.info("tactic %d failed on %s: %s", tactic, goal.key(), exc)
            return Failure(goal, reason=f"tactic {tactic}: {exc}")
        except ProgressViolation as exc:
            return Failure(goal, reason=f"progress violation: {exc}")
        definition = pretty_print(out.csr) if out.spec is not self.spec else ""
        self._extend_spec(out.spec)
        node = TacticStep(goal, tactic=tactic, extracted=pretty_print(out.extraction.ps),
                          variable=out.extraction.variable, lemma=out.lemma, definition=definition)
        lemma_node = self.prove_goal(goal.child(out.lemma))
        node.children.append(lemma_node)
        if not lemma_node.complete:
            return node
        transformed = goal.child(out.transformed, premises=goal.premises + (out.lemma,))
        node.children.append(self.prove_goal(transformed))
        return node

    # ----- soundness audit -----

    def audit(self, result: ProofResult, n_tests: int = AUDIT_TESTS) -> list[str]:
        """Equations of a proved trace that fresh random tests refute"""
        problems = []
        for eq in [self.spec.goal] + result.lemmas():
            rng = derive_rng(self.config.seed, "audit", pretty_print(eq))
            try:
                cex = falsify(eq, result.spec, n_tests, rng, size_bound=self.config.size_bound,
                              int_range=self.config.int_range)
            except FuelExhausted:
                continue
            if cex is not None:
                problems.append(f"{pretty_print(eq)}: {cex.describe()}")
        return problems


def prove(spec: Spec, config: ProverConfig | None = None) -> ProofResult:
    return Prover(spec, config).prove()
