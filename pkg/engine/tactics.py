"""
Lemma tactics - extract a subprogram, synthesize a CSR computing it, rewrite the goal
Tactic 1 removes a composition; tactic 2 moves a variable into recursive position.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from config.prover_config import ProverConfig
from forms.friendly import check_f11, count_forms, is_induction_friendly, other_side
from lang.errors import NoCsrOccurrence, NoExtraction, NotEligible, ProgressViolation
from lang.names import fresh_letters
from lang.printer import pretty_print
from lang.syntax import (
    CsrApp, CsrDef, Equation, Ite, Spec, Term, Type, Var, children, contains_csr, with_children,
)
from lang.typecheck import type_of
from rewrite.abstraction import Abstraction, abstract_args
from rewrite.matching import R2L, positions, rewrite_all
from rewrite.measures import measure_phi, measure_psi
from synth.lemma import synthesize_csr

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Extraction:
    abstraction: Abstraction
    variable: str
    env: dict[str, Type]      # types of the fresh variables

    @property
    def ps(self) -> Term:
        return self.abstraction.skeleton


@dataclass(frozen=True)
class TacticOutcome:
    tactic: int
    extraction: Extraction
    csr: CsrDef
    lemma: Equation
    transformed: Equation
    spec: Spec


def _avoid(eq: Equation, env: Mapping[str, Type], spec: Spec) -> set[str]:
    return set(env) | eq.free_vars() | spec.global_names()


def _fresh_types(abstraction: Abstraction, env: Mapping[str, Type], spec: Spec) -> dict[str, Type]:
    return {name: type_of(sub, env, spec) for name, sub in abstraction.bindings}


def _placeholder_lemma(extraction_vars, ps: Term, v: str, types) -> Equation:
    prefix = [n for n in extraction_vars if n != v]
    call = CsrApp("f*", tuple(Var(n) for n in prefix + [v]))
    return Equation(tuple((n, types[n]) for n in prefix + [v]), call, ps)


def choose_variable(ps: Term, types: Mapping[str, Type]) -> str | None:
    """ADT-typed variable of ps whose prospective lemma satisfies the most forms"""
    order = [n for n in dict.fromkeys(t.name for _, t in positions(ps) if isinstance(t, Var))]
    best, best_score = None, -1
    for name in order:
        if not types[name].is_adt:
            continue
        score = count_forms(_placeholder_lemma(order, ps, name, types), name)
        if score > best_score:
            best, best_score = name, score
    return best


# ============================================================================
# TACTIC 1: REMOVE A COMPOSITION
# ============================================================================

def tactic1_precond(eq: Equation) -> bool:
    return check_f11(eq) is None


def tactic1_extract(eq: Equation, spec: Spec, env: Mapping[str, Type]) -> Extraction:
    """Cheapest abstraction over every application on either side, LHS first and
    leftmost-outermost on ties"""
    avoid = _avoid(eq, env, spec)
    best: Extraction | None = None
    for side in eq.sides():
        for _, sub in positions(side):
            if isinstance(sub, Ite) or not children(sub):
                continue
            try:
                abstraction = abstract_args(sub, avoid)
            except NotEligible:
                continue
            if not contains_csr(abstraction.skeleton):
                continue
            if best is not None and abstraction.cost >= best.abstraction.cost:
                continue
            types = _fresh_types(abstraction, env, spec)
            v = choose_variable(abstraction.skeleton, types)
            if v is not None:
                best = Extraction(abstraction, v, types)
    if best is None:
        raise NoExtraction(pretty_print(eq))
    return best


# ============================================================================
# TACTIC 2: SWITCH RECURSIVE ARGUMENTS
# ============================================================================

def tactic2_precond(eq: Equation) -> bool:
    report = is_induction_friendly(eq)
    return report.f11 is not None and not report.f12_all


def tactic2_extract(eq: Equation, spec: Spec, env: Mapping[str, Type]) -> Extraction:
    """Deepest CSR call taking the single-call side's recursive variable x as a
    non-recursive argument; all its arguments are abstracted and v stands for x"""
    f11 = is_induction_friendly(eq).f11
    x = Var(f11.recursive_var)
    best, best_depth = None, -1
    for pos, sub in positions(other_side(eq, f11.side)):
        if not isinstance(sub, CsrApp) or sub.args[-1] == x or x not in sub.args[:-1]:
            continue
        if len(pos) > best_depth:
            best, best_depth = sub, len(pos)
    if best is None:
        raise NoCsrOccurrence(f"{x.name} is never a non-recursive argument of a call in {pretty_print(eq)}")
    avoid = _avoid(eq, env, spec)
    distinct = list(dict.fromkeys(best.args))
    names = fresh_letters(len(distinct), avoid)
    var_for = dict(zip(distinct, names))
    skeleton = with_children(best, tuple(Var(var_for[a]) for a in best.args))
    abstraction = Abstraction(skeleton, tuple((var_for[a], a) for a in distinct))
    return Extraction(abstraction, var_for[x], _fresh_types(abstraction, env, spec))


# ============================================================================
# APPLICATION
# ============================================================================

def rewrite_with_lemma(eq: Equation, lemma: Equation) -> Equation:
    """Replace every instance of the lemma's right side by its left side"""
    lhs, _ = rewrite_all(lemma, R2L, eq.lhs)
    rhs, _ = rewrite_all(lemma, R2L, eq.rhs)
    return eq.with_sides(lhs, rhs)


def apply_tactic(eq: Equation, tactic: int, spec: Spec, env: Mapping[str, Type], config: ProverConfig,
                 rng: np.random.Generator) -> TacticOutcome:
    if tactic == 1:
        extraction = tactic1_extract(eq, spec, env)
    else:
        extraction = tactic2_extract(eq, spec, env)
    logger.info("tactic %d extracts %s on %s", tactic, pretty_print(extraction.ps), extraction.variable)
    csr, lemma, new_spec = synthesize_csr(extraction.ps, extraction.variable, spec,
                                          extraction.env, config, rng)
    transformed = rewrite_with_lemma(eq, lemma)
    check_progress(tactic, eq, transformed)
    return TacticOutcome(tactic, extraction, csr, lemma, transformed, new_spec)


def check_progress(tactic: int, before: Equation, after: Equation) -> None:
    if tactic == 1:
        old, new = measure_psi(before), measure_psi(after)
        what = "composed applications"
    else:
        x = is_induction_friendly(before).f11.recursive_var
        old, new = measure_phi(before, x), measure_phi(after, x)
        what = f"non-recursive uses of {x}"
    if new >= old:
        logger.error("tactic %d made no progress: %s -> %s", tactic, pretty_print(before), pretty_print(after))
        raise ProgressViolation(f"{what} went from {old} to {new}")
