"""
Induction - per-constructor subgoals with the hypothesis applied and the result generalized
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace

import numpy as np

from config.prover_config import ProverConfig
from deduct.normalize import Normalizer
from engine.goals import Goal
from evaluation.falsifier import falsify
from evaluation.generator import derive_rng
from forms.friendly import Side, check_f2, is_induction_friendly
from lang.errors import FuelExhausted, NotFriendly
from lang.names import fresh_fields
from lang.printer import pretty_print
from lang.syntax import CtorApp, Equation, Spec, Type, Var
from rewrite.generalization import find_generalization
from rewrite.matching import L2R, R2L, rewrite_all
from rewrite.substitution import substitute

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InductionCase:
    ctor: str
    goal: Goal
    info: dict


def _keep_generalization(eq: Equation, context: tuple[tuple[str, Type], ...], spec: Spec, config: ProverConfig,
                         rng: np.random.Generator) -> bool:
    try:
        cex = falsify(eq, spec, config.generalize_check_tests, rng, env=dict(context),
                      size_bound=config.size_bound, int_range=config.int_range)
    except FuelExhausted:
        return True
    if cex is not None:
        logger.warning("generalization %s is refuted (%s); keeping the specific goal",
                       pretty_print(eq), cex.describe())
        return False
    return True


def induct(goal: Goal, var: str, spec: Spec, normalizer: Normalizer, config: ProverConfig, *,
           side: Side | None, generalize: bool = True, pin: str | None = None) -> list[InductionCase]:
    """One subgoal per constructor of var's type. In recursive cases the hypothesis is
    the target at the recursive field; it is rewritten from side into that side of the
    case goal, which is then generalized unless generalize is off."""
    env = goal.env
    if var not in env or not env[var].is_adt:
        raise NotFriendly(f"{var} is not an ADT variable of the goal")
    if var not in goal.target.env:
        goal = goal.weaken(var)
    target = goal.target
    rest_binders = tuple(b for b in target.binders if b[0] != var)
    context = tuple(c for c in goal.context if c[0] != var)
    avoid = set(env) | spec.global_names()
    for premise in goal.premises:
        avoid |= premise.free_vars()
    cases = []
    for ctor in spec.adt_of(env[var]).constructors:
        names, rec = fresh_fields(spec, ctor.name, avoid)
        pattern = CtorApp(ctor.name, tuple(Var(n) for n in names))
        binders = rest_binders + tuple((n, t) for n, t in zip(names, ctor.fields) if n != rec)
        case_context = context + tuple((n, t) for n, t in zip(names, ctor.fields) if n == rec)
        instance = Equation(binders, normalizer(substitute(target.lhs, {var: pattern})),
                            normalizer(substitute(target.rhs, {var: pattern})))
        info = {"ctor": ctor.name, "fields": list(names), "instance": pretty_print(instance)}
        premises = goal.premises
        eq = instance
        if rec is not None:
            ih = Equation(rest_binders, substitute(target.lhs, {var: Var(rec)}),
                          substitute(target.rhs, {var: Var(rec)}))
            premises = premises + (ih,)
            info["ih"] = pretty_print(ih)
            if side is not None:
                eq, applied = _apply_hypothesis(eq, ih, side, normalizer)
                info["ih_side"] = side
                info["ih_applied"] = applied
                if applied == 0:
                    logger.debug("hypothesis %s found no redex in %s", pretty_print(ih), pretty_print(eq))
        if generalize and rec is not None:
            generalized, mapping = find_generalization(eq, spec, dict(case_context), avoid)
            if mapping:
                rng = derive_rng(config.seed, "generalize", pretty_print(generalized))
                if _keep_generalization(generalized, case_context, spec, config, rng):
                    info["generalized"] = {name: pretty_print(t) for name, t in mapping.items()}
                    info["before_generalization"] = pretty_print(eq)
                    eq = generalized
        child = goal.child(eq, premises=premises, context=case_context)
        if pin is not None:
            child = replace(child, induct_on=pin)
        cases.append(InductionCase(ctor.name, child, info))
    return cases


def _apply_hypothesis(eq: Equation, ih: Equation, side: Side, normalizer: Normalizer) -> tuple[Equation, int]:
    if side == "L":
        lhs, count = rewrite_all(ih, L2R, eq.lhs)
        return Equation(eq.binders, normalizer(lhs), eq.rhs), count
    rhs, count = rewrite_all(ih, R2L, eq.rhs)
    return Equation(eq.binders, eq.lhs, normalizer(rhs)), count


def split_induction(goal: Goal, spec: Spec, normalizer: Normalizer, config: ProverConfig) -> list[InductionCase]:
    """F1 route: induct on the recursive variable of the single-call side"""
    report = is_induction_friendly(goal.target)
    if not report.f1:
        raise NotFriendly(pretty_print(goal.target))
    return induct(goal, report.f11.recursive_var, spec, normalizer, config, side=report.f11.side)


def split_induction_f2(goal: Goal, spec: Spec, normalizer: Normalizer,
                       config: ProverConfig) -> list[InductionCase]:
    """F2 route: induct on the left call's recursive variable, apply the hypothesis right
    away and leave every case pinned to the right call's recursive variable"""
    eq = goal.target
    if not check_f2(eq):
        raise NotFriendly(pretty_print(eq))
    outer, inner = eq.lhs.args[-1].name, eq.rhs.args[-1].name
    return induct(goal, outer, spec, normalizer, config, side="L", generalize=False, pin=inner)
