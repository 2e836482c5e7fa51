"""
Evaluator - reduction semantics of closed terms
reduce_step is the small-step rule set (leftmost-innermost); Evaluator is the
big-step interpreter used everywhere tests are run.
"""
from __future__ import annotations

import logging
from typing import Mapping

from config.prover_config import EVAL_FUEL, MAX_VALUE_DEPTH
from evaluation.values import AdtVal, Value, term_to_value, value_to_term
from lang.errors import FuelExhausted
from lang.syntax import (
    BoolConst, BuiltinApp, CsrApp, CtorApp, IntConst, Ite, Spec, Term, Var, children,
    with_children,
)
from rewrite.substitution import substitute

logger = logging.getLogger(__name__)


def apply_builtin(op: str, args: tuple[Value, ...]) -> Value:
    if op == "+":
        return args[0] + args[1]
    if op == "-":
        return args[0] - args[1]
    if op == "*":
        return args[0] * args[1]
    if op == "<=":
        return args[0] <= args[1]
    if op == "<":
        return args[0] < args[1]
    if op == "==":
        return args[0] == args[1]
    if op == "&&":
        return args[0] and args[1]
    if op == "||":
        return args[0] or args[1]
    if op == "!":
        return not args[0]
    raise ValueError(f"unknown operator {op}")


class Evaluator:
    """Big-step evaluation with memoized CSR applications"""

    def __init__(self, spec: Spec, fuel: int = EVAL_FUEL):
        self.spec = spec
        self.fuel = fuel
        self._memo: dict[tuple, Value] = {}
        self._steps = 0

    def _tick(self) -> None:
        self._steps += 1
        if self._steps > self.fuel:
            raise FuelExhausted(self.fuel)

    def evaluate(self, term: Term, env: Mapping[str, Value] | None = None) -> Value:
        """Value of term; free variables are looked up in env"""
        self._steps = 0
        try:
            return self._eval(term, env or {})
        except RecursionError:
            raise FuelExhausted(self.fuel) from None

    def apply_csr(self, name: str, args: tuple[Value, ...]) -> Value:
        self._steps = 0
        try:
            return self._apply(name, args)
        except RecursionError:
            raise FuelExhausted(self.fuel) from None

    def _apply(self, name: str, args: tuple[Value, ...]) -> Value:
        key = (name, args)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        self._tick()
        csr = self.spec.csr(name)
        scrutinee = args[-1]
        branch = csr.branch(scrutinee.ctor)
        env: dict[str, Value] = {p: v for (p, _), v in zip(csr.params[:-1], args[:-1])}
        env.update(zip(branch.binders, scrutinee.fields))
        if branch.recursive_binder is not None:
            sub = env[branch.recursive_binder]
            env[csr.result_var] = self._apply(name, args[:-1] + (sub,))
        result = self._eval(branch.body, env)
        self._memo[key] = result
        return result

    def _eval(self, term: Term, env: Mapping[str, Value]) -> Value:
        if isinstance(term, Var):
            return env[term.name]
        if isinstance(term, (IntConst, BoolConst)):
            return term.value
        if isinstance(term, Ite):
            if self._eval(term.cond, env):
                return self._eval(term.then_branch, env)
            return self._eval(term.else_branch, env)
        if isinstance(term, BuiltinApp):
            self._tick()
            return apply_builtin(term.op, tuple(self._eval(a, env) for a in term.args))
        if isinstance(term, CtorApp):
            value = AdtVal(term.ctor, tuple(self._eval(a, env) for a in term.args))
            if value.depth > MAX_VALUE_DEPTH:
                raise FuelExhausted(self.fuel)
            return value
        if isinstance(term, CsrApp):
            return self._apply(term.csr, tuple(self._eval(a, env) for a in term.args))
        raise TypeError(f"not a term: {term!r}")


def evaluate(term: Term, spec: Spec, fuel: int = EVAL_FUEL) -> Value:
    return Evaluator(spec, fuel).evaluate(term)


# ============================================================================
# SMALL-STEP RULES
# ============================================================================

def _is_value(term: Term) -> bool:
    return term_to_value(term) is not None


def unfold_call(term: CsrApp, spec: Spec) -> Term:
    """One unfolding of a call whose recursive argument is constructor-headed; the other
    arguments and the constructor fields may be open terms"""
    csr = spec.csr(term.csr)
    scrutinee = term.args[-1]
    branch = csr.branch(scrutinee.ctor)
    subst: dict[str, Term] = {p: a for (p, _), a in zip(csr.params[:-1], term.args[:-1])}
    subst.update(zip(branch.binders, scrutinee.args))
    if branch.recursive_binder is not None:
        subst[csr.result_var] = CsrApp(csr.name, term.args[:-1] + (subst[branch.recursive_binder],))
    return substitute(branch.body, subst)


def reduce_step(term: Term, spec: Spec) -> Term | None:
    """One leftmost-innermost reduction, or None when term is a normal form"""
    kids = children(term)
    for i, kid in enumerate(kids):
        reduced = reduce_step(kid, spec)
        if reduced is not None:
            return with_children(term, kids[:i] + (reduced,) + kids[i + 1:])
    if isinstance(term, BuiltinApp) and all(_is_value(k) for k in kids):
        return value_to_term(apply_builtin(term.op, tuple(term_to_value(k) for k in kids)))
    if isinstance(term, Ite) and isinstance(term.cond, BoolConst):
        return term.then_branch if term.cond.value else term.else_branch
    if isinstance(term, CsrApp) and all(_is_value(k) for k in kids):
        return unfold_call(term, spec)
    return None


def reduce_fully(term: Term, spec: Spec, fuel: int = EVAL_FUEL) -> Term:
    """Closure of reduce_step"""
    for _ in range(fuel):
        try:
            nxt = reduce_step(term, spec)
        except RecursionError:
            raise FuelExhausted(fuel) from None
        if nxt is None:
            return term
        term = nxt
    raise FuelExhausted(fuel)
