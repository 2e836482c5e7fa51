"""
Normalization of open terms
Innermost strategy: children first, then the first rule that fires at the root,
re-normalizing whatever it produces.
"""
from __future__ import annotations

from deduct.arith import constant_of, normalize_arith, to_poly
from evaluation.evaluator import apply_builtin, unfold_call
from evaluation.values import term_to_value, value_to_term
from lang.syntax import (
    ARITH_OPS, BoolConst, BuiltinApp, CsrApp, CtorApp, Equation, Ite, Spec, Term, children,
    with_children,
)

TRUE = BoolConst(True)
FALSE = BoolConst(False)


def _simplify_compare(term: BuiltinApp) -> Term | None:
    left, right = term.args
    if left == right:
        return BoolConst(term.op != "<")
    if term.op == "==":
        lv, rv = term_to_value(left), term_to_value(right)
        if lv is not None and rv is not None:
            return BoolConst(lv == rv)
        return None
    diff = constant_of(to_poly(BuiltinApp("-", (right, left))))
    if diff is None:
        return None
    return BoolConst(diff >= 0 if term.op == "<=" else diff > 0)


def _simplify_bool(term: BuiltinApp) -> Term | None:
    if term.op == "!":
        arg = term.args[0]
        if isinstance(arg, BoolConst):
            return BoolConst(not arg.value)
        if isinstance(arg, BuiltinApp) and arg.op == "!":
            return arg.args[0]
        return None
    left, right = term.args
    unit, zero = (TRUE, FALSE) if term.op == "&&" else (FALSE, TRUE)
    if left == zero or right == zero:
        return zero
    if left == unit:
        return right
    if right == unit or left == right:
        return left
    return None


def _simplify_ite(term: Ite) -> Term | None:
    if term.cond == TRUE:
        return term.then_branch
    if term.cond == FALSE:
        return term.else_branch
    if term.then_branch == term.else_branch:
        return term.then_branch
    if isinstance(term.cond, BuiltinApp) and term.cond.op == "!":
        return Ite(term.cond.args[0], term.else_branch, term.then_branch)
    return None


class Normalizer:
    """Memoized normalize for one Spec"""

    def __init__(self, spec: Spec):
        self.spec = spec
        self._memo: dict[Term, Term] = {}

    def __call__(self, term: Term) -> Term:
        hit = self._memo.get(term)
        if hit is None:
            hit = self._normalize(term)
            self._memo[term] = hit
        return hit

    def equation(self, eq: Equation) -> Equation:
        return Equation(eq.binders, self(eq.lhs), self(eq.rhs))

    def _normalize(self, term: Term) -> Term:
        kids = children(term)
        if kids:
            term = with_children(term, tuple(self(k) for k in kids))
        step = self._root_step(term)
        return term if step is None else self(step)

    def _root_step(self, term: Term) -> Term | None:
        if isinstance(term, CsrApp):
            last = term.args[-1]
            if isinstance(last, CtorApp):
                return unfold_call(term, self.spec)
            if isinstance(last, Ite):
                prefix = term.args[:-1]
                return Ite(last.cond, CsrApp(term.csr, prefix + (last.then_branch,)),
                           CsrApp(term.csr, prefix + (last.else_branch,)))
            return None
        if isinstance(term, Ite):
            return _simplify_ite(term)
        if not isinstance(term, BuiltinApp):
            return None
        values = [term_to_value(a) for a in term.args]
        if all(v is not None for v in values):
            return value_to_term(apply_builtin(term.op, tuple(values)))
        if term.op in ARITH_OPS:
            flat = normalize_arith(term)
            return None if flat == term else flat
        if term.op in ("<=", "<", "=="):
            return _simplify_compare(term)
        return _simplify_bool(term)


def normalize(term: Term, spec: Spec) -> Term:
    return Normalizer(spec)(term)
