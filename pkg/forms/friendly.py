"""
Friendly forms - syntactic classes of equations whose induction makes progress
F1: one side is f v1 ... vk over distinct variables (F1.1) and the other side only
passes vk as the recursive argument of CSR calls (F1.2).
F2: both sides are such calls.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from lang.syntax import CsrApp, Equation, Term, Var, iter_subterms, occurs
from rewrite.measures import measure_phi

Side = Literal["L", "R"]
SIDES: tuple[Side, ...] = ("L", "R")

EXISTS = "exists"
ALL = "all"


@dataclass(frozen=True)
class F11:
    side: Side
    csr: str
    recursive_var: str


@dataclass(frozen=True)
class F2Shape:
    lhs_csr: str
    rhs_csr: str
    lhs_var: str
    rhs_var: str
    shared: tuple[str, ...]     # variables passed to both calls


@dataclass(frozen=True)
class FormReport:
    f11: F11 | None
    f12_exists: bool
    f12_all: bool
    f2: F2Shape | None

    @property
    def f1(self) -> bool:
        return self.f11 is not None and self.f12_all

    @property
    def friendly(self) -> bool:
        return self.f1 or self.f2 is not None


def side_term(eq: Equation, side: Side) -> Term:
    return eq.lhs if side == "L" else eq.rhs


def other_side(eq: Equation, side: Side) -> Term:
    return eq.rhs if side == "L" else eq.lhs


def is_bare_call(term: Term) -> bool:
    """A CSR call whose arguments are pairwise distinct variables"""
    if not isinstance(term, CsrApp) or not term.args:
        return False
    if not all(isinstance(a, Var) for a in term.args):
        return False
    return len({a.name for a in term.args}) == len(term.args)


def f11_candidates(eq: Equation) -> list[F11]:
    return [F11(side, side_term(eq, side).csr, side_term(eq, side).args[-1].name)
            for side in SIDES if is_bare_call(side_term(eq, side))]


def check_f11(eq: Equation) -> F11 | None:
    candidates = f11_candidates(eq)
    return candidates[0] if candidates else None


def _recursive_uses(term: Term, v: str) -> list[CsrApp]:
    return [t for t in iter_subterms(term)
            if isinstance(t, CsrApp) and t.args and t.args[-1] == Var(v)]


def _clean(call: CsrApp, v: str) -> bool:
    return not any(occurs(v, a) for a in call.args[:-1])


def check_f12(term: Term, v: str, mode: str = ALL) -> bool:
    """Does term pass v only as the recursive argument of CSR calls?"""
    if not occurs(v, term):
        return True
    uses = _recursive_uses(term, v)
    if mode == EXISTS:
        return any(_clean(call, v) for call in uses)
    return measure_phi(term, v) == 0 and all(_clean(call, v) for call in uses)


def check_f2(eq: Equation) -> bool:
    return is_bare_call(eq.lhs) and is_bare_call(eq.rhs)


def _f2_shape(eq: Equation) -> F2Shape | None:
    if not check_f2(eq):
        return None
    left = [a.name for a in eq.lhs.args]
    right = [a.name for a in eq.rhs.args]
    return F2Shape(eq.lhs.csr, eq.rhs.csr, left[-1], right[-1], tuple(n for n in left if n in right))


def is_induction_friendly(eq: Equation) -> FormReport:
    """The first F1.1 side (L before R) whose opposite side satisfies F1.2 for all
    occurrences; otherwise the first F1.1 side with its weaker report"""
    candidates = f11_candidates(eq)
    for cand in candidates:
        rest = other_side(eq, cand.side)
        if check_f12(rest, cand.recursive_var, ALL):
            return FormReport(cand, True, True, _f2_shape(eq))
    first = candidates[0] if candidates else None
    exists = first is not None and check_f12(other_side(eq, first.side), first.recursive_var, EXISTS)
    return FormReport(first, exists, False, _f2_shape(eq))


def relaxed_f11(eq: Equation, var: str | None = None) -> F11 | None:
    """A side that is a CSR call whose recursive argument is a variable absent from
    its other arguments, L preferred; restricted to var when given"""
    for side in SIDES:
        term = side_term(eq, side)
        if not isinstance(term, CsrApp) or not term.args or not isinstance(term.args[-1], Var):
            continue
        name = term.args[-1].name
        if var is not None and name != var:
            continue
        if _clean(term, name):
            return F11(side, term.csr, name)
    return None


def count_forms(eq: Equation, v: str) -> int:
    """How many of F1.1 (on v), F1.2 and F2 the equation satisfies"""
    count = 0
    for cand in f11_candidates(eq):
        if cand.recursive_var == v:
            count += 1
            if check_f12(other_side(eq, cand.side), v, ALL):
                count += 1
            break
    if check_f2(eq):
        count += 1
    return count
