"""
Progress measures used to check that lemma tactics make progress
"""
from __future__ import annotations

from lang.syntax import CsrApp, Equation, Term, Var, children, is_leaf, iter_subterms


def _composed(term: Term) -> int:
    return sum(1 for t in iter_subterms(term) if any(not is_leaf(k) for k in children(t)))


def measure_psi(eq: Equation) -> int:
    """
    Applications having at least one non-leaf argument, whatever their head.

    Counting only CSR calls with a non-variable argument is too coarse: a tactic 1
    step that abstracts a built-in application such as a + sum b can leave that
    count unchanged. Leaves are variables, constants and nullary constructors,
    so sum nil counts 0 and h + sum t counts 1.
    """
    return _composed(eq.lhs) + _composed(eq.rhs)


def _outside_recursive(term: Term, v: str) -> int:
    if isinstance(term, Var):
        return 1 if term.name == v else 0
    kids = children(term)
    total = 0
    for i, kid in enumerate(kids):
        if isinstance(term, CsrApp) and i == len(kids) - 1 and kid == Var(v):
            continue
        total += _outside_recursive(kid, v)
    return total


def measure_phi(eq: Equation | Term, v: str) -> int:
    """Occurrences of v that are not the recursive argument of a CSR call"""
    if isinstance(eq, Equation):
        return _outside_recursive(eq.lhs, v) + _outside_recursive(eq.rhs, v)
    return _outside_recursive(eq, v)
