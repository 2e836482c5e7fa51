"""
Substitution and renaming of terms and equations
"""
from __future__ import annotations

from typing import Mapping

from lang.syntax import Equation, Term, Var, children, var_order, with_children

Subst = Mapping[str, Term]


def substitute(term: Term, subst: Subst) -> Term:
    """Simultaneous substitution; terms bind no variables so it is capture-free"""
    if not subst:
        return term
    if isinstance(term, Var):
        return subst.get(term.name, term)
    kids = children(term)
    if not kids:
        return term
    return with_children(term, tuple(substitute(k, subst) for k in kids))


def substitute_eq(eq: Equation, subst: Subst) -> Equation:
    return Equation(eq.binders, substitute(eq.lhs, subst), substitute(eq.rhs, subst))


def replace_subterm(term: Term, target: Term, replacement: Term) -> Term:
    """Replace every occurrence of target, outermost first"""
    if term == target:
        return replacement
    kids = children(term)
    if not kids:
        return term
    return with_children(term, tuple(replace_subterm(k, target, replacement) for k in kids))


def canonical_names(eq: Equation) -> Equation:
    """Rename binders to _0, _1, ... in order of first occurrence"""
    binder_types = eq.env
    order = [n for n in var_order(eq.lhs, eq.rhs) if n in binder_types]
    order += [n for n in eq.binder_names if n not in order]
    renaming = {old: f"_{i}" for i, old in enumerate(order)}
    subst = {old: Var(new) for old, new in renaming.items()}
    binders = tuple((renaming[n], binder_types[n]) for n in order)
    return Equation(binders, substitute(eq.lhs, subst), substitute(eq.rhs, subst))


def alpha_equivalent(first: Equation, second: Equation) -> bool:
    return canonical_names(first) == canonical_names(second)
