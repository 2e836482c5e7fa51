"""
First-order matching and rule application
Equations used as rules orient left-to-right (L2R) or right-to-left (R2L);
their binders are the pattern variables, any other variable is a constant.
"""
from __future__ import annotations

from typing import Iterator

from lang.syntax import (
    BoolConst, BuiltinApp, CsrApp, CtorApp, Equation, IntConst, Term, Var, children,
    free_vars, with_children,
)
from rewrite.substitution import Subst, substitute

L2R = "l2r"
R2L = "r2l"
DIRECTIONS = (L2R, R2L)

Position = tuple[int, ...]


def _same_head(pattern: Term, subject: Term) -> bool:
    if type(pattern) is not type(subject):
        return False
    if isinstance(pattern, (IntConst, BoolConst)):
        return pattern.value == subject.value
    if isinstance(pattern, BuiltinApp):
        return pattern.op == subject.op and len(pattern.args) == len(subject.args)
    if isinstance(pattern, CtorApp):
        return pattern.ctor == subject.ctor and len(pattern.args) == len(subject.args)
    if isinstance(pattern, CsrApp):
        return pattern.csr == subject.csr and len(pattern.args) == len(subject.args)
    return True


def match_pattern(pattern: Term, pattern_vars: set[str] | frozenset[str], subject: Term,
                  subst: dict[str, Term] | None = None) -> dict[str, Term] | None:
    """Subst with substitute(pattern, subst) == subject, or None when there is no match"""
    subst = dict(subst or {})
    stack = [(pattern, subject)]
    while stack:
        p, s = stack.pop()
        if isinstance(p, Var):
            if p.name in pattern_vars:
                bound = subst.get(p.name)
                if bound is None:
                    subst[p.name] = s
                elif bound != s:
                    return None
            elif p != s:
                return None
            continue
        if not _same_head(p, s):
            return None
        stack.extend(zip(children(p), children(s)))
    return subst


def positions(term: Term, prefix: Position = ()) -> Iterator[tuple[Position, Term]]:
    """Subterms with their positions, leftmost-outermost first"""
    yield prefix, term
    for i, kid in enumerate(children(term)):
        yield from positions(kid, prefix + (i,))


def subterm_at(term: Term, position: Position) -> Term:
    for i in position:
        term = children(term)[i]
    return term


def replace_at(term: Term, position: Position, replacement: Term) -> Term:
    if not position:
        return replacement
    kids = children(term)
    i = position[0]
    return with_children(term, kids[:i] + (replace_at(kids[i], position[1:], replacement),) + kids[i + 1:])


def oriented(rule: Equation, direction: str) -> tuple[Term, Term] | None:
    """(pattern, template) for a direction, or None when the direction is unusable"""
    pattern, template = (rule.lhs, rule.rhs) if direction == L2R else (rule.rhs, rule.lhs)
    pattern_vars = set(rule.binder_names)
    if isinstance(pattern, Var) and pattern.name in pattern_vars:
        return None
    if (free_vars(template) & pattern_vars) - free_vars(pattern):
        return None
    return pattern, template


def rewrite_at(rule: Equation, direction: str, subject: Term, position: Position) -> Term | None:
    """subject with the redex at position rewritten, or None if it does not match"""
    directed = oriented(rule, direction)
    if directed is None:
        return None
    pattern, template = directed
    subst = match_pattern(pattern, set(rule.binder_names), subterm_at(subject, position))
    if subst is None:
        return None
    return replace_at(subject, position, substitute(template, subst))


def rewrite_with(rule: Equation, direction: str, subject: Term) -> list[tuple[Position, Term]]:
    """Every single-step rewrite of subject by rule, leftmost-outermost first"""
    directed = oriented(rule, direction)
    if directed is None:
        return []
    pattern, template = directed
    pattern_vars = set(rule.binder_names)
    results = []
    for pos, sub in positions(subject):
        subst = match_pattern(pattern, pattern_vars, sub)
        if subst is not None:
            results.append((pos, replace_at(subject, pos, substitute(template, subst))))
    return results


def rewrite_all(rule: Equation, direction: str, subject: Term) -> tuple[Term, int]:
    """One top-down pass rewriting every instance; matched arguments are rewritten too.
    Returns the new term and the number of instances replaced."""
    directed = oriented(rule, direction)
    if directed is None:
        return subject, 0
    pattern, template = directed
    pattern_vars = set(rule.binder_names)
    count = 0

    def go(term: Term) -> Term:
        nonlocal count
        subst = match_pattern(pattern, pattern_vars, term)
        if subst is not None:
            count += 1
            return substitute(template, {v: go(t) for v, t in subst.items()})
        kids = children(term)
        if not kids:
            return term
        return with_children(term, tuple(go(k) for k in kids))

    return go(subject), count


def instantiate(rule: Equation, direction: str, subst: Subst) -> tuple[Term, Term]:
    pattern, template = (rule.lhs, rule.rhs) if direction == L2R else (rule.rhs, rule.lhs)
    return substitute(pattern, subst), substitute(template, subst)
