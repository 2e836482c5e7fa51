"""
Integer arithmetic in sum-of-monomials form
"""
from __future__ import annotations

from collections import defaultdict

from lang.syntax import BuiltinApp, IntConst, Term, term_key

Monomial = tuple[Term, ...]     # atoms sorted by term_key; () is the constant
Poly = dict[Monomial, int]


def _clean(poly: dict) -> Poly:
    return {m: c for m, c in poly.items() if c != 0}


def add(p: Poly, q: Poly, sign: int = 1) -> Poly:
    out = defaultdict(int, p)
    for m, c in q.items():
        out[m] += sign * c
    return _clean(out)


def mul(p: Poly, q: Poly) -> Poly:
    out: dict[Monomial, int] = defaultdict(int)
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            out[tuple(sorted(m1 + m2, key=term_key))] += c1 * c2
    return _clean(out)


def to_poly(term: Term) -> Poly:
    """Read + - * and integer constants; any other term is an atom"""
    if isinstance(term, IntConst):
        return _clean({(): term.value})
    if isinstance(term, BuiltinApp) and term.op in ("+", "-", "*"):
        left, right = to_poly(term.args[0]), to_poly(term.args[1])
        if term.op == "+":
            return add(left, right)
        if term.op == "-":
            return add(left, right, -1)
        return mul(left, right)
    return {(term,): 1}


def constant_of(poly: Poly) -> int | None:
    """The value of a constant polynomial, None when it has atoms"""
    if any(m for m in poly):
        return None
    return poly.get((), 0)


def _product(mono: Monomial) -> Term:
    out = mono[0]
    for atom in mono[1:]:
        out = BuiltinApp("*", (out, atom))
    return out


def _scaled(mono: Monomial, coeff: int) -> Term:
    if coeff == 1:
        return _product(mono)
    return BuiltinApp("*", (IntConst(coeff), _product(mono)))


def from_poly(poly: Poly) -> Term:
    """Left-nested sum, monomials in term_key order, the constant last"""
    monos = sorted((m for m in poly if m), key=lambda m: tuple(term_key(a) for a in m))
    const = poly.get((), 0)
    if not monos:
        return IntConst(const)
    first = monos[0]
    out = _scaled(first, poly[first])
    for mono in monos[1:]:
        coeff = poly[mono]
        if coeff > 0:
            out = BuiltinApp("+", (out, _scaled(mono, coeff)))
        else:
            out = BuiltinApp("-", (out, _scaled(mono, -coeff)))
    if const > 0:
        out = BuiltinApp("+", (out, IntConst(const)))
    elif const < 0:
        out = BuiltinApp("-", (out, IntConst(-const)))
    return out


def normalize_arith(term: Term) -> Term:
    return from_poly(to_poly(term))
