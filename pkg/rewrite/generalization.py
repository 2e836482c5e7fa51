"""
Generalization - abstract common subterms of both sides of an equation
"""
from __future__ import annotations

from typing import Iterable, Mapping

from lang.names import fresh_name
from lang.syntax import Equation, Spec, Term, Type, Var, children, contains_csr, is_leaf, iter_subterms, term_size
from lang.typecheck import type_of
from rewrite.substitution import replace_subterm


def common_subterms(eq: Equation) -> list[Term]:
    """Maximal non-leaf subterms containing a CSR call that occur on both sides"""
    left = {t for t in iter_subterms(eq.lhs) if not is_leaf(t) and contains_csr(t)}
    found: list[Term] = []

    def walk(term: Term) -> None:
        if term in left:
            if term not in found:
                found.append(term)
            return
        for kid in children(term):
            walk(kid)

    walk(eq.rhs)
    return found


def find_generalization(eq: Equation, spec: Spec, context: Mapping[str, Type] | None = None,
                        avoid: Iterable[str] = ()) -> tuple[Equation, dict[str, Term]]:
    """The generalized equation and the fresh variable chosen for each abstracted subterm"""
    candidates = sorted(common_subterms(eq), key=term_size, reverse=True)
    if not candidates:
        return eq, {}
    env = dict(context or {})
    env.update(eq.env)
    taken = set(avoid) | set(env) | spec.global_names()
    lhs, rhs = eq.lhs, eq.rhs
    mapping: dict[str, Term] = {}
    binders = list(eq.binders)
    for sub in candidates:
        if sub not in iter_subterms(lhs) or sub not in iter_subterms(rhs):
            continue
        name = fresh_name("r", taken)
        taken.add(name)
        mapping[name] = sub
        binders.append((name, type_of(sub, env, spec)))
        lhs = replace_subterm(lhs, sub, Var(name))
        rhs = replace_subterm(rhs, sub, Var(name))
    generalized = Equation(tuple(binders), lhs, rhs).with_sides(lhs, rhs)
    return generalized, mapping


def generalize(eq: Equation, spec: Spec, context: Mapping[str, Type] | None = None) -> Equation:
    return find_generalization(eq, spec, context)[0]
