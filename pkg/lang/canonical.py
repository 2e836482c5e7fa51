"""
Canonical form of structural recursions
Inline self calls "f v1 ... v(k-1) t" become the recursive-result variable.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from lang.errors import (
    DuplicateName, IllegalSelfCall, NonExhaustiveMatch, SpecSyntaxError, SpecTypeError,
)
from lang.names import fresh_name
from lang.syntax import (
    AdtDef, Branch, CsrApp, CtorApp, CsrDef, Term, Type, Var, children, iter_subterms,
    with_children,
)


@dataclass(frozen=True)
class RawBranch:
    ctor: str
    binders: tuple[str, ...]
    body: Term
    position: tuple[int, int] | None = None


@dataclass(frozen=True)
class RawCsr:
    name: str
    params: tuple[tuple[str, Type], ...]
    match_var: str
    branches: tuple[RawBranch, ...]
    position: tuple[int, int] | None = None


def _rewrite_body(body: Term, raw: RawCsr, rec_binder: str | None, result_var: str,
                  pattern: Term) -> Term:
    prefix = tuple(Var(name) for name, _ in raw.params[:-1])
    matched = raw.params[-1][0]

    def go(term: Term) -> Term:
        if isinstance(term, CsrApp) and term.csr == raw.name:
            if (rec_binder is not None and term.args[:-1] == prefix
                    and len(term.args) == len(raw.params) and term.args[-1] == Var(rec_binder)):
                return Var(result_var)
            raise IllegalSelfCall(raw.name, term)
        if isinstance(term, Var) and term.name == matched:
            return pattern
        return with_children(term, tuple(go(k) for k in children(term)))

    return go(body)


def canonicalize_csr(raw: RawCsr, adts: Mapping[str, AdtDef]) -> CsrDef:
    """Check the match shape of a raw definition and replace its self calls"""
    match_param, match_type = raw.params[-1]
    if raw.match_var != match_param:
        raise SpecSyntaxError(f"{raw.name} must match on its last parameter {match_param}", raw.position)
    adt = adts.get(match_type.name)
    if adt is None:
        raise SpecTypeError(Var(match_param), "an algebraic data type", match_type)

    param_names = [name for name, _ in raw.params]
    for name in param_names:
        if param_names.count(name) > 1:
            raise DuplicateName(name, f"parameter of {raw.name}")

    by_ctor: dict[str, RawBranch] = {}
    ctor_defs = {c.name: c for c in adt.constructors}
    for branch in raw.branches:
        ctor = ctor_defs.get(branch.ctor)
        if ctor is None:
            raise SpecTypeError(Var(raw.match_var), f"a constructor of {adt.name}", branch.ctor)
        if branch.ctor in by_ctor:
            raise DuplicateName(branch.ctor, f"branch of {raw.name}")
        if len(branch.binders) != len(ctor.fields):
            raise SpecSyntaxError(
                f"{branch.ctor} takes {len(ctor.fields)} fields, {len(branch.binders)} given",
                branch.position,
            )
        for name in branch.binders:
            if branch.binders.count(name) > 1 or name in param_names:
                raise DuplicateName(name, f"binder in {raw.name}")
        by_ctor[branch.ctor] = branch
    for ctor in adt.constructors:
        if ctor.name not in by_ctor:
            raise NonExhaustiveMatch(raw.name, ctor.name)

    used = set(param_names)
    for branch in raw.branches:
        used.update(branch.binders)
        used.update(t.name for t in iter_subterms(branch.body) if isinstance(t, Var))
    result_var = fresh_name("r", used)

    branches = []
    for ctor in adt.constructors:
        branch = by_ctor[ctor.name]
        rec_index = adt.recursive_index(ctor)
        rec_binder = branch.binders[rec_index] if rec_index is not None else None
        pattern = CtorApp(ctor.name, tuple(Var(b) for b in branch.binders))
        body = _rewrite_body(branch.body, raw, rec_binder, result_var, pattern)
        branches.append(Branch(ctor.name, branch.binders, body, rec_binder))
    return CsrDef(raw.name, raw.params, tuple(branches), result_var)
