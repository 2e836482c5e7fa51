"""
Type checking - signatures, well-formedness and return-type inference
"""
from __future__ import annotations

from dataclasses import replace
from typing import Mapping

from lang.errors import CyclicDefinition, DuplicateName, SpecTypeError
from lang.syntax import (
    BOOL, INT, AdtDef, BoolConst, BuiltinApp, CsrApp, CsrDef, CtorApp, Equation, IntConst,
    Ite, Spec, Term, Type, Var, free_vars, iter_subterms,
)


class _UnknownReturnType(Exception):
    """A CSR whose return type is not inferred yet was applied"""


def _expect(term: Term, expected: Type, found: Type) -> None:
    if expected != found:
        raise SpecTypeError(term, expected, found)


def type_of(term: Term, env: Mapping[str, Type], spec: Spec,
            return_types: Mapping[str, Type] | None = None) -> Type:
    """Type of term under env; raises SpecTypeError"""
    if isinstance(term, Var):
        if term.name not in env:
            raise SpecTypeError(term, "a bound variable", "unbound", f"unbound variable {term.name}")
        return env[term.name]
    if isinstance(term, IntConst):
        return INT
    if isinstance(term, BoolConst):
        return BOOL
    if isinstance(term, Ite):
        _expect(term.cond, BOOL, type_of(term.cond, env, spec, return_types))
        then_type = type_of(term.then_branch, env, spec, return_types)
        _expect(term.else_branch, then_type, type_of(term.else_branch, env, spec, return_types))
        return then_type
    if isinstance(term, BuiltinApp):
        arg_types = [type_of(a, env, spec, return_types) for a in term.args]
        arity = 1 if term.op == "!" else 2
        if len(arg_types) != arity:
            raise SpecTypeError(term, f"{arity} arguments", f"{len(arg_types)} arguments")
        if term.op in ("+", "-", "*", "<=", "<"):
            for a, t in zip(term.args, arg_types):
                _expect(a, INT, t)
            return INT if term.op in ("+", "-", "*") else BOOL
        if term.op == "==":
            _expect(term.args[1], arg_types[0], arg_types[1])
            return BOOL
        for a, t in zip(term.args, arg_types):
            _expect(a, BOOL, t)
        return BOOL
    if isinstance(term, CtorApp):
        if term.ctor not in spec.ctor_map:
            raise SpecTypeError(term, "a constructor", term.ctor)
        adt, ctor = spec.ctor_map[term.ctor]
        if len(term.args) != len(ctor.fields):
            raise SpecTypeError(term, f"{len(ctor.fields)} arguments", f"{len(term.args)} arguments")
        for a, field_type in zip(term.args, ctor.fields):
            _expect(a, field_type, type_of(a, env, spec, return_types))
        return adt.type
    if isinstance(term, CsrApp):
        if term.csr not in spec.csr_map:
            raise SpecTypeError(term, "a defined function", term.csr)
        csr = spec.csr_map[term.csr]
        if len(term.args) != csr.arity:
            raise SpecTypeError(term, f"{csr.arity} arguments", f"{len(term.args)} arguments")
        for a, (_, param_type) in zip(term.args, csr.params):
            _expect(a, param_type, type_of(a, env, spec, return_types))
        result = csr.return_type
        if result is None and return_types is not None:
            result = return_types.get(csr.name)
        if result is None:
            raise _UnknownReturnType(csr.name)
        return result
    raise TypeError(f"not a term: {term!r}")


def branch_env(csr: CsrDef, ctor_name: str, spec: Spec, return_type: Type | None) -> dict[str, Type]:
    """Variables visible in one branch body"""
    env = dict(csr.params[:-1])
    ctor = spec.ctor(ctor_name)
    branch = csr.branch(ctor_name)
    env.update(zip(branch.binders, ctor.fields))
    if branch.recursive_binder is not None and return_type is not None:
        env[csr.result_var] = return_type
    return env


def _check_adts(adts: tuple[AdtDef, ...]) -> None:
    seen_types: set[str] = set()
    seen_ctors: set[str] = set()
    for adt in adts:
        if adt.name in seen_types or adt.name in ("Int", "Bool"):
            raise DuplicateName(adt.name, "type")
        for ctor in adt.constructors:
            if ctor.name in seen_ctors:
                raise DuplicateName(ctor.name, "constructor")
            seen_ctors.add(ctor.name)
            for field_type in ctor.fields:
                known = field_type.name in ("Int", "Bool") or field_type.name in seen_types
                if not known and field_type.name != adt.name:
                    raise SpecTypeError(ctor.name, "Int, Bool or a previously declared type", field_type)
            if sum(1 for f in ctor.fields if f.name == adt.name) > 1:
                raise SpecTypeError(ctor.name, "at most one recursive field", adt.name)
        if all(adt.recursive_index(c) is not None for c in adt.constructors):
            raise SpecTypeError(adt.name, "a base constructor", "none")
        seen_types.add(adt.name)


def _check_acyclic(spec: Spec) -> None:
    calls = {
        csr.name: {t.csr for b in csr.branches for t in iter_subterms(b.body)
                   if isinstance(t, CsrApp) and t.csr != csr.name}
        for csr in spec.csrs
    }
    state: dict[str, int] = {}

    def visit(name: str, path: list[str]) -> None:
        state[name] = 1
        for callee in sorted(calls.get(name, ())):
            if state.get(callee) == 1:
                raise CyclicDefinition(path[path.index(callee):] + [callee])
            if callee not in state:
                visit(callee, path + [callee])
        state[name] = 2

    for csr in spec.csrs:
        if csr.name not in state:
            visit(csr.name, [csr.name])


def _infer_return_types(spec: Spec) -> dict[str, Type]:
    """Fixpoint: a CSR's type is known once some branch body can be typed"""
    known: dict[str, Type] = {}
    pending = [c for c in spec.csrs if c.return_type is None]
    known.update({c.name: c.return_type for c in spec.csrs if c.return_type is not None})
    while pending:
        progress = False
        for csr in list(pending):
            for branch in csr.branches:
                if branch.recursive_binder is not None:
                    continue
                env = branch_env(csr, branch.ctor, spec, None)
                try:
                    known[csr.name] = type_of(branch.body, env, spec, known)
                except _UnknownReturnType:
                    continue
                pending.remove(csr)
                progress = True
                break
        if not progress:
            names = ", ".join(c.name for c in pending)
            raise SpecTypeError(names, "an inferable return type", "none")
    return known


def check_equation(eq: Equation, spec: Spec, context: Mapping[str, Type] | None = None) -> Type:
    env = dict(context or {})
    for name, type_ in eq.binders:
        if type_.is_adt and type_.name not in spec.adt_map:
            raise SpecTypeError(name, "a declared type", type_)
        if name in spec.global_names():
            raise DuplicateName(name, "variable (clashes with a definition)")
        env[name] = type_
    left = type_of(eq.lhs, env, spec)
    _expect(eq.rhs, left, type_of(eq.rhs, env, spec))
    return left


def typecheck(spec: Spec) -> Spec:
    """Check every well-formedness rule; returns spec with CSR return types filled in"""
    _check_adts(spec.adts)
    names: set[str] = set()
    for csr in spec.csrs:
        if csr.name in names or csr.name in spec.ctor_map:
            raise DuplicateName(csr.name, "function")
        names.add(csr.name)
        for name, type_ in csr.params:
            if type_.is_adt and type_.name not in spec.adt_map:
                raise SpecTypeError(name, "a declared type", type_)
            if name in spec.ctor_map or name in spec.csr_map:
                raise DuplicateName(name, "parameter (clashes with a definition)")
    _check_acyclic(spec)
    return_types = _infer_return_types(spec)
    typed = replace(spec, csrs=tuple(replace(c, return_type=return_types[c.name]) for c in spec.csrs))
    for csr in typed.csrs:
        for branch in csr.branches:
            env = branch_env(csr, branch.ctor, typed, csr.return_type)
            extra = free_vars(branch.body) - set(env)
            if extra:
                name = sorted(extra)[0]
                raise SpecTypeError(Var(name), "a bound variable", "unbound", f"{csr.name}: unbound variable {name}")
            _expect(branch.body, csr.return_type, type_of(branch.body, env, typed))
    if typed.goal is not None:
        check_equation(typed.goal, typed)
    return typed
