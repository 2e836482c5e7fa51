"""
Pretty printer - surface syntax that parse_spec / parse_equation read back
"""
from __future__ import annotations

from lang.parser import OPERATOR_PREC
from lang.syntax import (
    AdtDef, BoolConst, BuiltinApp, CsrApp, CsrDef, CtorApp, Equation, IntConst, Ite, Spec,
    Term, Var, children, with_children,
)

APP_PREC = 6
ATOM_PREC = 7


def _fmt(term: Term, ctx: int) -> str:
    if isinstance(term, Var):
        return term.name
    if isinstance(term, IntConst):
        return str(term.value) if term.value >= 0 else f"(-{-term.value})"
    if isinstance(term, BoolConst):
        return "true" if term.value else "false"
    if isinstance(term, (CtorApp, CsrApp)):
        name = term.ctor if isinstance(term, CtorApp) else term.csr
        if not term.args:
            return name
        text = " ".join([name] + [_fmt(a, ATOM_PREC) for a in term.args])
        return f"({text})" if ctx > APP_PREC else text
    if isinstance(term, BuiltinApp):
        if term.op == "!":
            return "!" + _fmt(term.args[0], ATOM_PREC)
        prec = OPERATOR_PREC[term.op]
        text = f"{_fmt(term.args[0], prec)} {term.op} {_fmt(term.args[1], prec + 1)}"
        return f"({text})" if ctx > prec else text
    if isinstance(term, Ite):
        text = f"if {_fmt(term.cond, 0)} then {_fmt(term.then_branch, 0)} else {_fmt(term.else_branch, 0)}"
        return f"({text})" if ctx > 0 else text
    raise TypeError(f"not a term: {term!r}")


def _binders(binders) -> str:
    return "".join(f" ({name}: {type_})" for name, type_ in binders)


def _inline_self_calls(csr: CsrDef, body: Term, rec_binder: str) -> Term:
    call = CsrApp(csr.name, tuple(Var(n) for n, _ in csr.params[:-1]) + (Var(rec_binder),))

    def go(term: Term) -> Term:
        if isinstance(term, Var) and term.name == csr.result_var:
            return call
        return with_children(term, tuple(go(k) for k in children(term)))

    return go(body)


def _print_csr(csr: CsrDef) -> str:
    lines = [f"Let {csr.name}{_binders(csr.params)} =", f"  match {csr.params[-1][0]} with"]
    for branch in csr.branches:
        body = branch.body
        if branch.recursive_binder is not None:
            body = _inline_self_calls(csr, body, branch.recursive_binder)
        pattern = " ".join((branch.ctor,) + branch.binders)
        lines.append(f"  | {pattern} -> {_fmt(body, 0)}")
    lines.append("  end;")
    return "\n".join(lines)


def _print_adt(adt: AdtDef) -> str:
    ctors = [" ".join([c.name] + [str(f) for f in c.fields]) for c in adt.constructors]
    return f"Inductive {adt.name} = " + " | ".join(ctors) + ";"


def pretty_print(x) -> str:
    """Render a Term, Equation, CsrDef, AdtDef or Spec"""
    if isinstance(x, Equation):
        return f"forall{_binders(x.binders)}. {_fmt(x.lhs, 0)} = {_fmt(x.rhs, 0)}"
    if isinstance(x, CsrDef):
        return _print_csr(x)
    if isinstance(x, AdtDef):
        return _print_adt(x)
    if isinstance(x, Spec):
        parts = [_print_adt(a) for a in x.adts] + [_print_csr(c) for c in x.csrs]
        if x.goal is not None:
            g = x.goal
            parts.append(f"Goal{_binders(g.binders)}. {_fmt(g.lhs, 0)} = {_fmt(g.rhs, 0)};")
        return "\n".join(parts) + "\n"
    return _fmt(x, 0)


def show_equation(eq: Equation) -> str:
    """lhs = rhs, without the quantifier"""
    return f"{_fmt(eq.lhs, 0)} = {_fmt(eq.rhs, 0)}"
