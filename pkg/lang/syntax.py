"""
Syntax - abstract syntax of the surface language
Types, terms, structural recursions (CSRs), equations and specs.
All values are immutable and hashable.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterator, Union


# ============================================================================
# TYPES
# ============================================================================

@dataclass(frozen=True)
class Type:
    """Int, Bool or the name of a declared ADT"""
    name: str

    @property
    def is_adt(self) -> bool:
        return self.name not in ("Int", "Bool")

    def __str__(self) -> str:
        return self.name


INT = Type("Int")
BOOL = Type("Bool")


@dataclass(frozen=True)
class CtorDef:
    name: str
    fields: tuple[Type, ...]


@dataclass(frozen=True)
class AdtDef:
    name: str
    constructors: tuple[CtorDef, ...]

    @property
    def type(self) -> Type:
        return Type(self.name)

    def recursive_index(self, ctor: CtorDef) -> int | None:
        """Index of the field of the ADT's own type, if any"""
        for i, t in enumerate(ctor.fields):
            if t.name == self.name:
                return i
        return None

    def is_base(self, ctor: CtorDef) -> bool:
        return self.recursive_index(ctor) is None


# ============================================================================
# TERMS
# ============================================================================

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class IntConst:
    value: int


@dataclass(frozen=True)
class BoolConst:
    value: bool


@dataclass(frozen=True)
class BuiltinApp:
    op: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class CtorApp:
    ctor: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class CsrApp:
    csr: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class Ite:
    cond: Term
    then_branch: Term
    else_branch: Term


Term = Union[Var, IntConst, BoolConst, BuiltinApp, CtorApp, CsrApp, Ite]

ARITH_OPS = ("+", "-", "*")
COMPARE_OPS = ("<=", "<", "==")
BOOL_OPS = ("&&", "||", "!")
BUILTIN_OPS = ARITH_OPS + COMPARE_OPS + BOOL_OPS


def children(term: Term) -> tuple[Term, ...]:
    if isinstance(term, (BuiltinApp, CtorApp, CsrApp)):
        return term.args
    if isinstance(term, Ite):
        return (term.cond, term.then_branch, term.else_branch)
    return ()


def with_children(term: Term, kids: tuple[Term, ...]) -> Term:
    """Rebuild term with new children, reusing term when nothing changed"""
    if isinstance(term, Ite):
        if kids == (term.cond, term.then_branch, term.else_branch):
            return term
        return Ite(*kids)
    if isinstance(term, (BuiltinApp, CtorApp, CsrApp)):
        kids = tuple(kids)
        if kids == term.args:
            return term
        return replace(term, args=kids)
    return term


def iter_subterms(term: Term) -> Iterator[Term]:
    """Pre-order traversal, outermost first, left to right"""
    yield term
    for kid in children(term):
        yield from iter_subterms(kid)


def free_vars(term: Term) -> set[str]:
    return {t.name for t in iter_subterms(term) if isinstance(t, Var)}


def var_order(*terms: Term) -> list[str]:
    """Variables in order of first occurrence"""
    seen: dict[str, None] = {}
    for term in terms:
        for t in iter_subterms(term):
            if isinstance(t, Var):
                seen.setdefault(t.name, None)
    return list(seen)


def term_size(term: Term) -> int:
    return sum(1 for _ in iter_subterms(term))


def is_leaf(term: Term) -> bool:
    """Variables, constants and nullary constructors"""
    if isinstance(term, (Var, IntConst, BoolConst)):
        return True
    return isinstance(term, CtorApp) and not term.args


def contains_csr(term: Term) -> bool:
    return any(isinstance(t, CsrApp) for t in iter_subterms(term))


def occurs(name: str, term: Term) -> bool:
    return any(isinstance(t, Var) and t.name == name for t in iter_subterms(term))


def term_key(term: Term) -> tuple:
    """Total order on terms used by the arithmetic normal form"""
    if isinstance(term, Var):
        return (0, term.name)
    if isinstance(term, CsrApp):
        return (1, term.csr, tuple(term_key(a) for a in term.args))
    if isinstance(term, CtorApp):
        return (2, term.ctor, tuple(term_key(a) for a in term.args))
    if isinstance(term, Ite):
        return (3, "", tuple(term_key(a) for a in children(term)))
    if isinstance(term, BuiltinApp):
        return (4, term.op, tuple(term_key(a) for a in term.args))
    if isinstance(term, BoolConst):
        return (5, int(term.value))
    return (6, term.value)


# ============================================================================
# DEFINITIONS
# ============================================================================

@dataclass(frozen=True)
class Branch:
    """One match arm; comb arms refer to the recursive result via result_var"""
    ctor: str
    binders: tuple[str, ...]
    body: Term
    recursive_binder: str | None = None


@dataclass(frozen=True)
class CsrDef:
    name: str
    params: tuple[tuple[str, Type], ...]
    branches: tuple[Branch, ...]
    result_var: str = "r"
    return_type: Type | None = None

    @property
    def arity(self) -> int:
        return len(self.params)

    @property
    def recursive_param(self) -> tuple[str, Type]:
        return self.params[-1]

    @property
    def adt_name(self) -> str:
        return self.params[-1][1].name

    def branch(self, ctor: str) -> Branch:
        for b in self.branches:
            if b.ctor == ctor:
                return b
        raise KeyError(ctor)

    @property
    def base_bodies(self) -> dict[str, Term]:
        return {b.ctor: b.body for b in self.branches if b.recursive_binder is None}

    @property
    def comb_bodies(self) -> dict[str, Term]:
        return {b.ctor: b.body for b in self.branches if b.recursive_binder is not None}


@dataclass(frozen=True)
class Equation:
    binders: tuple[tuple[str, Type], ...]
    lhs: Term
    rhs: Term

    @property
    def binder_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.binders)

    @property
    def env(self) -> dict[str, Type]:
        return dict(self.binders)

    def sides(self) -> tuple[Term, Term]:
        return (self.lhs, self.rhs)

    def free_vars(self) -> set[str]:
        return free_vars(self.lhs) | free_vars(self.rhs)

    def swap(self) -> Equation:
        return Equation(self.binders, self.rhs, self.lhs)

    def with_sides(self, lhs: Term, rhs: Term) -> Equation:
        """Same binders restricted to the variables that still occur"""
        used = free_vars(lhs) | free_vars(rhs)
        return Equation(tuple(b for b in self.binders if b[0] in used), lhs, rhs)


@dataclass(frozen=True)
class Spec:
    adts: tuple[AdtDef, ...]
    csrs: tuple[CsrDef, ...]
    goal: Equation | None = None
    synthesized: tuple[str, ...] = field(default=())

    @cached_property
    def adt_map(self) -> dict[str, AdtDef]:
        return {a.name: a for a in self.adts}

    @cached_property
    def ctor_map(self) -> dict[str, tuple[AdtDef, CtorDef]]:
        return {c.name: (a, c) for a in self.adts for c in a.constructors}

    @cached_property
    def csr_map(self) -> dict[str, CsrDef]:
        return {c.name: c for c in self.csrs}

    def adt_of(self, type_: Type) -> AdtDef:
        return self.adt_map[type_.name]

    def ctor(self, name: str) -> CtorDef:
        return self.ctor_map[name][1]

    def csr(self, name: str) -> CsrDef:
        return self.csr_map[name]

    def global_names(self) -> set[str]:
        return set(self.ctor_map) | set(self.csr_map)

    def with_csr(self, csr: CsrDef) -> Spec:
        """A new Spec with a synthesized CSR appended"""
        return replace(self, csrs=self.csrs + (csr,), synthesized=self.synthesized + (csr.name,))

    def with_goal(self, goal: Equation) -> Spec:
        return replace(self, goal=goal)
