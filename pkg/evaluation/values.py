"""
Values - results of evaluating closed terms
Int and Bool values are Python ints and bools; ADT values are AdtVal trees.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from lang.printer import pretty_print
from lang.syntax import BoolConst, CtorApp, IntConst, Term


@dataclass(frozen=True)
class AdtVal:
    ctor: str
    fields: tuple[Value, ...] = ()
    depth: int = field(default=1, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        nested = [f.depth for f in self.fields if isinstance(f, AdtVal)]
        object.__setattr__(self, "depth", 1 + max(nested, default=0))

    def __str__(self) -> str:
        return show_value(self)


Value = Union[int, bool, AdtVal]


def value_to_term(value: Value) -> Term:
    if isinstance(value, bool):
        return BoolConst(value)
    if isinstance(value, int):
        return IntConst(value)
    return CtorApp(value.ctor, tuple(value_to_term(f) for f in value.fields))


def term_to_value(term: Term) -> Value | None:
    """The value a normal-form term denotes, or None if it is not a value"""
    if isinstance(term, BoolConst):
        return term.value
    if isinstance(term, IntConst):
        return term.value
    if isinstance(term, CtorApp):
        fields = [term_to_value(a) for a in term.args]
        if any(f is None for f in fields):
            return None
        return AdtVal(term.ctor, tuple(fields))
    return None


def show_value(value: Value) -> str:
    return pretty_print(value_to_term(value))
