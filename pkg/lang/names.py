"""
Names - fresh identifier supply
"""
from __future__ import annotations

from typing import Iterable

from lang.syntax import Spec, Type

ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def fresh_name(stem: str, avoid: Iterable[str]) -> str:
    """stem, stem1, stem2, ... whichever is first not in avoid"""
    taken = set(avoid)
    if stem not in taken:
        return stem
    i = 1
    while f"{stem}{i}" in taken:
        i += 1
    return f"{stem}{i}"


def fresh_letters(count: int, avoid: Iterable[str]) -> list[str]:
    """count single letters a, b, c, ... not in avoid, falling back to numbered names"""
    taken = set(avoid)
    out: list[str] = []
    for letter in ALPHABET:
        if len(out) == count:
            return out
        if letter not in taken:
            out.append(letter)
            taken.add(letter)
    while len(out) < count:
        name = fresh_name("v", taken)
        out.append(name)
        taken.add(name)
    return out


def field_stem(field_type: Type, recursive: bool) -> str:
    if recursive:
        return "t"
    if field_type.name == "Int":
        return "h"
    if field_type.name == "Bool":
        return "p"
    return field_type.name[0].lower()


def fresh_fields(spec: Spec, ctor_name: str, avoid: Iterable[str]) -> tuple[tuple[str, ...], str | None]:
    """Fresh names for a constructor's fields and the name of its recursive field"""
    adt, ctor = spec.ctor_map[ctor_name]
    taken = set(avoid)
    names = []
    rec_index = adt.recursive_index(ctor)
    for i, field_type in enumerate(ctor.fields):
        name = fresh_name(field_stem(field_type, i == rec_index), taken)
        taken.add(name)
        names.append(name)
    return tuple(names), (names[rec_index] if rec_index is not None else None)
