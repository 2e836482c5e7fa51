"""
Random value generation for testing equations
"""
from __future__ import annotations

import hashlib

import numpy as np

from config.prover_config import INT_RANGE
from evaluation.values import AdtVal, Value
from lang.syntax import Spec, Type


def derive_rng(seed: int, *keys: str) -> np.random.Generator:
    """Generator determined by the seed and the keys only"""
    digest = hashlib.blake2b("\x1f".join(keys).encode("utf-8"), digest_size=8).digest()
    return np.random.default_rng(np.random.SeedSequence([seed, int.from_bytes(digest, "little")]))


def gen_value(type_: Type, size_bound: int, rng: np.random.Generator, spec: Spec | None = None,
              int_range: tuple[int, int] = INT_RANGE) -> Value:
    """A random value; ADT values have at most size_bound constructors on their recursive spine"""
    if type_.name == "Int":
        return int(rng.integers(int_range[0], int_range[1] + 1))
    if type_.name == "Bool":
        return bool(rng.integers(0, 2))
    adt = spec.adt_of(type_)
    base = [c for c in adt.constructors if adt.is_base(c)]
    recursive = [c for c in adt.constructors if not adt.is_base(c)]

    def fields_of(ctor, inner: Value | None) -> tuple[Value, ...]:
        out = []
        for i, field_type in enumerate(ctor.fields):
            if i == adt.recursive_index(ctor):
                out.append(inner)
            else:
                out.append(gen_value(field_type, size_bound, rng, spec, int_range))
        return tuple(out)

    length = int(rng.integers(0, size_bound + 1)) if recursive else 0
    ctor = base[int(rng.integers(0, len(base)))]
    value: Value = AdtVal(ctor.name, fields_of(ctor, None))
    for _ in range(length):
        ctor = recursive[int(rng.integers(0, len(recursive)))]
        value = AdtVal(ctor.name, fields_of(ctor, value))
    return value
