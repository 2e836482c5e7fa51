"""
Bottom-up enumeration with observational-equivalence pruning
Candidates are built by increasing size; a candidate whose outputs on the task's
tests equal those of an earlier candidate of the same type is dropped.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator

from config.prover_config import MAX_CANDIDATES, SYNTH_CONSTANTS, SYNTH_SIZE
from evaluation.evaluator import Evaluator, apply_builtin
from evaluation.values import AdtVal, Value
from lang.errors import FuelExhausted, NotFound
from lang.syntax import BOOL, INT, BuiltinApp, CsrApp, CtorApp, IntConst, Ite, Spec, Term, Type, Var
from synth.tasks import SynthTask

logger = logging.getLogger(__name__)

Signature = tuple[Value, ...]

COMMUTATIVE = ("+", "*", "==", "&&", "||")


@dataclass(frozen=True)
class Candidate:
    term: Term
    size: int
    type: Type
    signature: Signature


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered ways of writing total as parts positive sizes"""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class Enumerator:
    def __init__(self, task: SynthTask, spec: Spec, size_bound: int = SYNTH_SIZE,
                 max_candidates: int = MAX_CANDIDATES, constants=SYNTH_CONSTANTS,
                 exclude: tuple[str, ...] = (), prune: bool = True):
        self.task = task
        self.prune = prune
        self.spec = spec
        self.size_bound = size_bound
        self.max_candidates = max_candidates
        self.constants = constants
        self.csrs = [c for c in spec.csrs if c.name not in exclude and c.return_type is not None]
        self.evaluator = Evaluator(spec)
        self.n = len(task.tests)
        self.pools: dict[tuple[int, Type], list[Candidate]] = {}
        self.seen: set[tuple[Type, Signature]] = set()
        self.retained = 0

    def pool(self, size: int, type_: Type) -> list[Candidate]:
        return self.pools.get((size, type_), [])

    def _types(self) -> list[Type]:
        return [INT, BOOL] + [a.type for a in self.spec.adts]

    def _offer(self, term: Term, size: int, type_: Type, sig: Signature | None) -> Candidate | None:
        """Keep a new candidate; returns it when it solves the task"""
        if sig is None:
            return None
        if self.prune:
            if (type_, sig) in self.seen:
                return None
            self.seen.add((type_, sig))
        cand = Candidate(term, size, type_, sig)
        self.pools.setdefault((size, type_), []).append(cand)
        self.retained += 1
        if type_ == self.task.output_type and sig == self.task.outputs:
            return cand
        return None

    def _map(self, fn, columns) -> Signature | None:
        try:
            return tuple(fn(*row) for row in zip(*columns))
        except (FuelExhausted, RecursionError):
            return None

    # ----- generators for one size, in a fixed order -----

    def _leaves(self) -> Iterator[tuple[Term, Type, Signature | None]]:
        for name, type_ in self.task.allowed_vars:
            yield Var(name), type_, tuple(t[name] for t in self.task.tests)
        for c in self.constants:
            yield IntConst(c), INT, (c,) * self.n
        for adt in self.spec.adts:
            for ctor in adt.constructors:
                if not ctor.fields:
                    yield CtorApp(ctor.name), adt.type, (AdtVal(ctor.name),) * self.n

    def _operators(self, size: int):
        for c in self.pool(size - 1, BOOL):
            yield BuiltinApp("!", (c.term,)), BOOL, tuple(not x for x in c.signature)
        binary = [("+", INT, INT), ("-", INT, INT), ("*", INT, INT),
                  ("<=", INT, BOOL), ("<", INT, BOOL), ("&&", BOOL, BOOL), ("||", BOOL, BOOL)]
        binary += [("==", t, BOOL) for t in self._types()]
        for op, arg_type, out_type in binary:
            for s1 in range(1, size - 1):
                s2 = size - 1 - s1
                if op in COMMUTATIVE and s1 > s2:
                    continue
                left_pool, right_pool = self.pool(s1, arg_type), self.pool(s2, arg_type)
                for i, a in enumerate(left_pool):
                    start = i if op in COMMUTATIVE and s1 == s2 else 0
                    for b in right_pool[start:]:
                        sig = tuple(apply_builtin(op, (x, y)) for x, y in zip(a.signature, b.signature))
                        yield BuiltinApp(op, (a.term, b.term)), out_type, sig

    def _conditionals(self, size: int):
        for sizes in _compositions(size - 1, 3):
            for type_ in self._types():
                for c, a, b in itertools.product(self.pool(sizes[0], BOOL), self.pool(sizes[1], type_),
                                                 self.pool(sizes[2], type_)):
                    sig = tuple(x if k else y for k, x, y in zip(c.signature, a.signature, b.signature))
                    yield Ite(c.term, a.term, b.term), type_, sig

    def _applications(self, size: int):
        for adt in self.spec.adts:
            for ctor in adt.constructors:
                for args in self._arguments(size, ctor.fields):
                    sig = tuple(AdtVal(ctor.name, row) for row in zip(*(a.signature for a in args)))
                    yield CtorApp(ctor.name, tuple(a.term for a in args)), adt.type, sig
        for csr in self.csrs:
            for args in self._arguments(size, tuple(t for _, t in csr.params)):
                sig = self._map(lambda *row, name=csr.name: self.evaluator.apply_csr(name, row),
                                [a.signature for a in args])
                yield CsrApp(csr.name, tuple(a.term for a in args)), csr.return_type, sig

    def _arguments(self, size: int, types: tuple[Type, ...]):
        if not types:
            return
        for sizes in _compositions(size - 1, len(types)):
            pools = [self.pool(s, t) for s, t in zip(sizes, types)]
            yield from itertools.product(*pools)

    def _generate(self, size: int):
        if size == 1:
            yield from self._leaves()
            return
        yield from self._operators(size)
        yield from self._conditionals(size)
        yield from self._applications(size)

    def run(self) -> Candidate:
        for size in range(1, self.size_bound + 1):
            for term, type_, sig in self._generate(size):
                found = self._offer(term, size, type_, sig)
                if found is not None:
                    logger.debug("%s %s solved at size %d: %s", self.task.kind, self.task.ctor, size, term)
                    return found
                if self.retained >= self.max_candidates:
                    raise NotFound(size)
        raise NotFound(self.size_bound)


def enumerate_solution(task: SynthTask, spec: Spec, size_bound: int = SYNTH_SIZE,
                       max_candidates: int = MAX_CANDIDATES, exclude: tuple[str, ...] = ()) -> Term:
    """Smallest term over the task's variables matching its outputs on every test"""
    return Enumerator(task, spec, size_bound, max_candidates, exclude=exclude).run().term
