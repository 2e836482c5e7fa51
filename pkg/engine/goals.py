"""
Goals - a target equation with the premises available to prove it
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from lang.printer import pretty_print
from lang.syntax import Equation, Type, occurs


@dataclass(frozen=True)
class Goal:
    target: Equation
    premises: tuple[Equation, ...] = ()
    depth: int = 0
    context: tuple[tuple[str, Type], ...] = ()      # variables fixed by enclosing inductions
    induct_on: str | None = None                    # pinned induction variable

    @property
    def env(self) -> dict[str, Type]:
        env = dict(self.context)
        env.update(self.target.env)
        return env

    def key(self) -> str:
        return pretty_print(self.target)

    def with_target(self, target: Equation) -> Goal:
        return replace(self, target=target)

    def add_premise(self, premise: Equation) -> Goal:
        return replace(self, premises=self.premises + (premise,))

    def weaken(self, name: str) -> Goal:
        """Drop the premises that mention a context variable about to be inducted on"""
        kept = tuple(p for p in self.premises
                     if name in p.env or not any(occurs(name, s) for s in p.sides()))
        return replace(self, premises=kept)

    def child(self, target: Equation, **changes) -> Goal:
        return replace(self, target=target, depth=self.depth + 1, induct_on=None, **changes)
