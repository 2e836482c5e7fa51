"""
Abstraction - replace the arguments below an application by fresh variables
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from lang.errors import NotEligible
from lang.names import fresh_letters
from lang.syntax import Term, Var, children, is_leaf, with_children
from rewrite.substitution import substitute


@dataclass(frozen=True)
class Abstraction:
    skeleton: Term
    bindings: tuple[tuple[str, Term], ...]   # fresh variable -> replaced subterm

    @property
    def cost(self) -> int:
        return len(self.bindings)

    @property
    def fresh_vars(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.bindings)

    def restore(self) -> Term:
        return substitute(self.skeleton, dict(self.bindings))


def abstract_args(term: Term, avoid: Iterable[str] = ()) -> Abstraction:
    """Keep the root c p1 ... pk and each non-leaf pi's head; everything below becomes a
    fresh variable, identical subterms sharing one. Leaf pi are abstracted themselves."""
    args = children(term)
    if not args or all(is_leaf(a) for a in args):
        raise NotEligible(f"every argument of {term} is a leaf")

    replaced: list[Term] = []
    for arg in args:
        for sub in ((arg,) if is_leaf(arg) else children(arg)):
            if sub not in replaced:
                replaced.append(sub)
    names = fresh_letters(len(replaced), avoid)
    var_for = {sub: Var(name) for sub, name in zip(replaced, names)}

    new_args = []
    for arg in args:
        if is_leaf(arg):
            new_args.append(var_for[arg])
        else:
            new_args.append(with_children(arg, tuple(var_for[s] for s in children(arg))))
    skeleton = with_children(term, tuple(new_args))
    return Abstraction(skeleton, tuple(zip(names, replaced)))
