"""
Shared fixtures - the list and natural-number specs most tests run against
"""
from pathlib import Path

import pytest

from config.prover_config import ProverConfig
from lang.parser import parse_equation, parse_spec, parse_term
from lang.syntax import BoolConst, BuiltinApp, CsrApp, CtorApp, IntConst, Ite, Var

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

LIST_DEFS = """
Inductive List = nil | cons Int List;

Let sum (l: List) =
  match l with
  | nil -> 0
  | cons h t -> h + sum t
  end;

Let snoc (x: Int) (l: List) =
  match l with
  | nil -> cons x nil
  | cons h t -> cons h (snoc x t)
  end;

Let rev (l: List) =
  match l with
  | nil -> nil
  | cons h t -> snoc h (rev t)
  end;

Let ins (x: Int) (l: List) =
  match l with
  | nil -> cons x nil
  | cons h t -> if x <= h then cons x l else cons h (ins x t)
  end;

Let sort (l: List) =
  match l with
  | nil -> nil
  | cons h t -> ins h (sort t)
  end;

Let app (x: List) (y: List) =
  match y with
  | nil -> x
  | cons h t -> cons h (app x t)
  end;

Let sapp (x: List) (y: List) (z: List) =
  match z with
  | nil -> sum x + sum y
  | cons h t -> h + sapp x y t
  end;
"""

NAT_DEFS = """
Inductive Nat = zero | succ Nat;

Let plus (a: Nat) (b: Nat) =
  match b with
  | zero -> a
  | succ t -> succ (plus a t)
  end;

Let plus3 (a: Nat) (b: Nat) (c: Nat) =
  match c with
  | zero -> plus a b
  | succ t -> succ (plus3 a b t)
  end;
"""


def with_goal(defs, goal):
    return parse_spec(defs + "\n" + goal + "\n")


def random_term(rng, type_name, depth, variables=()):
    """Well-typed term over the list definitions; variables are (name, type name) pairs"""
    names = [n for n, t in variables if t == type_name]
    if depth == 0 or rng.random() < 0.25:
        if names and rng.random() < 0.5:
            return Var(names[int(rng.integers(len(names)))])
        if type_name == "Int":
            return IntConst(int(rng.integers(-3, 6)))
        if type_name == "Bool":
            return BoolConst(bool(rng.integers(2)))
        return CtorApp("nil")

    def sub(t):
        return random_term(rng, t, depth - 1, variables)

    choice = int(rng.integers(5))
    if type_name == "Int":
        if choice == 0:
            return CsrApp("sum", (sub("List"),))
        if choice == 1:
            return Ite(sub("Bool"), sub("Int"), sub("Int"))
        return BuiltinApp(("+", "-", "*")[choice - 2], (sub("Int"), sub("Int")))
    if type_name == "Bool":
        return BuiltinApp(("<=", "<")[choice % 2], (sub("Int"), sub("Int")))
    if choice == 0:
        return CtorApp("cons", (sub("Int"), sub("List")))
    if choice == 1:
        return CsrApp("rev", (sub("List"),))
    if choice == 2:
        return CsrApp("snoc", (sub("Int"), sub("List")))
    if choice == 3:
        return CsrApp("app", (sub("List"), sub("List")))
    return CsrApp("sort", (sub("List"),))


@pytest.fixture
def list_spec():
    return with_goal(LIST_DEFS, "Goal (xs: List). sum (rev xs) = sum (sort xs);")


@pytest.fixture
def nat_spec():
    return with_goal(NAT_DEFS, "Goal (x: Nat) (y: Nat) (z: Nat). plus3 y z x = plus (plus x y) z;")


@pytest.fixture
def term(list_spec):
    return lambda text: parse_term(text, list_spec)


@pytest.fixture
def eq(list_spec):
    return lambda text: parse_equation("forall " + text, list_spec)


@pytest.fixture
def config():
    return ProverConfig()
