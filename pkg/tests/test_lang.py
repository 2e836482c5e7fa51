import pytest

from lang.errors import (
    CyclicDefinition, DuplicateName, IllegalSelfCall, NonExhaustiveMatch, SpecSyntaxError,
    SpecTypeError,
)
from lang.names import fresh_fields, fresh_letters, fresh_name
from lang.parser import parse_spec, parse_term
from lang.printer import pretty_print
from lang.syntax import INT, BuiltinApp, CsrApp, IntConst, Ite, Type, Var
from evaluation.generator import derive_rng
from lang.typecheck import type_of
from tests.conftest import CORPUS, LIST_DEFS, random_term, with_goal


def test_parse_list_spec(list_spec):
    assert [a.name for a in list_spec.adts] == ["List"]
    assert {"sum", "snoc", "rev", "ins", "sort"} <= set(list_spec.csr_map)
    assert list_spec.goal.binders == (("xs", Type("List")),)
    assert pretty_print(list_spec.goal) == "forall (xs: List). sum (rev xs) = sum (sort xs)"


def test_reflexive_goal_without_functions():
    spec = parse_spec("Inductive List = nil | cons Int List; Goal (xs: List). xs = xs;")
    assert spec.csrs == ()
    assert spec.goal.lhs == spec.goal.rhs == Var("xs")


def test_self_calls_become_result_variable(list_spec):
    rev = list_spec.csr("rev")
    comb = rev.branch("cons")
    assert comb.recursive_binder == "t"
    assert comb.body == CsrApp("snoc", (Var("h"), Var(rev.result_var)))


def test_return_types_are_inferred(list_spec):
    assert list_spec.csr("sum").return_type == INT
    assert list_spec.csr("rev").return_type == Type("List")


def test_application_binds_tighter_than_operators(term):
    assert term("h + sum t") == BuiltinApp("+", (Var("h"), CsrApp("sum", (Var("t"),))))
    assert term("1 + 2 * h") == BuiltinApp("+", (IntConst(1), BuiltinApp("*", (IntConst(2), Var("h")))))
    assert term("h - 1 - 2") == BuiltinApp("-", (BuiltinApp("-", (Var("h"), IntConst(1))), IntConst(2)))


def test_conditional_and_negative_literal(term):
    parsed = term("if h <= (-3) then 0 else h")
    assert isinstance(parsed, Ite)
    assert parsed.cond == BuiltinApp("<=", (Var("h"), IntConst(-3)))


def test_pretty_print_round_trips(list_spec):
    text = pretty_print(list_spec)
    assert pretty_print(parse_spec(text)) == text


@pytest.mark.parametrize("path", sorted(CORPUS.glob("*.spec")), ids=lambda p: p.stem)
def test_corpus_specs_round_trip(path):
    spec = parse_spec(path.read_text(encoding="utf-8"))
    text = pretty_print(spec)
    reparsed = parse_spec(text)
    assert pretty_print(reparsed) == text
    assert reparsed.goal == spec.goal
    assert [c.name for c in reparsed.csrs] == [c.name for c in spec.csrs]


def test_random_terms_round_trip(list_spec):
    rng = derive_rng(0, "round trip")
    variables = (("h", "Int"), ("k", "Int"), ("xs", "List"), ("ys", "List"))
    for _ in range(300):
        subject = random_term(rng, ("Int", "List")[int(rng.integers(2))], 4, variables)
        assert parse_term(pretty_print(subject), list_spec) == subject


def test_pretty_print_parenthesizes_nested_calls(term):
    assert pretty_print(term("sum (rev xs)")) == "sum (rev xs)"
    assert pretty_print(term("(h + 1) * 2")) == "(h + 1) * 2"


def test_type_of(list_spec, term):
    env = {"xs": Type("List"), "h": INT}
    assert type_of(term("sum (snoc h xs)"), env, list_spec) == INT
    assert type_of(term("cons h xs"), env, list_spec) == Type("List")


@pytest.mark.parametrize("source, error", [
    ("Inductive List = nil | cons Int List; Goal (xs: List). cons true nil = xs;", SpecTypeError),
    ("Inductive List = nil | cons Int List;", SpecSyntaxError),
    ("Inductive List = nil | cons Int List; Goal (xs: List). xs = ;", SpecSyntaxError),
    ("Inductive List = nil | nil Int List; Goal (xs: List). xs = xs;", DuplicateName),
])
def test_malformed_specs(source, error):
    with pytest.raises(error):
        parse_spec(source)


def test_missing_branch_is_reported():
    source = """
    Inductive List = nil | cons Int List;
    Let len (l: List) = match l with | nil -> 0 end;
    Goal (xs: List). len xs = len xs;
    """
    with pytest.raises(NonExhaustiveMatch):
        parse_spec(source)


def test_non_structural_self_call_is_rejected():
    source = """
    Inductive List = nil | cons Int List;
    Let bad (l: List) = match l with | nil -> 0 | cons h t -> bad (cons h nil) end;
    Goal (xs: List). bad xs = bad xs;
    """
    with pytest.raises(IllegalSelfCall):
        parse_spec(source)


def test_mutual_calls_are_rejected():
    source = """
    Inductive List = nil | cons Int List;
    Let f (l: List) = match l with | nil -> 0 | cons h t -> g t end;
    Let g (l: List) = match l with | nil -> 0 | cons h t -> f t end;
    Goal (xs: List). f xs = g xs;
    """
    with pytest.raises(CyclicDefinition):
        parse_spec(source)


def test_syntax_error_carries_position():
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec(LIST_DEFS + "\nGoal (xs: List). sum xs = $;")
    assert info.value.position is not None


def test_fresh_names():
    assert fresh_name("r", {"r", "r1"}) == "r2"
    assert fresh_letters(3, {"a", "c"}) == ["b", "d", "e"]


def test_fresh_fields(list_spec):
    names, rec = fresh_fields(list_spec, "cons", {"h"})
    assert names == ("h1", "t")
    assert rec == "t"
    assert fresh_fields(list_spec, "nil", ()) == ((), None)


def test_goal_variable_may_not_shadow_a_function():
    with pytest.raises(DuplicateName):
        with_goal(LIST_DEFS, "Goal (sum: List). sum = sum;")
