import pytest

from config.prover_config import ProverConfig
from deduct.arith import constant_of, normalize_arith, to_poly
from deduct.normalize import Normalizer, normalize
from deduct.solver import DISPROVED, PROVED, UNKNOWN, DeductiveSolver, split_condition, try_deductive
from engine.goals import Goal
from lang.printer import pretty_print
from lang.syntax import IntConst, Type
from rewrite.matching import L2R

LIST = Type("List")


@pytest.mark.parametrize("source, expected", [
    ("2 * h + h", "3 * h"),
    ("1 + h + 1", "h + 2"),
    ("h - h", "0"),
    ("sum t + h", "h + sum t"),
    ("(h + 1) * 2", "2 * h + 2"),
])
def test_normalize_arith(term, source, expected):
    assert pretty_print(normalize_arith(term(source))) == expected


def test_constant_of(term):
    assert constant_of(to_poly(term("(h + 3) - h"))) == 3
    assert constant_of(to_poly(term("h + 3"))) is None


@pytest.mark.parametrize("source, expected", [
    ("sum (cons h (cons 2 nil))", "h + 2"),
    ("if h <= h then sum nil else 5", "0"),
    ("if h < h then 1 else 2", "2"),
    ("sum (if h <= 0 then nil else cons h nil)", "if h <= 0 then 0 else h"),
    ("if !(h <= 0) then 1 else 2", "if h <= 0 then 2 else 1"),
    ("rev (cons h nil)", "cons h nil"),
    ("true && (h <= 1)", "h <= 1"),
])
def test_normalize(list_spec, term, source, expected):
    assert pretty_print(normalize(term(source), list_spec)) == expected


def test_normalizer_keeps_stuck_calls(list_spec, term):
    normalizer = Normalizer(list_spec)
    assert normalizer(term("sum (snoc h r)")) == term("sum (snoc h r)")
    assert normalizer.equation(list_spec.goal) == list_spec.goal


def test_split_condition(term):
    assert split_condition(term("if h <= k then h else k"), term("h")) == term("h <= k")
    assert split_condition(term("h"), term("k")) is None


def test_disproves_false_goal(list_spec, eq):
    outcome = try_deductive(Goal(eq("(xs: List). rev xs = xs")), list_spec, ProverConfig())
    assert outcome.status == DISPROVED
    assert outcome.counterexample is not None
    assert "counterexample" in outcome.to_json()


def test_unfolding_alone_proves_base_case(list_spec, eq):
    outcome = try_deductive(Goal(eq("(h: Int). sum (snoc h nil) = h + sum nil")), list_spec, ProverConfig())
    assert outcome.proved
    assert outcome.steps == ()


def test_unknown_without_premises(list_spec, eq):
    outcome = try_deductive(Goal(eq("(h: Int) (r: List). sum (snoc h r) = h + sum r")), list_spec, ProverConfig())
    assert outcome.status == UNKNOWN


def test_rewrites_with_hypothesis(list_spec, eq):
    hypothesis = eq(". sum t = sum (rev t)")
    goal = Goal(eq("(h: Int). sum (cons h t) = h + sum (rev t)"), premises=(hypothesis,),
                context=(("t", LIST),))
    outcome = DeductiveSolver(list_spec, ProverConfig()).try_deductive(goal)
    assert outcome.status == PROVED
    assert outcome.steps == ({"side": "lhs", "premise": pretty_print(hypothesis),
                              "direction": L2R, "position": [1]},)


def test_case_split_on_condition(list_spec, eq):
    goal = Goal(eq("(h: Int) (k: Int). (if h <= k then h else k) + (if h <= k then k else h) = h + k"))
    outcome = try_deductive(goal, list_spec, ProverConfig())
    assert outcome.proved
    assert outcome.steps == ({"split": "h <= k", "then": [], "else": []},)


def test_budget_limits_search(list_spec, eq):
    hypothesis = eq("(a: List). sum a = sum (rev a)")
    goal = Goal(eq("(xs: List). sum (app xs xs) = sum xs + sum xs"), premises=(hypothesis,))
    outcome = try_deductive(goal, list_spec, ProverConfig(deduct_budget=5))
    assert outcome.status == UNKNOWN
    assert outcome.explored <= 5


def test_int_constants_fold(list_spec):
    assert normalize(IntConst(3), list_spec) == IntConst(3)
