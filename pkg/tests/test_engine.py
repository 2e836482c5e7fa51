import functools

import pytest

from checker.replay import replay_report
from cli.report import build_report
from config.prover_config import ProverConfig
from deduct.normalize import Normalizer
from engine.goals import Goal
from engine.induction import induct, split_induction
from engine.prover import DISPROVED, PROVED, UNKNOWN, Prover, prove
from engine.tactics import (
    check_progress, choose_variable, rewrite_with_lemma, tactic1_extract, tactic1_precond,
    tactic2_extract, tactic2_precond,
)
from engine.trace import DeductStep, Failure, InductionStep, TacticStep, count_nodes, render_text
from lang.errors import NoCsrOccurrence, NotFriendly, ProgressViolation
from lang.parser import parse_equation, parse_spec
from lang.printer import pretty_print
from lang.syntax import INT, Type
from rewrite.substitution import alpha_equivalent
from tests.conftest import CORPUS, LIST_DEFS, with_goal

LIST = Type("List")


def corpus_spec(name):
    return parse_spec((CORPUS / name).read_text(encoding="utf-8"))


def find_equation(result, text):
    wanted = parse_equation(text, result.spec)
    return [n for n in result.trace.walk() if alpha_equivalent(n.goal.target, wanted)]


# ----- goals -----

def test_goal_child_and_weaken(eq):
    ih = eq(". sum t = sum (rev t)")
    other = eq("(a: List). sum a = sum (rev a)")
    goal = Goal(eq("(h: Int). sum (cons h t) = h + sum t"), premises=(ih, other), context=(("t", LIST),))
    assert goal.env == {"t": LIST, "h": INT}
    child = goal.child(eq("(h: Int). h = h"))
    assert child.depth == 1 and child.premises == goal.premises
    assert goal.weaken("t").premises == (other,)


# ----- induction -----

def test_induction_cases_for_warm_up(list_spec, eq, config):
    goal = Goal(eq("(xs: List). sum (rev xs) = sum xs"))
    nil_case, cons_case = split_induction(goal, list_spec, Normalizer(list_spec), config)
    assert nil_case.ctor == "nil"
    assert pretty_print(nil_case.goal.target) == "forall. 0 = 0"
    assert "ih" not in nil_case.info
    assert cons_case.info["ih"] == "forall. sum (rev t) = sum t"
    assert cons_case.info["generalized"] == {"r": "rev t"}
    assert cons_case.info["before_generalization"] == "forall (h: Int). sum (snoc h (rev t)) = h + sum (rev t)"
    assert pretty_print(cons_case.goal.target) == "forall (h: Int) (r: List). sum (snoc h r) = h + sum r"
    assert cons_case.goal.context == (("t", LIST),)
    assert len(cons_case.goal.premises) == 1


def test_refuted_generalization_is_dropped(list_spec, eq, config):
    # abstracting the shared append would leave snoc h (rev r) = cons h r
    goal = Goal(eq("(xs: List). rev (app (rev xs) xs) = app (rev xs) xs"))
    cases = induct(goal, "xs", list_spec, Normalizer(list_spec), config, side=None)
    cons_case = cases[1]
    assert "generalized" not in cons_case.info
    assert pretty_print(cons_case.goal.target) == cons_case.info["instance"]
    assert pretty_print(cons_case.goal.target) == (
        "forall (h: Int). snoc h (rev (app (snoc h (rev t)) t)) = cons h (app (snoc h (rev t)) t)")


def test_split_induction_requires_f1(list_spec, config):
    goal = Goal(list_spec.goal)
    with pytest.raises(NotFriendly):
        split_induction(goal, list_spec, Normalizer(list_spec), config)


# ----- tactics -----

def test_tactic1_extracts_sum_rev(list_spec):
    assert tactic1_precond(list_spec.goal)
    extraction = tactic1_extract(list_spec.goal, list_spec, list_spec.goal.env)
    assert pretty_print(extraction.ps) == "sum (rev a)"
    assert extraction.variable == "a"
    assert extraction.env == {"a": LIST}


def test_tactic2_extracts_inner_plus(nat_spec):
    goal = nat_spec.goal
    assert not tactic1_precond(goal)
    assert tactic2_precond(goal)
    extraction = tactic2_extract(goal, nat_spec, goal.env)
    assert pretty_print(extraction.ps) == "plus a b"
    assert extraction.variable == "a"


def test_tactic2_without_candidate_call(list_spec, eq):
    goal = eq("(h: Int) (xs: List). snoc h xs = cons h xs")
    assert tactic2_precond(goal)
    with pytest.raises(NoCsrOccurrence):
        tactic2_extract(goal, list_spec, goal.env)


def test_choose_variable_prefers_recursive_position(term):
    assert choose_variable(term("app a b"), {"a": LIST, "b": LIST}) == "b"


def test_rewrite_with_lemma(list_spec, eq):
    lemma = eq("(a: List). sum a = sum (rev a)")
    rewritten = rewrite_with_lemma(list_spec.goal, lemma)
    assert pretty_print(rewritten) == "forall (xs: List). sum xs = sum (sort xs)"
    check_progress(1, list_spec.goal, rewritten)
    with pytest.raises(ProgressViolation):
        check_progress(1, list_spec.goal, list_spec.goal)


# ----- the prover -----

def test_warm_up_is_proved():
    result = prove(corpus_spec("sum_rev.spec"))
    assert result.verdict == PROVED
    assert result.trace.complete
    assert isinstance(result.trace, InductionStep)
    assert find_equation(result, "forall (h: Int) (r: List). sum (snoc h r) = h + sum r")
    assert result.stats["induction_count"] >= 2
    assert Prover(result.spec).audit(result) == []


def test_refutable_goal_is_disproved():
    result = prove(corpus_spec("rev_is_identity.spec"))
    assert result.verdict == DISPROVED
    assert isinstance(result.trace, DeductStep)
    assert result.trace.outcome.counterexample is not None


def test_base_case_goal_needs_no_induction():
    result = prove(corpus_spec("plus_zero_right.spec"))
    assert result.verdict == PROVED
    assert count_nodes(result.trace) == {"lemma_count": 0, "induction_count": 0,
                                         "tactic1_count": 0, "tactic2_count": 0}


def test_timeout_gives_unknown():
    result = prove(corpus_spec("sum_rev.spec"), ProverConfig(timeout=-1))
    assert result.verdict == UNKNOWN
    assert result.timed_out
    assert isinstance(result.trace, Failure)
    assert result.trace.reason == "timeout"


def test_depth_limit_gives_unknown():
    result = prove(corpus_spec("sum_rev.spec"), ProverConfig(max_depth=0))
    assert result.verdict == UNKNOWN
    assert any(isinstance(n, Failure) and n.reason == "depth limit" for n in result.trace.walk())


def test_render_text_mentions_every_goal():
    result = prove(corpus_spec("sum_rev.spec"))
    lines = render_text(result.trace)
    assert lines[0].startswith("forall (xs: List). sum (rev xs) = sum xs")
    assert len(lines) >= sum(1 for _ in result.trace.walk())


def test_same_seed_same_trace():
    spec = corpus_spec("sum_rev.spec")
    first, second = prove(spec), prove(spec)
    assert first.trace.to_json() == second.trace.to_json()


def test_goal_without_spec_goal():
    spec = with_goal(LIST_DEFS, "Goal (xs: List). xs = xs;").with_goal(None)
    with pytest.raises(NotFriendly):
        Prover(spec).prove()


@pytest.mark.slow
def test_sum_rev_sort_splits_into_two_lemmas():
    result = prove(corpus_spec("sum_rev_sort.spec"))
    assert result.verdict == PROVED
    root = result.trace
    assert isinstance(root, TacticStep) and root.tactic == 1
    assert alpha_equivalent(root.lemma, parse_equation("forall (xs: List). sum xs = sum (rev xs)", result.spec))


@pytest.mark.slow
def test_plus3_is_proved_with_switched_arguments():
    result = prove(corpus_spec("plus3.spec"))
    assert result.verdict == PROVED
    assert result.stats["tactic2_count"] >= 1


@pytest.mark.slow
def test_sapp_swap_goes_through_nested_induction():
    result = prove(corpus_spec("sapp_swap.spec"))
    assert result.verdict == PROVED
    assert isinstance(result.trace, InductionStep) and result.trace.route == "f2"
    assert find_equation(result, "forall (h: Int) (x: List) (y: List). h + sapp x t y = sapp x (cons h t) y")


CORPUS_FILES = sorted(CORPUS.glob("*.spec"))


def expected_verdict(path):
    return next(line.split(":", 1)[1].strip() for line in path.read_text(encoding="utf-8").splitlines()
                if line.startswith("-- expect:"))


@functools.lru_cache(maxsize=None)
def corpus_run(name):
    """Result, audit problems and JSON report of one corpus file"""
    config = ProverConfig()
    prover = Prover(corpus_spec(name), config)
    result = prover.prove()
    problems = prover.audit(result) if result.verdict == PROVED else []
    return result, problems, build_report(name, result, config)


def test_unary_multiplication_is_proved():
    # synthesis on times nests calls whose unary results outgrow the evaluator
    result = prove(corpus_spec("times_one_left.spec"))
    assert result.verdict == PROVED


@pytest.mark.slow
@pytest.mark.parametrize("path", CORPUS_FILES, ids=lambda p: p.stem)
def test_corpus_expectations(path):
    result, problems, report = corpus_run(path.name)
    assert result.verdict == expected_verdict(path)
    reasons = [n.reason for n in result.trace.walk() if isinstance(n, Failure)]
    assert not [r for r in reasons if r.startswith("progress violation")]
    if result.verdict == PROVED:
        assert problems == []
        replay = replay_report(report)
        assert replay.ok and replay.complete, replay.errors


@pytest.mark.slow
def test_corpus_mostly_proved():
    proved = [p.name for p in CORPUS_FILES if corpus_run(p.name)[0].verdict == PROVED]
    assert len(proved) >= 15
