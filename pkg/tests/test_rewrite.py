import pytest

from evaluation.evaluator import Evaluator
from evaluation.falsifier import falsify, random_assignments
from evaluation.generator import derive_rng
from lang.errors import NotEligible
from lang.printer import pretty_print
from lang.syntax import Var, free_vars
from rewrite.abstraction import abstract_args
from rewrite.generalization import common_subterms, find_generalization
from rewrite.matching import L2R, R2L, match_pattern, rewrite_all, rewrite_at, rewrite_with
from rewrite.measures import measure_phi, measure_psi
from rewrite.substitution import alpha_equivalent, replace_subterm, substitute
from tests.conftest import random_term


def test_substitute_is_simultaneous(term):
    assert substitute(term("app x y"), {"x": Var("y"), "y": Var("x")}) == term("app y x")


def test_replace_subterm(term):
    assert replace_subterm(term("sum (rev xs) + sum (rev xs)"), term("rev xs"), Var("r")) == term("sum r + sum r")


def test_alpha_equivalence(eq):
    assert alpha_equivalent(eq("(a: List). sum a = sum (rev a)"), eq("(xs: List). sum xs = sum (rev xs)"))
    assert not alpha_equivalent(eq("(a: List). sum a = sum (rev a)"), eq("(xs: List). sum (rev xs) = sum xs"))


def test_match_pattern_binds_consistently(term):
    assert match_pattern(term("app x x"), {"x"}, term("app nil nil")) == {"x": term("nil")}
    assert match_pattern(term("app x x"), {"x"}, term("app nil xs")) is None
    # variables that are not pattern variables only match themselves
    assert match_pattern(term("sum t"), set(), term("sum t")) == {}
    assert match_pattern(term("sum t"), set(), term("sum u")) is None


def test_rewrite_with_lists_every_redex(eq, term):
    rule = eq("(a: List). sum (rev a) = sum a")
    results = rewrite_with(rule, L2R, term("sum (rev xs) + sum (rev ys)"))
    assert [pos for pos, _ in results] == [(0,), (1,)]
    assert results[0][1] == term("sum xs + sum (rev ys)")


def test_rewrite_at_and_direction(eq, term):
    rule = eq("(a: List). sum (rev a) = sum a")
    assert rewrite_at(rule, R2L, term("h + sum t"), (1,)) == term("h + sum (rev t)")
    assert rewrite_at(rule, L2R, term("h + sum t"), (1,)) is None


def test_rule_with_unbound_template_variables_is_unusable(eq, term):
    # L2R would need to invent b
    rule = eq("(a: List) (b: List). sum a = sum (app a b) - sum b")
    assert rewrite_with(rule, L2R, term("sum xs")) == []


def test_rewrite_all_counts_instances(eq, term):
    rule = eq("(a: List). rev (rev a) = a")
    rewritten, count = rewrite_all(rule, L2R, term("app (rev (rev xs)) (rev (rev ys))"))
    assert rewritten == term("app xs ys")
    assert count == 2


def test_abstraction_of_sum_rev(term):
    abstraction = abstract_args(term("sum (rev xs)"))
    assert abstraction.skeleton == term("sum (rev a)")
    assert abstraction.bindings == (("a", Var("xs")),)
    assert abstraction.cost == 1
    assert abstraction.restore() == term("sum (rev xs)")


def test_abstraction_shares_identical_subterms(term):
    abstraction = abstract_args(term("app (rev xs) xs"))
    assert abstraction.skeleton == term("app (rev a) a")


def test_abstraction_of_leaf_arguments_only_is_not_eligible(term):
    with pytest.raises(NotEligible):
        abstract_args(term("app xs ys"))


def test_abstraction_restores_random_terms():
    rng = derive_rng(3, "abstraction")
    variables = (("h", "Int"), ("xs", "List"), ("ys", "List"))
    eligible = 0
    for _ in range(300):
        subject = random_term(rng, ("Int", "List")[int(rng.integers(2))], 4, variables)
        try:
            abstraction = abstract_args(subject, avoid=free_vars(subject))
        except NotEligible:
            continue
        eligible += 1
        assert abstraction.restore() == subject
    assert eligible > 50


def test_measure_psi(eq):
    assert measure_psi(eq("(xs: List). sum (rev xs) = sum (sort xs)")) == 2
    assert measure_psi(eq("(xs: List). sum xs = sum (sort xs)")) == 1
    assert measure_psi(eq("(xs: List). sum xs = sum xs")) == 0
    assert measure_psi(eq(". sum nil = 0")) == 0
    assert measure_psi(eq("(h: Int) (t: List). h + sum t = sum t + h")) == 2


def test_measure_phi(eq):
    assert measure_phi(eq("(h: Int) (r: List). sum (snoc h r) = h + sum r"), "r") == 0
    assert measure_phi(eq("(xs: List) (ys: List). app xs ys = app ys xs"), "ys") == 1


def test_common_subterms_are_maximal(eq):
    equation = eq("(h: Int) (t: List). sum (snoc h (rev t)) = h + sum (rev t)")
    assert common_subterms(equation) == [equation.rhs.args[1].args[0]]


def test_find_generalization(list_spec, eq):
    equation = eq("(h: Int). sum (snoc h (rev t)) = h + sum (rev t)")
    generalized, mapping = find_generalization(equation, list_spec, {"t": list_spec.goal.binders[0][1]})
    assert pretty_print(generalized) == "forall (h: Int) (r: List). sum (snoc h r) = h + sum r"
    assert {k: pretty_print(v) for k, v in mapping.items()} == {"r": "rev t"}


def test_nothing_to_generalize(list_spec, eq):
    equation = eq("(xs: List). sum xs = sum (rev xs)")
    assert find_generalization(equation, list_spec) == (equation, {})


@pytest.mark.parametrize("text", [
    "(xs: List) (ys: List). sum (rev (app xs ys)) = sum (app xs ys)",
    "(xs: List). rev (app (rev xs) xs) = app (rev xs) xs",
    "(h: Int) (xs: List). sum (snoc h (sort xs)) = h + sum (sort xs)",
    "(xs: List). sort (app (sort xs) xs) = app (sort xs) xs",
])
def test_generalization_covers_every_instance(list_spec, eq, text):
    equation = eq(text)
    generalized, mapping = find_generalization(equation, list_spec)
    assert mapping
    evaluator = Evaluator(list_spec)
    tests = random_assignments(list(equation.binder_names), equation.env, list_spec, 100, derive_rng(0, text))
    for assignment in tests:
        extended = dict(assignment)
        extended.update({name: evaluator.evaluate(sub, assignment) for name, sub in mapping.items()})
        assert evaluator.evaluate(generalized.lhs, extended) == evaluator.evaluate(equation.lhs, assignment)
        assert evaluator.evaluate(generalized.rhs, extended) == evaluator.evaluate(equation.rhs, assignment)
    if falsify(generalized, list_spec, 200, derive_rng(1, text)) is None:
        assert falsify(equation, list_spec, 200, derive_rng(2, text)) is None
