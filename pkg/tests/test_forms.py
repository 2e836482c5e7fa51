import pytest

from forms.friendly import (
    ALL, EXISTS, F11, F2Shape, check_f11, check_f12, check_f2, count_forms, is_bare_call,
    is_induction_friendly, relaxed_f11,
)
from lang.parser import parse_equation


def test_bare_call(term):
    assert is_bare_call(term("sapp x y z"))
    assert not is_bare_call(term("app xs xs"))
    assert not is_bare_call(term("sum (rev xs)"))
    assert not is_bare_call(term("xs"))


def test_warm_up_goal_is_f1(eq):
    report = is_induction_friendly(eq("(xs: List). sum (rev xs) = sum xs"))
    assert report.f11 == F11("R", "sum", "xs")
    assert report.f1 and report.friendly


def test_composed_goal_is_not_friendly(eq):
    report = is_induction_friendly(eq("(xs: List). sum (rev xs) = sum (sort xs)"))
    assert report.f11 is None
    assert not report.friendly
    assert check_f11(eq("(xs: List). sum (rev xs) = sum (sort xs)")) is None


def test_nat_goal_satisfies_only_f11(nat_spec):
    report = is_induction_friendly(nat_spec.goal)
    assert report.f11 == F11("L", "plus3", "x")
    assert not report.f12_exists
    assert not report.f12_all
    assert not report.friendly


def test_sapp_swap_is_f2(eq):
    equation = eq("(x: List) (y: List) (z: List). sapp x y z = sapp x z y")
    report = is_induction_friendly(equation)
    assert not report.f1
    assert report.f2 == F2Shape("sapp", "sapp", "z", "y", ("x", "y", "z"))
    assert check_f2(equation)


@pytest.mark.parametrize("text, var, mode, expected", [
    ("app xs (app ys xs)", "xs", EXISTS, True),
    ("app xs (app ys xs)", "xs", ALL, False),
    ("sum (rev xs)", "xs", ALL, True),
    ("sum ys", "xs", ALL, True),
    ("app xs xs", "xs", EXISTS, False),
])
def test_check_f12(term, text, var, mode, expected):
    assert check_f12(term(text), var, mode) is expected


def test_sapp_against_append_is_f1(eq):
    report = is_induction_friendly(eq("(x: List) (y: List) (z: List). sapp x y z = sum (app (app y z) x)"))
    assert report.f11 == F11("L", "sapp", "z")
    assert report.f1


def test_relaxed_f11(eq):
    equation = eq("(x: List) (y: List) (z: List). sapp x y z = sapp x z y")
    assert relaxed_f11(equation) == F11("L", "sapp", "z")
    assert relaxed_f11(equation, "y") == F11("R", "sapp", "y")
    assert relaxed_f11(eq("(xs: List). sum (rev xs) = sum (sort xs)")) is None


def test_relaxed_f11_needs_a_clean_variable_argument(list_spec):
    equation = parse_equation("forall (h: Int) (t: List). snoc h (snoc h t) = cons h (snoc h t)", list_spec)
    assert relaxed_f11(equation) is None
    assert relaxed_f11(parse_equation("forall (t: List). app t t = t", list_spec)) is None


def test_count_forms(eq):
    assert count_forms(eq("(xs: List). sum (rev xs) = sum xs"), "xs") == 2
    assert count_forms(eq("(x: List) (y: List) (z: List). sapp x y z = sapp x z y"), "z") == 2
    assert count_forms(eq("(xs: List). sum (rev xs) = sum (sort xs)"), "xs") == 0
