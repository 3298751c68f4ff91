from math import gcd

import pytest

from oracles import naive_eq
from wprm.bounds import (
    bound_m1_delta,
    eq_exact_m1,
    eq_exact_w0_one,
    eq_reduce_by_gcd,
    formula_value,
    lower_bound_general,
    serre_bound,
    upper_bound_coprime,
)
from wprm.codes import eq_bruteforce
from wprm.errors import EmptyDegree, HypothesisViolated
from wprm.field import field_new
from wprm.poly import denumerant, semigroup_contains
from wprm.space import enumerate_points


def test_main_theorem_examples():
    assert eq_exact_w0_one(5, (1, 2, 3), 4).value == 11
    assert all(eq_exact_w0_one(5, (1, 2, 3), d).value == 31 for d in range(11, 30))
    assert eq_exact_w0_one(3, (1, 3), 4).value == 2
    r = eq_exact_w0_one(5, (1, 2, 3), 4)
    assert r.kind == "exact" and all(ok for _, ok in r.hypotheses_checked)
    with pytest.raises(HypothesisViolated):
        eq_exact_w0_one(5, (2, 3, 5), 7)
    with pytest.raises(HypothesisViolated):
        eq_exact_w0_one(5, (1, 3, 2), 7)


def test_serre_examples():
    assert serre_bound(5, 2, 2) == 11
    assert serre_bound(7, 3, 1) == 7 * 7 + 7 + 1
    assert serre_bound(3, 2, 4) == 13


def test_line_examples():
    assert eq_exact_m1(5, 2, 3, 7).value == 2
    assert eq_exact_m1(5, 2, 3, 12).value == 2
    assert eq_exact_m1(5, 2, 3, 5).value == 2
    with pytest.raises(EmptyDegree):
        eq_exact_m1(5, 2, 3, 1)
    assert bound_m1_delta(5, 2, 3, 12).value == 2
    assert bound_m1_delta(5, 2, 3, 7).value == 2
    assert bound_m1_delta(5, 2, 3, 10).value == 2
    with pytest.raises(HypothesisViolated):
        bound_m1_delta(5, 2, 4, 8)


def test_general_bounds_examples():
    assert lower_bound_general(5, (2, 3, 5), 7).value == 11
    assert lower_bound_general(5, (2, 3, 5), 10).value == 11
    assert lower_bound_general(5, (1, 2, 3), 4).value == eq_exact_w0_one(5, (1, 2, 3), 4).value == 11
    assert upper_bound_coprime(4, (2, 3, 5), 10).value == 17
    assert upper_bound_coprime(5, (2, 3, 5), 7).value == 16
    assert upper_bound_coprime(5, (2, 3, 5), 10).value == 21
    with pytest.raises(HypothesisViolated, match="w_1"):
        upper_bound_coprime(7, (2, 4, 6), 12)


def test_lower_bound_without_line_polynomial():
    r = lower_bound_general(5, (2, 4, 5), 5)
    assert (r.value, r.kind) == (0, "lower")


def test_gcd_reduction():
    W, d = eq_reduce_by_gcd(5, (2, 4, 6), 8)
    assert (W.w, d) == ((1, 2, 3), 4)
    assert eq_reduce_by_gcd(5, (2, 3), 7)[0].w == (2, 3)
    with pytest.raises(EmptyDegree):
        eq_reduce_by_gcd(5, (2, 4, 6), 7)
    assert formula_value(5, (2, 4, 6), 8).value == 11


@pytest.mark.parametrize("q,w", [(2, (1, 2)), (3, (1, 3)), (2, (1, 1, 2)), (3, (1, 2, 2)), (2, (1, 2, 3))])
def test_main_theorem_against_naive_search(q, w):
    F = field_new(q)
    pts = enumerate_points(F, w).coords
    for d in range(1, 12):
        if denumerant(d, w) <= 5:
            assert naive_eq(F, w, d, pts) == eq_exact_w0_one(q, w, d).value


@pytest.mark.parametrize("q", [2, 3, 4])
def test_line_formula_against_naive_search(q):
    F = field_new(q)
    for w0 in range(1, 5):
        for w1 in range(1, 5):
            pts = enumerate_points(F, (w0, w1)).coords
            for d in range(1, 16):
                if semigroup_contains(d, (w0, w1)) and denumerant(d, (w0, w1)) <= 4:
                    assert naive_eq(F, (w0, w1), d, pts) == eq_exact_m1(q, w0, w1, d).value


@pytest.mark.parametrize("q", [3, 5, 7])
def test_delta_bound_is_attained_below_saturation(q):
    for w0 in range(1, 7):
        for w1 in range(1, 7):
            if gcd(w0, w1) != 1:
                continue
            for d in range(1, 41):
                if not semigroup_contains(d, (w0, w1)):
                    continue
                exact = eq_exact_m1(q, w0, w1, d).value
                delta = bound_m1_delta(q, w0, w1, d).value
                assert delta >= exact
                if exact < q + 1:
                    assert delta == exact


@pytest.mark.parametrize("q,w", [(3, (2, 3, 5)), (4, (2, 3, 5)), (5, (2, 3, 5)), (3, (2, 3, 4)), (5, (3, 4, 5)), (4, (3, 5, 7))])
def test_bounds_sandwich_brute_force(q, w):
    for d in range(1, 16):
        if not semigroup_contains(d, w):
            continue
        exact = eq_bruteforce(q, w, d)
        assert lower_bound_general(q, w, d).value <= exact
        try:
            assert exact <= upper_bound_coprime(q, w, d).value
        except HypothesisViolated:
            pass


@pytest.mark.parametrize("w", [(1, 1), (1, 2), (1, 2, 3), (1, 1, 4, 4), (1, 3, 5)])
def test_main_formula_nondecreasing(w):
    for q in (2, 3, 4, 5, 7, 8, 9):
        values = [eq_exact_w0_one(q, w, d).value for d in range(1, 60)]
        assert values == sorted(values)
        assert values[-1] == (q ** len(w) - 1) // (q - 1)
