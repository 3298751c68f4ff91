from dataclasses import replace

import pytest

from wprm.bounds import eq_exact_m1, eq_exact_w0_one
from wprm.errors import BadAlphas, EmptyDegree, HypothesisViolated
from wprm.extremal import ExtremalWitness, extremal_m1, extremal_w0_one, shapes_235, verify_witness
from wprm.field import field_new
from wprm.ideal import binomial_Bij
from wprm.poly import WPoly, count_zeros, parse_poly, semigroup_contains
from wprm.space import enumerate_points, p_j


def test_product_witness_example():
    F = field_new(5)
    wit = extremal_w0_one(F, (1, 2, 3), 4, alphas=[1])
    assert wit.poly == parse_poly("1*x0^2*x1+4*x0^4", F, (1, 2, 3))
    assert wit.claimed_zeros == 11 and verify_witness(wit)


def test_binomial_witness_example():
    F = field_new(5)
    wit = extremal_w0_one(F, (1, 2, 3), 11)
    assert wit.poly == binomial_Bij(0, 1, (1, 2, 3), F)
    assert wit.claimed_zeros == 31


def test_hyperplane_witness():
    wit = extremal_w0_one(7, (1, 2, 2, 5), 1)
    assert wit.poly.terms == {(1, 0, 0, 0): 1}
    assert wit.claimed_zeros == p_j(7, 2)


def test_bad_alphas():
    with pytest.raises(BadAlphas):
        extremal_w0_one(5, (1, 2, 3), 5, alphas=[1])
    with pytest.raises(BadAlphas):
        extremal_w0_one(5, (1, 2, 3), 5, alphas=[1, 1])
    with pytest.raises(BadAlphas):
        extremal_w0_one(5, (1, 2, 3), 5, alphas=[0, 1])
    with pytest.raises(HypothesisViolated):
        extremal_w0_one(5, (2, 3, 5), 7)
    assert extremal_w0_one(5, (1, 2, 3), 12, alphas=[9, 9]).claimed_zeros == 31


def test_line_witness_examples():
    F = field_new(5)
    wit = extremal_m1(F, 2, 3, 12)
    assert wit.poly == parse_poly("1*x1^4+2*x0^3*x1^2+2*x0^6", F, (2, 3))  # (x1^2 - x0^3)(x1^2 - 2x0^3)
    assert wit.claimed_zeros == 2
    wit = extremal_m1(F, 2, 3, 7)
    assert wit.poly.terms == {(2, 1): 1} and wit.claimed_zeros == 2
    wit = extremal_m1(F, 2, 3, 5)
    assert wit.poly.terms == {(1, 1): 1} and wit.claimed_zeros == 2
    with pytest.raises(EmptyDegree):
        extremal_m1(F, 2, 3, 1)


def test_tampered_witness_fails():
    wit = extremal_w0_one(5, (1, 2, 3), 4)
    assert not verify_witness(replace(wit, claimed_zeros=wit.claimed_zeros + 1))
    F = field_new(5)
    pts = enumerate_points(F, (2, 3, 5))
    mono = ExtremalWitness(WPoly.monomial(F, (2, 3, 5), (1, 1, 1)), 15, "x0 x1 x2")
    assert verify_witness(mono, pts)


GRID = [(1, 2), (1, 3), (1, 1, 2), (1, 2, 2), (1, 2, 3), (1, 2, 4), (1, 1, 3), (1, 1, 1), (1, 3, 3, 5)]


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_main_theorem_witnesses(q):
    for w in GRID:
        for d in range(1, w[1] * q + 3):
            wit = extremal_w0_one(q, w, d)
            assert wit.claimed_zeros == eq_exact_w0_one(q, w, d).value
            assert verify_witness(wit)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_line_witnesses_attain_exact_value(q):
    for w0 in range(1, 7):
        for w1 in range(1, 7):
            for d in range(1, 41):
                if semigroup_contains(d, (w0, w1)):
                    wit = extremal_m1(q, w0, w1, d)
                    assert wit.claimed_zeros == eq_exact_m1(q, w0, w1, d).value
                    assert wit.poly.degree == d


@pytest.mark.parametrize("q,w", [(5, (1, 2, 3)), (4, (1, 1, 2)), (3, (1, 2, 2, 4))])
def test_factor_geometry(q, w):
    F = field_new(q)
    pts = enumerate_points(F, w)
    m = len(w) - 1
    x0, x1 = WPoly.variable(F, w, 0), WPoly.variable(F, w, 1)
    x0w = x0 ** w[1]
    both = [P for P in pts if P[0] == 0 and P[1] == 0]
    assert len(both) == p_j(q, m - 2)
    for alpha in F.nonzero():
        factor = x1 - x0w.scale(alpha)
        assert count_zeros(factor, pts) == p_j(q, m - 1)
        assert all(factor.evaluate(P) == 0 for P in both)


@pytest.mark.parametrize("q", [3, 4, 5, 7])
def test_listed_235_shapes(q):
    assert [w.claimed_zeros for w in shapes_235(q, 7)] == [2 * q + 1, 2 * q + 1]
    assert [w.claimed_zeros for w in shapes_235(q, 10)] == [3 * q]
    assert [w.claimed_zeros for w in shapes_235(q, 12)] == [3 * q, 3 * q]
