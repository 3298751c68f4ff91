from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from wprm.errors import DegreeNotDivisible, HypothesisViolated
from wprm.field import field_new
from wprm.poly import WPoly, count_zeros, denumerant, linear_combination, monomials_of_degree
from wprm.reduce import (
    delorme_map,
    delorme_point_map,
    delorme_poly_pullback,
    delorme_poly_pushforward,
    gcd_identify,
    gcd_scaling_map,
    psi_line_map,
    psi_map,
    straight_space_bound,
    to_straight_space,
)
from wprm.space import ProjectivePoint, Weights, enumerate_points


def random_poly(F, w, d, rng):
    monos = monomials_of_degree(w, d)
    return linear_combination(F, w, monos, rng.integers(0, F.q, size=len(monos)))


def test_gcd_identify():
    W, d = gcd_identify((2, 4, 6), 12)
    assert W.w == (1, 2, 3) and d == 6
    assert gcd_identify((2, 4, 6), 8)[0].w == (1, 2, 3)
    W, d = gcd_identify((1, 2, 3), 5)
    assert W.w == (1, 2, 3) and d == 5
    with pytest.raises(DegreeNotDivisible):
        gcd_identify((2, 4), 3)
    m = gcd_scaling_map((3, 6, 9))
    assert m.gamma == 3 and m.target_weights.w == (1, 2, 3)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_gcd_scaling_keeps_points(q):
    for w in [(1, 2, 3), (1, 1), (2, 3, 5)]:
        for g in (2, 3):
            assert enumerate_points(q, w).coords == enumerate_points(q, tuple(g * x for x in w)).coords


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("gamma", [1, 2, 3])
def test_delorme_bijection(q, gamma):
    F = field_new(q)
    for w in [(1, 1), (1, 2), (3, 1), (1, 1, 2), (2, 1, 3)]:
        if gcd(w[0], gamma) != 1:
            continue
        red = delorme_map(w, gamma)
        src = enumerate_points(F, red.source_weights)
        tgt = enumerate_points(F, red.target_weights)
        image = {delorme_point_map(P, gamma, F).coords for P in src}
        assert image == set(tgt.coords)


def test_delorme_examples():
    F = field_new(5)
    P = ProjectivePoint((3, 1), Weights((1, 2)))
    assert delorme_point_map(P, 2, F).coords == enumerate_points(F, (1, 1))[enumerate_points(F, (1, 1)).index_of((4, 1))].coords
    Z = ProjectivePoint((0, 1, 2), Weights((1, 2, 4)))
    assert delorme_point_map(Z, 2, F).coords[0] == 0
    x0 = WPoly.variable(F, (1, 1), 0)
    assert delorme_poly_pullback(x0, 2).terms == {(2, 0): 1}
    with pytest.raises(HypothesisViolated):
        delorme_map((2, 1), 2)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("gamma", [2, 3])
def test_delorme_zero_counts(q, gamma):
    F = field_new(q)
    rng = np.random.default_rng(q * 10 + gamma)
    for w in [(1, 1), (1, 2), (1, 1, 2), (3, 1, 2)]:
        if gcd(w[0], gamma) != 1:
            continue
        src = enumerate_points(F, delorme_map(w, gamma).source_weights)
        tgt = enumerate_points(F, w)
        assert len(src) == len(tgt)
        for d in range(1, 7):
            if not denumerant(d, w):
                continue
            for _ in range(10):
                f = random_poly(F, w, d, rng)
                g = delorme_poly_pullback(f, gamma)
                assert g.degree == gamma * d
                assert count_zeros(g, src) == count_zeros(f, tgt)
                assert delorme_poly_pushforward(g, gamma).terms == f.terms


def test_delorme_worked_example():
    F = field_new(5)
    rng = np.random.default_rng(7)
    src = enumerate_points(F, (1, 9))
    tgt = enumerate_points(F, (1, 3))
    for _ in range(20):
        f = random_poly(F, (1, 3), 2, rng)
        assert count_zeros(delorme_poly_pullback(f, 3), src) == count_zeros(f, tgt)


@given(
    st.lists(st.integers(1, 4), min_size=2, max_size=4),
    st.integers(1, 3),
    st.integers(0, 12),
)
def test_delorme_keeps_dimension(w, gamma, d):
    if gcd(w[0], gamma) != 1:
        return
    src = delorme_map(w, gamma).source_weights
    assert denumerant(d, w) == denumerant(gamma * d, src.w)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_psi_bijection(q):
    F = field_new(q)
    line = set(enumerate_points(F, (1, 1)).coords)
    for w0 in range(1, 7):
        for w1 in range(1, 7):
            if gcd(w0, w1) != 1:
                continue
            image = [psi_line_map(P, F).coords for P in enumerate_points(F, (w0, w1))]
            assert len(set(image)) == q + 1 and set(image) == line


def test_psi_fixed_points():
    F = field_new(5)
    W = Weights((2, 3))
    for x in [(1, 1), (0, 1), (1, 0)]:
        assert psi_line_map(ProjectivePoint(x, W), F).coords == x
    with pytest.raises(HypothesisViolated):
        psi_map((2, 4))
    assert psi_map((2, 3)).target_weights.w == (1, 1)


@pytest.mark.parametrize("q,w", [(3, (1, 2, 2)), (4, (1, 2, 2, 3)), (5, (1, 3, 3)), (3, (1, 2, 4))])
def test_straight_space_bound(q, w):
    F = field_new(q)
    rng = np.random.default_rng(q)
    pts = enumerate_points(F, w)
    W = Weights.of(w)
    ell = W.ell
    w1 = w[1]
    for k in range(1, 4):
        d = k * w1
        monos = [a for a in monomials_of_degree(w, d) if not any(a[ell + 1 :])]
        for _ in range(15):
            f = linear_combination(F, w, monos, rng.integers(0, q, size=len(monos)))
            if not f.terms:
                continue
            g = to_straight_space(f)
            assert g.weights.w == (1,) * (ell + 1) and g.degree == k
            assert count_zeros(f, pts) <= straight_space_bound(f)


def test_straight_space_hypotheses():
    F = field_new(5)
    with pytest.raises(HypothesisViolated):
        to_straight_space(WPoly.monomial(F, (2, 3), (0, 2)))
    with pytest.raises(HypothesisViolated):
        to_straight_space(WPoly.monomial(F, (1, 2, 2), (1, 1, 0)))  # 2 does not divide d = 3
    with pytest.raises(HypothesisViolated):
        to_straight_space(WPoly.monomial(F, (1, 2, 3), (1, 0, 1)))  # involves x_2
    with pytest.raises(HypothesisViolated):
        to_straight_space(WPoly.monomial(F, (1, 2, 2), (2, 0, 1)), ell=3)
