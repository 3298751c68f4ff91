import json

import numpy as np
import pytest

from wprm.codes import (
    check_generator,
    eq_bruteforce,
    max_zeros_exact,
    min_distance_exact,
    min_weight_random_search,
    wprm_code,
)
from wprm.errors import BudgetExceeded, EmptyDegree
from wprm.field import field_new
from wprm.ideal import hilbert_function
from wprm.poly import denumerant
from wprm.space import enumerate_points

from oracles import naive_eq


def test_code_235_degree_6():
    code = wprm_code(5, (2, 3, 5), 6)
    assert code.basis_monomials == ((3, 0, 0), (0, 2, 0))
    assert (code.n, code.k) == (31, 2)
    assert code.injective and check_generator(code)
    assert min_distance_exact(code) == 25


def test_code_235_degree_7():
    assert min_distance_exact(wprm_code(5, (2, 3, 5), 7)) == 20


def test_smallest_code():
    code = wprm_code(2, (1, 1), 1)
    assert (code.n, code.k, min_distance_exact(code)) == (3, 2, 2)


def test_empty_degree():
    with pytest.raises(EmptyDegree):
        wprm_code(5, (2, 3), 1)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_injective_below_threshold(q):
    for d in range(1, 6 * q - 1):
        if denumerant(d, (2, 3, 5)):
            code = wprm_code(q, (2, 3, 5), d)
            assert code.injective, d
            assert code.k == denumerant(d, (2, 3, 5))


@pytest.mark.parametrize("q,w", [(3, (1, 2, 3)), (4, (1, 1, 2)), (5, (2, 3)), (2, (1, 2, 2, 3))])
def test_dimension_is_hilbert_function(q, w):
    F = field_new(q)
    pts = enumerate_points(F, w)
    for d in range(1, 15):
        if denumerant(d, w):
            code = wprm_code(F, w, d, pts)
            assert code.k == hilbert_function(d, pts)
            assert check_generator(code)
            assert code.injective == (code.k == denumerant(d, w))


def test_eq_bruteforce_values():
    assert eq_bruteforce(5, (2, 3, 5), 10) == 15
    assert eq_bruteforce(5, (2, 3, 5), 11) == 16
    assert eq_bruteforce(5, (1, 2, 3), 4) == 11


@pytest.mark.parametrize("q,w,d", [(3, (1, 2), 4), (2, (1, 1, 2), 3), (3, (2, 3), 6), (4, (1, 3), 4), (2, (1, 2, 3), 5)])
def test_eq_bruteforce_against_naive(q, w, d):
    F = field_new(q)
    assert eq_bruteforce(q, w, d) == naive_eq(F, w, d, enumerate_points(F, w).coords)


def test_non_injective_code_reports_n():
    # x0^3 x1 - x0 x1^3 vanishes everywhere on P^1(F_2), so some form of degree 4 is zero
    code = wprm_code(2, (1, 1), 4)
    assert not code.injective
    assert eq_bruteforce(2, (1, 1), 4) == code.n


def test_budget():
    code = wprm_code(5, (2, 3, 5), 10)
    with pytest.raises(BudgetExceeded):
        max_zeros_exact(code, class_budget=10)


def test_workers_agree():
    code = wprm_code(5, (2, 3, 5), 12)
    assert max_zeros_exact(code, workers=2) == max_zeros_exact(code, workers=1)


@pytest.mark.parametrize("d", [6, 8, 10, 12])
def test_random_search_is_an_upper_bound(d):
    code = wprm_code(5, (2, 3, 5), d)
    exact = min_distance_exact(code)
    found = min_weight_random_search(code, 300, seed=1)
    assert found >= exact
    assert found == min_weight_random_search(code, 300, seed=1)


def test_random_search_finds_minimum():
    code = wprm_code(5, (2, 3, 5), 10)
    assert min_weight_random_search(code, 10_000, seed=0) == code.n - 15


def test_singleton_bound():
    for d in range(2, 16):
        if denumerant(d, (2, 3, 5)):
            code = wprm_code(4, (2, 3, 5), d)
            if code.injective:
                assert min_distance_exact(code) <= code.n - code.k + 1


def test_scaling_weights_keeps_code():
    a = wprm_code(3, (1, 2), 4)
    b = wprm_code(3, (2, 4), 8)
    assert np.array_equal(a.gen, b.gen)


def test_exports():
    code = wprm_code(5, (2, 3, 5), 6)
    data = json.loads(code.to_json())
    assert data["n"] == 31 and data["k"] == 2 and len(data["rows"]) == 2
    lines = code.to_text().splitlines()
    assert len(lines) == 2 and len(lines[0].split()) == 31
