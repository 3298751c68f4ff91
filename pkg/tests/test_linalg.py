import numpy as np
from hypothesis import given, strategies as st

from oracles import span_size
from wprm.field import field_new
from wprm.linalg import independent_rows, inverse, nullspace, rank, rref


@given(st.sampled_from([2, 3, 4, 5, 9]), st.integers(1, 4), st.integers(1, 5), st.integers(0, 10**6))
def test_rank_against_span_count(q, r, c, seed):
    F = field_new(q)
    M = np.random.default_rng(seed).integers(0, q, (r, c))
    k = rank(M, F)
    assert q**k == span_size(M.tolist(), F)


@given(st.sampled_from([2, 3, 5, 7, 8]), st.integers(1, 6), st.integers(1, 6), st.integers(0, 10**6))
def test_nullspace_and_independent_rows(q, r, c, seed):
    F = field_new(q)
    rng = np.random.default_rng(seed)
    M = rng.integers(0, q, (r, c))
    if r > 1:
        M[-1] = F.vadd(M[0], M[-1] if rng.random() < 0.5 else 0 * M[0])
    N = nullspace(M, F)
    assert N.shape[0] == c - rank(M, F)
    assert not F.matmul(M, N.T).any()
    kept, C = independent_rows(M, F)
    assert len(kept) == rank(M, F)
    assert np.array_equal(F.matmul(C.T, M[kept]), M)
    for i in range(r):
        in_prefix = rank(M[: i + 1], F) == rank(M[:i], F) if i else not M[0].any()
        assert (i in kept) != in_prefix


def test_inverse_and_rref():
    F = field_new(7)
    A = np.array([[1, 2, 3], [0, 1, 4], [5, 6, 0]])
    assert np.array_equal(F.matmul(A, inverse(A, F)), np.eye(3, dtype=np.int64))
    R, piv = rref(A, F)
    assert piv == [0, 1, 2] and np.array_equal(R, np.eye(3, dtype=np.int64))
