"""Exact Gaussian elimination over F_q on integer numpy arrays."""

from __future__ import annotations

import numpy as np

from .errors import InvalidInput
from .field import Field


def rref(M, F: Field, stop_rank: int | None = None) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``M`` and its pivot columns.

    Pivots are chosen column by column, left to right, taking the first row
    with a nonzero entry.  Elimination always spans every column to the right
    of the pivot, so when ``stop_rank`` pivots have been found the remaining
    columns already hold their coordinates on the pivot columns.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    limit = nrows if stop_rank is None else min(stop_rank, nrows)
    for c in range(ncols):
        if r >= limit:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        inv = F.inv(int(R[r, c]))
        R[r, c:] = F.vmul(R[r, c:], inv)
        col = R[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            R[rows, c:] = F.vsub(R[rows, c:], F.vmul(col[rows, None], R[r, c:][None, :]))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M, F: Field) -> int:
    return len(rref(M, F)[1])


def independent_rows(M, F: Field) -> tuple[list[int], np.ndarray]:
    """Greedy maximal independent set of rows of ``M``, scanning top to bottom.

    Row ``i`` is kept iff it is not in the span of rows ``0..i-1``.  Returns the
    kept indices and a ``(len(kept), nrows)`` matrix ``C`` whose column ``i``
    expresses row ``i`` on the kept rows: ``M[i] == sum_r C[r, i] * M[kept[r]]``.
    """
    M = np.asarray(M, dtype=np.int64)
    R, piv = rref(M.T, F, stop_rank=min(M.shape))
    return piv, R[: len(piv)]


def inverse(A, F: Field) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    if A.shape != (n, n):
        raise InvalidInput("inverse of a non-square matrix")
    aug = np.concatenate([A, np.eye(n, dtype=np.int64)], axis=1)
    R, piv = rref(aug, F)
    if piv[:n] != list(range(n)):
        raise InvalidInput("matrix is singular")
    return R[:, n:]


def nullspace(A, F: Field) -> np.ndarray:
    """Basis (as rows) of ``{x : A @ x == 0}``."""
    A = np.asarray(A, dtype=np.int64)
    ncols = A.shape[1]
    R, piv = rref(A, F)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, pc in enumerate(piv):
            basis[i, pc] = F.neg(int(R[r, f]))
    return basis
