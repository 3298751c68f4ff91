"""Weights and the F_q-rational points of a weighted projective space P(w).

Two nonzero vectors ``x, y`` of ``F_q^{m+1}`` give the same point when
``y_i = lam^{w_i} x_i`` for some ``lam`` in the algebraic closure.  No
extension field is built: with common support ``S`` and
``gamma_i = log(y_i / x_i)``, such a ``lam`` exists iff for all ``i < j`` in ``S``

    (w_j / g_ij) * gamma_i == (w_i / g_ij) * gamma_j   (mod q - 1),

``g_ij = gcd(w_i, w_j)``.  On a fixed support the admissible ``gamma`` form a
subgroup ``H_S`` of ``(Z/(q-1))^S`` of order ``q - 1``; each class is one
``H_S``-orbit, which is how :func:`enumerate_points` works.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property, lru_cache
from itertools import product
from math import gcd, lcm
from typing import Iterator, Sequence

import numpy as np

from .errors import InvalidInput, PointCountMismatch, ZeroVector
from .field import Field, field_new


def p_j(q: int, j: int) -> int:
    """Number of points of P^j(F_q); ``p_0 = 1`` and ``p_{-1} = 0``."""
    if j < -1:
        raise InvalidInput(f"p_j needs j >= -1, got {j}")
    return (q ** (j + 1) - 1) // (q - 1)


@dataclass(frozen=True)
class Weights:
    w: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.w)
        if not w or any(x < 1 for x in w):
            raise InvalidInput(f"weights must be positive integers, got {self.w!r}")
        object.__setattr__(self, "w", w)

    @classmethod
    def of(cls, w: "Weights | Sequence[int]") -> "Weights":
        return w if isinstance(w, Weights) else cls(tuple(w))

    @property
    def m(self) -> int:
        return len(self.w) - 1

    @property
    def lcm_w(self) -> int:
        return lcm(*self.w)

    @property
    def gcd_w(self) -> int:
        return gcd(*self.w)

    @property
    def ell(self) -> int | None:
        """Largest index with ``w_1 = ... = w_ell``; ``None`` unless ``w_0 = 1 <= w_1`` and
        the tail is nondecreasing."""
        w = self.w
        if self.m < 1 or w[0] != 1 or any(a > b for a, b in zip(w[1:], w[2:])):
            return None
        ell = 1
        while ell + 1 <= self.m and w[ell + 1] == w[1]:
            ell += 1
        return ell

    def sorted_hypothesis(self) -> bool:
        """``1 = w_0 <= w_1 <= ... <= w_m`` (the standing ordering assumption)."""
        return self.ell is not None

    def __len__(self) -> int:
        return len(self.w)

    def __iter__(self):
        return iter(self.w)

    def __getitem__(self, i):
        return self.w[i]

    def __str__(self) -> str:
        return ",".join(map(str, self.w))


def _pair_ok(w: tuple[int, ...], n: int, idx: Sequence[int], gam: Sequence[int]) -> bool:
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            wi, wj = w[idx[a]], w[idx[b]]
            g = gcd(wi, wj)
            if ((wj // g) * gam[a] - (wi // g) * gam[b]) % n:
                return False
    return True


@lru_cache(maxsize=None)
def support_group(w: tuple[int, ...], q: int, support: tuple[int, ...]) -> np.ndarray:
    """All admissible log-ratio vectors on ``support``, as an ``(|H|, |S|)`` array."""
    n = q - 1
    sols: list[tuple[int, ...]] = [()]
    for k in range(len(support)):
        idx = support[: k + 1]
        nxt = []
        for partial in sols:
            for g in range(n):
                cand = partial + (g,)
                if _pair_ok(w, n, idx, cand):
                    nxt.append(cand)
        sols = nxt
    return np.array(sols, dtype=np.int64).reshape(len(sols), len(support))


def points_equivalent(x: Sequence[int], y: Sequence[int], weights, F: Field) -> bool:
    """Whether ``x`` and ``y`` define the same point of P(w)."""
    w = Weights.of(weights).w
    if len(x) != len(w) or len(y) != len(w):
        raise InvalidInput("coordinate vectors must have length m+1")
    if not any(x) or not any(y):
        raise ZeroVector("the zero vector is not a point")
    S = [i for i in range(len(w)) if x[i]]
    if S != [i for i in range(len(w)) if y[i]]:
        return False
    gam = [F.log(F.div(y[i], x[i])) for i in S]
    return _pair_ok(w, F.q - 1, S, gam)


def canonical(x: Sequence[int], weights, F: Field) -> tuple[int, ...]:
    """Lex-minimal member (under the field's element order) of the class of ``x``."""
    w = Weights.of(weights).w
    if not any(x):
        raise ZeroVector("the zero vector is not a point")
    S = tuple(i for i in range(len(w)) if x[i])
    H = support_group(w, F.q, S)
    logs = np.array([F.log(x[i]) for i in S], dtype=np.int64)
    keys = 1 + (logs[None, :] + H) % (F.q - 1)  # order key of g^k is k + 1
    best = min(map(tuple, keys.tolist()))
    out = [0] * len(w)
    for i, k in zip(S, best):
        out[i] = F.exp(k - 1)
    return tuple(out)


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[int, ...]
    weights: Weights

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)


@dataclass(frozen=True, eq=False)
class PointSet:
    """Canonical representatives of P(w)(F_q), sorted lexicographically by element order."""

    field: Field
    weights: Weights
    coords: tuple[tuple[int, ...], ...]
    _index: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index.update({c: i for i, c in enumerate(self.coords)})

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[ProjectivePoint]:
        return (ProjectivePoint(c, self.weights) for c in self.coords)

    def __getitem__(self, i: int) -> ProjectivePoint:
        return ProjectivePoint(self.coords[i], self.weights)

    @property
    def points(self) -> list[ProjectivePoint]:
        return list(self)

    @cached_property
    def array(self) -> np.ndarray:
        """``(n, m+1)`` integer array of coordinates."""
        return np.array(self.coords, dtype=np.int64).reshape(len(self.coords), len(self.weights))

    def index_of(self, x: Sequence[int]) -> int:
        """Position of the point represented by any vector ``x``."""
        return self._index[canonical(x, self.weights, self.field)]


def enumerate_points(F: Field | int, weights) -> PointSet:
    """All F_q-points of P(w), one canonical representative per class."""
    F = field_new(F) if isinstance(F, int) else F
    W = Weights.of(weights)
    return _enumerate(F.q, W.w)


@lru_cache(maxsize=256)
def _enumerate(q: int, w: tuple[int, ...]) -> PointSet:
    F = field_new(q)
    W = Weights(w)
    m1 = len(w)
    n = q - 1
    reps: list[np.ndarray] = []
    for mask in product((0, 1), repeat=m1):
        S = tuple(i for i in range(m1) if mask[i])
        if not S:
            continue
        H = support_group(w, q, S)
        s = len(S)
        # all log vectors on S, canonicalised by minimising the packed key over H
        logs = np.array(list(product(range(n), repeat=s)), dtype=np.int64).reshape(-1, s)
        keys = 1 + (logs[:, None, :] + H[None, :, :]) % n
        radix = q ** np.arange(s - 1, -1, -1, dtype=np.int64)
        codes = (keys * radix).sum(axis=2).min(axis=1)
        codes = np.unique(codes)
        digits = (codes[:, None] // radix[None, :]) % q  # order keys, all >= 1
        full = np.zeros((codes.size, m1), dtype=np.int64)
        full[:, list(S)] = F.vexp(digits - 1)
        reps.append(full)
    allpts = np.concatenate(reps, axis=0)
    order = np.lexsort(F.vkey(allpts).T[::-1])
    allpts = allpts[order]
    expected = (q ** m1 - 1) // (q - 1)
    if allpts.shape[0] != expected:
        raise PointCountMismatch(
            f"P{w}(F_{q}): found {allpts.shape[0]} classes, expected p_m = {expected}"
        )
    return PointSet(F, W, tuple(tuple(int(v) for v in row) for row in allpts))
