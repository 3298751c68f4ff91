"""The vanishing ideal of P(w)(F_q), handled through evaluation ranks.

The degree-``d`` part of the ideal is the kernel of evaluation at the
``p_m`` points, so a monomial of degree ``d`` is standard exactly when its
evaluation vector is independent of those of all smaller monomials of
degree ``d``.  A greedy scan in increasing deg-lex order therefore yields
the standard monomials without any Groebner basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegreeMismatch, PolynomialInIdeal, RegularityNotFound
from .field import Field
from .linalg import independent_rows
from .poly import Monomial, WPoly, evaluation_matrix, monomials_of_degree, wdeg
from .space import PointSet, Weights, p_j


def is_vanishing_binomial(a, b, q: int, weights=None) -> bool:
    """Whether ``x^a - x^b`` vanishes on P(w)(F_q)."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise DegreeMismatch("exponent vectors of different lengths")
    if weights is not None and wdeg(a, weights) != wdeg(b, weights):
        raise DegreeMismatch(f"degrees {wdeg(a, weights)} and {wdeg(b, weights)} differ")
    if [x == 0 for x in a] != [y == 0 for y in b]:
        return False
    return all((y - x) % (q - 1) == 0 for x, y in zip(a, b))


def binomial_Bij(i: int, j: int, weights, F: Field) -> WPoly:
    """``x_i x_j (x_j^{w_i(q-1)} - x_i^{w_j(q-1)})``."""
    W = Weights.of(weights)
    if not 0 <= i < j <= W.m:
        raise ValueError(f"need 0 <= i < j <= m, got ({i}, {j})")
    q = F.q
    lead = [0] * len(W.w)
    lead[i], lead[j] = 1, W[i] * (q - 1) + 1
    tail = [0] * len(W.w)
    tail[i], tail[j] = W[j] * (q - 1) + 1, 1
    return WPoly(F, W, {tuple(lead): 1, tuple(tail): F.neg(1)})


@dataclass(frozen=True, eq=False)
class StandardBasis:
    """Standard monomials of one degree, with the data to reduce polynomials.

    ``coords[:, k]`` holds the coordinates of the evaluation vector of
    ``all_monomials[k]`` on the standard ones, which is how normal forms are
    read off.
    """

    d: int
    weights: Weights
    field: Field
    monomials: tuple[Monomial, ...]
    all_monomials: tuple[Monomial, ...]
    coords: np.ndarray
    n_points: int

    @property
    def hilbert(self) -> int:
        return len(self.monomials)

    @property
    def partition(self) -> list[list[Monomial]]:
        """``Mon^(i)_d``: standard monomials whose first nonzero exponent is at ``i``."""
        parts: list[list[Monomial]] = [[] for _ in self.weights.w]
        for mono in self.monomials:
            i = next((k for k, a in enumerate(mono) if a), None)
            if i is None:  # the constant monomial, d = 0
                continue
            parts[i].append(mono)
        return parts

    def partition_sizes(self) -> list[int]:
        return [len(p) for p in self.partition]

    @property
    def exps(self) -> np.ndarray:
        return np.array(self.monomials, dtype=np.int64).reshape(len(self.monomials), len(self.weights.w))

    def normal_form_coords(self, f: WPoly) -> np.ndarray:
        """Coefficients on ``monomials`` of the unique standard combination agreeing with ``f``."""
        if f.degree != self.d and f.terms:
            raise DegreeMismatch(f"polynomial of degree {f.degree}, basis of degree {self.d}")
        index = {mono: k for k, mono in enumerate(self.all_monomials)}
        coeffs = np.zeros(len(self.all_monomials), dtype=np.int64)
        for mono, c in f.terms.items():
            coeffs[index[mono]] = c
        return self.field.matmul(self.coords, coeffs[:, None])[:, 0]

    def normal_form(self, f: WPoly) -> WPoly:
        c = self.normal_form_coords(f)
        return WPoly(self.field, self.weights, {mono: int(v) for mono, v in zip(self.monomials, c) if v}, self.d)

    def initial_standard(self, f: WPoly) -> Monomial:
        """Initial monomial of the normal form of ``f``."""
        c = self.normal_form_coords(f)
        nz = np.flatnonzero(c)
        if nz.size == 0:
            raise PolynomialInIdeal(f"{f} vanishes on every point")
        return self.monomials[int(nz[-1])]


def standard_monomials(d: int, pts: PointSet) -> StandardBasis:
    return _standard(pts, d)


@lru_cache(maxsize=512)
def _standard(pts: PointSet, d: int) -> StandardBasis:
    monos = monomials_of_degree(pts.weights, d)
    if not monos:
        empty = np.zeros((0, 0), dtype=np.int64)
        return StandardBasis(d, pts.weights, pts.field, (), (), empty, len(pts))
    E = evaluation_matrix(monos, pts)
    kept, coords = independent_rows(E, pts.field)
    return StandardBasis(
        d, pts.weights, pts.field, tuple(monos[k] for k in kept), tuple(monos), coords, len(pts)
    )


def hilbert_function(d: int, pts: PointSet) -> int:
    return standard_monomials(d, pts).hilbert


def _may_be_regular(d: int, w: tuple[int, ...]) -> bool:
    # each coordinate point e_i is only seen by pure powers x_i^{d/w_i}
    return all(d % wi == 0 for wi in w)


def default_search_bound(pts: PointSet, d_min: int) -> int:
    return d_min + 4 * pts.weights.lcm_w * (pts.field.q - 1)


def find_regularity_degree(pts: PointSet, d_min: int = 1, search_bound: int | None = None) -> int:
    """Smallest ``d >= d_min`` with ``H(d) = p_m``."""
    if search_bound is None:
        search_bound = default_search_bound(pts, d_min)
    W = pts.weights
    pm = p_j(pts.field.q, W.m)
    for d in range(max(d_min, 1), search_bound + 1):
        if not _may_be_regular(d, W.w):
            continue
        basis = standard_monomials(d, pts)
        if basis.hilbert == pm:
            sizes = basis.partition_sizes()
            expected = [pts.field.q ** (W.m - i) for i in range(W.m + 1)]
            if sizes != expected:
                raise AssertionError(f"regular degree {d} has slices {sizes}, expected {expected}")
            return d
    raise RegularityNotFound(f"no regularity degree in [{d_min}, {search_bound}] for P{W.w}(F_{pts.field.q})")
