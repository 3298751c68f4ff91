"""Weighted monomials, denumerants, the deg-lex order and sparse polynomials.

A monomial is an exponent tuple ``(a_0, ..., a_m)``.  The term order is
degree lexicographic with ``x_0 < x_1 < ... < x_m``: weighted degrees are
compared first, ties are broken by the exponent of ``x_m``, then ``x_{m-1}``,
and so on, the larger exponent winning.
"""

from __future__ import annotations

import re
from functools import lru_cache
from math import gcd, lcm
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .errors import DegreeMismatch, InvalidInput
from .field import Field
from .space import PointSet, Weights

Monomial = tuple[int, ...]


def wdeg(mono: Sequence[int], weights) -> int:
    return sum(a * w for a, w in zip(mono, Weights.of(weights).w))


def deglex_key(mono: Sequence[int], weights) -> tuple:
    """Sort key realising the deg-lex order."""
    return (wdeg(mono, weights),) + tuple(reversed(mono))


def compare_monomials(m1: Sequence[int], m2: Sequence[int], weights) -> int:
    """-1, 0 or 1 as ``m1`` is smaller than, equal to or larger than ``m2``."""
    k1, k2 = deglex_key(m1, weights), deglex_key(m2, weights)
    return (k1 > k2) - (k1 < k2)


@lru_cache(maxsize=4096)
def _monomials(w: tuple[int, ...], d: int) -> tuple[Monomial, ...]:
    out: list[Monomial] = []

    def rec(i: int, rest: int, acc: list[int]):
        if i < 0:
            if rest == 0:
                out.append(tuple(reversed(acc)))
            return
        if i == 0:
            if rest % w[0] == 0:
                rec(-1, 0, acc + [rest // w[0]])
            return
        for a in range(rest // w[i], -1, -1):
            rec(i - 1, rest - a * w[i], acc + [a])

    rec(len(w) - 1, d, [])
    out.sort(key=lambda mono: tuple(reversed(mono)))
    return tuple(out)


def monomials_of_degree(weights, d: int) -> list[Monomial]:
    """All monomials of weighted degree ``d``, increasing in deg-lex order."""
    if d < 0:
        raise InvalidInput(f"degree must be >= 0, got {d}")
    return list(_monomials(Weights.of(weights).w, d))


def denumerant(d: int, w: Sequence[int]) -> int:
    """Number of solutions of ``sum w_j i_j = d`` in nonnegative integers."""
    if d < 0:
        return 0
    ways = [1] + [0] * d
    for wj in Weights.of(w).w:
        for s in range(wj, d + 1):
            ways[s] += ways[s - wj]
    return ways[d]


def denumerant_two_weights(d: int, w0: int, w1: int) -> int:
    """Two-weight denumerant from the Euclidean division of ``d`` by ``lcm(w0, w1)``."""
    if d < 0:
        return 0
    if d % gcd(w0, w1):
        return 0
    L = lcm(w0, w1)
    lam, rho = divmod(d, L)
    # below lcm there is at most one representation
    small = any((rho - a * w0) % w1 == 0 for a in range(rho // w0 + 1))
    return lam + int(small)


def semigroup_contains(d: int, w: Sequence[int]) -> bool:
    return denumerant(d, w) > 0


class WPoly:
    """Sparse weighted-homogeneous polynomial over a finite field.

    ``terms`` maps exponent tuples to nonzero coefficient handles.  The zero
    polynomial is allowed (empty ``terms``) and carries the degree it was
    built with.
    """

    __slots__ = ("field", "weights", "degree", "terms")

    def __init__(self, field: Field, weights, terms: Mapping[Sequence[int], int], degree: int | None = None):
        W = Weights.of(weights)
        clean: dict[Monomial, int] = {}
        for mono, c in terms.items():
            mono = tuple(int(a) for a in mono)
            if len(mono) != len(W.w) or any(a < 0 for a in mono):
                raise InvalidInput(f"bad exponent vector {mono} for weights {W.w}")
            c = int(c)
            if not 0 <= c < field.q:
                raise InvalidInput(f"coefficient {c} is not an element of F_{field.q}")
            if c:
                clean[mono] = field.add(clean.get(mono, 0), c)
                if not clean[mono]:
                    del clean[mono]
        degs = {wdeg(mono, W) for mono in clean}
        if len(degs) > 1:
            raise DegreeMismatch(f"terms of degrees {sorted(degs)} in one homogeneous polynomial")
        if degs:
            (d,) = degs
            if degree is not None and degree != d:
                raise DegreeMismatch(f"declared degree {degree}, terms have degree {d}")
            degree = d
        self.field = field
        self.weights = W
        self.degree = 0 if degree is None else degree
        self.terms = clean

    # -- constructors ---------------------------------------------------------

    @classmethod
    def monomial(cls, field: Field, weights, mono: Sequence[int], coeff: int = 1) -> "WPoly":
        return cls(field, weights, {tuple(mono): coeff})

    @classmethod
    def variable(cls, field: Field, weights, i: int) -> "WPoly":
        W = Weights.of(weights)
        mono = [0] * len(W.w)
        mono[i] = 1
        return cls.monomial(field, W, mono)

    @classmethod
    def constant(cls, field: Field, weights, c: int = 1) -> "WPoly":
        return cls.monomial(field, weights, (0,) * len(Weights.of(weights).w), c)

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "WPoly"):
        if other.field is not self.field or other.weights != self.weights:
            raise InvalidInput("polynomials over different rings")

    def __add__(self, other: "WPoly") -> "WPoly":
        self._check(other)
        if self.terms and other.terms and self.degree != other.degree:
            raise DegreeMismatch(f"cannot add degrees {self.degree} and {other.degree}")
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            terms[mono] = self.field.add(terms.get(mono, 0), c)
        deg = self.degree if self.terms else other.degree
        return WPoly(self.field, self.weights, terms, degree=deg)

    def __neg__(self) -> "WPoly":
        F = self.field
        return WPoly(F, self.weights, {mono: F.neg(c) for mono, c in self.terms.items()}, self.degree)

    def __sub__(self, other: "WPoly") -> "WPoly":
        return self + (-other)

    def scale(self, c: int) -> "WPoly":
        F = self.field
        return WPoly(F, self.weights, {mono: F.mul(c, v) for mono, v in self.terms.items()}, self.degree)

    def __mul__(self, other) -> "WPoly":
        if isinstance(other, int):
            return self.scale(self.field.from_int(other))
        self._check(other)
        F = self.field
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = F.add(terms.get(mono, 0), F.mul(c1, c2))
        return WPoly(F, self.weights, terms, degree=self.degree + other.degree)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "WPoly":
        out = WPoly.constant(self.field, self.weights)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, WPoly):
            return NotImplemented
        return (
            self.field.q == other.field.q
            and self.weights == other.weights
            and self.terms == other.terms
            and (self.degree == other.degree or not self.terms)
        )

    def __hash__(self):
        return hash((self.field.q, self.weights, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list[Monomial]:
        """Support, increasing in deg-lex order."""
        return sorted(self.terms, key=lambda mono: tuple(reversed(mono)))

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise InvalidInput("the zero polynomial has no initial term")
        return self.monomials()[-1]

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, point: Sequence[int]) -> int:
        F = self.field
        acc = 0
        for mono, c in self.terms.items():
            v = c
            for x, a in zip(point, mono):
                if a:
                    v = F.mul(v, F.pow(x, a))
                    if not v:
                        break
            acc = F.add(acc, v)
        return acc

    def evaluation_vector(self, pts: PointSet) -> np.ndarray:
        monos = list(self.terms)
        if not monos:
            return np.zeros(len(pts), dtype=np.int64)
        E = evaluation_matrix(monos, pts)
        coeffs = np.array([self.terms[mono] for mono in monos], dtype=np.int64)
        return self.field.matmul(coeffs[None, :], E)[0]

    # -- text format ----------------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"WPoly(q={self.field.q}, w={self.weights.w}, d={self.degree}, '{format_poly(self)}')"


def evaluation_matrix(monos: Sequence[Sequence[int]], pts: PointSet) -> np.ndarray:
    """``(len(monos), n)`` matrix of monomial values at the canonical representatives."""
    F = pts.field
    X = pts.array
    A = np.array(monos, dtype=np.int64).reshape(len(monos), X.shape[1])
    if len(monos) == 0:
        return np.zeros((0, X.shape[0]), dtype=np.int64)
    zero = (X == 0).astype(np.int64)
    logs = np.where(X == 0, 0, F.vlog(X))
    vanish = ((A > 0).astype(np.int64) @ zero.T) > 0
    vals = F.vexp(A @ logs.T)
    return np.where(vanish, 0, vals)


def evaluate(f: WPoly, P: Sequence[int]) -> int:
    return f.evaluate(tuple(P))


def count_zeros(f: WPoly, pts: PointSet) -> int:
    """Number of points of ``pts`` at which ``f`` vanishes."""
    if len(pts) == 0:
        return 0
    return int(np.count_nonzero(f.evaluation_vector(pts) == 0))


# -- text format ---------------------------------------------------------------

def format_element(F: Field, c: int) -> str:
    if F.is_prime or c == 0:
        return str(c)
    return f"g^{F.log(c)}"


def format_poly(f: WPoly) -> str:
    """``c*x0^a0*x1^a1...`` terms, decreasing deg-lex, joined by ``+``.

    Exponent 1 is written ``x1``, exponent 0 is omitted, a constant term is
    the bare coefficient; the zero polynomial prints as ``0``.
    """
    if not f.terms:
        return "0"
    parts = []
    for mono in reversed(f.monomials()):
        s = format_element(f.field, f.terms[mono])
        for i, a in enumerate(mono):
            if a == 1:
                s += f"*x{i}"
            elif a > 1:
                s += f"*x{i}^{a}"
        parts.append(s)
    return "+".join(parts)


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")
_GPOW = re.compile(r"^g\^(-?\d+)$")


def parse_poly(text: str, field: Field, weights) -> WPoly:
    """Inverse of :func:`format_poly`; also accepts any order of terms and factors."""
    W = Weights.of(weights)
    text = "".join(text.split())
    if text == "0":
        return WPoly(field, W, {})
    terms: dict[Monomial, int] = {}
    for term in text.split("+"):
        if not term:
            raise InvalidInput(f"empty term in {text!r}")
        factors = term.split("*")
        coeff = 1
        mono = [0] * len(W.w)
        for k, fac in enumerate(factors):
            m = _FACTOR.match(fac)
            if m:
                i = int(m.group(1))
                if i >= len(W.w):
                    raise InvalidInput(f"variable x{i} out of range for weights {W.w}")
                mono[i] += int(m.group(2) or 1)
                continue
            if k != 0:
                raise InvalidInput(f"coefficient must come first in term {term!r}")
            g = _GPOW.match(fac)
            if g:
                coeff = field.exp(int(g.group(1)))
            elif fac.isdigit():
                if field.is_prime:
                    coeff = int(fac) % field.q
                elif int(fac) in (0, 1):
                    coeff = int(fac)
                else:
                    raise InvalidInput(f"coefficients over F_{field.q} are written g^k, got {fac!r}")
            else:
                raise InvalidInput(f"cannot parse factor {fac!r}")
        key = tuple(mono)
        terms[key] = field.add(terms.get(key, 0), coeff)
    return WPoly(field, W, terms)


def linear_combination(field: Field, weights, monos: Sequence[Monomial], coeffs: Iterable[int]) -> WPoly:
    degree = wdeg(monos[0], weights) if len(monos) else None
    return WPoly(field, weights, {mono: int(c) for mono, c in zip(monos, coeffs) if c}, degree)


def sort_monomials(monos: Iterable[Monomial], weights) -> list[Monomial]:
    key: Callable = lambda mono: deglex_key(mono, weights)
    return sorted(monos, key=key)
