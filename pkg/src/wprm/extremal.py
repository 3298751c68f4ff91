"""Polynomials attaining the maximal number of rational zeros."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .bounds import eq_exact_m1
from .errors import BadAlphas, EmptyDegree, HypothesisViolated, InvalidInput, WitnessMismatch
from .field import Field, field_new
from .ideal import binomial_Bij
from .poly import WPoly, count_zeros, denumerant_two_weights, monomials_of_degree
from .space import PointSet, Weights, enumerate_points, p_j


@dataclass(frozen=True)
class ExtremalWitness:
    poly: WPoly
    claimed_zeros: int
    attains: str


def verify_witness(wit: ExtremalWitness, pts: PointSet | None = None) -> bool:
    if pts is None:
        pts = enumerate_points(wit.poly.field, wit.poly.weights)
    return count_zeros(wit.poly, pts) == wit.claimed_zeros


def _witness(poly: WPoly, claimed: int, attains: str) -> ExtremalWitness:
    wit = ExtremalWitness(poly, claimed, attains)
    if not verify_witness(wit):
        found = count_zeros(poly, enumerate_points(poly.field, poly.weights))
        raise WitnessMismatch(f"{poly} has {found} zeros, construction promised {claimed}")
    return wit


def _mono(F: Field, W: Weights, **exps: int) -> WPoly:
    e = [0] * len(W.w)
    for name, a in exps.items():
        e[int(name[1:])] = a
    return WPoly.monomial(F, W, e)


def _field(q) -> Field:
    return field_new(q) if isinstance(q, int) else q


# -- w_0 = 1 ------------------------------------------------------------------

def default_alphas(F: Field, count: int) -> list[int]:
    """The first ``count`` nonzero elements in the fixed element order."""
    return list(F.nonzero()[:count])


def extremal_w0_one(q: int | Field, weights, d: int, alphas=None) -> ExtremalWitness:
    """``x_0^{a_0} prod (x_1 - alpha x_0^{w_1})`` for ``d <= w_1 q``, ``x_0^{d - w_1 q - 1} B_{0,1}`` above."""
    F = _field(q)
    q = F.q
    W = Weights.of(weights)
    if W.m < 1 or W[0] != 1:
        raise HypothesisViolated(f"needs w_0 = 1 and m >= 1, got w = {W.w}")
    if d < 1:
        raise HypothesisViolated(f"needs d >= 1, got d = {d}")
    w1, m = W[1], W.m
    if d >= w1 * q + 1:
        f = _mono(F, W, x0=d - w1 * q - 1) * binomial_Bij(0, 1, W, F)
        return _witness(f, p_j(q, m), "all points: multiple of B_{0,1}")
    d1 = (d - 1) // w1
    if alphas is None:
        alphas = default_alphas(F, d1)
    alphas = [int(a) for a in alphas]
    if len(alphas) != d1:
        raise BadAlphas(f"need {d1} alphas, got {len(alphas)}")
    if len(set(alphas)) != d1:
        raise BadAlphas(f"alphas must be distinct, got {alphas}")
    if any(not 0 < a < q for a in alphas):
        raise BadAlphas(f"alphas must be nonzero elements of F_{q}, got {alphas}")
    f = _mono(F, W, x0=d - d1 * w1)
    x1 = _mono(F, W, x1=1)
    x0w = _mono(F, W, x0=w1)
    for a in alphas:
        f = f * (x1 - x0w.scale(a))
    return _witness(f, (d1 + 1) * q ** (m - 1) + p_j(q, m - 2), "main theorem, d <= w_1 q")


# -- weighted projective line -------------------------------------------------

def _line_factor(F: Field, W: Weights, alpha: int, e0: int, e1: int, flip: bool) -> WPoly:
    """``x_1^{e1} - alpha x_0^{e0}``, or ``x_0^{e0} - alpha x_1^{e1}`` when flipped."""
    x0, x1 = _mono(F, W, x0=e0), _mono(F, W, x1=e1)
    return x0 - x1.scale(alpha) if flip else x1 - x0.scale(alpha)


def _smallest_mixed(W: Weights, deg: int) -> tuple[int, int]:
    """Deg-lex smallest monomial of degree ``deg`` divisible by ``x_0 x_1``."""
    for mono in monomials_of_degree(W, deg):
        if mono[0] and mono[1]:
            return mono
    raise HypothesisViolated(f"no monomial of degree {deg} divisible by x0*x1 for w = {W.w}")


def extremal_m1(q: int | Field, w0: int, w1: int, d: int) -> ExtremalWitness:
    """A polynomial on P(w_0, w_1) with the maximal number of zeros, by divisibility case of ``d``."""
    F = _field(q)
    q = F.q
    W = Weights((w0, w1))
    if denumerant_two_weights(d, w0, w1) == 0:
        raise EmptyDegree(f"d = {d} is not in the semigroup <{w0}, {w1}>")
    g = gcd(w0, w1)
    a, b = w0 // g, w1 // g  # x_1^a and x_0^b both have degree lcm
    L = lcm(w0, w1)
    lam, rho = divmod(d, L)
    target = eq_exact_m1(q, w0, w1, d).value
    # J ranges over all of F_q, nonzero elements first; J* over the units only
    ordered = list(F.nonzero()) + [0]

    def product(alphas, flip=False) -> WPoly:
        f = WPoly.constant(F, W)
        for alpha in alphas:
            f = f * _line_factor(F, W, alpha, b, a, flip)
        return f

    if d % L == 0:
        J = ordered[: min(lam, q)]
        f = _mono(F, W, x0=(lam - len(J)) * b) * product(J)
        return _witness(f, target, "weighted line, lcm | d")
    if d % w0 == 0:
        J = ordered[: min(lam, q)]
        f = _mono(F, W, x0=rho // w0 + (lam - len(J)) * b) * product(J)
        return _witness(f, target, "weighted line, w_0 | d")
    if d % w1 == 0:
        J = ordered[: min(lam, q)]
        f = _mono(F, W, x1=rho // w1 + (lam - len(J)) * a) * product(J, flip=True)
        return _witness(f, target, "weighted line, w_1 | d")
    if denumerant_two_weights(rho, w0, w1):
        e0, e1 = _smallest_mixed(W, rho)
        J = F.nonzero()[: min(lam, q - 1)]
        f = _mono(F, W, x0=e0, x1=e1 + (lam - len(J)) * a) * product(J)
        return _witness(f, target, "weighted line, rho in the semigroup")
    e0, e1 = _smallest_mixed(W, rho + L)
    K = F.nonzero()[: min(lam - 1, q - 1)]
    f = _mono(F, W, x0=e0, x1=e1 + (lam - 1 - len(K)) * a) * product(K)
    return _witness(f, target, "weighted line, rho outside the semigroup")


# -- shapes observed for w = (2, 3, 5) ----------------------------------------

def shapes_235(q: int | Field, d: int) -> list[ExtremalWitness]:
    """The maximisers listed for ``w = (2, 3, 5)`` at ``d`` in {7, 10, 12}, with ``c = 1``, ``alpha = 1``, ``beta = g``.

    Their zero counts ``2q + 1`` and ``3q`` are what is conjectured to be
    maximal; a witness only shows the value is attained.
    """
    F = _field(q)
    q = F.q
    W = Weights((2, 3, 5))
    x0, x1, x2 = (WPoly.variable(F, W, i) for i in range(3))
    line = lambda alpha: x2 - (x0 * x1).scale(alpha)  # noqa: E731
    g = F.exp(1)
    if d == 7:
        return [_witness(x0 * line(1), 2 * q + 1, "x0 (x2 - a x0 x1)"), _witness(x0 * x0 * x1, 2 * q + 1, "x0^2 x1")]
    if d == 10:
        return [_witness(x0 * x1 * line(1), 3 * q, "x0 x1 (x2 - a x0 x1)")]
    if d == 12:
        return [
            _witness(x0 * line(1) * line(g), 3 * q, "x0 (x2 - a x0 x1)(x2 - b x0 x1)"),
            _witness(x0 * x0 * x1 * line(1), 3 * q, "x0^2 x1 (x2 - a x0 x1)"),
        ]
    raise InvalidInput(f"no listed shapes for d = {d}")
