"""Isomorphisms that shrink weights without changing rational points or zero counts.

Three reductions are provided: dividing all weights by their gcd, Delorme's
reduction ``P(w_0, w_1 g, ..., w_m g) -> P(w)`` via ``Q_0 -> Q_0^g`` when
``gcd(w_0, g) = 1``, and the map ``(Q_0 : Q_1) -> (Q_0^{w_1} : Q_1^{w_0})``
from a weighted projective line onto ``P^1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Literal

from .errors import DegreeNotDivisible, HypothesisViolated
from .poly import WPoly, count_zeros
from .space import ProjectivePoint, Weights, canonical, enumerate_points, p_j

Kind = Literal["gcd_scaling", "delorme", "line_psi"]


@dataclass(frozen=True)
class ReductionMap:
    kind: Kind
    gamma: int
    source_weights: Weights
    target_weights: Weights


def gcd_identify(weights, d: int) -> tuple[Weights, int]:
    """``(w / g, d / g)`` with ``g = gcd(w)``; points and polynomials are unchanged."""
    W = Weights.of(weights)
    g = W.gcd_w
    if d % g:
        raise DegreeNotDivisible(f"gcd(w) = {g} does not divide d = {d}")
    return Weights(tuple(x // g for x in W.w)), d // g


def gcd_scaling_map(weights) -> ReductionMap:
    W = Weights.of(weights)
    g = W.gcd_w
    return ReductionMap("gcd_scaling", g, W, Weights(tuple(x // g for x in W.w)))


def delorme_map(target_weights, gamma: int) -> ReductionMap:
    """The map from ``P(w_0, w_1 gamma, ..., w_m gamma)`` onto ``P(w)``."""
    W = Weights.of(target_weights)
    if gamma < 1 or gcd(W[0], gamma) != 1:
        raise HypothesisViolated(f"needs gcd(w_0, gamma) = 1, got w_0 = {W[0]}, gamma = {gamma}")
    source = Weights((W[0],) + tuple(x * gamma for x in W.w[1:]))
    return ReductionMap("delorme", gamma, source, W)


def _delorme_target(source: Weights, gamma: int) -> Weights:
    if gamma < 1 or gcd(source[0], gamma) != 1:
        raise HypothesisViolated(f"needs gcd(w_0, gamma) = 1, got w_0 = {source[0]}, gamma = {gamma}")
    if any(x % gamma for x in source.w[1:]):
        raise HypothesisViolated(f"gamma = {gamma} does not divide every weight of {source.w[1:]}")
    return Weights((source[0],) + tuple(x // gamma for x in source.w[1:]))


def delorme_point_map(P: ProjectivePoint, gamma: int, field) -> ProjectivePoint:
    """``(Q_0 : ... : Q_m) -> (Q_0^gamma : Q_1 : ... : Q_m)``, canonical in the target."""
    target = _delorme_target(P.weights, gamma)
    x = (field.pow(P[0], gamma),) + tuple(P.coords[1:])
    return ProjectivePoint(canonical(x, target, field), target)


def delorme_poly_pullback(f: WPoly, gamma: int) -> WPoly:
    """Substitute ``x_0 -> x_0^gamma``: degree ``d`` on ``P(w)`` becomes ``gamma d`` on the source."""
    src = delorme_map(f.weights, gamma).source_weights
    terms = {(mono[0] * gamma,) + mono[1:]: c for mono, c in f.terms.items()}
    return WPoly(f.field, src, terms, f.degree * gamma)


def delorme_poly_pushforward(f: WPoly, gamma: int) -> WPoly:
    """Inverse of :func:`delorme_poly_pullback`: replace ``x_0^gamma`` by ``x_0``."""
    target = _delorme_target(f.weights, gamma)
    if f.degree % gamma:
        raise DegreeNotDivisible(f"gamma = {gamma} does not divide d = {f.degree}")
    terms = {}
    for mono, c in f.terms.items():
        if mono[0] % gamma:
            raise HypothesisViolated(f"x0 exponent {mono[0]} is not a multiple of {gamma}")
        terms[(mono[0] // gamma,) + mono[1:]] = c
    return WPoly(f.field, target, terms, f.degree // gamma)


def psi_line_map(P: ProjectivePoint, field) -> ProjectivePoint:
    """``(Q_0 : Q_1) -> (Q_0^{w_1} : Q_1^{w_0})`` from ``P(w_0, w_1)`` to ``P^1``."""
    W = P.weights
    if W.m != 1 or gcd(W[0], W[1]) != 1:
        raise HypothesisViolated(f"needs a line with coprime weights, got w = {W.w}")
    x = (field.pow(P[0], W[1]), field.pow(P[1], W[0]))
    line = Weights((1, 1))
    return ProjectivePoint(canonical(x, line, field), line)


def psi_map(weights) -> ReductionMap:
    W = Weights.of(weights)
    if W.m != 1 or gcd(W[0], W[1]) != 1:
        raise HypothesisViolated(f"needs a line with coprime weights, got w = {W.w}")
    return ReductionMap("line_psi", 1, W, Weights((1, 1)))


# -- the reduction to P^ell used with Serre's bound ----------------------------

def to_straight_space(f: WPoly, ell: int | None = None) -> WPoly:
    """``f~`` on ``P^ell`` with ``f~(x_0^{w_1}, x_1, ..., x_ell) = f``.

    Needs ``1 = w_0``, ``w_1 = ... = w_ell``, ``w_1 | d`` and ``f`` free of
    ``x_{ell+1}, ..., x_m``.  The exponent of ``x_0`` in each term is checked
    to be a multiple of ``w_1`` rather than assumed.
    """
    W = f.weights
    if ell is None:
        ell = W.ell
    if ell is None or W[0] != 1 or not 1 <= ell <= W.m or any(x != W[1] for x in W.w[1 : ell + 1]):
        raise HypothesisViolated(f"needs 1 = w_0 and w_1 = ... = w_ell, got w = {W.w}, ell = {ell}")
    w1 = W[1]
    if f.degree % w1:
        raise HypothesisViolated(f"needs w_1 = {w1} to divide d = {f.degree}")
    terms = {}
    for mono, c in f.terms.items():
        if any(mono[ell + 1 :]):
            raise HypothesisViolated(f"term {mono} involves a variable beyond x_{ell}")
        if mono[0] % w1:
            raise HypothesisViolated(f"x0 exponent {mono[0]} is not a multiple of w_1 = {w1}")
        terms[(mono[0] // w1,) + mono[1 : ell + 1]] = c
    return WPoly(f.field, Weights((1,) * (ell + 1)), terms, f.degree // w1)


def straight_space_bound(f: WPoly, ell: int | None = None) -> int:
    """``|V(f~)| q^{m-ell} + p_{m-ell-1}``, an upper bound on ``|V(f)|``."""
    g = to_straight_space(f, ell)
    ell = g.weights.m
    q, m = f.field.q, f.weights.m
    return count_zeros(g, enumerate_points(f.field, g.weights)) * q ** (m - ell) + p_j(q, m - ell - 1)
