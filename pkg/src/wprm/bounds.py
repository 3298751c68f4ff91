"""Closed-form values and bounds for e_q(d; w), each with its hypothesis checklist."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Literal

from .errors import EmptyDegree, HypothesisViolated, InvalidInput
from .poly import denumerant, denumerant_two_weights
from .space import Weights, p_j

Kind = Literal["exact", "lower", "upper"]


@dataclass(frozen=True)
class BoundReport:
    value: int
    kind: Kind
    source: str
    hypotheses_checked: list[tuple[str, bool]] = field(default_factory=list)

    def __int__(self) -> int:
        return self.value


def _require(checks: list[tuple[str, bool]]):
    for name, ok in checks:
        if not ok:
            raise HypothesisViolated(f"hypothesis failed: {name}")


def _w0_one_formula(q: int, m: int, w1: int, d: int) -> int:
    return min(p_j(q, m), ((d - 1) // w1 + 1) * q ** (m - 1) + p_j(q, m - 2))


def eq_exact_w0_one(q: int, weights, d: int) -> BoundReport:
    """``min{p_m, (floor((d-1)/w_1) + 1) q^{m-1} + p_{m-2}}`` for ``w_0 = 1``."""
    W = Weights.of(weights)
    checks = [
        ("m >= 1", W.m >= 1),
        ("w_0 = 1", W[0] == 1),
        ("w_1 <= ... <= w_m", all(a <= b for a, b in zip(W.w[1:], W.w[2:]))),
        ("d >= 1", d >= 1),
    ]
    _require(checks)
    if denumerant(d, W.w) == 0:  # pragma: no cover - impossible with w_0 = 1
        raise EmptyDegree(f"no monomial of degree {d} for weights {W.w}")
    return BoundReport(_w0_one_formula(q, W.m, W[1], d), "exact", "main theorem (w_0 = 1)", checks)


def serre_bound(q: int, ell: int, deg: int) -> int:
    """Serre's bound ``deg q^{ell-1} + p_{ell-2}`` on P^ell, capped at ``p_ell``."""
    if ell < 1 or deg < 1:
        raise InvalidInput(f"need ell >= 1 and deg >= 1, got ell={ell}, deg={deg}")
    return min(p_j(q, ell), deg * q ** (ell - 1) + p_j(q, ell - 2))


def eq_reduce_by_gcd(q: int, weights, d: int) -> tuple[Weights, int]:
    """Divide the weights and the degree by ``gcd(w)``."""
    W = Weights.of(weights)
    g = W.gcd_w
    if d % g:
        raise EmptyDegree(f"gcd(w) = {g} does not divide d = {d}")
    return Weights(tuple(x // g for x in W.w)), d // g


def _euclid(d: int, w0: int, w1: int) -> tuple[int, int, int]:
    L = lcm(w0, w1)
    lam, rho = divmod(d, L)
    return L, lam, rho


def eq_exact_m1(q: int, w0: int, w1: int, d: int) -> BoundReport:
    """Exact ``e_q(d; w_0, w_1)`` on the weighted projective line."""
    if denumerant_two_weights(d, w0, w1) == 0:
        raise EmptyDegree(f"d = {d} is not in the semigroup <{w0}, {w1}>")
    (W2, d2) = eq_reduce_by_gcd(q, (w0, w1), d)
    a, b = W2.w
    L, lam, rho = _euclid(d2, a, b)
    if d2 % L == 0:
        v, case = lam, "lcm | d"
    elif d2 % a == 0 or d2 % b == 0:
        v, case = lam + 1, "exactly one weight divides d"
    else:
        v, case = lam + 1 + denumerant_two_weights(rho, a, b), "no weight divides d"
    checks = [("d in <w_0, w_1>", True), (case, True)]
    return BoundReport(min(q + 1, v), "exact", "weighted projective line", checks)


def bound_m1_delta(q: int, w0: int, w1: int, d: int) -> BoundReport:
    """``delta``, ``delta + 1`` or ``delta + 2`` with ``delta = den(d; w_0, w_1) - 1``."""
    checks = [("gcd(w_0, w_1) = 1", gcd(w0, w1) == 1)]
    _require(checks)
    den = denumerant_two_weights(d, w0, w1)
    if den == 0:
        raise EmptyDegree(f"d = {d} is not in the semigroup <{w0}, {w1}>")
    delta = den - 1
    divides = (d % w0 == 0) + (d % w1 == 0)
    return BoundReport(delta + 2 - divides, "upper", "denumerant bound on the line", checks)


def lower_bound_general(q: int, weights, d: int) -> BoundReport:
    """Zeros of the best polynomial in ``x_0, x_1`` alone, lifted to P(w)."""
    W = Weights.of(weights)
    if W.m < 1:
        raise InvalidInput("need at least two weights")
    w0, w1 = W[0], W[1]
    m = W.m
    in_line = denumerant_two_weights(d, w0, w1) > 0
    checks = [("d in <w_0, w_1>", in_line)]
    if not in_line:
        return BoundReport(0, "lower", "no polynomial in x_0, x_1 of this degree", checks)
    L, lam, rho = _euclid(d, w0, w1)
    eps = denumerant_two_weights(rho, w0, w1) if (d % w0 and d % w1) else 0
    value = min(p_j(q, m), ((d - 1) // L + 1 + eps) * q ** (m - 1) + p_j(q, m - 2))
    return BoundReport(value, "lower", "line construction lifted to P(w)", checks)


def upper_bound_coprime(q: int, weights, d: int) -> BoundReport:
    """Valid when ``gcd(w_0, w_i, q - 1) = 1`` for every ``i >= 1``."""
    W = Weights.of(weights)
    if W.m < 1:
        raise InvalidInput("need at least two weights")
    checks = [(f"gcd(w_0, w_{i}, q-1) = 1", gcd(W[0], W[i], q - 1) == 1) for i in range(1, W.m + 1)]
    _require(checks)
    return BoundReport(_w0_one_formula(q, W.m, W[1], d), "upper", "coprime reduction to w_0 = 1", checks)


def formula_value(q: int, weights, d: int) -> BoundReport:
    """The applicable exact formula, after dividing out ``gcd(w)``."""
    W, d = eq_reduce_by_gcd(q, weights, d)
    if denumerant(d, W.w) == 0:
        raise EmptyDegree(f"no monomial of degree {d} for weights {W.w}")
    if W.m == 1:
        return eq_exact_m1(q, W[0], W[1], d)
    if W[0] == 1:
        return eq_exact_w0_one(q, W, d)
    raise HypothesisViolated(f"no exact formula is known for w = {W.w} (needs w_0 = 1 or m = 1)")
