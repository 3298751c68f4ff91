"""Footprint bounds of standard monomials and the zero-count bound they give.

``FB(mu)`` counts the standard monomials of a high regularity degree ``D``
divisible by ``mu``; ``FB^(i)`` restricts the count to ``Mon^(i)_D``.  How
high ``D`` must be is not quantified anywhere, so a context evaluates every
count at two consecutive regularity degrees and refuses to answer when they
disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

import numpy as np

from .errors import HypothesisViolated, UnstableFootprint
from .ideal import StandardBasis, find_regularity_degree, standard_monomials
from .poly import Monomial, WPoly, wdeg
from .space import PointSet, Weights


@dataclass(frozen=True, eq=False)
class FootprintContext:
    d: int
    d_tilde: int
    d_check: int
    pts: PointSet
    basis_at_d: StandardBasis
    basis_at_d_tilde: StandardBasis
    basis_at_d_check: StandardBasis

    @property
    def p_m(self) -> int:
        return len(self.pts)

    def _counts(self, mono: Sequence[int], basis: StandardBasis, i: int | None) -> int:
        E = basis.exps
        mask = (E >= np.asarray(mono, dtype=np.int64)[None, :]).all(axis=1)
        if i is not None:
            first = np.argmax(E > 0, axis=1)
            mask &= first == i
        return int(mask.sum())

    def _stable(self, mono: Sequence[int], i: int | None) -> int:
        a = self._counts(mono, self.basis_at_d_tilde, i)
        b = self._counts(mono, self.basis_at_d_check, i)
        if a != b:
            raise UnstableFootprint(
                f"FB{'' if i is None else f'^({i})'}({tuple(mono)}) is {a} at degree {self.d_tilde}"
                f" but {b} at degree {self.d_check}"
            )
        return a


def footprint_margin(weights, q: int) -> int:
    """How far above ``d`` the regularity degree is taken.

    A standard monomial whose first variable is ``x_i`` has ``x_j``-exponent at
    most ``w_i (q - 1)`` for ``j > i`` (the leading term of ``B_{i,j}`` forbids
    more), so its tail has degree at most ``(q - 1) w_i sum_{j>i} w_j``.  Above
    that margin the ``x_i`` exponent alone can no longer block divisibility.
    """
    w = Weights.of(weights).w
    tail = max(wi * sum(w[i + 1 :]) for i, wi in enumerate(w))
    return (q - 1) * max(sum(w), tail)


def footprint_context(pts: PointSet, d: int) -> FootprintContext:
    q = pts.field.q
    d_tilde = find_regularity_degree(pts, d + footprint_margin(pts.weights, q))
    d_check = find_regularity_degree(pts, d_tilde + 1)
    return FootprintContext(
        d,
        d_tilde,
        d_check,
        pts,
        standard_monomials(d, pts),
        standard_monomials(d_tilde, pts),
        standard_monomials(d_check, pts),
    )


def fb(mono: Sequence[int], ctx: FootprintContext) -> int:
    """Number of standard monomials of degree ``d_tilde`` divisible by ``mono``."""
    return ctx._stable(mono, None)


def fb_i(mono: Sequence[int], i: int, ctx: FootprintContext) -> int:
    return ctx._stable(mono, i)


def fb_product_formula(mono: Sequence[int], i: int, q: int) -> int:
    """Closed form ``prod_{j > i} (q - a_j)`` of ``FB^(i)`` (valid when ``w_0 = ... = w_i = 1``
    and ``d <= w_1 q``)."""
    return prod(q - a for a in mono[i + 1 :])


def fb_pure_power_formula(q: int, m: int, d: int) -> int:
    """``FB(x_2^d) = q^{m-2}((q-d)(q+1)+1)`` when ``w_0 = w_1 = w_2 = 1``."""
    return q ** (m - 2) * ((q - d) * (q + 1) + 1)


def fb_min_over_first_slice(weights, q: int, d: int) -> tuple[int, Monomial]:
    """Minimum of FB over ``Mon^(0)_d`` and a monomial attaining it.

    Needs ``w_0 = 1`` and ``1 <= d <= w_1 q``.
    """
    W = Weights.of(weights)
    if W[0] != 1 or W.m < 1:
        raise HypothesisViolated(f"needs w_0 = 1 and m >= 1, got w = {W.w}")
    w1 = W[1]
    if not 1 <= d <= w1 * q:
        raise HypothesisViolated(f"needs 1 <= d <= w_1 q = {w1 * q}, got d = {d}")
    d1 = (d - 1) // w1
    a0 = d - d1 * w1
    witness = (a0, d1) + (0,) * (W.m - 1)
    m = W.m
    if d % w1 == 0:
        value = q ** (m - 1) * (q - d // w1 + 1)
    else:
        value = q ** (m - 1) * (q - d1)
    return value, witness


def zero_count_upper_bound(f: WPoly, ctx: FootprintContext) -> int:
    """``p_m - FB(ini(f))`` with ``f`` first reduced to its standard normal form."""
    if f.terms and wdeg(f.leading_monomial(), f.weights) != ctx.d:
        raise HypothesisViolated(f"context built for degree {ctx.d}, polynomial has degree {f.degree}")
    mono = ctx.basis_at_d.initial_standard(f)
    return ctx.p_m - fb(mono, ctx)


def fb_table(ctx: FootprintContext) -> list[tuple[Monomial, int]]:
    """FB of every standard monomial of degree ``ctx.d``."""
    return [(mono, fb(mono, ctx)) for mono in ctx.basis_at_d.monomials]


def fb_vector(ctx: FootprintContext) -> np.ndarray:
    """FB of every standard monomial of degree ``ctx.d``, vectorised and stability-checked."""
    A = ctx.basis_at_d.exps
    out = []
    for basis in (ctx.basis_at_d_tilde, ctx.basis_at_d_check):
        E = basis.exps
        out.append((E[None, :, :] >= A[:, None, :]).all(axis=2).sum(axis=1))
    if not np.array_equal(out[0], out[1]):
        bad = int(np.flatnonzero(out[0] != out[1])[0])
        raise UnstableFootprint(
            f"FB({ctx.basis_at_d.monomials[bad]}) differs between degrees {ctx.d_tilde} and {ctx.d_check}"
        )
    return out[0]

