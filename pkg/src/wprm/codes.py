"""Weighted projective Reed-Muller codes and their minimum distance.

The code of degree ``d`` evaluates ``F_q[x]^w_d`` at the canonical points.
When evaluation is injective, ``d_min = p_m - e_q(d; w)``.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Iterator

import numpy as np

from .errors import BudgetExceeded, EmptyDegree
from .field import Field, field_new
from .ideal import standard_monomials
from .linalg import nullspace, rank
from .poly import Monomial, denumerant, evaluation_matrix
from .space import PointSet, Weights, enumerate_points

DEFAULT_BUDGET = 10**7
_TAIL_ROWS = 1 << 15  # codewords materialised per block


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: Field
    weights: Weights
    d: int
    gen: np.ndarray
    basis_monomials: tuple[Monomial, ...]
    injective: bool

    @property
    def n(self) -> int:
        return self.gen.shape[1]

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    def classes(self) -> int:
        q = self.field.q
        return (q**self.k - 1) // (q - 1)

    def to_json(self) -> str:
        return json.dumps(
            {
                "q": self.field.q,
                "w": list(self.weights.w),
                "d": self.d,
                "n": self.n,
                "k": self.k,
                "rows": self.gen.tolist(),
            }
        )

    def to_text(self) -> str:
        """One line per basis monomial, space-separated element handles in point order."""
        return "".join(" ".join(map(str, row)) + "\n" for row in self.gen.tolist())


def wprm_code(q: int | Field, weights, d: int, pts: PointSet | None = None) -> LinearCode:
    F = field_new(q) if isinstance(q, int) else q
    W = Weights.of(weights)
    if denumerant(d, W.w) == 0:
        raise EmptyDegree(f"no monomial of degree {d} for weights {W.w}")
    if pts is None:
        pts = enumerate_points(F, W)
    basis = standard_monomials(d, pts)
    gen = evaluation_matrix(basis.monomials, pts)
    return LinearCode(F, W, d, gen, basis.monomials, basis.hilbert == denumerant(d, W.w))


# -- exhaustive search --------------------------------------------------------

def _blocks(code: LinearCode) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Disjoint blocks covering all codeword classes.

    A block is ``(lead, head)``: coefficient 1 on row ``lead``, the given
    ``head`` coefficients on the following rows, and every combination on the
    remaining ``tail`` rows.
    """
    q, k = code.field.q, code.k
    elems = code.field.elements()
    for lead in range(k):
        free = k - lead - 1
        tail = 0
        while tail < free and q ** (tail + 1) <= _TAIL_ROWS:
            tail += 1
        for head in product(elems, repeat=free - tail):
            yield lead, head


def _tail_combos(F: Field, rows: np.ndarray) -> np.ndarray:
    out = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for r in rows:
        scaled = F.vmul(np.array(F.elements(), dtype=np.int64)[:, None], r[None, :])
        out = F.vadd(out[:, None, :], scaled[None, :, :]).reshape(-1, rows.shape[1])
    return out


def _max_zeros_in_blocks(code: LinearCode, blocks: list[tuple[int, tuple[int, ...]]]) -> int:
    F, G = code.field, code.gen
    best = 0
    cache: dict[int, np.ndarray] = {}
    for lead, head in blocks:
        start = lead + 1 + len(head)
        if start not in cache:
            cache[start] = _tail_combos(F, G[start:])
        base = G[lead].copy()
        for c, r in zip(head, G[lead + 1 : start]):
            if c:
                base = F.vadd(base, F.vmul(c, r))
        words = F.vadd(base[None, :], cache[start])
        best = max(best, int((words == 0).sum(axis=1).max()))
    return best


def max_zeros_exact(code: LinearCode, class_budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Largest number of zero coordinates of a nonzero codeword."""
    need = code.classes()
    if need > class_budget:
        raise BudgetExceeded(need, class_budget)
    if code.k == 0:
        return code.n
    blocks = list(_blocks(code))
    if workers <= 1 or len(blocks) < 2:
        return _max_zeros_in_blocks(code, blocks)
    chunks = [blocks[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return max(ex.map(_max_zeros_in_blocks, [code] * workers, chunks))


def min_distance_exact(code: LinearCode, class_budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    return code.n - max_zeros_exact(code, class_budget, workers)


# -- randomized search --------------------------------------------------------

def _word_vanishing_on(code: LinearCode, cols: np.ndarray, rng, nonzero: np.ndarray) -> np.ndarray | None:
    F, G = code.field, code.gen
    ker = nullspace(G[:, cols].T, F)
    if ker.shape[0] == 0:
        return None
    coeffs = ker[0]
    if ker.shape[0] > 1:
        coeffs = F.matmul(rng.choice(nonzero, size=ker.shape[0])[None, :], ker)[0]
        if not coeffs.any():
            return None
    return F.matmul(coeffs[None, :], G)[0]


_RESTART = 256


def min_weight_random_search(code: LinearCode, iterations: int, seed: int = 0) -> int:
    """Smallest weight met while sampling codewords forced to vanish on chosen coordinates.

    Odd iterations force ``k - 1`` uniformly random zeros.  Even iterations
    keep all but one forced zero inside the zero set of the current word and
    move the last one outside it, a cheap local search that restarts every
    few hundred iterations.  Every word seen is a genuine codeword, so the
    result is an upper bound on ``d_min``.
    """
    G = code.gen
    k, n = G.shape
    if k == 0:
        return n
    best = int(np.count_nonzero(G, axis=1).min())
    if k == 1:
        return best
    rng = np.random.default_rng(seed)
    nonzero = np.array(code.field.nonzero(), dtype=np.int64)
    current, cur_weight = None, n + 1
    for it in range(iterations):
        if it % _RESTART == 0:
            current, cur_weight = None, n + 1
        if it % 2 == 0 and current is not None:
            zeros = np.flatnonzero(current == 0)
            inside = rng.choice(zeros, size=min(k - 2, zeros.size), replace=False)
            outside = rng.choice(np.flatnonzero(current), size=k - 1 - inside.size, replace=False)
            cols = np.concatenate([inside, outside])
        else:
            cols = rng.choice(n, size=k - 1, replace=False)
        word = _word_vanishing_on(code, cols, rng, nonzero)
        if word is None:
            continue
        weight = int(np.count_nonzero(word))
        if weight < cur_weight:
            current, cur_weight = word, weight
        best = min(best, weight)
    return best


# -- e_q by brute force -------------------------------------------------------

def eq_bruteforce(q: int, weights, d: int, class_budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Exact e_q(d; w) by exhausting the evaluation code."""
    code = wprm_code(q, weights, d)
    if not code.injective:
        # some nonzero form lies in the vanishing ideal
        return code.n
    return max_zeros_exact(code, class_budget, workers)


def check_generator(code: LinearCode) -> bool:
    return rank(code.gen, code.field) == code.k
