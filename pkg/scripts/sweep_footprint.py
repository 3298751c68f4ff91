"""Sample random forms and compare their zero counts with the footprint bound.

    python scripts/sweep_footprint.py --samples 1000

Prints one line per (q, w) with the number of degrees tried and the number
of forms with more zeros than ``p_m - FB(ini f)``, which should be zero.
"""

import argparse

import numpy as np

from wprm.field import field_new
from wprm.footprint import fb_vector, footprint_context
from wprm.ideal import standard_monomials
from wprm.poly import evaluation_matrix
from wprm.space import enumerate_points

GRID = [(1, 1), (1, 2), (2, 3), (1, 1, 1), (1, 1, 2), (1, 2, 3), (2, 3, 5), (1, 1, 2, 2), (2, 2, 3), (3, 4, 5)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    total = 0
    for q in args.q:
        F = field_new(q)
        rng = np.random.default_rng([args.seed, q])
        for w in GRID:
            pts = enumerate_points(F, w)
            degrees = violations = 0
            for d in range(1, 2 * w[1] * q + 1):
                basis = standard_monomials(d, pts)
                if not basis.all_monomials:
                    continue
                degrees += 1
                values = fb_vector(footprint_context(pts, d))
                E = evaluation_matrix(basis.all_monomials, pts)
                C = rng.integers(0, q, (args.samples, len(basis.all_monomials)))
                zeros = (F.matmul(C, E) == 0).sum(axis=1)
                nf = F.matmul(C, basis.coords.T)
                live = nf.any(axis=1)
                ini = nf.shape[1] - 1 - np.argmax(nf[:, ::-1] != 0, axis=1)
                violations += int(((zeros > len(pts) - values[ini]) & live).sum())
            total += violations
            print(f"q={q} w={w}: {degrees} degrees, {violations} violations")
    return 1 if total else 0


if __name__ == "__main__":
    raise SystemExit(main())
