"""Compare exhaustive e_q(d; w) with the w_0 = 1 formula and its witnesses.

    python scripts/check_main_theorem.py --q 2 3 4 5 --max-dim 7
"""

import argparse
import time
from itertools import combinations_with_replacement

from wprm.bounds import eq_exact_w0_one
from wprm.codes import eq_bruteforce
from wprm.extremal import extremal_w0_one
from wprm.poly import denumerant


def weight_grid(m_max, top):
    for m in range(1, m_max + 1):
        for tail in combinations_with_replacement(range(1, top + 1), m):
            yield (1,) + tail


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--m-max", type=int, default=2)
    ap.add_argument("--w-max", type=int, default=4)
    ap.add_argument("--max-dim", type=int, default=7, help="largest space dimension searched exhaustively")
    args = ap.parse_args(argv)

    checked = mismatched = 0
    start = time.perf_counter()
    for q in args.q:
        for w in weight_grid(args.m_max, args.w_max):
            d = 1
            while denumerant(d, w) <= args.max_dim:
                formula = eq_exact_w0_one(q, w, d).value
                brute = eq_bruteforce(q, w, d)
                witness = extremal_w0_one(q, w, d).claimed_zeros
                checked += 1
                if not brute == formula == witness:
                    mismatched += 1
                    print(f"MISMATCH q={q} w={w} d={d}: brute {brute}, formula {formula}, witness {witness}")
                d += 1
    print(f"{checked} cases, {mismatched} mismatches, {time.perf_counter() - start:.1f}s")
    return 1 if mismatched else 0


if __name__ == "__main__":
    raise SystemExit(main())
