"""Rebuild the e_q(d; 2,3,5) comparison table for one field size.

    python scripts/reproduce_table1.py --q 7 --d-range 5-40 --out table_q7.csv

Rows whose code has too many codeword classes for the budget get a
randomized range instead of an exact value.
"""

import argparse
import sys
import time

from wprm.cli import TABLE1_COLUMNS, Report, render, table1_row


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, default=5)
    ap.add_argument("--d-range", default=None, help="lo-hi, default 5 to 6q-2")
    ap.add_argument("--budget", type=int, default=10**7)
    ap.add_argument("--iterations", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--format", choices=("table", "csv", "json"), default="table")
    ap.add_argument("--out")
    args = ap.parse_args(argv)

    lo, hi = (5, 6 * args.q - 2) if args.d_range is None else map(int, args.d_range.split("-"))
    rows = []
    for d in range(lo, hi + 1):
        t = time.perf_counter()
        rows.append(table1_row(args.q, d, args.budget, args.seed, args.iterations, args.workers))
        print(f"d={d:3d} {rows[-1]['status']:6s} {time.perf_counter() - t:6.1f}s", file=sys.stderr)
    text = render(Report(TABLE1_COLUMNS, rows, {"q": args.q, "w": [2, 3, 5], "seed": args.seed}), args.format, "table1")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
