"""Command-line front end.

Every command produces a list of rows with fixed columns, rendered as an
aligned text table, CSV or JSON.  Exit codes: 0 success, 2 a formula was
asked for outside its hypotheses, 3 an exhaustive search would exceed the
budget, 4 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from . import __version__
from .bounds import formula_value, lower_bound_general, upper_bound_coprime
from .codes import DEFAULT_BUDGET, eq_bruteforce, max_zeros_exact, min_weight_random_search, wprm_code
from .errors import BudgetExceeded, HypothesisViolated, InvalidInput, WPRMError
from .extremal import extremal_m1, extremal_w0_one, shapes_235
from .field import field_new
from .footprint import fb_i, fb_vector, footprint_context
from .poly import denumerant, format_element, format_poly
from .space import Weights, enumerate_points, p_j

EXIT_OK = 0
EXIT_HYPOTHESIS = 2
EXIT_BUDGET = 3
EXIT_INVALID = 4

TABLE1_WEIGHTS = (2, 3, 5)
DEFAULT_ITERATIONS = 10_000


@dataclass(frozen=True)
class RunConfig:
    command: str
    q: int
    weights: tuple[int, ...] | None
    degrees: tuple[int, ...]
    mode: str
    budget: int
    seed: int
    iterations: int
    workers: int
    export: str | None
    fmt: str
    out: str | None


@dataclass
class Report:
    columns: list[str]
    rows: list[dict[str, Any]]
    meta: dict[str, Any]


# -- argument parsing ---------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _weights(text: str) -> tuple[int, ...]:
    try:
        w = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be a comma list of integers, got {text!r}")
    if not w or any(x < 1 for x in w):
        raise argparse.ArgumentTypeError(f"weights must be positive, got {text!r}")
    return w


def _degree_range(text: str) -> tuple[int, ...]:
    lo, sep, hi = text.partition("-")
    try:
        lo_i, hi_i = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"degree range must look like 5-12, got {text!r}")
    if lo_i < 0 or hi_i < lo_i:
        raise argparse.ArgumentTypeError(f"empty degree range {text!r}")
    return tuple(range(lo_i, hi_i + 1))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, required=True, help="field size, a prime power")
    common.add_argument("--format", dest="fmt", choices=("table", "csv", "json"), default="table")
    common.add_argument("--out", help="write output here instead of stdout")

    weighted = argparse.ArgumentParser(add_help=False)
    weighted.add_argument("--w", type=_weights, required=True, help="weights, e.g. 2,3,5")

    degree = argparse.ArgumentParser(add_help=False)
    g = degree.add_mutually_exclusive_group(required=True)
    g.add_argument("--d", type=int, help="degree")
    g.add_argument("--d-range", type=_degree_range, help="inclusive degree range lo-hi")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max projective classes to enumerate")
    search.add_argument("--seed", type=int, default=0, help="seed of the randomized search")
    search.add_argument("--iterations", type=int, default=DEFAULT_ITERATIONS, help="randomized search samples")
    search.add_argument("--workers", type=int, default=1, help="processes for exhaustive search")

    parser = _Parser(prog="wprm", description="Rational zeros of weighted-homogeneous polynomials over F_q.")
    parser.add_argument("--version", action="version", version=f"wprm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("points", parents=[common, weighted], help="list the F_q-points of P(w)")
    p = sub.add_parser("eq", parents=[common, weighted, degree, search], help="maximal number of zeros e_q(d; w)")
    p.add_argument("--mode", choices=("formula", "bruteforce", "bounds"), default="formula")
    sub.add_parser("table1", parents=[common, degree, search], help="e_q(d; 2,3,5) over a degree range")
    sub.add_parser("footprint", parents=[common, weighted, degree], help="footprint bounds of standard monomials")
    p = sub.add_parser("code", parents=[common, weighted, degree, search], help="evaluation code parameters")
    p.add_argument("--export", choices=("text", "json"), help="emit the generator matrix instead of the report")
    sub.add_parser("witness", parents=[common, weighted, degree], help="a polynomial with the maximal zero count")
    return parser


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    degrees = ()
    if getattr(ns, "d", None) is not None:
        degrees = (ns.d,)
    elif getattr(ns, "d_range", None) is not None:
        degrees = ns.d_range
    return RunConfig(
        command=ns.command,
        q=ns.q,
        weights=getattr(ns, "w", None),
        degrees=degrees,
        mode=getattr(ns, "mode", "formula"),
        budget=getattr(ns, "budget", DEFAULT_BUDGET),
        seed=getattr(ns, "seed", 0),
        iterations=getattr(ns, "iterations", DEFAULT_ITERATIONS),
        workers=getattr(ns, "workers", 1),
        export=getattr(ns, "export", None),
        fmt=ns.fmt,
        out=ns.out,
    )


# -- commands -----------------------------------------------------------------

def cmd_points(cfg: RunConfig) -> Report:
    F = field_new(cfg.q)
    pts = enumerate_points(F, cfg.weights)
    rows = [
        {"index": i, "point": "(" + ":".join(format_element(F, c) for c in P) + ")"}
        for i, P in enumerate(pts)
    ]
    return Report(["index", "point"], rows, {"q": cfg.q, "w": list(cfg.weights), "count": len(pts)})


def _eq_row(cfg: RunConfig, d: int) -> dict[str, Any]:
    q, w = cfg.q, cfg.weights
    if cfg.mode == "formula":
        r = formula_value(q, w, d)
        return {"d": d, "value": r.value, "kind": r.kind, "source": r.source}
    if cfg.mode == "bruteforce":
        return {"d": d, "value": eq_bruteforce(q, w, d, cfg.budget, cfg.workers), "kind": "exact", "source": "exhaustive"}
    lower = lower_bound_general(q, w, d).value
    try:
        upper = upper_bound_coprime(q, w, d).value
    except HypothesisViolated:
        upper = p_j(q, len(w) - 1)
    return {"d": d, "lower": lower, "upper": upper}


def cmd_eq(cfg: RunConfig) -> Report:
    field_new(cfg.q)
    rows = [_eq_row(cfg, d) for d in cfg.degrees]
    cols = ["d", "lower", "upper"] if cfg.mode == "bounds" else ["d", "value", "kind", "source"]
    return Report(cols, rows, {"q": cfg.q, "w": list(cfg.weights), "mode": cfg.mode})


def table1_row(q: int, d: int, budget: int, seed: int, iterations: int, workers: int = 1) -> dict[str, Any]:
    """One row: formula lower bound, exact value or randomized range, coprime upper bound."""
    w = TABLE1_WEIGHTS
    if not denumerant(d, w):
        return {"d": d, **{c: "" for c in TABLE1_COLUMNS[1:-1]}, "status": "empty"}
    lower = lower_bound_general(q, w, d).value
    try:
        upper: int | str = upper_bound_coprime(q, w, d).value
    except HypothesisViolated:
        upper = ""
    code = wprm_code(q, w, d)
    if not code.injective:
        low = high = code.n
        status = "exact"
    elif code.classes() <= budget:
        low = high = max_zeros_exact(code, budget, workers)
        status = "exact"
    else:
        low = code.n - min_weight_random_search(code, iterations, seed)
        high = upper if upper != "" else code.n
        status = "range"
    return {
        "d": d,
        "lower_bound": lower,
        "exact_or_range_low": low,
        "exact_or_range_high": high,
        "upper_bound": upper,
        "status": status,
    }


TABLE1_COLUMNS = ["d", "lower_bound", "exact_or_range_low", "exact_or_range_high", "upper_bound", "status"]


def cmd_table1(cfg: RunConfig) -> Report:
    field_new(cfg.q)
    rows = [table1_row(cfg.q, d, cfg.budget, cfg.seed, cfg.iterations, cfg.workers) for d in cfg.degrees]
    return Report(TABLE1_COLUMNS, rows, {"q": cfg.q, "w": list(TABLE1_WEIGHTS), "seed": cfg.seed})


def cmd_footprint(cfg: RunConfig) -> Report:
    F = field_new(cfg.q)
    pts = enumerate_points(F, cfg.weights)
    rows = []
    for d in cfg.degrees:
        ctx = footprint_context(pts, d)
        values = fb_vector(ctx)
        for mono, value in zip(ctx.basis_at_d.monomials, values.tolist()):
            i = next((k for k, a in enumerate(mono) if a), 0)
            rows.append(
                {
                    "d": d,
                    "monomial": format_poly_monomial(mono),
                    "slice": i,
                    "fb": value,
                    "fb_slice": fb_i(mono, i, ctx),
                    "zero_bound": len(pts) - value,
                }
            )
    meta = {"q": cfg.q, "w": list(cfg.weights), "p_m": len(pts)}
    return Report(["d", "monomial", "slice", "fb", "fb_slice", "zero_bound"], rows, meta)


def format_poly_monomial(mono: Sequence[int]) -> str:
    parts = [f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(mono) if a]
    return "*".join(parts) or "1"


def cmd_code(cfg: RunConfig) -> Report | str:
    rows = []
    for d in cfg.degrees:
        code = wprm_code(cfg.q, cfg.weights, d)
        if cfg.export == "json":
            return code.to_json() + "\n"
        if cfg.export == "text":
            return code.to_text()
        if code.classes() <= cfg.budget:
            dmin, status = code.n - max_zeros_exact(code, cfg.budget, cfg.workers), "exact"
        else:
            dmin, status = min_weight_random_search(code, cfg.iterations, cfg.seed), "upper"
        rows.append(
            {"d": d, "n": code.n, "k": code.k, "d_min": dmin, "d_min_status": status, "injective": code.injective}
        )
    return Report(["d", "n", "k", "d_min", "d_min_status", "injective"], rows, {"q": cfg.q, "w": list(cfg.weights)})


def _witnesses(q: int, w: tuple[int, ...], d: int):
    W = Weights(w)
    if W[0] == 1 and W.m >= 1:
        return [extremal_w0_one(q, W, d)]
    if W.m == 1:
        return [extremal_m1(q, W[0], W[1], d)]
    if W.w == TABLE1_WEIGHTS and d in (7, 10, 12):
        return shapes_235(q, d)
    raise HypothesisViolated(f"no construction is known for w = {W.w}, d = {d}")


def cmd_witness(cfg: RunConfig) -> Report:
    field_new(cfg.q)
    rows = []
    for d in cfg.degrees:
        for wit in _witnesses(cfg.q, cfg.weights, d):
            rows.append(
                {"d": d, "polynomial": format_poly(wit.poly), "zeros": wit.claimed_zeros, "verified": True, "construction": wit.attains}
            )
    return Report(["d", "polynomial", "zeros", "verified", "construction"], rows, {"q": cfg.q, "w": list(cfg.weights)})


COMMANDS = {
    "points": cmd_points,
    "eq": cmd_eq,
    "table1": cmd_table1,
    "footprint": cmd_footprint,
    "code": cmd_code,
    "witness": cmd_witness,
}


# -- rendering ----------------------------------------------------------------

def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(report: Report, fmt: str, command: str) -> str:
    if fmt == "json":
        doc = {"command": command, **report.meta, "columns": report.columns, "rows": report.rows}
        return json.dumps(doc, indent=2) + "\n"
    table = [[_cell(r[c]) for c in report.columns] for r in report.rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(report.columns)
        writer.writerows(table)
        return buf.getvalue()
    widths = [max([len(c)] + [len(row[i]) for row in table]) for i, c in enumerate(report.columns)]
    lines = ["  ".join(c.ljust(n) for c, n in zip(report.columns, widths)).rstrip()]
    lines += ["  ".join(v.ljust(n) for v, n in zip(row, widths)).rstrip() for row in table]
    return "\n".join(lines) + "\n"


def run(cfg: RunConfig) -> str:
    result = COMMANDS[cfg.command](cfg)
    return result if isinstance(result, str) else render(result, cfg.fmt, cfg.command)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = run(cfg)
    except HypothesisViolated as exc:
        print(f"wprm: hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except BudgetExceeded as exc:
        print(f"wprm: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvalidInput as exc:
        print(f"wprm: invalid input ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_INVALID
    except WPRMError as exc:
        print(f"wprm: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK
