"""Command-line front end: norm queries, verification reports, curve tables.

Output is reproducible byte for byte given identical flags: numbers are
printed with 10 significant digits, JSON carries numbers as decimal strings,
and every sampled check draws from a seeded generator (--seed, default 42).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import List, Optional, Sequence

import numpy as np

from .errors import DiskNormsError
from .norms import NormQuery, Target, closed_form_norm, riesz_thorin_bound
from .operators import Operator
from .profiles import profile_K, profile_M, profile_N
from .verify import SUITE_NAMES, VerifyConfig, run_suite

OP_CHOICES = ["cauchy", "bergman", "j0", "j0star", "cdelta"]


def _fmt(x: float) -> str:
    return format(float(x), ".10g")


def _parse_p(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"--p expects a real number or 'inf', got {text!r}"
        ) from None
    if math.isnan(value):
        raise argparse.ArgumentTypeError("--p must not be NaN")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disknorms",
        description="Norms, bounds, and counterexamples for integral operators on the unit disk.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    norm = sub.add_parser("norm", help="look up one catalog norm or bound")
    norm.add_argument("--op", choices=OP_CHOICES, required=True)
    norm.add_argument("--p", type=_parse_p, required=True, metavar="REAL|inf")
    norm.add_argument("--target", choices=["same", "linf"], default="same")
    norm.add_argument("--format", choices=["csv", "json", "text"], default="text")
    norm.add_argument("--out", default=None, metavar="PATH")

    verify = sub.add_parser("verify", help="run a verification suite and report PASS/FAIL rows")
    verify.add_argument("--suite", choices=["all", *SUITE_NAMES], default="all")
    verify.add_argument("--format", choices=["csv", "json", "text"], default="text")
    verify.add_argument("--tol", type=float, default=None,
                        help="override every row tolerance with one absolute value")
    verify.add_argument("--seed", type=int, default=42)
    verify.add_argument("--epsilon", type=float, default=0.05,
                        help="truncation radius for counterexample mass rows")
    verify.add_argument("--radial-nodes", type=int, default=None)
    verify.add_argument("--angular-nodes", type=int, default=None)
    verify.add_argument("--out", default=None, metavar="PATH")

    table = sub.add_parser("table", help="emit a curve table (CSV or JSON)")
    table.add_argument("kind", choices=["interpolation", "lp_linf_curves", "profiles"])
    table.add_argument("--op", choices=OP_CHOICES, default="cauchy")
    table.add_argument("--p", default=None,
                       help="grid: comma-separated values, e.g. '2.5,3,4,inf' "
                            "(profiles: a single p)")
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.add_argument("--out", default=None, metavar="PATH")
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as handle:
            handle.write(text)


def _csv_text(header: List[str], rows: List[List[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def cmd_norm(args) -> int:
    query = NormQuery(Operator(args.op), args.p, Target(args.target))
    result = closed_form_norm(query)
    fields = [
        ("operator", args.op),
        ("p", _fmt(args.p)),
        ("target", args.target),
        ("value", _fmt(result.value)),
        ("kind", result.kind.value),
        ("error_estimate", _fmt(result.error_estimate)),
        ("provenance", result.provenance),
    ]
    if args.format == "text":
        text = "".join(f"{k}: {v}\n" for k, v in fields)
    elif args.format == "csv":
        text = _csv_text([k for k, _ in fields], [[v for _, v in fields]])
    else:
        text = json.dumps(dict(fields), indent=2) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    cfg = VerifyConfig(
        seed=args.seed,
        epsilon=args.epsilon,
        radial_nodes=args.radial_nodes,
        angular_nodes=args.angular_nodes,
    )
    rows = run_suite(args.suite, cfg, tol_override=args.tol)
    n_pass = sum(r.passed for r in rows)
    if args.format == "csv":
        text = _csv_text(
            ["label", "claimed", "computed", "abs_err", "status", "citation"],
            [
                [r.label, _fmt(r.claimed), _fmt(r.computed), _fmt(r.abs_err), r.status, r.citation]
                for r in rows
            ],
        )
    elif args.format == "json":
        payload = {
            "suite": args.suite,
            "rows": [
                {
                    "label": r.label,
                    "claimed": _fmt(r.claimed),
                    "computed": _fmt(r.computed),
                    "abs_err": _fmt(r.abs_err),
                    "status": r.status,
                    "citation": r.citation,
                }
                for r in rows
            ],
            "passed": _fmt(n_pass),
            "failed": _fmt(len(rows) - n_pass),
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [
            f"{r.status}  {r.label} | claimed {_fmt(r.claimed)} | computed {_fmt(r.computed)}"
            f" | abs_err {_fmt(r.abs_err)} | tol {_fmt(r.tolerance)} | {r.citation}"
            for r in rows
        ]
        lines.append(f"{len(rows)} rows: {n_pass} PASS, {len(rows) - n_pass} FAIL")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if n_pass == len(rows) else 1


def _parse_grid(text: Optional[str], default: Sequence[float]) -> List[float]:
    if text is None:
        return list(default)
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise DiskNormsError(f"could not parse --p grid {text!r}") from None


def cmd_table(args) -> int:
    if args.kind == "interpolation":
        grid = _parse_grid(args.p, (1.0, 1.25, 1.5, 1.75, 2.0, 2.5, 3.0, 4.0, 6.0, 10.0, math.inf))
        header = ["p", "value", "kind"]
        rows = []
        for p in grid:
            r = riesz_thorin_bound(p)
            rows.append([_fmt(p), _fmt(r.value), r.kind.value])
    elif args.kind == "lp_linf_curves":
        grid = _parse_grid(args.p, (2.5, 3.0, 4.0, 6.0, 10.0, math.inf))
        header = ["p", "value", "kind"]
        rows = []
        for p in grid:
            r = closed_form_norm(NormQuery(Operator(args.op), p, Target.L_INFINITY))
            rows.append([_fmt(p), _fmt(r.value), r.kind.value])
    else:
        grid = _parse_grid(args.p, (3.0,))
        if len(grid) != 1:
            raise DiskNormsError("profiles table expects a single --p value")
        p = grid[0]
        if not p > 2.0:
            raise DiskNormsError(
                f"profiles table requires p > 2 so all three profiles exist, got p = {p:g}"
            )
        q = p / (p - 1.0)
        header = ["rho", "profile_K", "profile_M", "profile_N"]
        rows = []
        for rho in np.arange(0.0, 0.951, 0.05):
            rho = float(round(rho, 2))
            rows.append(
                [
                    _fmt(rho),
                    _fmt(profile_K(p, rho)),
                    _fmt(profile_M(q, rho)),
                    _fmt(profile_N(q, rho, 1e-10).value),
                ]
            )
    if args.format == "csv":
        text = _csv_text(header, rows)
    else:
        text = json.dumps({"kind": args.kind, "columns": header, "rows": rows}, indent=2) + "\n"
    _emit(text, args.out)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "norm":
            return cmd_norm(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_table(args)
    except DiskNormsError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def run() -> None:
    raise SystemExit(main())
