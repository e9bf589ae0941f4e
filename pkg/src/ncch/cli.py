"""Command line front end.

    ncch sdet|sadj|cparts|charpoly [--input PATH] [--format text|json]
    ncch verify [--check NAME|all] [--ring free|grassmann:K|rational|u2]
                [--n N] [--seed S] [--trials T] [--format text|json]

Exit codes: 0 ok / all checks pass, 1 some check failed, 2 parse error or
unknown check, 3 matrix dimension over the cap (raise it with NCCH_MAX_N).
"""
from __future__ import annotations

import argparse
import json
import sys

from . import exprparse, theorems, tpoly
from . import matrix as ncmatrix
from .exprparse import ParseError, format_element, format_matrix
from .perm import CapError

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3

COMPUTE_KINDS = ("sdet", "sadj", "cparts", "charpoly")


def _rows(M):
    return [[format_element(x) for x in row] for row in M.rows]


def _indent(text: str) -> str:
    return "\n".join("  " + line for line in text.split("\n"))


def compute(kind: str, A, fmt: str = "text", formula: str = "alpha-beta") -> str:
    """Render the requested object for matrix ``A``."""
    if kind == "sdet":
        value = format_element(ncmatrix.sdet(A, formula))
        return json.dumps({"sdet": value}) if fmt == "json" else value
    if kind == "sadj":
        star = ncmatrix.sadj(A, formula)
        return json.dumps({"sadj": _rows(star)}) if fmt == "json" else format_matrix(star)
    if kind == "cparts":
        parts = ncmatrix.commutator_parts(A)
        if fmt == "json":
            return json.dumps({"C": _rows(parts.C), "D": _rows(parts.D), "sdet": format_element(parts.lam)})
        return "\n".join([
            "C =", _indent(format_matrix(parts.C)),
            "D =", _indent(format_matrix(parts.D)),
            f"sdet = {format_element(parts.lam)}",
        ])
    if kind == "charpoly":
        data = tpoly.poly_commutator_parts(A)
        if fmt == "json":
            return json.dumps({
                "p": format_element(data.p),
                "mu": [format_element(m) for m in data.mu],
                "C": [_rows(m) for m in data.C],
                "D": [_rows(m) for m in data.D],
            })
        lines = [format_element(data.p)]
        lines += [f"mu_{i} = {format_element(m)}" for i, m in enumerate(data.mu)]
        for label, mats in (("C", data.C), ("D", data.D)):
            for i, m in enumerate(mats):
                lines += [f"{label}({i}) =", _indent(format_matrix(m))]
        return "\n".join(lines)
    raise ValueError(f"unknown computation {kind!r}")


def render_report_text(r: theorems.VerificationReport) -> str:
    line = f"{r.status.upper():5} {r.check:16} ring={r.ring} n={r.n} trials={r.trials} seed={r.seed} ({r.millis:.1f} ms)"
    if r.error:
        line += f"\n      error: {r.error}"
    cx = r.counterexample
    if cx is not None:
        line += f"\n      trial {cx.trial}: {cx.detail}\n      lhs: {cx.lhs}\n      rhs: {cx.rhs}"
        instance = cx.instance if isinstance(cx.instance, str) else json.dumps(cx.instance)
        line += "\n      instance:\n" + "\n".join("        " + s for s in instance.rstrip("\n").split("\n"))
    return line


def plan(check: str, ring, n, trials, seed) -> list[tuple[str, theorems.CheckConfig]]:
    if check != "all":
        return [(check, theorems.configure(check, ring, n, trials, seed))]
    if ring is None and n is None:
        return theorems.default_suite(seed or 0, trials)
    kind = (ring or "free").split(":", 1)[0].lower()
    return [
        (name, theorems.configure(name, ring, n, trials, seed))
        for name, spec in theorems.CHECKS.items()
        if ring is None or kind in spec.rings
    ]


def cmd_verify(args) -> int:
    if args.check != "all" and args.check not in theorems.CHECKS:
        valid = ", ".join(["all", *theorems.CHECKS])
        print(f"unknown check {args.check!r}; valid names: {valid}", file=sys.stderr)
        return EXIT_PARSE
    reports = theorems.run_suite(plan(args.check, args.ring, args.n, args.trials, args.seed))
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    else:
        for r in reports:
            print(render_report_text(r))
        print(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return EXIT_OK if theorems.all_passed(reports) else EXIT_FAIL


def cmd_compute(args) -> int:
    try:
        if args.input in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        A = exprparse.parse_matrix(text)
        print(compute(args.command, A, args.format, args.formula))
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except CapError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncch", description="Symmetric determinants over noncommutative rings.")
    sub = parser.add_subparsers(dest="command", required=True)
    for kind in COMPUTE_KINDS:
        p = sub.add_parser(kind, help=f"compute {kind} of a matrix file")
        p.add_argument("--input", "-i", help="matrix document (default: stdin)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--formula", choices=ncmatrix.SDET_FORMULAS, default="alpha-beta")
    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--check", default="all", help="check name or 'all'")
    v.add_argument("--ring", help="free | grassmann:K | rational | u2")
    v.add_argument("--n", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_compute(args)


if __name__ == "__main__":
    sys.exit(main())
