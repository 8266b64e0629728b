"""Command-line front end.

Exit codes: 0 success, 1 parse or input error, 2 warnings under ``--strict``,
3 corpus mismatch.
"""
from __future__ import annotations

import argparse
import difflib
import json
import sys
from fractions import Fraction

from .corpus import GOLDEN, PRESENTATIONS, strip_comments
from .fiber import kernel_at
from .linmat import build_matrix
from .relparse import ParseError, parse_presentation
from .report import analyze, golden_report, render_minors, render_scheme, to_json

EXIT_OK, EXIT_PARSE, EXIT_STRICT, EXIT_MISMATCH = 0, 1, 2, 3


def _fmt(x) -> str:
    return str(x)


def _read(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e
    return parse_presentation(text)


def _strict_status(args, warnings) -> int:
    if warnings and args.strict:
        for w in warnings:
            print(f"error: {w}", file=sys.stderr)
        return EXIT_STRICT
    return EXIT_OK


def cmd_minors(args) -> int:
    a = analyze(_read(args.file), args.split_budget)
    if args.json:
        print(json.dumps(to_json(a)["minors"], indent=2))
    else:
        print(render_minors(a, expanded=args.expanded))
    return _strict_status(args, a.scheme.warnings)


def cmd_scheme(args) -> int:
    a = analyze(_read(args.file), args.split_budget)
    if args.json:
        doc = to_json(a)
        if not args.expanded:
            for m in doc["minors"]:
                m.pop("expanded")
        print(json.dumps(doc, indent=2))
    else:
        print(render_scheme(a))
    return _strict_status(args, a.scheme.warnings)


def _parse_alpha(text: str) -> list[Fraction]:
    try:
        return [Fraction(t.strip()) for t in text.split(",")]
    except ValueError as e:
        raise ParseError(f"bad --alpha value {text!r}") from e


def cmd_fiber(args) -> int:
    p = _read(args.file)
    alpha = _parse_alpha(args.alpha)
    q0 = None
    if args.q is not None:
        try:
            q0 = Fraction(args.q)
        except ValueError as e:
            raise ParseError(f"bad --q value {args.q!r}") from e
    try:
        r = kernel_at(build_matrix(p), alpha, q0, p.constraints)
    except ValueError as e:
        raise ParseError(str(e)) from e
    if args.json:
        print(json.dumps({
            "schema": 1,
            "alpha": [_fmt(x) for x in alpha],
            "q": None if q0 is None else _fmt(q0),
            "rank": r.rank,
            "field": r.field,
            "kernel": [[_fmt(x) for x in v] for v in r.kernel_basis],
        }, indent=2))
    else:
        print(f"rank {r.rank} over {r.field}")
        for v in r.kernel_basis:
            print("beta = (" + ", ".join(_fmt(x) for x in v) + ")")
        if not r.kernel_basis:
            print("no point module over this alpha")
    return EXIT_OK


def cmd_corpus(args) -> int:
    bad = []
    for name, text in PRESENTATIONS.items():
        got = golden_report(analyze(parse_presentation(text), args.split_budget))
        want = strip_comments(GOLDEN.get(name, ""))
        if args.verbose:
            print(f"## {name}\n{got}")
        if got != want:
            bad.append(name)
            sys.stdout.writelines(difflib.unified_diff(
                want.splitlines(True), got.splitlines(True), f"{name} (golden)", f"{name} (computed)"))
    print(f"{len(PRESENTATIONS) - len(bad)}/{len(PRESENTATIONS)} presentations match")
    return EXIT_MISMATCH if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--expanded", action="store_true", help="print polynomials unfactored")
    common.add_argument("--split-budget", type=int, default=None, metavar="K",
                        help="maximum case-split depth (default: number of generators)")
    common.add_argument("--strict", action="store_true", help="treat pipeline warnings as errors")

    ap = argparse.ArgumentParser(prog="pointscheme", description="Point schemes of quadratic algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("minors", parents=[common], help="distinct maximal minors of D")
    p.add_argument("file")
    p.set_defaults(func=cmd_minors)

    p = sub.add_parser("scheme", parents=[common], help="components of the point scheme")
    p.add_argument("file")
    p.set_defaults(func=cmd_scheme)

    p = sub.add_parser("fiber", parents=[common], help="kernel of D at a point")
    p.add_argument("file")
    p.add_argument("--alpha", required=True, help="comma-separated rational coordinates")
    p.add_argument("--q", default=None, help="rational value for q (symbolic if omitted)")
    p.set_defaults(func=cmd_fiber)

    p = sub.add_parser("corpus", parents=[common], help="check the built-in presentations")
    p.add_argument("-v", "--verbose", action="store_true", help="print every computed report")
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
