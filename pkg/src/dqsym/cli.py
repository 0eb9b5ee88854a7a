"""
Command line entry point.

    dqsym matrix --kind D --n 3
    dqsym verify --suite all --n 4
    dqsym expand --target psi --arg 312 --basis G

Exit status: 0 on success, 1 when a verification fails or an element is
outside the ribbon span, 2 on usage or literal errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .combinatorics import format_composition, format_word, is_permutation, parse_composition, parse_word
from .identities import (
    DEFAULT_MAX_N,
    BoundExceeded,
    SpanError,
    check_bound,
    expand_in_R,
    p_L,
    psi_sigma,
    psi_u,
    r_to_lambda,
    sigma_n,
)
from .matrices import KINDS, build_matrix
from .verify import SUITES, run_suite

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def cmd_matrix(kind: str, n: int, fmt: str = "text", max_n: Optional[int] = None) -> str:
    m = build_matrix(kind, n, max_n)
    if fmt == "json":
        return _dump_json(m.to_json())
    if fmt == "csv":
        return m.to_csv()
    return m.to_text()


def cmd_verify(suite: str, n: int, fmt: str = "text", max_n: Optional[int] = None) -> tuple[str, int]:
    report = run_suite(suite, n, max_n)
    if fmt == "json":
        out = _dump_json(report.to_json())
    elif fmt == "csv":
        out = _csv(report.to_csv_rows())
    else:
        out = report.to_text() + "\n"
    return out, 0 if report.passed else 1


def _target_element(target: str, arg: str, max_n: Optional[int]):
    try:
        if target == "sigma":
            n = int(arg)
            if n < 1:
                raise ValueError("n must be positive")
            return sigma_n(n, max_n)
        if target == "p":
            return p_L(parse_composition(arg), max_n)
        if target == "psi":
            w = parse_word(arg)
            check_bound(len(w), max_n)
            # permutations get the factorized product, other color words the plain bracket
            return psi_sigma(w) if is_permutation(w) else psi_u(w)
    except BoundExceeded:
        raise
    except ValueError as exc:
        raise UsageError(f"bad --arg {arg!r} for target {target}: {exc}") from None
    raise UsageError(f"unknown target {target!r}")


def cmd_expand(target: str, arg: str, basis: str = "G", fmt: str = "text",
               max_n: Optional[int] = None) -> str:
    e = _target_element(target, arg, max_n)
    if basis == "G":
        if fmt == "json":
            return _dump_json(e.to_json())
        if fmt == "csv":
            return _csv([["sigma", "colors", "coeff"]] +
                        [[format_word(b.sigma), format_word(b.colors), str(c)]
                         for b, c in e.sorted_terms()])
        return e.to_text() + "\n"
    exp = expand_in_R(e)
    if basis == "Lambda":
        exp = r_to_lambda(exp)
    if fmt == "json":
        return _dump_json(exp.to_json())
    if fmt == "csv":
        return _csv([["I", "J", "coeff"]] +
                    [[format_composition(I), format_composition(J), str(c)]
                     for (I, J), c in exp.sorted_items()])
    return exp.to_text() + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dqsym",
        description="q-bracketings in colored free quasi-symmetric functions")
    parser.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                        help=f"enumeration bound (default {DEFAULT_MAX_N})")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--max-n", type=int, default=argparse.SUPPRESS,
                       help="enumeration bound")

    p = sub.add_parser("matrix", help="print a coefficient grid")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="check the closed forms against brute force")
    p.add_argument("--suite", choices=tuple(SUITES), default="all")
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("expand", help="expand an element in the G, R or Lambda basis")
    p.add_argument("--target", choices=("sigma", "p", "psi"), required=True)
    p.add_argument("--arg", required=True,
                   help="n for sigma, a composition like 2,1 for p, a word like 312 for psi")
    p.add_argument("--basis", choices=("G", "R", "Lambda"), default="G")
    common(p)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    status = 0
    try:
        if args.command == "matrix":
            out = cmd_matrix(args.kind, args.n, args.format, args.max_n)
        elif args.command == "verify":
            out, status = cmd_verify(args.suite, args.n, args.format, args.max_n)
        else:
            out = cmd_expand(args.target, args.arg, args.basis, args.format, args.max_n)
    except SpanError as exc:
        print(f"dqsym: not in the span of the colored ribbons: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ValueError) as exc:
        print(f"dqsym: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
