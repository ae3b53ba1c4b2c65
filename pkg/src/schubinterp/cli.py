"""Command-line front end.

Exit codes: 0 on success, 1 on a usage error, 2 when a promise or contract is
violated (no majority, non-integral interpolant, divergent recursion).
Numbers in the output are decimal strings; nothing is ever a float.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path

from .combinatorics import parse_int_list
from .interpolation import (
    BlackBox, InterpolationConfig, PromiseViolation, get_basis, interpolate, ks_set,
)
from .lr import lr_expand_product, lr_term_count
from .schubert import schubert_eval, schubert_expand
from .skew import skew_eval, skew_expand
from .sparse_poly import SparsePolynomial

log = logging.getLogger("schubinterp")

EXIT_OK, EXIT_USAGE, EXIT_CONTRACT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return parse_int_list(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational such as 1/3, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schub", description="Schubert polynomials and deterministic sparse interpolation.")
    parser.add_argument("--out", type=Path, help="write the result here instead of stdout")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", help="monomial expansion of a Schubert polynomial")
    p.add_argument("--code", type=_int_list, required=True)
    p.add_argument("--method", choices=("transition", "dd"), default="transition")
    p.add_argument("--nvars", type=int, help="number of variables (default: code length)")

    p = sub.add_parser("eval", help="evaluate a Schubert polynomial at an integer point")
    p.add_argument("--code", type=_int_list, required=True)
    p.add_argument("--point", type=_int_list, required=True)

    p = sub.add_parser("skew-expand", help="monomial expansion of a skew Schubert polynomial")
    p.add_argument("--v", type=_int_list, required=True, help="code of the lower permutation")
    p.add_argument("--w", type=_int_list, required=True, help="code of the upper permutation")

    p = sub.add_parser("skew-eval", help="evaluate a skew Schubert polynomial")
    p.add_argument("--v", type=_int_list, required=True)
    p.add_argument("--w", type=_int_list, required=True)
    p.add_argument("--point", type=_int_list, required=True)

    p = sub.add_parser("interp", help="interpolate a polynomial file in a basis")
    p.add_argument("--poly", type=Path, required=True, help="polynomial JSON file used as the black box")
    p.add_argument("--basis", choices=("monomial", "schur", "schubert"), required=True)
    p.add_argument("--d", type=int, required=True, help="degree bound")
    p.add_argument("--m", type=int, required=True, help="bound on the number of basis terms")
    p.add_argument("--eps", type=_fraction, default=Fraction(1, 3))

    p = sub.add_parser("lr", help="Schubert expansion of a product Y_u * Y_v")
    p.add_argument("--u", type=_int_list, required=True)
    p.add_argument("--v", type=_int_list, required=True)
    p.add_argument("--m", type=int, help="term bound (default: counted by the triangular oracle)")
    p.add_argument("--eps", type=_fraction, default=Fraction(1, 3))

    p = sub.add_parser("ks", help="list a Klivans-Spielman vector set")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eps", type=_fraction, default=Fraction(1, 3))
    p.add_argument("--d", type=int, required=True)
    return parser


def _compute(args: argparse.Namespace) -> str:
    cmd = args.command
    if cmd == "expand":
        return schubert_expand(args.code, args.nvars, args.method).to_json()
    if cmd == "eval":
        return str(schubert_eval(args.code, args.point))
    if cmd == "skew-expand":
        return skew_expand(args.v, args.w).to_json()
    if cmd == "skew-eval":
        return str(skew_eval(args.v, args.w, args.point))
    if cmd == "interp":
        try:
            poly = SparsePolynomial.from_json(args.poly.read_text(encoding="utf-8"))
        except (OSError, KeyError, TypeError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read polynomial file {args.poly}: {exc}") from None
        basis = get_basis(args.basis, poly.nvars)
        config = InterpolationConfig(epsilon=args.eps)
        return interpolate(BlackBox.from_polynomial(poly), basis, poly.nvars, args.d, args.m, config).to_json()
    if cmd == "lr":
        m = args.m
        if m is None:
            m = lr_term_count(args.u, args.v)
            log.info("term bound from the triangular oracle: %d", m)
        return lr_expand_product(args.u, args.v, m, InterpolationConfig(epsilon=args.eps)).to_json()
    if cmd == "ks":
        ks = ks_set(args.m, args.n, args.eps, args.d)
        return json.dumps({
            "m": ks.m, "n": ks.n, "epsilon": str(ks.epsilon), "d": ks.d_param,
            "t": ks.t, "p": ks.p, "vectors": [list(c) for c in ks.vectors],
        })
    raise UsageError(f"unknown command {cmd!r}")  # pragma: no cover


def run(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"schub: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        text = _compute(args)
    except UsageError as exc:
        print(f"schub: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PromiseViolation, ArithmeticError, RuntimeError) as exc:
        print(f"schub: contract violation: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except ValueError as exc:
        print(f"schub: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out is not None:
        args.out.write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
