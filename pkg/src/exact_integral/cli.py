"""``exact-integral``: integrate, take the sup of, or Stieltjes-integrate an
expression in ``x`` over [0, 1] and print a decimal answer certified to
within ``10**-d``.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .completion import answer
from .expr import CompileError, ParseError, compile_expr, parse
from .foundations import UcFunQQ
from .integration import (
    InvalidMeasure,
    QuantileFn,
    b_sup,
    compose_qq,
    compose_qr,
    id01,
    integral,
    iota_lift,
    lift_qq,
    q_cantor,
    q_dirac,
    q_uniform,
)
from .stepfn import leaf_count

DEFAULT_MAX_DIGITS = 12
MAX_DIGITS_ENV = "EXACT_INTEGRAL_MAX_DIGITS"


class UsageError(Exception):
    pass


def max_digits() -> int:
    raw = os.environ.get(MAX_DIGITS_ENV)
    if raw is None:
        return DEFAULT_MAX_DIGITS
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{MAX_DIGITS_ENV} must be an integer, got {raw!r}")


def parse_measure(text: str) -> QuantileFn:
    if text == "uniform":
        return q_uniform()
    if text == "cantor":
        return q_cantor()
    if text.startswith("dirac:"):
        try:
            a = Fraction(text[len("dirac:"):])
        except ValueError:
            raise UsageError(f"bad dirac point in {text!r}")
        if not 0 <= a <= 1:
            raise UsageError(f"dirac point must lie in [0, 1], got {a}")
        return q_dirac(a)
    raise UsageError(f"unknown measure {text!r} (expected dirac:<q>, uniform or cantor)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exact-integral",
        description="Exact integration and suprema of expressions in x over [0, 1].",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, help_text in (
        ("integrate", "integral over [0, 1]"),
        ("sup", "supremum over [0, 1]"),
        ("stieltjes", "integral against a distribution given by its quantile function"),
    ):
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("-d", "--digits", type=int, default=3, help="answer within 10^-d")
        if verb == "stieltjes":
            p.add_argument("--measure", default="uniform", help="dirac:<q>, uniform or cantor")
        p.add_argument(
            "--steps-report",
            action="store_true",
            help="report the leaf count of the folded approximant on stderr",
        )
        p.add_argument("expr", help='integrand in x, e.g. "cos(x) + 1/2"')
    return parser


def run(args: argparse.Namespace, out=sys.stdout, err=sys.stderr) -> int:
    try:
        cap = max_digits()
        if not 0 <= args.digits <= cap:
            raise UsageError(f"digits must be between 0 and {cap}")
        measure = parse_measure(args.measure) if args.verb == "stieltjes" else None
    except UsageError as e:
        print(f"exact-integral: {e}", file=err)
        return 2

    try:
        f = compile_expr(parse(args.expr))
    except (ParseError, CompileError) as e:
        print(f"exact-integral: {e}", file=err)
        return 1

    if measure is not None:
        if isinstance(f, UcFunQQ):
            f = lift_qq(f)
        bounded = compose_qr(f, measure.as_bounded())
    elif isinstance(f, UcFunQQ):
        bounded = compose_qq(f, id01())
    else:
        bounded = compose_qr(f, id01())

    result = b_sup(bounded) if args.verb == "sup" else integral(iota_lift(bounded))
    eps = Fraction(1, 2 * 10**args.digits)
    try:
        text = answer(args.digits, result)
    except InvalidMeasure as e:
        print(f"exact-integral: invalid measure: {e}", file=err)
        return 1
    print(text, file=out)
    if args.steps_report:
        # cached by the query above, so this refolds nothing
        print(f"steps: {leaf_count(bounded.query(eps))}", file=err)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
