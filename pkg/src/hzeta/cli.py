"""Command-line front end.

Subcommands
-----------
dz        zeta'(-k)
hz        zeta'(-k, w), w decimal or rational "p/q"
const     order-k limiting constant L_k
varpi     Jeffery summation constant
kinkelin  Kinkelin's log varpi
gamma     log Gamma_k(x)
table     L_k and zeta'(-k) for k = 0..K
selftest  run the identity suite

Common flags: --digits D (default 20, or the HZETA_DIGITS environment
variable), --json for one JSON object per line, --terms/--w-trial to
override the automatic series parameters.  Exit codes: 0 success,
1 computation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import TextIO

import mpmath

from .constants import gkbj_auto, gkbj_constant, kinkelin_logvarpi, varpi
from .errors import HzetaError
from .gengamma import log_gengamma
from .hurwitz import hurwitz_deriv, hurwitz_deriv_integer, zeta_deriv_neg
from .mpcore import PrecisionContext
from .validate import selftest

__all__ = ["run", "main"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # one-line diagnostic, exit 2
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _parse_rational(text: str) -> Fraction:
    """Exact parse of 'p/q' or a decimal literal."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational or decimal: {text!r}") from exc


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=_positive_int, default=None,
                        help="significant digits to report (default 20 or $HZETA_DIGITS)")
    common.add_argument("--json", action="store_true", help="emit JSON lines")
    common.add_argument("--terms", type=_positive_int, default=None,
                        help="override the number of tail terms")
    common.add_argument("--w-trial", type=_positive_int, default=None, dest="w_trial",
                        help="override the trial argument for the constants")

    parser = _Parser(prog="hzeta", description="Hurwitz zeta derivatives and friends")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dz", parents=[common], help="zeta'(-k)")
    p.add_argument("-k", type=_nonneg_int, required=True)

    p = sub.add_parser("hz", parents=[common], help="zeta'(-k, w)")
    p.add_argument("-k", type=_nonneg_int, required=True)
    p.add_argument("-w", type=_parse_rational, required=True,
                   help='offset, decimal or rational "p/q"')

    p = sub.add_parser("const", parents=[common], help="limiting constant L_k")
    p.add_argument("-k", type=_nonneg_int, required=True)

    p = sub.add_parser("varpi", parents=[common], help="Jeffery summation constant")
    p.add_argument("-k", type=_positive_int, required=True)

    sub.add_parser("kinkelin", parents=[common], help="Kinkelin's log varpi")

    p = sub.add_parser("gamma", parents=[common], help="log Gamma_k(x)")
    p.add_argument("-k", type=_nonneg_int, required=True)
    p.add_argument("-x", type=_parse_rational, required=True,
                   help='argument, decimal or rational "p/q"')

    p = sub.add_parser("table", parents=[common], help="L_k and zeta'(-k) for k = 0..K")
    p.add_argument("--kmax", type=_nonneg_int, required=True)
    p.add_argument("-o", dest="outfile", default=None, help="write the table here")

    p = sub.add_parser("selftest", parents=[common], help="run the identity suite")
    p.add_argument("--level", choices=("quick", "full"), default="quick")

    return parser


def _context(args) -> PrecisionContext:
    digits = args.digits
    if digits is None:
        env = os.environ.get("HZETA_DIGITS")
        if env is not None:
            try:
                digits = int(env)
            except ValueError:
                digits = 0
            if digits < 1:
                raise HzetaError(f"HZETA_DIGITS must be a positive integer, got {env!r}")
        else:
            digits = 20
    return PrecisionContext(target_digits=digits)


def _fmt_value(value, digits: int) -> str:
    return mpmath.nstr(value, digits, strip_zeros=False)


def _fmt_err(err) -> str:
    if err == 0:
        return "0.0"
    return mpmath.nstr(err, 2)


def _emit(record: dict, as_json: bool, out: TextIO, ctx: PrecisionContext) -> None:
    if as_json:
        print(json.dumps(record, sort_keys=True), file=out)
        return
    name = record["quantity"]
    k = record["k"]
    w = record["w_or_x"]
    head = f"{name}({k},{w})" if w is not None else f"{name}({k})"
    print(f"{head} = {record['value']}  (± {record['err_estimate']})", file=out)


def _record(quantity, k, w_or_x, value, err, method, params, ctx) -> dict:
    return {
        "quantity": quantity,
        "k": k,
        "w_or_x": None if w_or_x is None else str(w_or_x),
        "value": _fmt_value(value, ctx.target_digits),
        "err_estimate": _fmt_err(err),
        "method": method,
        "params": params,
    }


def _constant_record(k: int, ctx, terms, w_trial):
    if w_trial is not None:
        return gkbj_constant(k, w_trial, terms or 20, ctx)
    return gkbj_auto(k, ctx)


def _run_selftest(args, ctx, out: TextIO) -> int:
    reports = selftest(args.level, ctx)
    failed = 0
    for rep in reports:
        status = "PASS" if rep.passed else "FAIL"
        if not rep.passed:
            failed += 1
        if args.json:
            print(
                json.dumps(
                    {
                        "check": rep.name,
                        "k": rep.k,
                        "x_or_w": None if rep.x_or_w is None else str(rep.x_or_w),
                        "residual": mpmath.nstr(rep.residual, 3),
                        "tolerance": mpmath.nstr(rep.tolerance, 3),
                        "passed": rep.passed,
                        "elapsed": round(rep.elapsed, 3),
                    },
                    sort_keys=True,
                ),
                file=out,
            )
        else:
            loc = ""
            if rep.k is not None:
                loc += f" k={rep.k}"
            if rep.x_or_w is not None:
                loc += f" x={rep.x_or_w}"
            print(
                f"[{status}] {rep.name}{loc}  residual={mpmath.nstr(rep.residual, 3)}"
                f" tol={mpmath.nstr(rep.tolerance, 3)} ({rep.elapsed:.2f}s)",
                file=out,
            )
    total = len(reports)
    print(f"selftest {args.level}: {total - failed}/{total} passed", file=out)
    return 0 if failed == 0 else 1


def run(argv: list[str]) -> int:
    """Dispatch a command line; returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    out = sys.stdout
    try:
        ctx = _context(args)
        terms = getattr(args, "terms", None)
        w_trial = getattr(args, "w_trial", None)

        if args.command == "dz":
            const = _constant_record(args.k, ctx, terms, w_trial)
            with ctx.workprec():
                value = to_mpf(
                    harmonic(args.k) * bernoulli(args.k + 1) / (args.k + 1)
                ) - const.value
            params = {"digits": ctx.target_digits, "w_used": const.w_used,
                      "tail_terms": const.tail_terms_used}
            rec = _record("zeta_deriv", args.k, None, value, const.err,
                          "exact-sum", params, ctx)
            _emit(rec, args.json, out, ctx)
        elif args.command == "hz":
            w = args.w
            if w <= 0:
                raise HzetaError("offset must be positive")
            if w.denominator == 1:
                d = hurwitz_deriv_integer(args.k, int(w), ctx)
            else:
                d = hurwitz_deriv(args.k, w, ctx, tail_terms=terms)
            params = {"digits": ctx.target_digits}
            if terms:
                params["tail_terms"] = terms
            rec = _record("hurwitz_deriv", args.k, args.w, d.value, d.err, d.method, params, ctx)
            _emit(rec, args.json, out, ctx)
        elif args.command == "const":
            const = _constant_record(args.k, ctx, terms, w_trial)
            params = {"digits": ctx.target_digits, "w_used": const.w_used,
                      "tail_terms": const.tail_terms_used}
            rec = _record("L", args.k, None, const.value, const.err, "trial-method", params, ctx)
            _emit(rec, args.json, out, ctx)
        elif args.command == "varpi":
            const = varpi(args.k, ctx)
            params = {"digits": ctx.target_digits, "w_used": const.w_used,
                      "tail_terms": const.tail_terms_used}
            rec = _record("varpi", args.k, None, const.value, const.err, "trial-method", params, ctx)
            _emit(rec, args.json, out, ctx)
        elif args.command == "kinkelin":
            const = kinkelin_logvarpi(ctx)
            params = {"digits": ctx.target_digits, "w_used": const.w_used,
                      "tail_terms": const.tail_terms_used}
            rec = _record("kinkelin", const.k, None, const.value, const.err, "trial-method", params, ctx)
            _emit(rec, args.json, out, ctx)
        elif args.command == "gamma":
            x = args.x
            g = log_gengamma(args.k, x, ctx, tail_terms=terms)
            params = {"digits": ctx.target_digits}
            rec = _record("gengamma", args.k, args.x, g.value, g.err, g.method, params, ctx)
            _emit(rec, args.json, out, ctx)
        elif args.command == "table":
            sink = open(args.outfile, "w") if args.outfile else out
            try:
                for k in range(args.kmax + 1):
                    const = gkbj_auto(k, ctx)
                    params = {"digits": ctx.target_digits, "w_used": const.w_used,
                              "tail_terms": const.tail_terms_used}
                    _emit(_record("L", k, None, const.value, const.err,
                                  "trial-method", params, ctx), args.json, sink, ctx)
                    d = zeta_deriv_neg(k, ctx)
                    _emit(_record("zeta_deriv", k, None, d.value, d.err,
                                  d.method, params, ctx), args.json, sink, ctx)
            finally:
                if args.outfile:
                    sink.close()
        elif args.command == "selftest":
            return _run_selftest(args, ctx, out)
    except HzetaError as exc:
        print(f"hzeta: error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError) as exc:
        print(f"hzeta: error: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
