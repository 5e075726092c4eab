"""Command-line front end: factor, eval, convolve, verify, series, list-identities.

Exit codes: 0 success (identity holds / check passes), 1 verification failure
(exact mismatch or tolerance breach), 2 usage error (unknown name, malformed
input, out-of-domain point).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .convolution import (
    VerificationReport,
    convolve_at,
    dirichlet_convolve,
    fraction_to_str,
    list_identity_presets,
    parse_expression,
    tabulate,
    verify_all,
    verify_identity,
)
from .errors import OutOfDomainError, ParseError, UnknownNameError
from .factor import factorize, factorize_rational
from .ladditive import eval_natural, eval_rational, l_additive_by_token
from .mangoldt import MangoldtOf, mangoldt_eval
from .series import check_series_identity, list_series_presets

_LIMIT_HELP = "table window [1, N]; sieve memory is about one machine word per integer up to N"


def _rational_arg(text: str) -> tuple[int, int]:
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"rational must look like <p>/<q>, got {text!r}")
    if p < 1 or q < 1:
        raise argparse.ArgumentTypeError("rational parts must be positive integers")
    return p, q


def _complex_arg(text: str) -> complex:
    re, sep, im = text.partition(",")
    try:
        return complex(float(re), float(im) if sep else 0.0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"point must look like <real> or <real>,<imag>, got {text!r}")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return v


def _positive_float(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError("value must be > 0")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("table", "csv", "json"),
        default="table",
        help="output encoding (default: table)",
    )

    parser = argparse.ArgumentParser(
        prog="arithfn",
        description="Exact arithmetic-function identities and Dirichlet series checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", parents=[common], help="prime factorization of n or p/q")
    p.add_argument("n", nargs="?", type=_positive_int, help="natural number to factor")
    p.add_argument("--rational", type=_rational_arg, metavar="P/Q", help="positive rational to factor")

    p = sub.add_parser("eval", parents=[common], help="evaluate a function at n or p/q")
    p.add_argument(
        "fn",
        help="delta | delta_p:<prime> | ld | big_omega | mangoldt:<fn>",
    )
    p.add_argument("n", nargs="?", type=_positive_int, help="natural argument")
    p.add_argument("--rational", type=_rational_arg, metavar="P/Q", help="rational argument")

    p = sub.add_parser("convolve", parents=[common], help="Dirichlet-convolve two expressions")
    p.add_argument("expr_a")
    p.add_argument("expr_b")
    p.add_argument("--limit", type=_positive_int, default=100, help=_LIMIT_HELP + " (default: 100)")
    p.add_argument(
        "--at",
        type=_positive_int,
        default=None,
        metavar="N",
        help="evaluate (a*b)(N) only, by direct divisor enumeration",
    )

    p = sub.add_parser("verify", parents=[common], help="check an identity preset exactly")
    p.add_argument("identity", help="a preset name, or 'all'")
    p.add_argument("--limit", type=_positive_int, default=10000, help=_LIMIT_HELP + " (default: 10000)")
    p.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for the randomized presets (compmult-distr); default 0",
    )

    p = sub.add_parser("series", parents=[common], help="check a Dirichlet-series identity")
    p.add_argument("preset", help="a series preset name (see list-identities)")
    p.add_argument("--s", type=_complex_arg, required=True, metavar="RE[,IM]", help="evaluation point")
    p.add_argument(
        "--limit", type=_positive_int, default=100000, help="coefficient cutoff N (default: 100000)"
    )
    p.add_argument(
        "--primes", type=_positive_int, default=100000, help="prime cutoff for F (default: 100000)"
    )
    p.add_argument("--tol", type=_positive_float, default=1e-6, help="absolute tolerance (default: 1e-6)")
    p.add_argument("--k", type=int, default=2, help="power for cor-sigmak (default: 2)")

    sub.add_parser("list-identities", parents=[common], help="list every preset with its formula")

    return parser


def _emit_factors(kind: str, text_input: str, fact, fmt: str) -> int:
    pairs = [(p, a) for p, a in fact]
    if fmt == "table":
        if not pairs:
            body = "1"
        else:
            body = " * ".join(str(p) if a == 1 else f"{p}^{a}" for p, a in pairs)
        print(f"{text_input} = {body}")
    elif fmt == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["prime", "exponent"])
        w.writerows(pairs)
    else:
        print(json.dumps({"input": text_input, "kind": kind, "factors": pairs}))
    return 0


def _cmd_factor(args) -> int:
    if (args.n is None) == (args.rational is None):
        raise ValueError("factor takes either a natural number or --rational P/Q")
    if args.n is not None:
        return _emit_factors("natural", str(args.n), factorize(args.n), args.format)
    p, q = args.rational
    return _emit_factors("rational", f"{p}/{q}", factorize_rational(p, q), args.format)


def _cmd_eval(args) -> int:
    if (args.n is None) == (args.rational is None):
        raise ValueError("eval takes either a natural number or --rational P/Q")
    token = args.fn
    if token.startswith("mangoldt:"):
        if args.rational is not None:
            raise ValueError("mangoldt functions are defined on natural numbers only")
        m = MangoldtOf(l_additive_by_token(token.split(":", 1)[1]))
        value = mangoldt_eval(m, args.n)
        argument = str(args.n)
    else:
        fn = l_additive_by_token(token)
        if args.n is not None:
            value = eval_natural(fn, args.n)
            argument = str(args.n)
        else:
            p, q = args.rational
            value = eval_rational(fn, p, q)
            argument = f"{p}/{q}"
    if args.format == "table":
        print(value)
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["function", "argument", "value"])
        w.writerow([token, argument, fraction_to_str(value)])
    else:
        print(json.dumps({"function": token, "argument": argument, "value": fraction_to_str(value)}))
    return 0


def _cmd_convolve(args) -> int:
    expr_a = parse_expression(args.expr_a)
    expr_b = parse_expression(args.expr_b)
    if args.at is not None:
        value = convolve_at(expr_a, expr_b, args.at)
        if args.format == "table":
            print(value)
        elif args.format == "csv":
            w = csv.writer(sys.stdout)
            w.writerow(["n", "value"])
            w.writerow([args.at, fraction_to_str(value)])
        else:
            print(
                json.dumps(
                    {
                        "expression": f"({expr_a}) * ({expr_b})",
                        "n": args.at,
                        "value": fraction_to_str(value),
                    }
                )
            )
        return 0
    a = tabulate(expr_a, args.limit)
    b = tabulate(expr_b, args.limit)
    c = dirichlet_convolve(a, b)
    if args.format == "table":
        for n in range(1, c.limit + 1):
            print(f"{n}\t{c[n]}")
    elif args.format == "csv":
        c.to_csv(sys.stdout)
    else:
        obj = c.to_json_obj()
        obj["expression"] = f"({expr_a}) * ({expr_b})"
        print(json.dumps(obj))
    return 0


def _verify_line(r: VerificationReport) -> str:
    if r.holds:
        return f"{r.identity}: holds on [1, {r.limit}]  ({r.elapsed_s:.2f} s)"
    return (
        f"{r.identity}: MISMATCH at n = {r.mismatch_n} in [{r.case}]: "
        f"lhs = {r.lhs}, rhs = {r.rhs}  ({r.elapsed_s:.2f} s)"
    )


_VERIFY_CSV_COLUMNS = ["identity", "range", "holds", "mismatch_n", "case", "lhs", "rhs", "elapsed_s"]


def _verify_csv_row(r: VerificationReport) -> list:
    d = r.to_dict()
    return [d[k] for k in _VERIFY_CSV_COLUMNS]


def _cmd_verify(args) -> int:
    if args.identity == "all":
        reports = verify_all(args.limit, seed=args.seed)
    else:
        reports = [verify_identity(args.identity, args.limit, seed=args.seed)]
    if args.format == "table":
        for r in reports:
            print(_verify_line(r))
        bad = [r for r in reports if not r.holds]
        if args.identity == "all":
            print(f"{len(reports) - len(bad)}/{len(reports)} identities hold on [1, {args.limit}]")
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(_VERIFY_CSV_COLUMNS)
        for r in reports:
            w.writerow(_verify_csv_row(r))
    else:
        if args.identity == "all":
            print(json.dumps([r.to_dict() for r in reports]))
        else:
            print(reports[0].to_json())
    return 0 if all(r.holds for r in reports) else 1


def _format_complex(z: complex) -> str:
    if z.imag == 0:
        return f"{z.real:.17g}"
    return f"{z.real:.17g} + {z.imag:.17g}i"


def _cmd_series(args) -> int:
    report = check_series_identity(
        args.preset, args.s, args.limit, args.primes, args.tol, k=args.k
    )
    if args.format == "table":
        print(f"identity:    {report.name}")
        print(f"s:           {_format_complex(report.s)}")
        print(f"N:           {report.limit}")
        print(f"prime limit: {report.prime_limit}")
        print(f"lhs:         {_format_complex(report.lhs)}")
        print(f"rhs:         {_format_complex(report.rhs)}")
        print(f"abs error:   {report.abs_error:.17g}")
        print(f"tolerance:   {report.tolerance:.17g}")
        print("result:      PASS" if report.passed else "result:      FAIL")
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["name", "s", "N", "prime_limit", "lhs", "rhs", "abs_error", "tolerance", "pass"])
        w.writerow(
            [
                report.name,
                _format_complex(report.s),
                report.limit,
                report.prime_limit,
                _format_complex(report.lhs),
                _format_complex(report.rhs),
                f"{report.abs_error:.17g}",
                f"{report.tolerance:.17g}",
                report.passed,
            ]
        )
    else:
        print(report.to_json())
    return 0 if report.passed else 1


def _cmd_list_identities(args) -> int:
    exact = list_identity_presets()
    ser = list_series_presets()
    if args.format == "table":
        print("exact identities (verify):")
        for name, desc in exact:
            print(f"  {name:<18} {desc}")
        print("series identities (series):")
        for name, desc in ser:
            print(f"  {name:<18} {desc}")
    elif args.format == "csv":
        w = csv.writer(sys.stdout)
        w.writerow(["layer", "name", "formula"])
        for name, desc in exact:
            w.writerow(["exact", name, desc])
        for name, desc in ser:
            w.writerow(["series", name, desc])
    else:
        print(
            json.dumps(
                {
                    "identities": [
                        {"layer": "exact", "name": n, "formula": d} for n, d in exact
                    ]
                    + [{"layer": "series", "name": n, "formula": d} for n, d in ser]
                }
            )
        )
    return 0


_HANDLERS = {
    "factor": _cmd_factor,
    "eval": _cmd_eval,
    "convolve": _cmd_convolve,
    "verify": _cmd_verify,
    "series": _cmd_series,
    "list-identities": _cmd_list_identities,
}


def run(argv: list[str]) -> int:
    """Parse and execute; returns the process exit code instead of raising."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except UnknownNameError as e:
        name = e.args[0] if e.args else "?"
        print(f"error: unknown name {name!r}; see 'arithfn list-identities'", file=sys.stderr)
        return 2
    except (ParseError, OutOfDomainError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
