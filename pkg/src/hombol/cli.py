"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure (an axiom fails or a
construction's hypothesis is violated), 2 usage, file or format error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import regression
from .constructions import (
    beta_n_twist,
    bol_from_right_alternative,
    lie_sts_from_jordan,
    nth_derived,
    yau_twist_binary,
    yau_twist_bts,
)
from .core import GradedLinearMap, SuperAlgebra, as_scalar
from .dsl import BUILTIN_FILES, ParseError, check_identities, load_builtin, parse_identity_file
from .errors import AlgebraError, HypothesisError
from .fixtures import FIXTURES, fixture
from .identities import CHECKERS, check_suite
from .io import (
    FormatError,
    dumps_algebra,
    dumps_morphism,
    dumps_report,
    load_algebra,
    load_morphism,
)
from .products import MINUS, parse_jordan_sign, rescale, super_jordan, supercommutator

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return as_scalar(text)
    except (TypeError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _jordan(text: str) -> int:
    try:
        return parse_jordan_sign(text)
    except AlgebraError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _write(text: str, out: str | None):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


# -- commands

def cmd_check(args) -> int:
    a = load_algebra(args.file)
    if args.scale is not None:
        a = rescale(a, args.scale)
    if args.dsl:
        if args.dsl in BUILTIN_FILES:
            identities, suite = load_builtin(args.dsl), args.dsl
        else:
            path = Path(args.dsl)
            identities, suite = parse_identity_file(path.read_text(encoding="utf-8")), path.stem
        report = check_identities(identities, a, suite)
    else:
        report = check_suite(a, args.suite)
    if args.json:
        sys.stdout.write(dumps_report(report))
    else:
        print(report.render(max_examples=args.max_examples))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_construct(args) -> int:
    a = load_algebra(args.file)
    verify = not args.no_verify
    if args.kind == "bol":
        out = bol_from_right_alternative(a, args.scale, args.jordan_sign, verify=verify)
    elif args.kind == "plus":
        out = super_jordan(a, args.scale)
    elif args.kind == "minus":
        out = supercommutator(a, args.scale)
    else:
        out = lie_sts_from_jordan(super_jordan(a, args.scale), args.jordan_sign, verify=verify)
    _write(dumps_algebra(out), args.out)
    return EXIT_OK


def cmd_twist(args) -> int:
    a = load_algebra(args.file)
    beta = load_morphism(args.morphism)
    verify = not args.no_verify
    if args.kind == "yau":
        if a.ternary is None:
            out = yau_twist_binary(a, beta, verify=verify)
        else:
            out = yau_twist_bts(a, beta, verify=verify)
    else:
        out = beta_n_twist(a, beta, args.n, verify=verify)
    _write(dumps_algebra(out), args.out)
    return EXIT_OK


def cmd_derive(args) -> int:
    a = load_algebra(args.file)
    _write(dumps_algebra(nth_derived(a, args.n)), args.out)
    return EXIT_OK


def _params(pairs: list[str]) -> dict:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects NAME=VALUE, got {item!r}")
        if key == "degrees":
            out[key] = value
        else:
            try:
                out[key] = as_scalar(value)
            except (TypeError, ValueError, ZeroDivisionError):
                raise UsageError(f"parameter {key} is not a rational: {value!r}") from None
    return out


def cmd_fixture(args) -> int:
    if args.action == "list":
        for name in FIXTURES:
            print(name)
        return EXIT_OK
    if not args.name:
        raise UsageError("fixture emit needs a fixture name")
    obj = fixture(args.name, **_params(args.param))
    if isinstance(obj, GradedLinearMap):
        g = fixture("example-4.1-star").grading
        _write(dumps_morphism(obj, args.name, g), args.out)
    else:
        assert isinstance(obj, SuperAlgebra)
        _write(dumps_algebra(obj), args.out)
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    settings = regression.Settings(scale=args.scale, jordan_sign=args.jordan_sign, mutations=args.mutations)
    results = regression.run_all(settings, progress=lambda r: print(regression.render(r), flush=True))
    failed = [r for r in results if not r.ok]
    print(f"\n{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        print("failing: " + ", ".join(f"{r.key} ({r.label})" for r in failed))
        return EXIT_FAIL
    return EXIT_OK


# -- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hombol", description="Exact checks and constructions for graded Hom-algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run an axiom suite or identity file on an algebra")
    c.add_argument("--file", required=True, help="algebra JSON file")
    what = c.add_mutually_exclusive_group(required=True)
    what.add_argument("--suite", choices=sorted(CHECKERS))
    what.add_argument("--dsl", help=f"identity file path or built-in name ({', '.join(BUILTIN_FILES)})")
    c.add_argument("--json", action="store_true", help="print the machine-readable report")
    c.add_argument("--scale", type=_rational, help="rescale products by (l, l^2) before checking")
    c.add_argument("--max-examples", type=int, default=5)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("construct", help="build a derived structure")
    c.add_argument("kind", choices=("bol", "plus", "minus", "lsts"))
    c.add_argument("--file", required=True)
    c.add_argument("--scale", type=_rational, default=Fraction(1))
    c.add_argument("--jordan-sign", type=_jordan, default=MINUS)
    c.add_argument("--no-verify", action="store_true", help="skip the hypothesis checks")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("twist", help="Yau twist or beta^n twist by an even morphism")
    c.add_argument("kind", choices=("yau", "power"))
    c.add_argument("--file", required=True)
    c.add_argument("--morphism", required=True, help="morphism JSON file")
    c.add_argument("-n", type=int, default=1)
    c.add_argument("--no-verify", action="store_true", help="skip the hypothesis checks")
    c.add_argument("--out")
    c.set_defaults(func=cmd_twist)

    c = sub.add_parser("derive", help="nth derived Hom-algebra")
    c.add_argument("-n", type=int, required=True)
    c.add_argument("--file", required=True)
    c.add_argument("--out")
    c.set_defaults(func=cmd_derive)

    c = sub.add_parser("fixture", help="list or export built-in algebras")
    c.add_argument("action", choices=("list", "emit"))
    c.add_argument("name", nargs="?")
    c.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    c.add_argument("--out")
    c.set_defaults(func=cmd_fixture)

    c = sub.add_parser("verify-paper", help="run the full regression over the built-in examples")
    c.add_argument("--scale", type=_rational, default=Fraction(1))
    c.add_argument("--jordan-sign", type=_jordan, default=MINUS)
    c.add_argument("--mutations", type=int, default=regression.MUTATIONS)
    c.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
        print("hombol: error: -n must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except HypothesisError as exc:
        print(f"hombol: hypothesis violated: {type(exc).__name__}: {exc}", file=sys.stderr)
        if exc.report is not None:
            print(exc.report.render(), file=sys.stderr)
        return EXIT_FAIL
    except (FormatError, ParseError, UsageError, OSError) as exc:
        print(f"hombol: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AlgebraError as exc:
        print(f"hombol: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
