"""Command-line front end.

Subcommands::

    lambertg eval X        g(X) with iteration count and residual
    lambertg w Z           principal Lambert W of Z > 0
    lambertg diode ...     U for a*exp(b*U) + b*U = V, at one V or over a sweep
    lambertg sweep ...     (x, g(x)) rows over a range, for plotting

Exit codes: 0 success, 2 usage or parse error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .core import FixedIterations, ResidualTolerance, evaluate, residual
from .diode import DiodeParams, SweepSpec, du_dv, solve_u, sweep_curve
from .lambert_w import w_principal
from .oracle import oracle_g

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3

# Sample counts for the two standard plotting ranges; chosen here, not taken
# from any published figure.
PRESETS = {
    "moderate": (-4.0, 4.0, 801),
    "large": (-1000.0, 1000.0, 2001),
}


class DomainError(Exception):
    pass


def _fmt(value: float, precision: int) -> str:
    return f"{value:.{precision}g}"


def _emit(out, header: Sequence[str], rows, kind: str, precision: int) -> None:
    if kind == "csv":
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(_fmt(v, precision) if isinstance(v, float) else str(v) for v in row) + "\n")
        return
    records = [
        {k: float(_fmt(v, precision)) if isinstance(v, float) else v for k, v in zip(header, row)}
        for row in rows
    ]
    json.dump(records[0] if len(records) == 1 else records, out)
    out.write("\n")


def _precision(text: str) -> int:
    p = int(text)
    if not 1 <= p <= 17:
        raise argparse.ArgumentTypeError(f"precision must be in [1, 17], got {p}")
    return p


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--precision", type=_precision, default=17, help="significant digits (1-17)")


def _add_policy_flags(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--iters", type=_positive_int, help="fixed number of Halley steps (default 4)")
    group.add_argument("--tol", type=float, help="stop when |residual| <= TOL*max(1,|x|), at most 50 steps")


def _policy(args):
    if args.tol is not None:
        try:
            return ResidualTolerance(args.tol, 50)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    return FixedIterations(args.iters if args.iters is not None else 4)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambertg",
        description="Robust evaluation of g(x) = log(W(exp(x))), the solution of y + exp(y) = x.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate g at a point")
    p.set_defaults(subparser=p)
    p.add_argument("x", type=float)
    _add_policy_flags(p)
    p.add_argument("--oracle", action="store_true", help="use the bisection reference instead")
    _add_output_flags(p)

    p = sub.add_parser("w", help="principal Lambert W for z > 0")
    p.set_defaults(subparser=p)
    p.add_argument("z", type=float)
    _add_policy_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("diode", help="solve a*exp(b*U) + b*U = V for U")
    p.set_defaults(subparser=p)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--v", type=float, help="single V value")
    p.add_argument("--from", dest="v_from", type=float)
    p.add_argument("--to", dest="v_to", type=float)
    p.add_argument("--points", type=int, default=101)
    _add_policy_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("sweep", help="emit (x, g(x)) rows over a range")
    p.set_defaults(subparser=p)
    p.add_argument("--preset", choices=sorted(PRESETS), help="standard plotting range")
    p.add_argument("--from", dest="x_from", type=float)
    p.add_argument("--to", dest="x_to", type=float)
    p.add_argument("--points", type=int)
    p.add_argument("--oracle", action="store_true", help="use the bisection reference instead")
    _add_policy_flags(p)
    _add_output_flags(p)
    return parser


def _shield_negative_numbers(argv: Sequence[str]) -> list[str]:
    # argparse reads "-1e5" or "-inf" as an option; a leading space stops that
    # and float() ignores it
    shielded = []
    for arg in argv:
        if arg.startswith("-") and len(arg) > 1:
            try:
                float(arg)
            except ValueError:
                pass
            else:
                arg = " " + arg
        shielded.append(arg)
    return shielded


def _cmd_eval(args, out) -> None:
    if args.oracle:
        y = oracle_g(args.x)
        row = (args.x, y, 0, residual(args.x, y))
    else:
        res = evaluate(args.x, _policy(args))
        row = (res.argument, res.value, res.iterations_used, res.residual)
    _emit(out, ("x", "y", "iterations", "residual"), [row], args.format, args.precision)


def _cmd_w(args, out) -> None:
    try:
        res = w_principal(args.z, _policy(args))
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit(out, ("z", "w"), [(res.argument, res.value)], args.format, args.precision)


def _cmd_diode(args, out, parser) -> None:
    try:
        params = DiodeParams(args.a, args.b)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    policy = _policy(args)
    if args.v is not None:
        if args.v_from is not None or args.v_to is not None:
            parser.error("--v cannot be combined with --from/--to")
        try:
            rows = [(args.v, solve_u(params, args.v, policy), du_dv(params, args.v, policy))]
        except ValueError as exc:
            raise DomainError(str(exc)) from None
        _emit(out, ("v", "u", "du_dv"), rows, args.format, args.precision)
        return
    if args.v_from is None or args.v_to is None:
        parser.error("give either --v or both --from and --to")
    try:
        spec = SweepSpec(args.v_from, args.v_to, args.points)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        rows = sweep_curve(params, spec, policy)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit(out, ("v", "u"), rows, args.format, args.precision)


def _cmd_sweep(args, out, parser) -> None:
    lo, hi, points = PRESETS[args.preset or "moderate"]
    lo = args.x_from if args.x_from is not None else lo
    hi = args.x_to if args.x_to is not None else hi
    points = args.points if args.points is not None else points
    try:
        spec = SweepSpec(lo, hi, points)
    except ValueError as exc:
        parser.error(str(exc))
    if args.oracle:
        f = oracle_g
    else:
        policy = _policy(args)
        f = lambda x: evaluate(x, policy).value  # noqa: E731
    _emit(out, ("x", "y"), [(x, f(x)) for x in spec.values()], args.format, args.precision)


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_shield_negative_numbers(argv))
    except SystemExit as exc:
        return int(exc.code or 0)

    sub_parser = args.subparser
    try:
        if args.command == "eval":
            _cmd_eval(args, out)
        elif args.command == "w":
            _cmd_w(args, out)
        elif args.command == "diode":
            _cmd_diode(args, out, sub_parser)
        else:
            _cmd_sweep(args, out, sub_parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except argparse.ArgumentTypeError as exc:
        sub_parser.print_usage(sys.stderr)
        print(f"lambertg {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"lambertg {args.command}: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
