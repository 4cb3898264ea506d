"""Command-line interface.

Exit status: 0 on success, 1 when ``verify`` finds a failing identity, 2 on
usage or range errors.  Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import render
from .circuit import bell_state
from .exactnum import parse_amplitude
from .qudit import (
    basis_ket,
    completeness_sum,
    projector,
    superpose,
    symbolic_ket,
    symbolic_projector,
)
from .verify import run_verify

DEFAULT_D_CAP = 64
D_CAP_ENV = "BOOLEKET_D_CAP"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def resolve_d_cap(flag: Optional[int]) -> int:
    if flag is not None:
        return flag
    raw = os.environ.get(D_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_D_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{D_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"{D_CAP_ENV} must be >= 1, got {cap}")
    return cap


def _check_d(d: int, cap: int, name: str = "--d") -> None:
    if d < 1:
        raise UsageError(f"{name} must be >= 1, got {d}")
    if d > cap:
        raise UsageError(f"{name}={d} exceeds the dimension cap {cap} "
                         f"(raise it with --d-cap or {D_CAP_ENV})")


def _check_x(d: int, x: Optional[int]) -> None:
    if x is None:
        raise UsageError("--x is required unless --symbolic is given")
    if not 0 <= x < d:
        raise UsageError(f"--x={x} out of range 0..{d - 1} for d={d}")


def cmd_basis(args) -> int:
    _check_d(args.d, args.cap)
    if args.symbolic:
        print(render.render_symbolic_ket(symbolic_ket(args.d), args.format))
    else:
        _check_x(args.d, args.x)
        ket = basis_ket(args.d, args.x)
        print(render.render_ket(ket, args.format, x=args.x, with_approx=args.approx))
    return EXIT_OK


def cmd_projector(args) -> int:
    _check_d(args.d, args.cap)
    if args.symbolic:
        print(render.render_symbolic_projector(symbolic_projector(args.d), args.format))
    else:
        _check_x(args.d, args.x)
        p = projector(args.d, args.x)
        print(render.render_matrix(p, args.format, x=args.x, with_approx=args.approx))
    return EXIT_OK


def cmd_completeness(args) -> int:
    _check_d(args.d, args.cap)
    total = completeness_sum(args.d)
    print(render.render_matrix(total, args.format, with_approx=args.approx,
                               extra={"is_identity": total.is_identity()}))
    return EXIT_OK


def cmd_verify(args) -> int:
    _check_d(args.max_d, args.cap, "--max-d")
    report = run_verify(args.max_d)
    print(render.render_report(report, args.format))
    return EXIT_OK if report.overall else EXIT_VERIFY_FAILED


def cmd_bell(args) -> int:
    for name, v in (("--x", args.x), ("--y", args.y)):
        if v not in (0, 1):
            raise UsageError(f"{name} must be a bit (0 or 1), got {v}")
    print(render.render_bell(bell_state(args.x, args.y), args.format, with_approx=args.approx))
    return EXIT_OK


def cmd_superpose(args) -> int:
    _check_d(args.d, args.cap)
    literals = [s for s in args.amps.split(",")]
    try:
        amps = [parse_amplitude(s) for s in literals]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--amps: {exc}") from None
    if len(amps) != args.d:
        raise UsageError(f"--amps has {len(amps)} entries, expected {args.d}")
    print(render.render_superposition(superpose(args.d, amps), args.format,
                                      with_approx=args.approx))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=render.FORMATS, default="text",
                        help="output format (default: text)")
    common.add_argument("--approx", action="store_true",
                        help="append decimal approximations (display only)")
    common.add_argument("--d-cap", type=int, default=None, dest="d_cap",
                        help=f"largest accepted dimension (default {DEFAULT_D_CAP}, "
                             f"or ${D_CAP_ENV})")

    parser = argparse.ArgumentParser(
        prog="booleket",
        description="Exact qudit basis kets, projectors and Bell states "
                    "from the matrix Boole equation.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("basis", parents=[common], help="basis ket |x> of a d-level system")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--x", type=int)
    p.add_argument("--symbolic", action="store_true", help="polynomial entries in x")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("projector", parents=[common], help="projector P(x) = |x><x|")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--x", type=int)
    p.add_argument("--symbolic", action="store_true", help="polynomial diagonal in x")
    p.set_defaults(func=cmd_projector)

    p = sub.add_parser("completeness", parents=[common], help="sum of all projectors")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_completeness)

    p = sub.add_parser("verify", parents=[common], help="check every identity for d = 1..max-d")
    p.add_argument("--max-d", type=int, default=16, dest="max_d")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bell", parents=[common], help="Bell state B_xy via H and CNOT")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("superpose", parents=[common], help="sum_x a_x |x> and its normalization")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--amps", required=True,
                   help='comma-separated amplitude literals, e.g. "3/5,4/5" or "1/2s2,1/2s2"')
    p.set_defaults(func=cmd_superpose)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.cap = resolve_d_cap(args.d_cap)
        if args.cap < 1:
            raise UsageError(f"--d-cap must be >= 1, got {args.cap}")
        return args.func(args)
    except UsageError as exc:
        print(f"booleket {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
