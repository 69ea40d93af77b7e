"""Command line front end.

Exit codes: 0 ok, 1 unreadable input, 2 shape/mode mismatch or method not
applicable, 3 singular matrix, 4 ``check`` found a discrepancy.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import mdmatrix as mdm
from .algebra import mul
from .errors import (
    ModeMismatch,
    ModeUnsupported,
    MultidiagError,
    PreconditionViolated,
    ShapeMismatch,
    SingularMatrix,
)
from .field import FLOAT, Field, format_scalar
from .inverse import (
    det_general,
    det_k_tridiagonal,
    describe_singular,
    inv_cayley_hamilton,
    inv_general,
    inv_thm2,
    pow_signed,
)
from .oracle import dense_identity, dense_mul

EXIT_OK, EXIT_PARSE, EXIT_MISMATCH, EXIT_SINGULAR, EXIT_CHECK = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _load(path, args):
    try:
        A = mdm.read(path)
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc.strerror or exc}") from None
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        raise CliError(EXIT_PARSE, f"{path}: {exc}") from None
    if args.mode is None or args.mode == A.field.mode:
        return A
    if args.mode != FLOAT:
        raise CliError(EXIT_MISMATCH, f"{path}: cannot read a float matrix in exact mode")
    return mdm.convert(A, Field(FLOAT))


def _emit(A, out):
    text = mdm.dumps(A)
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _same_shape(A, B, what):
    if (A.n, A.k) != (B.n, B.k) or A.field.mode != B.field.mode:
        raise CliError(
            EXIT_MISMATCH,
            f"{what}: (n, k, mode) {(A.n, A.k, A.field.mode)} vs {(B.n, B.k, B.field.mode)}",
        )


def cmd_mul(args):
    A, B = _load(args.left, args), _load(args.right, args)
    _same_shape(A, B, "mul")
    _emit(mul(A, B), args.out)


def _singular(A, exc):
    witness = describe_singular(A) or exc.witness
    return CliError(EXIT_SINGULAR, f"singular matrix: {witness}" if witness else "singular matrix")


def cmd_inv(args):
    A = _load(args.input, args)
    method = args.method
    thm2_ok = A.is_k_tridiagonal() and A.n + 1 <= 2 * A.k
    if method == "auto":
        method = "thm2" if thm2_ok else "general"
    if method == "thm2" and not thm2_ok:
        raise CliError(EXIT_MISMATCH, "thm2 needs a k-tridiagonal input with n+1 <= 2k")
    if method == "ch" and not A.field.exact:
        raise CliError(EXIT_MISMATCH, "ch needs exact mode")
    solver = {"thm2": inv_thm2, "ch": inv_cayley_hamilton, "general": inv_general}[method]
    try:
        X = solver(A)
    except SingularMatrix as exc:
        raise _singular(A, exc) from None
    _emit(X, args.out)


def cmd_det(args):
    A = _load(args.input, args)
    det = det_k_tridiagonal(A) if A.is_k_tridiagonal() else det_general(A)
    print(format_scalar(det))


def cmd_pow(args):
    A = _load(args.input, args)
    try:
        P = pow_signed(A, args.m)
    except SingularMatrix as exc:
        raise _singular(A, exc) from None
    _emit(P, args.out)


def cmd_check(args):
    mats = [_load(p, args) for p in args.files]
    for M in mats[1:]:
        _same_shape(mats[0], M, "check")
    if len(mats) == 2:
        A, X = mats
        expected = dense_identity(A.n + 1, A.field.mode)
        got = dense_mul(mdm.to_dense(A), mdm.to_dense(X))
        what = "A * X vs identity"
    else:
        A, B, C = mats
        expected = dense_mul(mdm.to_dense(A), mdm.to_dense(B))
        got = mdm.to_dense(C)
        what = "A * B vs product file"
    worst, where = 0, None
    for i, (re, rg) in enumerate(zip(expected, got)):
        for j, (e, g) in enumerate(zip(re, rg)):
            d = abs(e - g)
            if d > worst:
                worst, where = d, (i, j)
    ok = worst == 0 if A.field.exact else worst <= args.tol
    if not ok:
        i, j = where
        raise CliError(
            EXIT_CHECK,
            f"check failed ({what}): max discrepancy {format_scalar(worst)} at ({i}, {j})",
        )
    print(f"ok ({what}), max discrepancy {format_scalar(worst)}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=["exact", "float"], default=None,
                        help="arithmetic mode (default: as stored in the file, exact if absent)")
    common.add_argument("--tol", type=float, default=1e-10,
                        help="float-mode comparison tolerance for check")

    parser = argparse.ArgumentParser(prog="multidiag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", parents=[common], help="structured product of two matrices")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("inv", parents=[common], help="inverse")
    p.add_argument("input")
    p.add_argument("-o", "--out")
    p.add_argument("--method", choices=["auto", "thm2", "ch", "general"], default="auto")
    p.set_defaults(func=cmd_inv)

    p = sub.add_parser("det", parents=[common], help="determinant to stdout")
    p.add_argument("input")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("pow", parents=[common], help="signed integer power")
    p.add_argument("input")
    p.add_argument("m", type=int)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_pow)

    p = sub.add_parser("check", parents=[common],
                       help="verify A X = E (two files) or A B = C (three files) densely")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "check" and len(args.files) not in (2, 3):
        print("multidiag check: expected 2 or 3 files", file=sys.stderr)
        return EXIT_MISMATCH
    try:
        args.func(args)
    except CliError as exc:
        print(f"multidiag {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except (ShapeMismatch, ModeMismatch, PreconditionViolated, ModeUnsupported) as exc:
        print(f"multidiag {args.command}: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except SingularMatrix as exc:
        print(f"multidiag {args.command}: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except MultidiagError as exc:
        print(f"multidiag {args.command}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
