# app/cli.py
#
# Uso:
#   python bh.py gen fourier --order 4 > f4.bh
#   python bh.py gen kron a.bh b.bh
#   python bh.py gen abelian --orders 2 4
#   python bh.py verify f4.bh
#   python bh.py reduce f4.bh --prime 2 [--witness c.bh] [--check] [-o out.bh]
#   python bh.py reduce f8.bh --factor 4 [--check]
#   python bh.py info f8.bh
#
# Códigos de salida: 0 ok/válida, 1 verificación inválida,
# 2 uso o formato, 3 precondición.

import argparse
import logging
import sys
from contextlib import contextmanager
from typing import Optional, Sequence

from app.config import LOG_FORMAT, LOG_LEVEL
from app.errors import (
    EnvelopeError,
    MatrixFormatError,
    PreconditionError,
    ReductionCheckError,
)
from app.matrices import (
    BhMatrix,
    VerifyReport,
    character_table,
    format_matrix,
    fourier,
    kronecker,
    parse_matrix,
    verify,
)
from app.morphism import reachable_targets, reduce_full, reduce_once

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="bh",
        description="Construct, verify and reduce Butson-Hadamard matrices.",
    )
    parser.add_argument("--verbose", action="store_true", help="Debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="Generate a matrix")
    gen_sub = gen.add_subparsers(dest="generator", required=True)

    g_fourier = gen_sub.add_parser("fourier", help="Fourier matrix F_m")
    g_fourier.add_argument("--order", type=_positive_int, required=True)
    g_fourier.add_argument("-o", "--output", default=None)

    g_kron = gen_sub.add_parser("kron", help="Kronecker product of two matrix files")
    g_kron.add_argument("a")
    g_kron.add_argument("b")
    g_kron.add_argument("-o", "--output", default=None)

    g_abelian = gen_sub.add_parser("abelian", help="Character table of Z_m1 x ... x Z_mr")
    g_abelian.add_argument("--orders", type=_positive_int, nargs="+", required=True)
    g_abelian.add_argument("-o", "--output", default=None)

    p_verify = sub.add_parser("verify", help="Exact verification of H H* = n I")
    p_verify.add_argument("file")

    p_reduce = sub.add_parser("reduce", help="BH(n,k) -> BH(np,k/p) or BH(mn,k/m)")
    p_reduce.add_argument("file")
    how = p_reduce.add_mutually_exclusive_group(required=True)
    how.add_argument("--prime", type=int, help="Single step with prime p (p^2 | k)")
    how.add_argument("--factor", type=int, help="Remove the divisor m from k")
    p_reduce.add_argument("--witness", default=None, help="Seed matrix C in BH(p,p) (only with --prime)")
    p_reduce.add_argument("--check", action="store_true", help="Re-verify the output exactly")
    p_reduce.add_argument("-o", "--output", default=None)

    p_info = sub.add_parser("info", help="Order, root order and reachable targets")
    p_info.add_argument("file")

    args = parser.parse_args(argv)
    if args.command == "reduce" and args.witness is not None and args.prime is None:
        parser.error("--witness requires --prime")
    return args


@contextmanager
def _cli_logging(verbose: bool):
    """Handler a stderr sobre el logger del paquete, sólo durante una ejecución."""
    pkg_logger = logging.getLogger("app")
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    previous = pkg_logger.level

    pkg_logger.addHandler(handler)
    pkg_logger.setLevel(logging.DEBUG if verbose else LOG_LEVEL)
    try:
        yield
    finally:
        pkg_logger.removeHandler(handler)
        pkg_logger.setLevel(previous)


def _load(path: str) -> BhMatrix:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
    except UnicodeDecodeError as exc:
        raise MatrixFormatError(f"{path}: not UTF-8 text ({exc.reason} at byte {exc.start})") from None
    return parse_matrix(text)


def _emit(matrix: BhMatrix, output: Optional[str]) -> None:
    text = format_matrix(matrix)
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    with open(output, "w", encoding="utf-8") as f:
        f.write(text)


def _report_line(matrix: BhMatrix, report: VerifyReport) -> str:
    if report.valid:
        return f"VALID {matrix.label}"
    return f"INVALID witness=({report.witness.i},{report.witness.j})"


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.generator == "fourier":
        matrix = fourier(args.order)
    elif args.generator == "kron":
        matrix = kronecker(_load(args.a), _load(args.b))
    else:
        matrix = character_table(args.orders)
    _emit(matrix, args.output)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    matrix = _load(args.file)
    report = verify(matrix)
    print(_report_line(matrix, report))
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_reduce(args: argparse.Namespace) -> int:
    matrix = _load(args.file)
    if args.prime is not None:
        seed = _load(args.witness) if args.witness is not None else None
        result = reduce_once(matrix, args.prime, seed)
    else:
        result = reduce_full(matrix, args.factor)

    if args.check:
        report = verify(result)
        if not report.valid:
            print(_report_line(result, report), file=sys.stderr)
            return EXIT_INVALID
        logger.info("output %s verified", result.label)

    _emit(result, args.output)
    return EXIT_OK


def _cmd_info(args: argparse.Namespace) -> int:
    matrix = _load(args.file)
    print(f"n {matrix.n}")
    print(f"k {matrix.k}")
    for m, order, root in reachable_targets(matrix.n, matrix.k):
        print(f"target m={m} BH({order},{root})")
    return EXIT_OK


COMMANDS = {
    "gen": _cmd_gen,
    "verify": _cmd_verify,
    "reduce": _cmd_reduce,
    "info": _cmd_info,
}


def _dispatch(args: argparse.Namespace) -> int:
    try:
        return COMMANDS[args.command](args)
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, EnvelopeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ReductionCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    with _cli_logging(args.verbose):
        return _dispatch(args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
