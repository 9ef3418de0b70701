# app/matrices/fileio.py
#
# Formato de texto:
#   BH <n> <k>
#   n renglones con n exponentes enteros separados por espacio
# Las líneas que empiezan con '#' son comentarios.

import re
from typing import List, TextIO

from app.config import MAX_MATRIX_ORDER, MAX_ROOT_ORDER
from app.errors import EnvelopeError, MatrixFormatError
from app.matrices.models import BhMatrix, from_exponents

_INT_RE = re.compile(r"^[+-]?\d+$")
_DIGIT_CHUNK = 1000


def _parse_int(token: str, line: int) -> int:
    if not _INT_RE.match(token):
        raise MatrixFormatError(f"not an integer: {token!r}", line)
    try:
        return int(token)
    except ValueError:
        raise MatrixFormatError(f"integer with {len(token)} characters is too long", line) from None


def _parse_exponent(token: str, line: int, k: int) -> int:
    """Entero arbitrario reducido módulo k, leído por bloques de dígitos."""
    if not _INT_RE.match(token):
        raise MatrixFormatError(f"not an integer: {token!r}", line)
    digits = token.lstrip("+-")
    r = 0
    for start in range(0, len(digits), _DIGIT_CHUNK):
        chunk = digits[start:start + _DIGIT_CHUNK]
        r = (r * 10 ** len(chunk) + int(chunk)) % k
    return -r % k if token.startswith("-") else r


def parse_matrix(text: str) -> BhMatrix:
    header = None
    rows: List[List[int]] = []
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue

        tokens = line.split()
        if header is None:
            if len(tokens) != 3 or tokens[0] != "BH":
                raise MatrixFormatError("header must be 'BH <n> <k>'", lineno)
            n = _parse_int(tokens[1], lineno)
            k = _parse_int(tokens[2], lineno)
            if n < 1 or k < 1:
                raise MatrixFormatError("n and k must be positive", lineno)
            if n > MAX_MATRIX_ORDER or k > MAX_ROOT_ORDER:
                raise EnvelopeError(f"BH({n},{k}) outside the supported envelope")
            header = (n, k)
            continue

        n, k = header
        if len(rows) == n:
            raise MatrixFormatError(f"unexpected row after {n} rows", lineno)
        if len(tokens) != n:
            raise MatrixFormatError(f"expected {n} entries, got {len(tokens)}", lineno)
        # se normaliza con enteros de Python antes de pasar a int64
        rows.append([_parse_exponent(tok, lineno, k) for tok in tokens])

    if header is None:
        raise MatrixFormatError("missing header", last_line or 1)
    n, k = header
    if len(rows) != n:
        raise MatrixFormatError(f"expected {n} rows, got {len(rows)}", last_line)

    return from_exponents(rows, k)


def format_matrix(a: BhMatrix) -> str:
    lines = [f"BH {a.n} {a.k}"]
    lines.extend(" ".join(str(e) for e in row) for row in a.to_lists())
    return "\n".join(lines) + "\n"


def read_matrix(stream: TextIO) -> BhMatrix:
    return parse_matrix(stream.read())


def write_matrix(a: BhMatrix, stream: TextIO) -> None:
    stream.write(format_matrix(a))
