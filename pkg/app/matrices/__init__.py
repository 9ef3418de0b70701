# app/matrices/__init__.py
from app.matrices.fileio import format_matrix, parse_matrix, read_matrix, write_matrix
from app.matrices.generators import character_table, fourier, kronecker
from app.matrices.models import BhMatrix, VerifyReport, Witness, from_exponents
from app.matrices.verify import gram_entry, verify

__all__ = [
    "BhMatrix",
    "VerifyReport",
    "Witness",
    "character_table",
    "format_matrix",
    "fourier",
    "from_exponents",
    "gram_entry",
    "kronecker",
    "parse_matrix",
    "read_matrix",
    "verify",
    "write_matrix",
]
