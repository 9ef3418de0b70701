# app/cyclotomic/__init__.py
from app.cyclotomic.context import CycloContext, get_context
from app.cyclotomic.element import (
    CycloElement,
    elem_add,
    elem_conj,
    elem_equal,
    elem_from_int,
    elem_from_root,
    elem_is_zero,
    elem_mul,
    elem_neg,
    elem_reduced,
    elem_sub,
    from_counts,
    one,
    zero,
)
from app.cyclotomic.poly import cyclotomic_poly, poly_divmod, totient

__all__ = [
    "CycloContext",
    "CycloElement",
    "cyclotomic_poly",
    "elem_add",
    "elem_conj",
    "elem_equal",
    "elem_from_int",
    "elem_from_root",
    "elem_is_zero",
    "elem_mul",
    "elem_neg",
    "elem_reduced",
    "elem_sub",
    "from_counts",
    "get_context",
    "one",
    "poly_divmod",
    "totient",
    "zero",
]
