# tests/helpers.py
#
# Utilidades que sólo existen para las pruebas: evaluación en punto flotante,
# expansión densa de imágenes monomiales y permutaciones.

from typing import List, Optional, Sequence

import numpy as np

from app.cyclotomic import CycloElement, elem_add, elem_conj, elem_mul, from_counts, zero
from app.matrices import BhMatrix, from_exponents
from app.morphism import MonomialImage, MorphismParams, psi_scalar


def float_value(x: CycloElement) -> complex:
    a = np.arange(x.order)
    return complex(np.sum(x.as_array() * np.exp(2j * np.pi * a / x.order)))


def float_is_zero(x: CycloElement, tol: float = 1e-9) -> bool:
    return abs(float_value(x)) < tol


def poly_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def dense_monomial(img: MonomialImage) -> List[List[Optional[int]]]:
    p = img.params.p
    return [[img.entry(r, c) for c in range(p)] for r in range(p)]


def dense_conj_transpose(table: List[List[Optional[int]]], t: int) -> List[List[Optional[int]]]:
    size = len(table)
    return [
        [None if table[c][r] is None else (-table[c][r]) % t for c in range(size)]
        for r in range(size)
    ]


def psi_dense(x: CycloElement, params: MorphismParams) -> List[List[CycloElement]]:
    """psi aplicado a un elemento arbitrario de Z[zeta_k]: matriz p x p sobre Z[zeta_t]."""
    p, t = params.p, params.t
    acc = np.zeros((p, p, t), dtype=np.int64)
    for a, c in enumerate(x.counts):
        if not c:
            continue
        img = psi_scalar(a, params)
        for col in range(p):
            row = (col + img.v) % p
            acc[row, col, img.entry(row, col)] += c
    return [[from_counts(t, acc[r, s]) for s in range(p)] for r in range(p)]


def psi_dense_matrix(rows: List[List[CycloElement]], params: MorphismParams) -> List[List[CycloElement]]:
    n, p = len(rows), params.p
    out = [[None] * (n * p) for _ in range(n * p)]
    for i in range(n):
        for j in range(n):
            block = psi_dense(rows[i][j], params)
            for r in range(p):
                for s in range(p):
                    out[i * p + r][j * p + s] = block[r][s]
    return out


def mat_mul(a: List[List[CycloElement]], b: List[List[CycloElement]], k: int) -> List[List[CycloElement]]:
    size = len(a)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = zero(k)
            for l in range(size):
                acc = elem_add(acc, elem_mul(a[i][l], b[l][j]))
            row.append(acc)
        out.append(row)
    return out


def mat_star(a: List[List[CycloElement]]) -> List[List[CycloElement]]:
    size = len(a)
    return [[elem_conj(a[j][i]) for j in range(size)] for i in range(size)]


def permute(matrix: BhMatrix, rows: Sequence[int], cols: Sequence[int]) -> BhMatrix:
    return from_exponents(matrix.exps[np.ix_(list(rows), list(cols))], matrix.k)


def all_ones(n: int, k: int) -> BhMatrix:
    return from_exponents(np.zeros((n, n), dtype=np.int64), k)
