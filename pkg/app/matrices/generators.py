# app/matrices/generators.py
import math
from functools import reduce
from typing import Sequence

import numpy as np

from app.config import MAX_MATRIX_ORDER, MAX_ROOT_ORDER
from app.errors import EnvelopeError
from app.matrices.models import BhMatrix, from_exponents


def fourier(m: int) -> BhMatrix:
    """
    Matriz de Fourier F_m = (zeta_m^(i*j)), índices desde 0.
    Definida para todo m >= 1 (tabla de caracteres del grupo cíclico Z_m).
    """
    if m < 1:
        raise EnvelopeError(f"Fourier order must be >= 1, got {m}")
    idx = np.arange(m, dtype=np.int64)
    return from_exponents(np.outer(idx, idx) % m, m)


def kronecker(a: BhMatrix, b: BhMatrix) -> BhMatrix:
    """
    A (x) B. El orden de raíz resultante es L = lcm(k_A, k_B); el bloque
    (i, j) es zeta^(a_ij) * B con ambos exponentes llevados a zeta_L.
    """
    n = a.n * b.n
    if n > MAX_MATRIX_ORDER:
        raise EnvelopeError(f"Kronecker order {n} exceeds {MAX_MATRIX_ORDER}")
    L = math.lcm(a.k, b.k)
    if L > MAX_ROOT_ORDER:
        raise EnvelopeError(f"Kronecker root order {L} exceeds {MAX_ROOT_ORDER}")

    ea = a.exps * (L // a.k)
    eb = b.exps * (L // b.k)
    # ejes [i, r, j, s] -> fila i*n_B + r, columna j*n_B + s
    big = (ea[:, None, :, None] + eb[None, :, None, :]) % L
    return from_exponents(big.reshape(n, n), L)


def character_table(orders: Sequence[int]) -> BhMatrix:
    """Tabla de caracteres de Z_m1 x ... x Z_mr como producto de Kronecker de Fourier."""
    if not orders:
        return from_exponents([[0]], 1)
    return reduce(kronecker, (fourier(m) for m in orders))
