# app/cyclotomic/poly.py
#
# Polinomios con coeficientes enteros, representados como listas en orden
# ascendente: [c_0, c_1, ..., c_n] = c_0 + c_1 x + ... + c_n x^n.

from functools import lru_cache
from typing import List, Sequence, Tuple

from sympy import divisors, totient as _sympy_totient

from app.config import MAX_ROOT_ORDER
from app.errors import UnsupportedOrderError


def normalize(p: Sequence[int]) -> List[int]:
    """Quita ceros de grado alto."""
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return list(p[:n])


def poly_divmod(num: Sequence[int], den: Sequence[int]) -> Tuple[List[int], List[int]]:
    """
    División larga exacta num = q * den + r con enteros de Python.
    El divisor tiene que ser mónico (coeficiente principal 1), así que
    nunca aparecen denominadores.
    """
    den = normalize(den)
    if not den or den[-1] != 1:
        raise ValueError("divisor must be monic")

    dq = len(den) - 1
    rem = list(num)
    quot = [0] * max(len(rem) - dq, 1)

    for top in range(len(rem) - 1, dq - 1, -1):
        c = rem[top]
        if c == 0:
            continue
        quot[top - dq] = c
        base = top - dq
        for j, d in enumerate(den):
            if d:
                rem[base + j] -= c * d

    return normalize(quot), normalize(rem[:dq])


def _check_order(k: int) -> None:
    if k < 1 or k > MAX_ROOT_ORDER:
        raise UnsupportedOrderError(f"root order {k} outside 1..{MAX_ROOT_ORDER}")


@lru_cache(maxsize=None)
def _cyclotomic(k: int) -> Tuple[int, ...]:
    # x^k - 1 = prod_{d | k} Phi_d(x)
    num = [-1] + [0] * (k - 1) + [1]
    for d in map(int, divisors(k)[:-1]):
        num, rem = poly_divmod(num, _cyclotomic(d))
        if rem:
            raise ArithmeticError(f"Phi_{d} does not divide x^{k} - 1")
    return tuple(num)


def cyclotomic_poly(k: int) -> List[int]:
    """
    Coeficientes de Phi_k en orden ascendente (longitud phi(k) + 1).
    Se calcula dividiendo x^k - 1 entre Phi_d para cada divisor propio d;
    el resultado se memoiza.
    """
    _check_order(k)
    return list(_cyclotomic(k))


def totient(k: int) -> int:
    _check_order(k)
    return int(_sympy_totient(k))
