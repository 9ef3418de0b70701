# app/cyclotomic/element.py
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from app.config import INT64_GUARD, MAX_COUNT, MAX_ROOT_ORDER
from app.cyclotomic.context import get_context
from app.errors import CoefficientOverflowError, OrderMismatchError, UnsupportedOrderError


class CycloElement(BaseModel):
    """
    Elemento de Z[zeta_k] como vector denso de conteos:
    counts[a] es la multiplicidad de zeta_k^a.

    La igualdad de Python (==) compara representaciones; para igualdad en
    Z[zeta_k] usar elem_equal.
    """

    model_config = ConfigDict(frozen=True)

    order: int
    counts: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_length(self):
        if len(self.counts) != self.order:
            raise ValueError("length of counts must equal order")
        return self

    def as_array(self) -> np.ndarray:
        return np.asarray(self.counts, dtype=np.int64)

    def __add__(self, other: "CycloElement") -> "CycloElement":
        return elem_add(self, other)

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        return elem_sub(self, other)

    def __mul__(self, other: "CycloElement") -> "CycloElement":
        return elem_mul(self, other)

    def __neg__(self) -> "CycloElement":
        return elem_neg(self)

    def __str__(self) -> str:
        terms = [f"{c}*z^{a}" for a, c in enumerate(self.counts) if c]
        return " + ".join(terms) if terms else "0"


def _check_order(k: int) -> None:
    if k < 1 or k > MAX_ROOT_ORDER:
        raise UnsupportedOrderError(f"root order {k} outside 1..{MAX_ROOT_ORDER}")


def from_counts(k: int, counts) -> CycloElement:
    """Construye un elemento validando la envolvente (|conteo| <= MAX_COUNT)."""
    _check_order(k)
    arr = np.asarray(counts, dtype=np.int64)
    if arr.shape != (k,):
        raise OrderMismatchError(f"expected {k} counts, got shape {arr.shape}")
    if k and np.abs(arr).max() > MAX_COUNT:
        raise CoefficientOverflowError(f"count exceeds {MAX_COUNT}")
    return CycloElement(order=k, counts=tuple(arr.tolist()))


def zero(k: int) -> CycloElement:
    return from_counts(k, np.zeros(k, dtype=np.int64))


def elem_from_int(k: int, c: int) -> CycloElement:
    counts = np.zeros(k, dtype=np.int64)
    counts[0] = c
    return from_counts(k, counts)


def one(k: int) -> CycloElement:
    return elem_from_int(k, 1)


def elem_from_root(k: int, a: int) -> CycloElement:
    """zeta_k^a; el exponente se normaliza módulo k."""
    _check_order(k)
    counts = np.zeros(k, dtype=np.int64)
    counts[a % k] = 1
    return from_counts(k, counts)


def _same_order(x: CycloElement, y: CycloElement) -> int:
    if x.order != y.order:
        raise OrderMismatchError(f"orders differ: {x.order} != {y.order}")
    return x.order


def elem_add(x: CycloElement, y: CycloElement) -> CycloElement:
    k = _same_order(x, y)
    return from_counts(k, x.as_array() + y.as_array())


def elem_neg(x: CycloElement) -> CycloElement:
    return from_counts(x.order, -x.as_array())


def elem_sub(x: CycloElement, y: CycloElement) -> CycloElement:
    k = _same_order(x, y)
    return from_counts(k, x.as_array() - y.as_array())


def elem_mul(x: CycloElement, y: CycloElement) -> CycloElement:
    """Convolución cíclica: los exponentes se suman módulo k."""
    k = _same_order(x, y)
    a = x.as_array()
    b = y.as_array()

    # cota de cualquier coeficiente de la convolución
    if int(np.abs(a).sum()) * int(np.abs(b).max()) > INT64_GUARD:
        raise CoefficientOverflowError("product would overflow int64")

    full = np.convolve(a, b)
    folded = full[:k].copy()
    folded[: k - 1] += full[k:]
    return from_counts(k, folded)


def elem_conj(x: CycloElement) -> CycloElement:
    """Conjugación compleja zeta^a -> zeta^(-a)."""
    k = x.order
    return from_counts(k, x.as_array()[(-np.arange(k)) % k])


def elem_is_zero(x: CycloElement) -> bool:
    """
    Decide si la suma de raíces de la unidad es exactamente cero: el
    residuo del polinomio sum counts[a] x^a módulo Phi_k tiene que ser nulo.
    Los conteos ya están plegados módulo x^k - 1 por construcción.
    """
    rem = get_context(x.order).reduce(x.as_array())
    return not rem.any()


def elem_equal(x: CycloElement, y: CycloElement) -> bool:
    return elem_is_zero(elem_sub(x, y))


def elem_reduced(x: CycloElement) -> CycloElement:
    """Representante canónico: el residuo módulo Phi_k, rellenado a longitud k."""
    k = x.order
    counts = np.zeros(k, dtype=np.int64)
    rem = get_context(k).reduce(x.as_array())
    counts[: rem.shape[0]] = rem
    return from_counts(k, counts)
