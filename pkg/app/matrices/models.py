# app/matrices/models.py
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from app.config import MAX_MATRIX_ORDER, MAX_ROOT_ORDER
from app.cyclotomic import CycloElement
from app.errors import EnvelopeError


class BhMatrix(BaseModel):
    """
    Matriz candidata n x n cuyas entradas son raíces k-ésimas de la unidad,
    guardada como tabla de exponentes: la entrada (i, j) es zeta_k^exps[i][j].

    Ser Butson NO es invariante del tipo; eso sólo lo establece verify().
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int
    k: int
    exps: np.ndarray

    @model_validator(mode="before")
    @classmethod
    def _normalize_exps(cls, data):
        if not isinstance(data, dict):
            return data
        n, k = data.get("n"), data.get("k")
        exps = np.array(data.get("exps"), dtype=np.int64)
        if not isinstance(n, int) or not isinstance(k, int) or n < 1 or k < 1:
            raise ValueError("n and k must be positive integers")
        if exps.shape != (n, n):
            raise ValueError(f"exps must have shape ({n}, {n}), got {exps.shape}")
        exps %= k
        exps.setflags(write=False)
        return {**data, "exps": exps}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BhMatrix):
            return NotImplemented
        return self.n == other.n and self.k == other.k and np.array_equal(self.exps, other.exps)

    def to_lists(self) -> List[List[int]]:
        return self.exps.tolist()

    @property
    def label(self) -> str:
        return f"BH({self.n},{self.k})"


def from_exponents(exps, k: int) -> BhMatrix:
    """Fábrica con revisión de envolvente; normaliza los exponentes a [0, k)."""
    arr = np.asarray(exps, dtype=np.int64)
    k = int(k)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise EnvelopeError(f"exponent table must be square and non-empty, got shape {arr.shape}")
    n = int(arr.shape[0])
    if n > MAX_MATRIX_ORDER:
        raise EnvelopeError(f"matrix order {n} exceeds {MAX_MATRIX_ORDER}")
    if k < 1 or k > MAX_ROOT_ORDER:
        raise EnvelopeError(f"root order {k} outside 1..{MAX_ROOT_ORDER}")
    return BhMatrix(n=n, k=k, exps=arr)


class Witness(BaseModel):
    model_config = ConfigDict(frozen=True)

    i: int
    j: int
    entry: CycloElement


class VerifyReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    valid: bool
    witness: Optional[Witness] = None

    @model_validator(mode="after")
    def _witness_iff_invalid(self):
        if self.valid != (self.witness is None):
            raise ValueError("valid must be true exactly when there is no witness")
        return self
