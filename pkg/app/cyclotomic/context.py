# app/cyclotomic/context.py
from functools import lru_cache
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from app.config import INT64_GUARD
from app.cyclotomic.poly import cyclotomic_poly, totient
from app.errors import CoefficientOverflowError, OrderMismatchError


class CycloContext(BaseModel):
    """
    Datos fijos de Z[zeta_k]: el orden k y Phi_k.
    Sabe reducir vectores de conteos (longitud k) módulo Phi_k.
    """

    model_config = ConfigDict(frozen=True)

    order: int
    phi_coeffs: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_phi(self):
        if self.order < 1:
            raise ValueError("order must be positive")
        if len(self.phi_coeffs) != totient(self.order) + 1:
            raise ValueError("phi_coeffs must have length phi(k) + 1")
        if self.phi_coeffs[-1] != 1:
            raise ValueError("phi_coeffs must be monic")
        return self

    @property
    def degree(self) -> int:
        return len(self.phi_coeffs) - 1

    @property
    def height(self) -> int:
        return max(abs(c) for c in self.phi_coeffs)

    def reduce_many(self, rows: np.ndarray) -> np.ndarray:
        """
        Residuo módulo Phi_k de cada fila (cada fila = conteos sobre
        exponentes 0..k-1, ya plegados módulo x^k - 1).

        Regresa un arreglo (m, phi(k)). Trabaja en int64; antes de cada paso
        se garantiza |coef| <= INT64_GUARD / (h + 1), con h la altura de
        Phi_k, de modo que el paso siguiente no puede desbordarse.
        """
        k = self.order
        rem = np.array(rows, dtype=np.int64, copy=True)
        if rem.ndim != 2 or rem.shape[1] != k:
            raise OrderMismatchError(f"expected rows of length {k}, got shape {rem.shape}")

        d = self.degree
        if rem.shape[0] == 0:
            return rem[:, :d]

        limit = INT64_GUARD // (self.height + 1)
        if np.abs(rem).max() > limit:
            raise CoefficientOverflowError(f"coefficient exceeds {limit} before reduction mod Phi_{k}")

        phi = np.asarray(self.phi_coeffs, dtype=np.int64)
        for top in range(k - 1, d - 1, -1):
            lead = rem[:, top].copy()
            if not lead.any():
                continue
            window = rem[:, top - d: top + 1]
            window -= lead[:, None] * phi[None, :]
            if np.abs(window).max() > limit:
                raise CoefficientOverflowError(f"coefficient growth during reduction mod Phi_{k}")

        return rem[:, :d]

    def reduce(self, counts: np.ndarray) -> np.ndarray:
        return self.reduce_many(np.asarray(counts, dtype=np.int64)[None, :])[0]


@lru_cache(maxsize=None)
def get_context(k: int) -> CycloContext:
    """Contexto memoizado; lru_cache tolera lectores concurrentes."""
    return CycloContext(order=k, phi_coeffs=tuple(cyclotomic_poly(k)))
