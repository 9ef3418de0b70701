# app/morphism/params.py
#
# La matriz compañera M_{k,p} (p x p, unos en la subdiagonal y zeta_t en la
# esquina superior derecha, t = k/p) cumple M^p = zeta_t I. Por eso toda
# potencia M^a se escribe como zeta_t^u M^v con u = floor(a/p) mod t,
# v = a mod p, y nunca hace falta guardar matrices densas.

from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from sympy import isprime

from app.errors import NotPrimeError, PSquareError, RootOrderMismatchError
from app.matrices import BhMatrix


class MorphismParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: int
    p: int
    t: int

    @model_validator(mode="after")
    def _check(self):
        if self.t * self.p != self.k or self.t % self.p != 0:
            raise ValueError("params require t * p == k and p^2 | k")
        return self


def p2_obstruction(k: int, p: int) -> Optional[int]:
    """
    Si p | k pero p^2 no divide k, p es invertible módulo t = k/p y
    zeta_t^e con e = p^(-1) mod t es raíz p-ésima de zeta_t dentro de
    Q[zeta_t]: x^p - zeta_t tiene un factor lineal y psi deja de ser
    isomorfismo. Regresa ese e, o None si no aplica.
    """
    if p < 2 or k % p:
        return None
    t = k // p
    if t % p == 0:
        return None
    return pow(p, -1, t)


def morphism_params(k: int, p: int) -> MorphismParams:
    if not isprime(p):
        raise NotPrimeError(f"p={p}")
    if k % (p * p):
        raise PSquareError(k, p, p2_obstruction(k, p))
    return MorphismParams(k=k, p=p, t=k // p)


class MonomialImage(BaseModel):
    """zeta_t^u * M_{k,p}^v."""

    model_config = ConfigDict(frozen=True)

    params: MorphismParams
    u: int
    v: int

    @model_validator(mode="after")
    def _check_range(self):
        if not (0 <= self.u < self.params.t and 0 <= self.v < self.params.p):
            raise ValueError("u must lie in [0, t) and v in [0, p)")
        return self

    def compose(self, other: "MonomialImage") -> "MonomialImage":
        p, t = self.params.p, self.params.t
        carry = 1 if self.v + other.v >= p else 0
        return MonomialImage(
            params=self.params,
            u=(self.u + other.u + carry) % t,
            v=(self.v + other.v) % p,
        )

    def conjugate(self) -> "MonomialImage":
        """Transpuesta conjugada; usa M^(-v) = zeta_t^(-1) M^(p-v) para v > 0."""
        p, t = self.params.p, self.params.t
        if self.v == 0:
            return MonomialImage(params=self.params, u=(-self.u) % t, v=0)
        return MonomialImage(params=self.params, u=(-self.u - 1) % t, v=p - self.v)

    def entry(self, r: int, c: int) -> Optional[int]:
        """Exponente (módulo t) de la entrada (r, c), o None si la entrada es 0."""
        p, t = self.params.p, self.params.t
        if r != (c + self.v) % p:
            return None
        wrap = 1 if c + self.v >= p else 0
        return (self.u + wrap) % t


def psi_scalar(a: int, params: MorphismParams) -> MonomialImage:
    a %= params.k
    return MonomialImage(params=params, u=(a // params.p) % params.t, v=a % params.p)


class PsiBlocks(BaseModel):
    """
    H^psi como tabla n x n de imágenes monomiales, guardada en dos tablas
    (u, v). blocks[i, j] regresa la MonomialImage del bloque.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    params: MorphismParams
    u: np.ndarray
    v: np.ndarray

    @property
    def n(self) -> int:
        return int(self.u.shape[0])

    def __getitem__(self, ij) -> MonomialImage:
        i, j = ij
        return MonomialImage(params=self.params, u=int(self.u[i, j]), v=int(self.v[i, j]))


def psi_matrix(h: BhMatrix, params: MorphismParams) -> PsiBlocks:
    if h.k != params.k:
        raise RootOrderMismatchError(f"H has k={h.k}, params have k={params.k}")
    u = (h.exps // params.p) % params.t
    v = h.exps % params.p
    return PsiBlocks(params=params, u=u, v=v)
