# app/models.py
from pydantic import BaseModel, Field
from typing import List, Optional

from app.matrices import BhMatrix, VerifyReport, from_exponents


# --------- MATRICES ---------

class MatrixPayload(BaseModel):
    n: int = Field(ge=1)
    k: int = Field(ge=1)
    exps: List[List[int]]

    def to_matrix(self) -> BhMatrix:
        if len(self.exps) != self.n or any(len(row) != self.n for row in self.exps):
            raise ValueError(f"exps must be a {self.n}x{self.n} table")
        # normalizamos con enteros de Python antes de pasar a int64
        return from_exponents([[e % self.k for e in row] for row in self.exps], self.k)

    @classmethod
    def from_matrix(cls, matrix: BhMatrix) -> "MatrixPayload":
        return cls(n=matrix.n, k=matrix.k, exps=matrix.to_lists())


class FourierRequest(BaseModel):
    order: int = Field(ge=1)


class AbelianRequest(BaseModel):
    orders: List[int] = Field(default_factory=list)


class KronRequest(BaseModel):
    a: MatrixPayload
    b: MatrixPayload


class VerifyRequest(BaseModel):
    matrix: MatrixPayload


class WitnessInfo(BaseModel):
    i: int
    j: int
    entry: List[int]


class VerifyResponse(BaseModel):
    valid: bool
    label: str
    witness: Optional[WitnessInfo] = None
    time_ms: float

    @classmethod
    def from_report(cls, matrix: BhMatrix, report: VerifyReport, time_ms: float) -> "VerifyResponse":
        witness = None
        if report.witness is not None:
            w = report.witness
            witness = WitnessInfo(i=w.i, j=w.j, entry=list(w.entry.counts))
        return cls(valid=report.valid, label=matrix.label, witness=witness, time_ms=time_ms)


# --------- REDUCTIONS ---------

class ReduceRequest(BaseModel):
    matrix: MatrixPayload
    prime: int
    seed: Optional[MatrixPayload] = None
    check: bool = False


class ReduceFullRequest(BaseModel):
    matrix: MatrixPayload
    factor: int
    check: bool = False


class ReduceResponse(BaseModel):
    matrix: MatrixPayload
    label: str
    time_ms: float


class PlanResponse(BaseModel):
    k: int
    m: int
    t: int
    primes: List[int]


class TargetInfo(BaseModel):
    m: int
    n: int
    k: int


class InfoResponse(BaseModel):
    n: int
    k: int
    targets: List[TargetInfo]
