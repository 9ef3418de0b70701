# app/api/routes_matrices.py
import time

from fastapi import APIRouter

from app.api.errors import domain_errors
from app.matrices import character_table, fourier, kronecker, verify
from app.models import (
    AbelianRequest,
    FourierRequest,
    KronRequest,
    MatrixPayload,
    VerifyRequest,
    VerifyResponse,
)

router = APIRouter(tags=["matrices"])


@router.post("/matrices/fourier", response_model=MatrixPayload)
def gen_fourier(req: FourierRequest):
    with domain_errors():
        return MatrixPayload.from_matrix(fourier(req.order))


@router.post("/matrices/abelian", response_model=MatrixPayload)
def gen_abelian(req: AbelianRequest):
    """Tabla de caracteres de Z_m1 x ... x Z_mr."""
    with domain_errors():
        return MatrixPayload.from_matrix(character_table(req.orders))


@router.post("/matrices/kron", response_model=MatrixPayload)
def gen_kron(req: KronRequest):
    with domain_errors():
        return MatrixPayload.from_matrix(kronecker(req.a.to_matrix(), req.b.to_matrix()))


@router.post("/matrices/verify", response_model=VerifyResponse)
def verify_matrix(req: VerifyRequest):
    with domain_errors():
        matrix = req.matrix.to_matrix()

        t0 = time.perf_counter()
        report = verify(matrix)
        dt_ms = (time.perf_counter() - t0) * 1000.0

        return VerifyResponse.from_report(matrix, report, dt_ms)
