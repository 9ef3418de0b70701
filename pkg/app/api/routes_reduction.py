# app/api/routes_reduction.py
import time

from fastapi import APIRouter, Query

from app.api.errors import domain_errors
from app.morphism import plan_reduction, reachable_targets, reduce_full, reduce_once
from app.models import (
    InfoResponse,
    MatrixPayload,
    PlanResponse,
    ReduceFullRequest,
    ReduceRequest,
    ReduceResponse,
    TargetInfo,
    VerifyRequest,
)

router = APIRouter(tags=["reduction"])


@router.post("/reduce", response_model=ReduceResponse)
def reduce_one_step(req: ReduceRequest):
    """
    BH(n, k) -> BH(np, k/p). `seed` es la matriz C en BH(p, p);
    si no se manda se usa F_p.
    """
    with domain_errors():
        matrix = req.matrix.to_matrix()
        seed = req.seed.to_matrix() if req.seed is not None else None

        t0 = time.perf_counter()
        result = reduce_once(matrix, req.prime, seed, check=req.check)
        dt_ms = (time.perf_counter() - t0) * 1000.0

        return ReduceResponse(
            matrix=MatrixPayload.from_matrix(result),
            label=result.label,
            time_ms=dt_ms,
        )


@router.post("/reduce/full", response_model=ReduceResponse)
def reduce_by_factor(req: ReduceFullRequest):
    with domain_errors():
        matrix = req.matrix.to_matrix()

        t0 = time.perf_counter()
        result = reduce_full(matrix, req.factor, check=req.check)
        dt_ms = (time.perf_counter() - t0) * 1000.0

        return ReduceResponse(
            matrix=MatrixPayload.from_matrix(result),
            label=result.label,
            time_ms=dt_ms,
        )


@router.get("/plan", response_model=PlanResponse)
def get_plan(
    k: int = Query(..., ge=1, description="Orden de raíz de la matriz de entrada"),
    m: int = Query(..., ge=1, description="Divisor de k que se elimina"),
):
    with domain_errors():
        plan = plan_reduction(k, m)
        return PlanResponse(k=plan.k, m=plan.m, t=plan.t, primes=list(plan.primes))


@router.post("/info", response_model=InfoResponse)
def matrix_info(req: VerifyRequest):
    with domain_errors():
        matrix = req.matrix.to_matrix()
        targets = [
            TargetInfo(m=m, n=order, k=root)
            for m, order, root in reachable_targets(matrix.n, matrix.k)
        ]
        return InfoResponse(n=matrix.n, k=matrix.k, targets=targets)
