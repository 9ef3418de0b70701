# app/morphism/plan.py
import logging
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict
from sympy import divisors, factorint

from app.config import CHECK_REDUCTIONS
from app.errors import DivisorError, PreconditionError, PrimeNotInTargetError
from app.matrices import BhMatrix
from app.morphism.construct import reduce_once

logger = logging.getLogger(__name__)


class ReductionPlan(BaseModel):
    """Primos (con multiplicidad, en orden ascendente) que llevan BH(n, k) a BH(mn, t)."""

    model_config = ConfigDict(frozen=True)

    k: int
    m: int
    t: int
    primes: Tuple[int, ...]

    def steps(self) -> List[Tuple[int, int]]:
        """Pares (k actual, p) en el orden en que se aplican."""
        out = []
        k = self.k
        for p in self.primes:
            out.append((k, p))
            k //= p
        return out


def plan_reduction(k: int, m: int) -> ReductionPlan:
    """
    Requiere k = m t con cada primo de k dividiendo a t. Entonces en cada
    paso p | t | k_actual / p, o sea p^2 | k_actual.
    """
    if k < 1 or m < 1 or k % m:
        raise DivisorError(f"m={m}, k={k}")
    t = k // m
    for q in sorted(int(q) for q in factorint(k)):
        if t % q:
            raise PrimeNotInTargetError(q, k, t)

    primes = tuple(sorted(int(q) for q, e in factorint(m).items() for _ in range(int(e))))
    return ReductionPlan(k=k, m=m, t=t, primes=primes)


def reduce_full(h: BhMatrix, m: int, check: bool = CHECK_REDUCTIONS) -> BhMatrix:
    """BH(n, k) -> BH(mn, k/m) aplicando reduce_once sobre el plan."""
    plan = plan_reduction(h.k, m)
    logger.info("plan for %s with m=%d: %s", h.label, m, list(plan.primes))

    result = h
    for p in plan.primes:
        result = reduce_once(result, p, check=check)
    return result


def reachable_targets(n: int, k: int) -> List[Tuple[int, int, int]]:
    """(m, m*n, k/m) para cada divisor m > 1 de k con plan válido."""
    targets = []
    for m in map(int, divisors(k)[1:]):
        try:
            plan_reduction(k, m)
        except PreconditionError:
            continue
        targets.append((m, m * n, k // m))
    return targets
