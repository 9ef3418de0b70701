# app/morphism/construct.py
import logging
from time import perf_counter
from typing import Optional

import numpy as np

from app.config import CHECK_REDUCTIONS, MAX_MATRIX_ORDER
from app.errors import EnvelopeError, ReductionCheckError, RootOrderMismatchError, SeedMatrixError
from app.matrices import BhMatrix, fourier, from_exponents, verify
from app.morphism.params import MorphismParams, morphism_params, psi_matrix

logger = logging.getLogger(__name__)


def _check_seed(c: BhMatrix, params: MorphismParams) -> None:
    p = params.p
    if c.n != p:
        raise SeedMatrixError(f"C has order {c.n}, expected p={p}")
    if p % c.k:
        raise SeedMatrixError(f"C has root order {c.k}, which does not divide p={p}")
    report = verify(c)
    if not report.valid:
        w = report.witness
        raise SeedMatrixError(f"rows ({w.i}, {w.j}) of C are not orthogonal")


def expand(h: BhMatrix, c: BhMatrix, params: MorphismParams) -> BhMatrix:
    """
    H^psi * (I_n (x) C), escrita directamente en exponentes de zeta_t.

    El bloque (i, j) es M^(a_ij) C. Con (u, v) = psi(a_ij) y c = (r - v) mod p,
    la entrada (r, s) es zeta_t^(u + wrap(c, v)) * zeta_p^(C[c][s]),
    y zeta_p = zeta_t^(t/p) porque p | t.
    """
    if h.k != params.k:
        raise RootOrderMismatchError(f"H has k={h.k}, params have k={params.k}")
    _check_seed(c, params)

    n, p, t = h.n, params.p, params.t
    size = n * p
    if size > MAX_MATRIX_ORDER:
        raise EnvelopeError(f"expanded order {size} exceeds {MAX_MATRIX_ORDER}")

    blocks = psi_matrix(h, params)
    u = blocks.u[:, :, None]
    v = blocks.v[:, :, None]
    r = np.arange(p, dtype=np.int64)[None, None, :]

    col = (r - v) % p  # (n, n, p): columna no nula de M^v en el renglón r
    wrap = (col + v >= p).astype(np.int64)
    scalar = u + wrap

    seed = c.exps * (t // c.k)
    # ejes [i, j, r, s] -> [i, r, j, s]
    table = (scalar[..., None] + seed[col]) % t
    table = table.transpose(0, 2, 1, 3).reshape(size, size)
    return from_exponents(table, t)


def _post_check(h: BhMatrix, result: BhMatrix) -> None:
    if verify(result).valid:
        return
    if verify(h).valid:
        raise ReductionCheckError(f"{result.label} built from a valid {h.label} failed verification")
    logger.warning("input %s is not Butson; output %s is not either", h.label, result.label)


def reduce_once(
    h: BhMatrix,
    p: int,
    c: Optional[BhMatrix] = None,
    check: bool = CHECK_REDUCTIONS,
) -> BhMatrix:
    """BH(n, k) -> BH(np, k/p) para p primo con p^2 | k. C por defecto: F_p."""
    params = morphism_params(h.k, p)
    if c is None:
        c = fourier(p)

    t0 = perf_counter()
    result = expand(h, c, params)
    logger.info("%s -> %s via p=%d", h.label, result.label, p)
    logger.debug("expand took %.1f ms", (perf_counter() - t0) * 1000.0)

    if check:
        _post_check(h, result)
    return result
