# app/matrices/verify.py
import logging
from time import perf_counter

import numpy as np

from app.config import VERIFY_CHUNK_CELLS
from app.cyclotomic import CycloElement, elem_reduced, from_counts, get_context
from app.matrices.models import BhMatrix, VerifyReport, Witness

logger = logging.getLogger(__name__)


def gram_entry(a: BhMatrix, i: int, j: int) -> CycloElement:
    """Entrada (i, j) de H H^*: sum_l zeta_k^(exps[i][l] - exps[j][l])."""
    if not (0 <= i < a.n and 0 <= j < a.n):
        raise IndexError(f"row index out of range for n={a.n}: ({i}, {j})")
    diffs = (a.exps[i] - a.exps[j]) % a.k
    return from_counts(a.k, np.bincount(diffs, minlength=a.k))


def verify(a: BhMatrix) -> VerifyReport:
    """
    Verificación exacta de H H^* = n I.

    La diagonal vale n por construcción (cada término es zeta^0), así que
    sólo se revisan pares i < j: para cada fila i se acumulan de una vez los
    conteos contra las filas j > i (en bloques de VERIFY_CHUNK_CELLS celdas)
    y se reducen juntos módulo Phi_k.
    El testigo es el primer par (i, j) en orden lexicográfico.
    """
    n, k = a.n, a.k
    ctx = get_context(k)
    exps = a.exps

    chunk = max(1, VERIFY_CHUNK_CELLS // k)

    t0 = perf_counter()
    for i in range(n - 1):
        for start in range(i + 1, n, chunk):
            rest = exps[start:start + chunk]
            m = rest.shape[0]
            diffs = (exps[i][None, :] - rest) % k
            idx = diffs + (np.arange(m, dtype=np.int64) * k)[:, None]
            counts = np.bincount(idx.ravel(), minlength=m * k).reshape(m, k)

            bad = ctx.reduce_many(counts).any(axis=1)
            if bad.any():
                j = start + int(np.argmax(bad))
                logger.debug("%s fails at rows (%d, %d)", a.label, i, j)
                witness = Witness(i=i, j=j, entry=elem_reduced(gram_entry(a, i, j)))
                return VerifyReport(valid=False, witness=witness)

    logger.debug("verified %s in %.1f ms", a.label, (perf_counter() - t0) * 1000.0)
    return VerifyReport(valid=True)
