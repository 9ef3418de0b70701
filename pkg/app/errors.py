# app/errors.py
from typing import Optional


class BhError(ValueError):
    """Error base de la librería. Hereda de ValueError: todos son entradas inválidas."""


class EnvelopeError(BhError):
    """Orden, coeficiente o tamaño de matriz fuera de la envolvente soportada."""


class UnsupportedOrderError(EnvelopeError):
    """Orden de raíz fuera de MAX_ROOT_ORDER."""


class CoefficientOverflowError(EnvelopeError):
    """La aritmética de ancho fijo se desbordaría."""


class OrderMismatchError(BhError):
    pass


class MatrixFormatError(BhError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(BhError):
    """
    Precondición de una construcción que no se cumple.
    `condition` nombra la condición violada (se imprime en stderr en la CLI).
    """

    condition = "precondition failed"

    def __init__(self, detail: str = ""):
        self.detail = detail
        message = self.condition if not detail else f"{self.condition}: {detail}"
        super().__init__(message)


class NotPrimeError(PreconditionError):
    condition = "p is not prime"


class PSquareError(PreconditionError):
    condition = "p^2 does not divide k"

    def __init__(self, k: int, p: int, obstruction: Optional[int] = None):
        self.k = k
        self.p = p
        self.obstruction = obstruction
        detail = f"k={k}, p={p}"
        if obstruction is not None:
            # zeta_t^e es raíz p-ésima de zeta_t: x^p - zeta_t tiene factor lineal
            detail += f"; zeta_{k // p}^{obstruction} is a p-th root of zeta_{k // p}"
        super().__init__(detail)


class DivisorError(PreconditionError):
    condition = "m does not divide k"


class PrimeNotInTargetError(PreconditionError):
    condition = "prime divisor of k does not divide t"

    def __init__(self, prime: int, k: int, t: int):
        self.prime = prime
        super().__init__(f"prime {prime} of k={k} does not divide t={t}")


class SeedMatrixError(PreconditionError):
    condition = "seed matrix C is not a BH(p,p) matrix"


class RootOrderMismatchError(PreconditionError):
    condition = "root order of H does not match k"


class ReductionCheckError(BhError):
    """La salida de una reducción no pasó la verificación aunque la entrada sí."""
