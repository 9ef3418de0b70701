# app/api/errors.py
from contextlib import contextmanager

from fastapi import HTTPException

from app.errors import MatrixFormatError


@contextmanager
def domain_errors():
    """
    Traduce los errores de la librería a HTTPException.
    Todos heredan de ValueError (igual que los ValidationError de pydantic).
    """
    try:
        yield
    except MatrixFormatError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc))
