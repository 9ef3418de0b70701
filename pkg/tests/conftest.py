# tests/conftest.py
import numpy as np
import pytest

from app.matrices import fourier


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session")
def f4():
    return fourier(4)


@pytest.fixture(scope="session")
def f8():
    return fourier(8)
