# tests/test_api.py
import pytest
from fastapi.testclient import TestClient

from app.main import app
from app.matrices import fourier
from app.models import MatrixPayload


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def _payload(matrix):
    return MatrixPayload.from_matrix(matrix).model_dump()


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}
    assert client.get("/").status_code == 200


def test_fourier(client):
    resp = client.post("/api/matrices/fourier", json={"order": 2})
    assert resp.status_code == 200
    assert resp.json() == {"n": 2, "k": 2, "exps": [[0, 0], [0, 1]]}


def test_fourier_rejects_zero(client):
    assert client.post("/api/matrices/fourier", json={"order": 0}).status_code == 422


def test_kron_and_abelian(client):
    kron = client.post(
        "/api/matrices/kron",
        json={"a": _payload(fourier(2)), "b": _payload(fourier(3))},
    ).json()
    abelian = client.post("/api/matrices/abelian", json={"orders": [2, 3]}).json()
    assert kron == abelian
    assert (kron["n"], kron["k"]) == (6, 6)


def test_verify(client):
    body = client.post("/api/matrices/verify", json={"matrix": _payload(fourier(5))}).json()
    assert body["valid"] is True
    assert body["label"] == "BH(5,5)"
    assert body["witness"] is None

    ones = {"n": 2, "k": 2, "exps": [[0, 0], [0, 0]]}
    body = client.post("/api/matrices/verify", json={"matrix": ones}).json()
    assert body["valid"] is False
    assert body["witness"] == {"i": 0, "j": 1, "entry": [2, 0]}


def test_verify_rejects_bad_shape(client):
    bad = {"n": 2, "k": 2, "exps": [[0, 0]]}
    assert client.post("/api/matrices/verify", json={"matrix": bad}).status_code == 422


def test_reduce(client):
    resp = client.post("/api/reduce", json={"matrix": _payload(fourier(4)), "prime": 2, "check": True})
    assert resp.status_code == 200
    body = resp.json()
    assert body["label"] == "BH(8,2)"
    assert len(body["matrix"]["exps"]) == 8


def test_reduce_precondition(client):
    resp = client.post("/api/reduce", json={"matrix": _payload(fourier(6)), "prime": 2})
    assert resp.status_code == 422
    assert "p^2 does not divide k" in resp.json()["detail"]


def test_reduce_full(client):
    resp = client.post("/api/reduce/full", json={"matrix": _payload(fourier(8)), "factor": 4})
    assert resp.json()["label"] == "BH(32,2)"


def test_plan(client):
    assert client.get("/api/plan", params={"k": 8, "m": 4}).json() == {
        "k": 8,
        "m": 4,
        "t": 2,
        "primes": [2, 2],
    }
    assert client.get("/api/plan", params={"k": 12, "m": 6}).status_code == 422


def test_info(client):
    body = client.post("/api/info", json={"matrix": _payload(fourier(8))}).json()
    assert body["n"] == 8
    assert body["targets"] == [{"m": 2, "n": 16, "k": 4}, {"m": 4, "n": 32, "k": 2}]
