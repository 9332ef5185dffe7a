import json

import pytest
from fastapi.testclient import TestClient

from branchkit.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    r = client.get("/health")
    assert r.status_code == 200 and r.json() == {"status": "ok"}


def test_dim_endpoint(client):
    r = client.post("/dim", json={"series": "C", "n": 2, "m": ["1", "0"]})
    assert r.status_code == 200
    assert r.json() == {"dim": 4}


def test_hv_endpoint_with_check(client):
    r = client.post(
        "/hv",
        json={"series": "C", "n": 2, "m": ["2", "1"], "check": True, "trials": 6, "seed": 1},
    )
    assert r.status_code == 200
    doc = r.json()
    assert doc["report"]["pass"] is True
    assert doc["polynomial"]["terms"]


def test_tableaux_endpoint(client):
    r = client.post("/tableaux", json={"series": "B", "n": 2, "m": ["1", "0"]})
    assert r.status_code == 200
    assert r.json()["count"] == 3


def test_basis_endpoint_round_trips_polynomials(client):
    from branchkit.minors import poly_from_json, poly_to_json

    r = client.post(
        "/basis",
        json={"series": "D", "n": 2, "m": ["1", "0"], "verify": True, "trials": 8, "seed": 2},
    )
    assert r.status_code == 200
    doc = r.json()
    assert doc["count"] == 4
    for item in doc["items"]:
        assert item["checks"]["annihilated"] and item["checks"]["admissible"]
        poly = poly_from_json(item["polynomial"])
        assert poly_to_json(poly, 2) == item["polynomial"]


def test_verify_endpoint(client):
    r = client.post(
        "/verify", json={"series": "C", "n": 2, "m": ["1", "0"], "trials": 10, "seed": 1}
    )
    assert r.status_code == 200
    assert r.json()["report"]["pass"] is True


def test_act_endpoint(client):
    poly = {
        "terms": [
            {
                "coeff": "1",
                "factors": [{"rows": [-2, -1], "cols": [-2, -1], "bar": False, "exp": "1"}],
            }
        ]
    }
    r = client.post(
        "/act", json={"series": "C", "n": 2, "op": "F:1,-1", "polynomial": poly}
    )
    assert r.status_code == 200
    out = r.json()["polynomial"]["terms"]
    assert len(out) == 1 and out[0]["coeff"] == "2"
    assert out[0]["factors"][0]["cols"] == [-2, 1]


def test_relations_endpoint(client):
    r = client.post("/relations", json={"series": "D", "n": 2, "trials": 10, "seed": 0})
    assert r.status_code == 200
    assert r.json()["report"]["pass"] is True


def test_validation_errors(client):
    r = client.post("/dim", json={"series": "X", "n": 2, "m": ["1", "0"]})
    assert r.status_code == 422
    r = client.post("/dim", json={"series": "C", "n": 2, "m": ["0", "1"]})
    assert r.status_code == 422
    r = client.post(
        "/act",
        json={"series": "C", "n": 2, "op": "nonsense", "polynomial": {"terms": []}},
    )
    assert r.status_code == 422
    body = r.json()
    assert body["error"]["code"] == "invalid_request"


def test_endpoint_determinism(client):
    payload = {"series": "B", "n": 2, "m": ["1", "1"], "trials": 8, "seed": 5}
    r1 = client.post("/verify", json=payload)
    r2 = client.post("/verify", json=payload)
    assert r1.content == r2.content
