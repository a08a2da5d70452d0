import json

import pytest
from fastapi.testclient import TestClient

from zforge.service import app

client = TestClient(app)


def test_bounds_endpoint_exact_rationals():
    r = client.get("/bounds", params={"m": 8, "n": 11})
    assert r.status_code == 200
    body = r.json()
    assert body["u_plus"] == "61/2"
    assert body["u_zero"] == "212/7"
    assert body["u_minus"] == "94/3"
    assert body["roman_min"] == 30


def test_z_endpoint_regimes():
    body = client.get("/z", params={"m": 8, "n": 11}).json()
    assert body["z"] == 30 and body["regime"] == "above-case1"
    body = client.get("/z", params={"m": 11, "n": 19}).json()
    assert body["z"] == 55 and body["decrement"] == 1


def test_construct_verify_round_trip():
    r = client.post("/construct", json={"m": 9, "n": 36, "seed": 0})
    assert r.status_code == 200
    body = r.json()
    assert body["z"] == 72
    doc = body["document"]
    # the document is canonical compact JSON
    assert json.loads(doc)["edges"] == body["edges"]
    v = client.post("/verify", json={"document": doc}).json()
    assert v["passed"] and v["matches_formula"]


def test_verify_rejects_tampering():
    doc = client.post("/construct",
                      json={"m": 8, "n": 11, "seed": 0}).json()["document"]
    bad = doc.replace("[0,2,4]", "[0,2,5]", 1)
    v = client.post("/verify", json={"document": bad}).json()
    assert not v["passed"]
    v = client.post("/verify", json={"document": "garbage"}).json()
    assert not v["passed"]


def test_structured_errors():
    r = client.post("/construct", json={"m": 7, "n": 3})
    assert r.status_code == 422
    assert r.json()["kind"] == "out-of-range"
    r = client.post("/gdd", json={"type": "4^2"})
    assert r.status_code == 422
    assert r.json()["kind"] == "infeasible"
    r = client.post("/oracle", json={"m": 50, "n": 3})
    assert r.status_code == 422
    assert r.json()["kind"] == "out-of-range"
    r = client.get("/z", params={"m": "x", "n": 3})
    assert r.status_code == 422
    assert r.json()["kind"] == "usage"


def test_gdd_endpoint():
    body = client.post("/gdd", json={"type": "4^3"}).json()
    assert body["type"] == "4^3"
    assert len(body["triples"]) == 16


def test_oracle_endpoint():
    body = client.post("/oracle", json={"m": 6, "n": 5}).json()
    assert body["optimum"] == 14
    assert body["nodes_expanded"] > 0


def test_table_endpoint_shape():
    body = client.get("/table", params={"m_from": 12, "m_to": 13}).json()
    rows = body["rows"]
    assert rows
    for row in rows:
        assert set(row) == {"m", "n", "regime", "z", "u_plus_floor",
                            "u_zero_floor", "u_minus_floor", "decrement"}
    r = client.get("/table", params={"m_from": 5, "m_to": 3000})
    assert r.status_code == 422 and r.json()["kind"] == "usage"
