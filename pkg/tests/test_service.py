"""HTTP layer: endpoint behavior, status fields, budget guards."""

import pytest
from fastapi.testclient import TestClient

from infsym.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_partition_info(client):
    r = client.post("/partition/info", json={"parts": [3, 1]})
    assert r.status_code == 200
    body = r.json()
    assert body["size"] == 4
    assert body["conjugate"] == [2, 1, 1]
    assert body["dim_syt"] == 3


def test_partition_info_bad_input(client):
    r = client.post("/partition/info", json={"parts": [1, 2]})
    assert r.status_code == 400


def test_char_table(client):
    r = client.post("/char/table", json={"n": 3})
    assert r.status_code == 200
    body = r.json()
    assert body["classes"] == [[3], [2, 1], [1, 1, 1]]
    assert body["rows"]["2,1"] == [-1, 0, 2]


def test_char_table_guard(client):
    assert client.post("/char/table", json={"n": 30}).status_code == 400


def test_char_eval(client):
    r = client.post("/char/eval",
                    json={"shape": [2, 1], "class": [3]})
    assert r.json()["value"] == -1


def test_thoma_eval(client):
    r = client.post("/thoma/eval",
                    json={"alpha": ["1/2", "1/2"], "cycles": [3]})
    assert r.json()["value"] == "1/4"
    r = client.post("/thoma/eval",
                    json={"alpha": ["2/3", "2/3"], "cycles": [2]})
    assert r.status_code == 400


def test_hseries_expand(client):
    r = client.post("/hseries/expand", json={"gamma": "1", "order": 4})
    assert r.json()["coeffs"] == ["1", "1", "1/2", "1/6", "1/24"]


def test_hseries_peel(client):
    coeffs = ["1"] + ["1"] * 10  # the pure geometric series
    r = client.post("/hseries/peel", json={"coeffs": coeffs})
    body = r.json()
    assert body["alpha"] == "1" and body["converged"]


def test_tp_check_pass_and_fail(client):
    good = client.post("/tp/check", json={
        "coeffs": ["1"] * 8, "window": 6, "order": 3})
    assert good.json()["totally_positive"]
    bad = client.post("/tp/check", json={
        "coeffs": ["1", "1", "0", "1", "0", "0"],
        "window": 5, "order": 2})
    body = bad.json()
    assert body["status"] == "fail"
    assert body["witness"]["value"] == "-1"


def test_diagram_mul(client):
    ident = {
        "window": 1,
        "pairs": [{"a": "T+1", "b": "B+1", "len": "0"},
                  {"a": "T-1", "b": "B-1", "len": "0"}],
        "loops": [],
    }
    r = client.post("/diagram/mul", json={"lhs": ident, "rhs": ident})
    assert r.status_code == 200
    assert r.json()["diagram"]["window"] == 1


def test_diagram_verify(client):
    r = client.post("/diagram/verify",
                    json={"window": 3, "triples": 20, "seed": 1})
    body = r.json()
    assert body["status"] == "ok"
    assert body["failures"] == []
    assert body["associativity_failures"] == 0


def test_cosets_endpoints(client):
    assert client.post("/cosets/census", json={"n": 2}).json()[
        "counts"] == {"2": 16, "1,1": 8}
    assert client.post("/cosets/poly", json={"n": 2}).json()[
        "coeffs"] == {"1": "16", "2": "8"}
    r = client.post("/cosets/thm4",
                    json={"x": "-1/3", "n": 3, "brute": True})
    body = r.json()
    assert body["closed"] == "-16/3" and body["match"]


def test_cosets_guards(client):
    assert client.post("/cosets/census", json={"n": 7}).status_code == 400
    assert client.post(
        "/cosets/thm4",
        json={"x": "-1/3", "n": 4, "brute": True}).status_code == 400


def test_classify_endpoint(client):
    label = {
        "pair": "E", "depth": 1,
        "measure": {"atoms": [{"x": "-1/4", "mass": "1/2"}],
                    "zero_mass": "1/2"},
        "lambda": [{"x": "-1/4", "shape": [1, 1]}],
    }
    r = client.post("/classify", json={"label": label})
    body = r.json()
    assert body["admissible"] and body["dim_root"] == 1

    label["lambda"] = [{"x": "-1/4", "shape": [2]}]
    r = client.post("/classify", json={"label": label})
    body = r.json()
    assert body["status"] == "fail" and not body["admissible"]


def test_mixture_endpoint(client):
    triv = {
        "pair": "E", "depth": 0,
        "measure": {"atoms": [{"x": "1", "mass": "1"}], "zero_mass": "0"},
        "lambda": [],
    }
    spec = {"components": [{"label": triv, "weight": "1/2"},
                           {"label": triv, "weight": "1/2"}]}
    r = client.post("/mixture", json={"spec": spec, "check_order": 12})
    body = r.json()
    assert body["status"] == "ok"
    assert body["moment_check"]
    assert body["label"]["measure"]["atoms"] == [
        {"x": "1/2", "mass": "1"}]


def test_ergodic_endpoint(client):
    r = client.post("/ergodic", json={
        "alpha": ["1/2", "1/2"], "k": 2, "ns": [10, 20, 40]})
    rows = r.json()["rows"]
    devs = [row["deviation_float"] for row in rows]
    assert devs == sorted(devs, reverse=True)
    assert devs[-1] <= 0.1


def test_selftest(client):
    r = client.post("/selftest", json={})
    body = r.json()
    assert body["status"] == "ok"
    assert all(body["checks"].values())
