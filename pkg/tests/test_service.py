import pytest
from fastapi.testclient import TestClient

from albertkit.reports import SCHEMA
from albertkit.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "ok"


def test_axioms_endpoint(client):
    response = client.post("/axioms", json={"field": "Fp:101", "trials": 10, "seed": 1})
    assert response.status_code == 200
    report = response.json()
    assert report["schema"] == SCHEMA
    assert report["verdict"] == "PASS"
    assert report["command"] == "verify-axioms"
    # passing checks do not carry witnesses in the response
    assert all("witness" not in c or c["witness"] is None for c in report["checks"])


def test_axioms_endpoint_defaults_are_applied(client):
    response = client.post(
        "/axioms", json={"field": "Fp:101", "trials": 5}
    )
    assert response.status_code == 200
    assert response.json()["config"]["jordan"]["algebra"] == {"kind": "mat3"}


def test_mutated_run_reports_fail_with_status_200(client):
    response = client.post(
        "/axioms",
        json={"field": "Fp:101", "trials": 10, "seed": 1, "mutate": {"seed": 4}},
    )
    assert response.status_code == 200
    assert response.json()["verdict"] == "FAIL"


def test_lemma_endpoints(client):
    body = {
        "field": "Q",
        "jordan": {"algebra": {"kind": "split"}, "lambda": "2"},
        "trials": 8,
    }
    response = client.post("/lemmas/trans", json=body)
    assert response.status_code == 200
    assert response.json()["verdict"] == "PASS"

    response = client.post(
        "/lemmas/springer", json={**body, "slot_element": ["1", "2", "3"], "trials": 5}
    )
    assert response.status_code == 200
    report = response.json()
    assert report["verdict"] == "PASS"
    assert report["lambda_prime"] == ["12"]

    response = client.post("/lemmas/discr", json={"field": "Fp:7", "seed": 1})
    assert response.status_code == 200
    assert response.json()["verdict"] == "PASS"


def test_unknown_lemma_is_404(client):
    assert client.post("/lemmas/nope", json={}).status_code == 404


def test_isotopy_endpoint(client):
    response = client.post(
        "/isotopy", json={"field": "Fp:101", "trials": 6, "seed": 2}
    )
    assert response.status_code == 200
    names = [c["name"] for c in response.json()["checks"]]
    assert "unit_isotope_identity" in names
    assert "u_operator_is_autotopy" in names
    assert "random_map_fails_autotopy" in names


def test_isotopy_with_words(client):
    response = client.post(
        "/isotopy",
        json={
            "field": "Fp:101",
            "trials": 5,
            "seed": 2,
            "words": [[{"scalar": "3"}]],
        },
    )
    assert response.status_code == 200
    report = response.json()
    word_checks = [c for c in report["checks"] if c["name"].startswith("word_")]
    assert word_checks and word_checks[0]["passed"]


def test_semantic_config_error_is_400(client):
    response = client.post("/axioms", json={"field": "Fp:4", "trials": 5})
    assert response.status_code == 400
    assert "prime" in response.json()["detail"]


def test_shape_error_is_422(client):
    assert client.post("/axioms", json={"trials": "many"}).status_code == 422
    assert client.post("/axioms", json={"jordan": {"algebra": {"kind": "x"}}}).status_code == 422
