import pytest
from fastapi.testclient import TestClient

from main import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_analyze(client):
    response = client.post("/analyze", json={"phase": "x^3*y + x*y^3"})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "success"
    assert body["statusCode"] == 200
    assert body["data"]["lp_range"] == ["4/3", "4"]
    assert body["data"]["hessian_case"] == "GeneralCase"


def test_syntax_errors_are_client_errors(client):
    response = client.post("/analyze", json={"phase": "x^*y"})
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["statusCode"] == 400
    assert "position 2" in detail["data"]["error"]


def test_polynomial_without_mixed_terms_is_a_client_error(client):
    response = client.post("/newton", json={"phase": "x^4 + y^4"})
    assert response.status_code == 400


def test_factor(client):
    response = client.post("/factor", json={"phase": "x^3*y + x*y^3"})
    assert response.status_code == 200
    assert response.json()["data"]["case"] == "GeneralCase"


def test_pitt(client):
    response = client.post("/pitt", json={"p": "2", "q": "4", "alpha": "1/8"})
    assert response.status_code == 200
    verdict = response.json()["data"]["verdict"]
    assert verdict["valid"] is False
    assert "n/p + n/q + beta - alpha != n" in verdict["violations"]


def test_missing_field_is_rejected(client):
    assert client.post("/pitt", json={"p": "2"}).status_code == 422


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"
    assert body["details"]["res_cap"] > 0
