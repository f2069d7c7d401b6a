import pytest
from fastapi.testclient import TestClient

from deltamod.families import clique_matrix, u24_matrix
from deltamod.matrix import emit_matrix
from deltamod.service import create_app

U24 = emit_matrix(u24_matrix())


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app(), raise_server_exceptions=False)


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "ok"
    assert body["version"]


def test_delta(client):
    resp = client.post("/delta", json={"matrix": U24})
    assert resp.status_code == 200
    assert resp.json() == {
        "rank": 2,
        "delta": 2,
        "witness_rows": [0, 1],
        "witness_cols": [0, 3],
    }


def test_delta_with_limit(client):
    resp = client.post("/delta", json={"matrix": U24, "limit": 2})
    assert resp.status_code == 200
    assert resp.json() == {"rank": 2, "limit": 2, "within_limit": True}


def test_delta_parse_error_is_400(client):
    resp = client.post("/delta", json={"matrix": "2 2\n1 x\n0 1\n"})
    assert resp.status_code == 400
    assert "token" in resp.json()["detail"]


def test_delta_missing_field_is_422(client):
    assert client.post("/delta", json={}).status_code == 422


def test_points(client):
    resp = client.post("/points", json={"matrix": U24})
    assert resp.status_code == 200
    assert resp.json()["points"] == 4


def test_check_spike(client):
    spike = client.post(
        "/construct", json={"family": "rank3_spike"}
    ).json()["matrix"]
    resp = client.post("/check/spike", json={"matrix": spike, "tip": 0})
    assert resp.status_code == 200
    body = resp.json()
    assert body["verified"] is True
    assert body["indices"]["partner_pairs"] == [[1, 4], [2, 5], [3, 6]]


def test_check_spike_bad_tip_is_422(client):
    resp = client.post("/check/spike", json={"matrix": U24, "tip": 99})
    assert resp.status_code == 422


def test_check_spike_rejection_is_200(client):
    clique = emit_matrix(clique_matrix(3))
    resp = client.post("/check/spike", json={"matrix": clique, "tip": 0})
    assert resp.status_code == 200
    assert resp.json()["verified"] is False


def test_check_stack(client):
    summed = client.post(
        "/construct", json={"family": "direct_sum", "matrices": [U24, U24]}
    ).json()["matrix"]
    resp = client.post(
        "/check/stack",
        json={"matrix": summed, "parts": [[0, 1, 2, 3], [4, 5, 6, 7]], "m": 2},
    )
    assert resp.status_code == 200
    assert resp.json()["verified"] is True


def test_check_vconn(client):
    resp = client.post("/check/vconn", json={"matrix": U24, "s": 2})
    assert resp.status_code == 200
    assert resp.json() == {"s": 2, "connected": True}


def test_decompose(client):
    resp = client.post("/decompose", json={"vector": [2, -1, -1]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["indices"]["chosen"] == [[1, -1, 0], [1, 0, -1]]


def test_construct_family(client):
    resp = client.post("/construct", json={"family": "clique", "params": [2]})
    assert resp.status_code == 200
    assert resp.json() == {"rows": 2, "cols": 3, "matrix": "2 3\n1 0 1\n0 1 -1\n"}


def test_construct_unknown_family_is_422(client):
    resp = client.post("/construct", json={"family": "nope"})
    assert resp.status_code == 422


def test_construct_direct_sum_requires_matrices(client):
    resp = client.post("/construct", json={"family": "direct_sum"})
    assert resp.status_code == 422


def test_construct_degenerate_is_400(client):
    resp = client.post("/construct", json={"family": "spike_tight", "params": [1]})
    assert resp.status_code == 400


def test_search_rank2(client):
    resp = client.post("/search/rank2", json={"delta": 2})
    assert resp.status_code == 200
    body = resp.json()
    assert body["maximum"] == 4
    assert body["exhaustive"] is True
    assert body["witness"][0] == [1, 0]


def test_search_rank2_out_of_range_is_422(client):
    assert client.post("/search/rank2", json={"delta": 99}).status_code == 422


def test_search_exact(client):
    resp = client.post("/search/exact", json={"rank": 3, "delta": 1})
    assert resp.status_code == 200
    assert resp.json()["maximum"] == 6


def test_bounds(client):
    resp = client.get("/bounds", params={"delta": 2, "rank": 3})
    assert resp.status_code == 200
    body = resp.json()
    assert body["lpsx"] == 24
    assert body["rank2"]["consistent"] is True


def test_verify(client):
    resp = client.post("/verify", json={"prop": "prop1", "delta": 2})
    assert resp.status_code == 200
    body = resp.json()
    assert body["passed"] is True
    assert body["certificates"]


def test_verify_bad_prop_is_422(client):
    assert client.post("/verify", json={"prop": "prop9", "delta": 2}).status_code == 422


def test_verify_rank_restricted_to_prop3(client):
    resp = client.post("/verify", json={"prop": "prop1", "delta": 2, "rank": 4})
    assert resp.status_code == 422
    resp = client.post("/verify", json={"prop": "prop3", "delta": 2, "rank": 5})
    assert resp.status_code == 200
    assert resp.json()["passed"] is True
