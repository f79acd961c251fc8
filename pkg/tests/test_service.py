import pytest
from fastapi.testclient import TestClient

from thinbasis.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


class TestHealth:
    def test_health(self, client):
        resp = client.get("/v1/health")
        assert resp.status_code == 200
        assert resp.json()["status"] == "ok"


class TestConstruct:
    def test_shatrovskii_defaults(self, client):
        resp = client.post("/v1/construct", json={"h": 2, "r": [1, 2]})
        assert resp.status_code == 200
        body = resp.json()
        assert body["schema_version"] == "1"
        assert body["construction"] == "shatrovskii"
        result = body["result"]
        assert result["P"] == 1 and result["k0"] == 3 and result["k1"] == 3
        assert result["rows"][0] == {"k": 3, "s": [4, 5], "S": 20, "a": [5, 4]}

    def test_frobenius(self, client):
        resp = client.post("/v1/construct", json={"aprime": [6, 10, 15]})
        assert resp.json()["result"]["C"] == 30

    def test_invalid_params_400(self, client):
        resp = client.post("/v1/construct", json={"h": 2, "r": [2, 4]})
        assert resp.status_code == 400
        assert "relatively prime" in resp.json()["detail"]

    def test_unknown_field_422(self, client):
        resp = client.post("/v1/construct", json={"h": 2, "r": [1, 2], "bogus": 1})
        assert resp.status_code == 422


class TestDecompose:
    def test_example(self, client):
        resp = client.post("/v1/decompose", json={"h": 2, "r": [1, 2], "k1": 3, "n": 23})
        terms = resp.json()["result"]["terms"]
        assert [t["element"] for t in terms] == [15, 8]
        assert terms[0]["factor"] == [5, 3]

    def test_big_int_as_string(self, client):
        n = 10**24
        resp = client.post(
            "/v1/decompose", json={"h": 3, "r": [1, 2, 3], "k1": 4, "n": str(n)}
        )
        assert resp.status_code == 200
        total = sum(int(t["element"]) for t in resp.json()["result"]["terms"])
        assert total == n

    def test_missing_n_422(self, client):
        resp = client.post("/v1/decompose", json={"h": 2, "r": [1, 2]})
        assert resp.status_code == 422


class TestVerify:
    def test_covered(self, client):
        resp = client.post("/v1/verify", json={"h": 2, "r": [1, 2], "k1": 3, "N": 5000})
        result = resp.json()["result"]
        assert result["covered"] is True and result["first_gap"] is None
        assert result["spot_check"]["failures"] == 0

    def test_gap_reported(self, client):
        resp = client.post("/v1/verify", json={"aprime": [3, 5], "h": 1, "N": 100})
        result = resp.json()["result"]
        assert result["covered"] is False and result["first_gap"] == 8

    def test_mem_cap_507(self, client, monkeypatch):
        monkeypatch.setenv("THINBASIS_MEM_CAP_BYTES", "64")
        resp = client.post("/v1/verify", json={"h": 2, "r": [1, 2], "k1": 3, "N": 5000})
        assert resp.status_code == 507
        body = resp.json()
        assert body["required_bytes"] > 64 and body["cap_bytes"] == 64


class TestEnumerateProfileCompare:
    def test_enumerate(self, client):
        resp = client.post("/v1/enumerate", json={"h": 2, "r": [1, 2], "k1": 3, "x": 26})
        result = resp.json()["result"]
        assert result["elements"] == list(range(21)) + [24, 25]
        assert result["count"] == 22

    def test_profile(self, client):
        resp = client.post("/v1/profile", json={"g": 2, "h": 2, "x": 2**14})
        result = resp.json()["result"]
        assert result["schedule"] == [1024, 2048, 4096, 8192, 16384]
        assert len(result["rows"]) == 5
        assert all("." in row["ratio_decimal"] for row in result["rows"])

    def test_compare(self, client):
        resp = client.post(
            "/v1/compare",
            json={"h": 2, "r": [1, 2], "k1": 3, "aprime": [3, 5], "x": 2048},
        )
        body = resp.json()
        assert body["construction"] == "multi"
        kinds = [p["construction"] for p in body["result"]["parts"]]
        assert kinds == ["shatrovskii", "gadic", "frobenius"]
