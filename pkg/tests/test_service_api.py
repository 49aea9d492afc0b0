import json

import pytest
from fastapi.testclient import TestClient

from baslab import service
from baslab.app import app

client = TestClient(app)


class TestHealth:
    def test_health(self):
        r = client.get("/health")
        assert r.status_code == 200
        body = r.json()
        assert body["status"] == "ok" and "version" in body


class TestRoots:
    def test_a2(self):
        r = client.post("/v1/roots", json={"type": "A2"})
        assert r.status_code == 200
        body = r.json()
        assert body["rank"] == 2
        assert body["weyl_order"] == 6
        assert body["num_positive_coroots"] == 3
        assert body["cartan"] == [[2, -1], [-1, 2]]

    def test_bad_type_is_422(self):
        assert client.post("/v1/roots", json={"type": "Q1"}).status_code == 422


class TestPLambda:
    def test_matches_local_service(self):
        r = client.post("/v1/plambda", json={"type": "A1", "weight": "2"})
        assert r.status_code == 200
        assert r.json() == service.plambda_report("A1", "2")
        assert r.json()["expanded"] == "h1^2 - h1"

    def test_non_dominant_422(self):
        r = client.post("/v1/plambda", json={"type": "A1", "weight": "-1"})
        assert r.status_code == 422


class TestWitness:
    def test_witness(self):
        r = client.post("/v1/witness",
                        json={"type": "A1", "weight": "1", "point": "0"})
        assert r.status_code == 200
        body = r.json()
        assert body["witness_word"] == "s1"
        assert body["value_at_x"] == "-2"
        assert body["witness_matrix"] == [[-1]]


class TestOracle:
    def test_string_factors(self):
        r = client.post("/v1/oracle", json={"factors": "2,1"})
        assert r.status_code == 200
        body = r.json()
        assert body["pass"] is True
        assert body["lambda"] == [2, 1]

    def test_list_factors(self):
        r = client.post("/v1/oracle", json={"factors": [1]})
        assert r.status_code == 200
        assert r.json()["scalar"] == "-1"

    def test_bad_factors_422(self):
        assert client.post("/v1/oracle", json={"factors": "x"}).status_code == 422


class TestGlue:
    def test_demo(self):
        r = client.post("/v1/glue/demo", json={"example": "tildeA"})
        assert r.status_code == 200
        body = r.json()
        assert body["dim"] == 5
        assert body["global_dimension"] == "2"
        assert body["corners"]["e_2"]["dim"] == 2
        assert body["corners"]["e_2"]["square_zero_generator"] is True

    def test_homdim(self):
        r = client.post("/v1/glue/homdim", json={"example": "hatA"})
        assert r.status_code == 200
        body = r.json()
        assert body["status"] == "infinite(periodic)"
        assert body["value"] is None

    def test_homdim_inline_algebra(self):
        spec = {
            "vertices": ["1", "2"],
            "arrows": [
                {"name": "x12", "src": "2", "tgt": "1"},
                {"name": "x21", "src": "1", "tgt": "2"},
            ],
            "relations": [[{"coeff": "1", "path": ["x21", "x12"]}]],
            "idempotents": "vertices",
        }
        r = client.post("/v1/glue/homdim", json={"algebra": spec})
        assert r.status_code == 200
        assert r.json()["status"] == "2"

    def test_axioms_and_negative_control(self):
        r = client.post("/v1/glue/axioms", json={"example": "hatA"})
        assert r.status_code == 200
        assert r.json()["passed"] is True
        r = client.post("/v1/glue/axioms",
                        json={"example": "hatA", "corrupt_mu": True})
        assert r.status_code == 200
        assert r.json()["passed"] is False

    def test_hom_equality(self):
        r = client.post("/v1/glue/homEquality", json={"example": "hatA"})
        assert r.status_code == 200
        body = r.json()
        assert body["passed"] is True
        assert len(body["pairs"]) == 36

    def test_unknown_example_422(self):
        r = client.post("/v1/glue/demo", json={"example": "nope"})
        assert r.status_code == 422


class TestSelftest:
    def test_subset(self):
        r = client.post("/v1/selftest",
                        json={"seed": 1, "suites": ["glue-corner-dimensions"]})
        assert r.status_code == 200
        body = r.json()
        assert body["passed"] is True
        assert list(body["results"]) == ["glue-corner-dimensions"]

    def test_empty_suites_is_usage_error(self):
        r = client.post("/v1/selftest", json={"seed": 0, "suites": []})
        assert r.status_code == 422

    def test_unknown_suite_is_usage_error(self):
        r = client.post("/v1/selftest", json={"suites": ["nope"]})
        assert r.status_code == 422

    def test_deterministic(self):
        payload = {"seed": 4, "suites": ["chamber-reduction"]}
        r1 = client.post("/v1/selftest", json=payload)
        r2 = client.post("/v1/selftest", json=payload)
        assert r1.json() == r2.json()


class TestSchemaStability:
    def test_plambda_keys(self):
        body = client.post("/v1/plambda",
                           json={"type": "A2", "weight": "1,0"}).json()
        assert set(body) == {"type", "weight", "degree", "degree_check",
                             "divisibility_check", "factors", "expanded",
                             "expanded_terms"}

    def test_rationals_as_strings(self):
        body = client.post("/v1/witness",
                           json={"type": "A1", "weight": "1", "point": "1/2"}).json()
        assert isinstance(body["value_at_x"], str)
        assert all(isinstance(c, str) for c in body["point"])
