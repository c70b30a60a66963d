"""HTTP facade: contracts per endpoint, revisions, error codes, parity with the CLI."""

import numpy as np
import pytest
from fastapi.testclient import TestClient

from conftest import consistent_matrix, make_project
from fuzzyhoq import pipeline
from fuzzyhoq.dataset import bundled_paper_project
from fuzzyhoq.project import from_document, load, to_document
from fuzzyhoq.service import create_app


@pytest.fixture
def client():
    return TestClient(create_app())


@pytest.fixture
def bundled_doc():
    return to_document(bundled_paper_project())


@pytest.fixture
def consistent_doc():
    p = make_project(
        crs=[("CR1", "a"), ("CR2", "b")],
        criteria=[("C1", "x"), ("C2", "y")],
        criteria_matrix=consistent_matrix(np.array([0.6, 0.4])),
        local_matrices={
            "C1": consistent_matrix(np.array([0.5, 0.5])),
            "C2": consistent_matrix(np.array([0.25, 0.75])),
        },
        relationships=[["S"], ["M"]],
    )
    return to_document(p)


class TestProjects:
    def test_put_then_get_round_trips(self, client, bundled_doc):
        r = client.put("/v1/projects/p1", json=bundled_doc)
        assert r.status_code == 200 and r.json()["revision"] == 1
        r = client.get("/v1/projects/p1")
        assert r.status_code == 200
        assert r.json()["project"] == bundled_doc

    def test_put_is_idempotent_on_content(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        first = client.get("/v1/projects/p1").json()["project"]
        client.put("/v1/projects/p1", json=bundled_doc)
        second = client.get("/v1/projects/p1").json()["project"]
        assert first == second

    def test_put_validates_document(self, client, bundled_doc):
        doc = dict(bundled_doc)
        doc["relationships"] = doc["relationships"][:13]
        r = client.put("/v1/projects/p1", json=doc)
        assert r.status_code == 400
        body = r.json()
        assert body["code"] == "validation-error"
        assert any("relationships" in p for p in body["problems"])

    def test_unknown_project_404(self, client):
        assert client.get("/v1/projects/ghost").status_code == 404
        assert client.get("/v1/projects/ghost").json()["code"] == "unknown-project"

    def test_revision_conflict_409(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        r = client.put("/v1/projects/p1", json=bundled_doc, headers={"X-Expected-Revision": "7"})
        assert r.status_code == 409
        assert r.json()["code"] == "revision-conflict"
        r = client.put("/v1/projects/p1", json=bundled_doc, headers={"X-Expected-Revision": "1"})
        assert r.status_code == 200 and r.json()["revision"] == 2

    def test_schema_version_rejected(self, client, bundled_doc):
        doc = dict(bundled_doc)
        doc["schema_version"] = 999
        r = client.put("/v1/projects/p1", json=doc)
        assert r.status_code == 400
        assert r.json()["code"] == "schema-version-unsupported"


class TestJudgmentPatch:
    def test_patch_mirrors_reciprocal(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        r = client.patch(
            "/v1/projects/p1/judgments",
            json={"respondent": "customer-1", "matrix": "criteria", "i": 0, "j": 1, "value": 3},
        )
        assert r.status_code == 200
        matrix = r.json()["matrix"]
        assert matrix[0][1] == 3.0
        assert matrix[1][0] == 1.0 / 3.0
        stored = client.get("/v1/projects/p1").json()["project"]
        assert stored["judgments"]["criteria"]["customer-1"][0][1] == 3.0
        assert stored["judgments"]["criteria"]["customer-1"][1][0] == 1.0 / 3.0

    def test_patch_with_stale_revision_conflicts(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        body = {"respondent": "customer-1", "matrix": "criteria", "i": 0, "j": 1, "value": 2, "revision": 5}
        r = client.patch("/v1/projects/p1/judgments", json=body)
        assert r.status_code == 409

    def test_patch_rejects_bad_value(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        r = client.patch(
            "/v1/projects/p1/judgments",
            json={"respondent": "customer-1", "matrix": "criteria", "i": 0, "j": 1, "value": -3},
        )
        assert r.status_code == 400
        assert r.json()["code"] == "non-positive-judgment"


class TestCellPatch:
    def test_relationship_cell(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        r = client.patch(
            "/v1/projects/p1/cells",
            json={"grid": "relationships", "row": 0, "col": 0, "token": "W"},
        )
        assert r.status_code == 200 and r.json()["token"] == "W"
        stored = client.get("/v1/projects/p1").json()["project"]
        assert stored["relationships"][0][0] == "W"

    def test_roof_cell_mirrors(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        r = client.patch(
            "/v1/projects/p1/cells",
            json={"grid": "roof", "row": 5, "col": 2, "token": "+"},
        )
        assert r.status_code == 200
        project = from_document(client.get("/v1/projects/p1").json()["project"])
        assert project.roof_token(2, 5) == "+"
        assert project.roof_token(5, 2) == "+"

    def test_unknown_token_400(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        r = client.patch(
            "/v1/projects/p1/cells",
            json={"grid": "relationships", "row": 0, "col": 0, "token": "Q"},
        )
        assert r.status_code == 400
        assert r.json()["code"] == "unknown-linguistic-token"


class TestCompute:
    def test_ahp_on_consistent_fixture(self, client, consistent_doc):
        client.put("/v1/projects/c1", json=consistent_doc)
        r = client.post("/v1/projects/c1/compute/ahp", json={})
        assert r.status_code == 200
        body = r.json()
        assert all(m["cr"] == pytest.approx(0.0, abs=1e-9) for m in body["matrices"])
        weights = dict(zip(body["cr_codes"], body["global_weights"]))
        assert weights["CR1"] == pytest.approx(0.40, abs=1e-9)

    def test_rank_matches_engine_field_for_field(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        r = client.post("/v1/projects/p1/compute/rank", json={})
        assert r.status_code == 200
        wire_rows = r.json()["rows"]
        expected = pipeline.compute_rank(bundled_paper_project()).to_dict()["rows"]
        for wire, local in zip(wire_rows, expected):
            assert wire["code"] == local["code"]
            assert wire["rank"] == local["rank"]
            assert wire["crisp"] == local["crisp"]
            assert wire["ri"] == list(local["ri"])
            assert wire["ri_star"] == list(local["ri_star"])
            assert wire["nri_star"] == list(local["nri_star"])

    def test_sensitivity_deterministic_over_wire(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        body = {"trials": 8, "seed": 4, "cell_flip_prob": 0.4}
        first = client.post("/v1/projects/p1/compute/sensitivity", json=body)
        second = client.post("/v1/projects/p1/compute/sensitivity", json=body)
        assert first.status_code == 200
        assert first.json()["histogram"] == second.json()["histogram"]

    def test_sensitivity_validates_spec(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        r = client.post(
            "/v1/projects/p1/compute/sensitivity",
            json={"trials": 0, "seed": 1},
        )
        assert r.status_code == 400

    def test_compute_does_not_mutate_store(self, client, bundled_doc):
        client.put("/v1/projects/p1", json=bundled_doc)
        before = client.get("/v1/projects/p1").json()
        client.post("/v1/projects/p1/compute/rank", json={})
        after = client.get("/v1/projects/p1").json()
        assert before == after


class TestPersistence:
    def test_write_through_and_reload(self, tmp_path, bundled_doc):
        data_dir = str(tmp_path / "store")
        with TestClient(create_app(data_dir=data_dir)) as client:
            client.put("/v1/projects/p1", json=bundled_doc)
            client.patch(
                "/v1/projects/p1/cells",
                json={"grid": "relationships", "row": 0, "col": 0, "token": "S"},
            )
        on_disk = load(tmp_path / "store" / "p1.json")
        assert on_disk.relationships[0][0] == "S"
        with TestClient(create_app(data_dir=data_dir)) as fresh:
            r = fresh.get("/v1/projects/p1")
            assert r.status_code == 200
            assert r.json()["project"]["relationships"][0][0] == "S"
