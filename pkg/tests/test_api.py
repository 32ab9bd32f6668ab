"""HTTP surface: endpoint behavior and structured error documents."""

from __future__ import annotations

import pytest
from fastapi.testclient import TestClient

from worklens import demo
from worklens.api import create_app
from worklens.collaboration import DEFAULT_DISCLAIMER
from worklens.config import Config
from worklens.pipeline import RecordedResponseProvider
from worklens.service import Service


@pytest.fixture
def client(tmp_path) -> TestClient:
    service = Service(
        Config(data_dir=tmp_path / "data"),
        provider=RecordedResponseProvider(demo.recorded_demo_pairs()),
    )
    return TestClient(create_app(service))


@pytest.fixture
def seeded(client: TestClient) -> TestClient:
    response = client.post(
        "/ingest/subreddit",
        json={"source_name": demo.SUBREDDIT_SOURCE, "records": demo.demo_subreddit_records()},
    )
    assert response.status_code == 200
    response = client.post(
        "/ingest/app_store_review",
        json={"source_name": demo.REVIEW_SOURCE, "records": demo.demo_review_records()},
    )
    assert response.status_code == 200
    run = client.post("/pipeline/run", json={"wait": True})
    assert run.status_code == 200
    assert run.json()["status"] == "succeeded"
    return client


def category_id(client: TestClient, name: str) -> str:
    bars = client.get("/problems").json()["bars"]
    return next(bar["category_id"] for bar in bars if bar["name"] == name)


def error_doc(response) -> dict:
    doc = response.json()
    assert set(doc) == {"error"}
    assert {"code", "message"} <= set(doc["error"])
    return doc["error"]


class TestIngestEndpoints:
    def test_ingest_report(self, client):
        response = client.post(
            "/ingest/app_store_review",
            json={
                "source_name": "store:App",
                "records": [
                    {"external_id": "r1", "rating": 1, "body": "bad"},
                    {"external_id": "r2", "rating": 5, "body": "great"},
                ],
            },
        )
        body = response.json()
        assert (body["accepted"], body["filtered"], body["rejected"]) == (1, 1, 0)

    def test_unknown_kind_is_structured_error(self, client):
        response = client.post("/ingest/carrier_pigeon", json={"source_name": "x", "records": []})
        assert response.status_code == 400
        assert error_doc(response)["code"] == "invalid_source_kind"

    def test_sources_listing(self, seeded):
        rows = seeded.get("/sources").json()
        assert [(r["source_name"], r["item_count"]) for r in rows] == [
            (demo.REVIEW_SOURCE, 7),
            (demo.SUBREDDIT_SOURCE, 8),
        ]

    def test_manual_issue(self, client):
        response = client.post("/issues", json={"author_handle": "w1", "body": "pay is late"})
        assert response.json()["source_kind"] == "manual"

    def test_empty_manual_issue_rejected(self, client):
        response = client.post("/issues", json={"author_handle": "w1", "body": "  "})
        assert response.status_code == 400
        assert error_doc(response)["code"] == "empty_body"


class TestPipelineEndpoints:
    def test_empty_corpus_error(self, client):
        response = client.post("/pipeline/run", json={"wait": True})
        assert response.status_code == 400
        assert error_doc(response)["code"] == "empty_corpus"

    def test_run_status_unknown(self, client):
        response = client.get("/pipeline/runs/nope")
        assert response.status_code == 404

    def test_run_and_poll(self, seeded):
        # seeded fixture already ran synchronously; run again in background
        started = seeded.post("/pipeline/run", json={}).json()
        assert started["status"] in ("running", "succeeded")
        import time

        deadline = time.time() + 5
        while time.time() < deadline:
            status = seeded.get(f"/pipeline/runs/{started['run_id']}").json()
            if status["status"] != "running":
                break
            time.sleep(0.01)
        assert status["status"] == "succeeded"


class TestProblemEndpoints:
    def test_zoom_out_payload(self, seeded):
        view = seeded.get("/problems").json()
        assert view["total_categorized"] == 15
        assert len(view["bars"]) == 5

    def test_zoom_in_paging(self, seeded):
        cid = category_id(seeded, "Payment")
        view = seeded.get(f"/problems/{cid}", params={"page": 1, "page_size": 2}).json()
        assert len(view["posts"]) == 2
        assert view["total_posts"] == 3

    def test_unknown_category_404(self, seeded):
        response = seeded.get("/problems/missing")
        assert response.status_code == 404
        assert error_doc(response)["code"] == "not_found"

    def test_unassigned_listing(self, seeded):
        body = seeded.get("/problems/unassigned").json()
        assert body["total"] == 0

    def test_upvote_idempotent(self, seeded):
        cid = category_id(seeded, "Scam")
        first = seeded.post(f"/problems/{cid}/upvote", json={"voter_handle": "w1"}).json()
        second = seeded.post(f"/problems/{cid}/upvote", json={"voter_handle": "w1"}).json()
        assert first == second == {"upvote_count": 1}


class TestCollaborationEndpoints:
    def test_chat_roundtrip(self, seeded):
        cid = category_id(seeded, "Usability")
        posted = seeded.post(
            f"/problems/{cid}/chat", json={"author_handle": "w1", "body": "same here"}
        )
        assert posted.status_code == 200
        messages = seeded.get(f"/problems/{cid}/chat").json()["messages"]
        assert [m["body"] for m in messages] == ["same here"]

    def test_document_edit_conflict_carries_current(self, seeded):
        cid = category_id(seeded, "Payment")
        ok = seeded.put(f"/problems/{cid}/document", json={"base_version": 0, "body": "v1 text"})
        assert ok.json()["version"] == 1
        conflict = seeded.put(
            f"/problems/{cid}/document", json={"base_version": 0, "body": "stale"}
        )
        assert conflict.status_code == 409
        error = error_doc(conflict)
        assert error["code"] == "version_conflict"
        assert error["current_version"] == 1
        assert error["current_body"] == "v1 text"

    def test_annotation_endpoints(self, seeded):
        cid = category_id(seeded, "Payment")
        seeded.put(f"/problems/{cid}/document", json={"base_version": 0, "body": "0123456789"})
        ok = seeded.post(
            f"/problems/{cid}/document/annotations",
            json={"author_handle": "w1", "start": 2, "end": 5, "note": "check this"},
        )
        assert ok.status_code == 200
        bad = seeded.post(
            f"/problems/{cid}/document/annotations",
            json={"author_handle": "w1", "start": 5, "end": 50, "note": "too far"},
        )
        assert bad.status_code == 400
        assert error_doc(bad)["code"] == "anchor_out_of_range"

    def test_solution_board_flow(self, seeded):
        cid = category_id(seeded, "Scam")
        proposed = seeded.post(
            f"/problems/{cid}/solutions",
            json={"author_handle": "w1", "body": "worker-run scam registry"},
        ).json()
        board = seeded.get(f"/problems/{cid}/solutions").json()["solutions"]
        assert board[0]["id"] == proposed["id"]  # human outranks the run's AI items
        assert [s["origin"] for s in board] == ["human"] + ["ai"] * 5
        for entry in board[1:]:
            assert entry["disclaimer"] == DEFAULT_DISCLAIMER

        vote = seeded.post(
            f"/problems/{cid}/solutions/{proposed['id']}/vote", json={"voter_handle": "w2"}
        )
        assert vote.json() == {"vote_count": 1}

        final = seeded.post(
            f"/problems/{cid}/final",
            json={"solution_id": proposed["id"], "decided_by": ["w1", "w2"]},
        )
        assert final.status_code == 200
        fetched = seeded.get(f"/problems/{cid}/final").json()["final"]
        assert fetched["solution"]["id"] == proposed["id"]

        again = seeded.post(
            f"/problems/{cid}/final",
            json={"solution_id": proposed["id"], "decided_by": ["w3"]},
        )
        assert again.status_code == 409

    def test_vote_cross_category_rejected(self, seeded):
        payment = category_id(seeded, "Payment")
        scam = category_id(seeded, "Scam")
        sid = seeded.post(
            f"/problems/{payment}/solutions", json={"author_handle": "w", "body": "idea"}
        ).json()["id"]
        response = seeded.post(f"/problems/{scam}/solutions/{sid}/vote", json={"voter_handle": "w"})
        assert response.status_code == 400
        assert error_doc(response)["code"] == "cross_category_solution"

    def test_ai_solutions_endpoint(self, seeded):
        cid = category_id(seeded, "Payment")
        before = len(seeded.get(f"/problems/{cid}/solutions").json()["solutions"])
        response = seeded.post(f"/problems/{cid}/ai-solutions")
        created = response.json()["solutions"]
        assert len(created) == 5
        after = len(seeded.get(f"/problems/{cid}/solutions").json()["solutions"])
        assert after == before + 5


class TestMeasurementEndpoints:
    def test_task_timing_flow(self, client):
        start = client.post("/sessions/s1/tasks/1/start")
        assert start.status_code == 200
        stop = client.post("/sessions/s1/tasks/1/stop")
        assert stop.json()["duration_seconds"] >= 0
        again = client.post("/sessions/s1/tasks/1/stop")
        assert again.status_code == 409

    def test_stop_without_start(self, client):
        response = client.post("/sessions/s1/tasks/2/stop")
        assert response.status_code == 409
        assert error_doc(response)["code"] == "not_started"

    def test_invalid_task_index(self, client):
        response = client.post("/sessions/s1/tasks/9/start")
        assert response.status_code == 400

    def test_sus_endpoint(self, client):
        response = client.post("/sus", json={"session_id": "s1", "answers": [3] * 10})
        assert response.json() == {"session_id": "s1", "score": 50.0, "rating": "Poor"}

    def test_sus_validation(self, client):
        response = client.post("/sus", json={"session_id": "s1", "answers": [3] * 9})
        assert response.status_code == 400

    def test_malformed_json_body_is_structured(self, client):
        response = client.post("/sus", json={"session_id": "s1"})
        assert response.status_code == 400
        assert error_doc(response)["code"] == "invalid_request"
