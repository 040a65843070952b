import json
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from argmeter import fixtures as fx
from argmeter.formats import render_instantiated, render_tgf
from argmeter.service import SessionManager, create_app

QUERY_DEMO_TGF = render_tgf(fx.query_demo_graph())
TWO_QUERY_TGF = render_tgf(fx.two_query_demo_graph())


@pytest.fixture()
def client():
    return TestClient(create_app())


def create_session(client, document=QUERY_DEMO_TGF, fmt="tgf", measures=("in", "cc")):
    response = client.post(
        "/sessions", json={"document": document, "format": fmt, "measures": list(measures)}
    )
    return response


def test_create_session_initial_state(client):
    response = create_session(client)
    assert response.status_code == 201
    body = response.json()
    assert set(body["labelling"].values()) == {"undec"}
    assert body["measures"]["in"] == {"num": 6, "den": 1, "approx": 6.0}
    assert body["measures"]["cc"] == {"num": 2, "den": 1, "approx": 2.0}
    assert body["history"] == []
    assert len(body["trajectory"]) == 1
    assert body["graph"]["nodes"] == ["A1", "A2", "A3", "A4", "A5"]


def test_create_session_rejects_empty_graph(client):
    response = create_session(client, document="#\n")
    assert response.status_code == 400
    assert "nothing to resolve" in response.json()["detail"]


def test_create_session_rejects_bad_document(client):
    response = create_session(client, document="1\n#\n1 2\n")
    assert response.status_code == 400
    assert "line 3" in response.json()["detail"]


def test_create_session_rejects_unknown_measure(client):
    response = create_session(client, measures=("zzz",))
    assert response.status_code == 400


def test_get_session_and_404(client):
    session_id = create_session(client).json()["id"]
    assert client.get(f"/sessions/{session_id}").status_code == 200
    assert client.get("/sessions/nope").status_code == 404


def test_recommendation(client):
    session_id = create_session(client).json()["id"]
    response = client.get(f"/sessions/{session_id}/recommendation", params={"measure": "in"})
    assert response.status_code == 200
    body = response.json()
    assert body["argument"] == "A3"
    assert body["value_if_in"] == {"num": 0, "den": 1, "approx": 0.0}
    assert body["value_if_out"] == {"num": 2, "den": 1, "approx": 2.0}
    assert body["expected_reduction"] == {"num": 5, "den": 1, "approx": 5.0}
    assert len(body["candidates"]) == 5


def test_recommendation_default_measure(client):
    session_id = create_session(client).json()["id"]
    assert client.get(f"/sessions/{session_id}/recommendation").json()["measure"] == "in"


def test_two_query_script(client):
    session_id = create_session(client, document=TWO_QUERY_TGF, measures=("in",)).json()["id"]
    first = client.post(
        f"/sessions/{session_id}/answers", json={"argument": "A1", "answer": "out"}
    )
    assert first.status_code == 200
    second = client.post(
        f"/sessions/{session_id}/answers", json={"argument": "A4", "answer": "in"}
    )
    body = second.json()
    assert body["labelling"] == {
        "A1": "out", "A2": "undec", "A3": "out", "A4": "in", "A5": "out",
    }
    assert [h["query"] for h in body["history"]] == ["A1", "A4"]
    assert len(body["trajectory"]) == 3


def test_answer_errors(client):
    session_id = create_session(client).json()["id"]
    client.post(f"/sessions/{session_id}/answers", json={"argument": "A3", "answer": "out"})
    conflict = client.post(
        f"/sessions/{session_id}/answers", json={"argument": "A3", "answer": "in"}
    )
    assert conflict.status_code == 409
    unknown = client.post(
        f"/sessions/{session_id}/answers", json={"argument": "A9", "answer": "in"}
    )
    assert unknown.status_code == 400
    bad_body = client.post(
        f"/sessions/{session_id}/answers", json={"argument": "A1", "answer": "maybe"}
    )
    assert bad_body.status_code == 422  # schema-level rejection


def test_fully_committed_recommendation_is_409(client):
    session_id = create_session(client, document=render_tgf(fx.mutual_pair())).json()["id"]
    client.post(f"/sessions/{session_id}/answers", json={"argument": "A1", "answer": "in"})
    response = client.get(f"/sessions/{session_id}/recommendation")
    assert response.status_code == 409


def test_undo_cycle(client):
    session_id = create_session(client).json()["id"]
    empty = client.post(f"/sessions/{session_id}/undo")
    assert empty.status_code == 409
    client.post(f"/sessions/{session_id}/answers", json={"argument": "A3", "answer": "in"})
    undone = client.post(f"/sessions/{session_id}/undo")
    assert undone.status_code == 200
    assert set(undone.json()["labelling"].values()) == {"undec"}


def test_answer_reduces_reported_measures(client):
    session_id = create_session(client).json()["id"]
    body = client.post(
        f"/sessions/{session_id}/answers", json={"argument": "A3", "answer": "in"}
    ).json()
    assert body["reduced_graph"] == {"nodes": ["A3"], "arcs": []}
    assert body["measures"]["in"]["num"] == 0
    trajectory = body["trajectory"]
    assert trajectory[0]["measures"]["in"]["num"] == 6
    assert trajectory[1]["measures"]["in"]["num"] == 0


def test_instantiated_session(client):
    document = render_instantiated(fx.graded_undercut_fan())
    response = create_session(client, document=document, fmt="inst", measures=("cu", "in"))
    assert response.status_code == 201
    body = response.json()
    assert body["measures"]["cu"] == {"num": 7, "den": 4, "approx": 1.75}
    session_id = body["id"]
    answered = client.post(
        f"/sessions/{session_id}/answers", json={"argument": "A4", "answer": "out"}
    ).json()
    assert answered["measures"]["cu"] == {"num": 1, "den": 1, "approx": 1.0}


def test_instantiated_measure_rejected_for_abstract_session(client):
    response = create_session(client, measures=("cu",))
    assert response.status_code == 400


def test_replay_equivalence(client):
    session_id = create_session(client).json()["id"]
    client.post(f"/sessions/{session_id}/answers", json={"argument": "A1", "answer": "out"})
    client.post(f"/sessions/{session_id}/answers", json={"argument": "A2", "answer": "in"})
    body = client.get(f"/sessions/{session_id}").json()
    manager = SessionManager()
    twin = manager.create(QUERY_DEMO_TGF, "tgf", ["in", "cc"])
    manager.answer(twin.id, "A1", "out")
    manager.answer(twin.id, "A2", "in")
    assert twin.to_json()["labelling"] == body["labelling"]
    assert twin.to_json()["measures"] == body["measures"]


def _race(manager, session_id, answer):
    try:
        manager.answer(session_id, "A3", answer)
        return "ok"
    except Exception as exc:
        return type(exc).__name__


def test_racing_answers_have_one_winner():
    manager = SessionManager()
    for _ in range(20):
        fresh = manager.create(QUERY_DEMO_TGF, "tgf", ["in"])
        with ThreadPoolExecutor(max_workers=2) as pool:
            results = list(pool.map(lambda a: _race(manager, fresh.id, a), ["in", "out"]))
        assert results.count("ok") == 1, results


def test_snapshot_persistence(tmp_path):
    manager = SessionManager(snapshot_dir=str(tmp_path))
    session = manager.create(QUERY_DEMO_TGF, "tgf", ["in"])
    manager.answer(session.id, "A3", "in")
    path = tmp_path / f"{session.id}.json"
    assert path.exists()
    payload = json.loads(path.read_text())
    assert payload["labelling"]["A3"] == "in"
    assert payload["version"] == 1


def test_version_counter_increments(client):
    session_id = create_session(client).json()["id"]
    v0 = client.get(f"/sessions/{session_id}").json()["version"]
    client.post(f"/sessions/{session_id}/answers", json={"argument": "A1", "answer": "out"})
    v1 = client.get(f"/sessions/{session_id}").json()["version"]
    assert (v0, v1) == (0, 1)


def test_cors_header_present_when_configured():
    app = create_app(allow_origin="http://localhost:5173")
    client = TestClient(app)
    response = client.post(
        "/sessions",
        json={"document": QUERY_DEMO_TGF, "format": "tgf", "measures": ["in"]},
        headers={"Origin": "http://localhost:5173"},
    )
    assert response.headers.get("access-control-allow-origin") == "http://localhost:5173"


def test_ui_mount(tmp_path):
    (tmp_path / "index.html").write_text("<html><body>ui</body></html>")
    app = create_app(ui_dir=str(tmp_path))
    client = TestClient(app)
    response = client.get("/ui/")
    assert response.status_code == 200
    assert "ui" in response.text
