import pytest
from fastapi.testclient import TestClient

from hetconv.pipeline import PipelineConfig
from hetconv.qu import QuVariant
from hetconv.service import create_app


@pytest.fixture(scope="module")
def client(corpus):
    app = create_app(corpus, PipelineConfig(qu=QuVariant.HEURISTIC_SR, history_mode="predicted"))
    with TestClient(app) as test_client:
        yield test_client


def start_session(client):
    response = client.post("/sessions")
    assert response.status_code == 200
    return response.json()["session_id"]


def test_health(client):
    payload = client.get("/health").json()
    assert payload["status"] == "ok"
    assert payload["entities"] > 0


def test_first_question_self_sufficient(client):
    session_id = start_session(client)
    response = client.post(
        f"/sessions/{session_id}/ask",
        json={"question": "Who played Jaime Lannister in GoT?"},
    )
    assert response.status_code == 200
    payload = response.json()
    assert payload["answer"] == "Nikolaj Coster-Waldau"
    assert payload["cfg"]["self_sufficient"] is True
    assert payload["cfg"]["edges"] == []
    assert payload["evidences"]
    assert payload["sr"].count("|") == 3


def test_follow_up_links_back_to_history(client):
    session_id = start_session(client)
    client.post(
        f"/sessions/{session_id}/ask",
        json={"question": "Who played Jaime Lannister in GoT?"},
    )
    payload = client.post(
        f"/sessions/{session_id}/ask", json={"question": "What about the dwarf?"}
    ).json()
    assert payload["cfg"]["self_sufficient"] is False
    nodes = {n["id"]: n for n in payload["cfg"]["nodes"]}
    for edge in payload["cfg"]["edges"]:
        assert nodes[edge["target"]]["turn"] < nodes[edge["source"]]["turn"]


def test_replay_matches_session_state(client):
    session_id = start_session(client)
    questions = ["Who played Jaime Lannister in GoT?", "What about the dwarf?"]
    answers = []
    for question in questions:
        answers.append(
            client.post(f"/sessions/{session_id}/ask", json={"question": question}).json()
        )
    replay = client.get(f"/sessions/{session_id}").json()
    assert [t["question"] for t in replay["turns"]] == questions
    assert [t["answer"] for t in replay["turns"]] == [a["answer"] for a in answers]
    assert [t["sr"] for t in replay["turns"]] == [a["sr"] for a in answers]


def test_sr_override_reruns_turn(client):
    session_id = start_session(client)
    first = client.post(
        f"/sessions/{session_id}/ask",
        json={"question": "Who played Jaime Lannister in GoT?"},
    ).json()
    override = "_ | the dwarf | who played | human"
    updated = client.post(
        f"/sessions/{session_id}/ask",
        json={"sr_override": override, "turn": 0},
    ).json()
    assert updated["sr"] == override
    assert updated["answer"] == "Peter Dinklage"
    assert updated["evidences"] != first["evidences"]
    replay = client.get(f"/sessions/{session_id}").json()
    assert len(replay["turns"]) == 1  # replaced, not appended
    assert replay["turns"][0]["sr"] == override


def test_ask_with_inline_override_appends(client):
    session_id = start_session(client)
    payload = client.post(
        f"/sessions/{session_id}/ask",
        json={
            "question": "Release date of first season?",
            "sr_override": "_ | GoT | release date first season | date",
        },
    ).json()
    assert payload["sr"] == "_ | GoT | release date first season | date"
    assert payload["answer"] == "April 17, 2011"


def test_malformed_override_is_400_with_diagnostics(client):
    session_id = start_session(client)
    response = client.post(
        f"/sessions/{session_id}/ask",
        json={"question": "q?", "sr_override": "a | b | c"},
    )
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["expected_slots"] == 4
    assert detail["received_slots"] == 3


def test_unknown_session_404(client):
    assert client.get("/sessions/nope").status_code == 404
    assert client.post("/sessions/nope/ask", json={"question": "q"}).status_code == 404
    assert client.delete("/sessions/nope").status_code == 404


def test_delete_session(client):
    session_id = start_session(client)
    assert client.delete(f"/sessions/{session_id}").status_code == 200
    assert client.get(f"/sessions/{session_id}").status_code == 404


def test_evidence_page_size_parameter(client):
    session_id = start_session(client)
    small = client.post(
        f"/sessions/{session_id}/ask",
        json={"question": "Who played Jaime Lannister in GoT?"},
        params={"evidences": 2},
    ).json()
    assert len(small["evidences"]) <= 2
    assert small["total_evidences"] >= len(small["evidences"])


def test_persistence_directory(tmp_path, corpus):
    app = create_app(
        corpus,
        PipelineConfig(qu=QuVariant.HEURISTIC_SR, history_mode="predicted"),
        persist_dir=tmp_path,
    )
    with TestClient(app) as client:
        session_id = client.post("/sessions").json()["session_id"]
        client.post(f"/sessions/{session_id}/ask", json={"question": "Who wrote Dune?"})
        stored = tmp_path / f"{session_id}.json"
        assert stored.exists()
        client.delete(f"/sessions/{session_id}")
        assert not stored.exists()
