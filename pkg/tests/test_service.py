import pathlib
import threading

import pytest
from fastapi.testclient import TestClient

from aspdebug.service import create_app

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


@pytest.fixture()
def client(tmp_path):
    app = create_app(state_dir=str(tmp_path / "state"))
    with TestClient(app) as c:
        yield c


def make_session(client, program_file):
    text = (FIXTURES / program_file).read_text()
    resp = client.post("/sessions", json={"program_text": text})
    assert resp.status_code == 200
    return resp.json()


def put_literals(client, session_id, literals):
    return client.put(f"/sessions/{session_id}/interpretation", json={"literals": literals})


E1 = ["pc(m1)", "pc(m2)", "paper(p1)", "bid(m1,p1,2)", "some_bid(m1,p1)", "bid(m2,p1,1)"]
E2 = E1 + ["some_bid(m2,p1)"]


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_session_lifecycle_lucy(client):
    created = make_session(client, "lucy2.lp")
    assert len(created["rules"]) == 6
    assert created["rules"][0]["index"] == 1

    resp = put_literals(client, created["id"], E2)
    assert resp.status_code == 200

    explained = client.post(f"/sessions/{created['id']}/explain")
    assert explained.status_code == 200
    payload = explained.json()
    assert payload["verdict"] == "not-answer-set"
    assert payload["unsatisfied"] == []
    assert [lp["literals"] for lp in payload["unfounded_loops"]] == [["bid(m2,p1,1)"]]


def test_explanation_payload_matches_cli_json(client):
    created = make_session(client, "lucy2.lp")
    put_literals(client, created["id"], E1)
    api_payload = client.post(f"/sessions/{created['id']}/explain").json()

    from aspdebug.explainer import explain, explanation_payload
    from aspdebug.parser import parse_interpretation, parse_program

    program = parse_program((FIXTURES / "lucy2.lp").read_text())
    interp = parse_interpretation("{" + ",".join(E1) + "}")
    assert api_payload == explanation_payload(program, explain(program, interp))


def test_parse_error_payload(client):
    resp = client.post("/sessions", json={"program_text": "a :- ,."})
    assert resp.status_code == 400
    err = resp.json()["error"]
    assert err["kind"] == "syntax" and err["line"] == 1


def test_inconsistent_interpretation_rejected(client):
    created = make_session(client, "lucy2.lp")
    resp = put_literals(client, created["id"], ["a", "-a"])
    assert resp.status_code == 400
    assert resp.json()["error"]["kind"] == "inconsistent-interpretation"


def test_unknown_session_404(client):
    assert client.post("/sessions/nope/explain").status_code == 404
    assert client.get("/sessions/nope/answer-sets").status_code == 404


def test_explain_requires_interpretation(client):
    created = make_session(client, "lucy2.lp")
    resp = client.post(f"/sessions/{created['id']}/explain")
    assert resp.status_code == 400


def test_answer_sets_endpoint_linus_fixed(client):
    created = make_session(client, "linus_fixed.lp")
    resp = client.get(f"/sessions/{created['id']}/answer-sets", params={"limit": 20})
    assert resp.status_code == 200
    sets = resp.json()["answer_sets"]
    assert len(sets) == 9
    assert all(isinstance(s, list) for s in sets)


def test_staleness_flag(client):
    created = make_session(client, "lucy2.lp")
    put_literals(client, created["id"], E1)
    assert client.get(f"/sessions/{created['id']}").json()["stale"] is True
    client.post(f"/sessions/{created['id']}/explain")
    assert client.get(f"/sessions/{created['id']}").json()["stale"] is False
    put_literals(client, created["id"], E2)
    assert client.get(f"/sessions/{created['id']}").json()["stale"] is True


def test_sessions_are_isolated(client):
    a = make_session(client, "lucy2.lp")
    b = make_session(client, "patty1.lp")
    put_literals(client, a["id"], E1)
    put_literals(client, b["id"], ["pc(m1)"])

    def hammer(session_id, literals, results, key):
        for _ in range(5):
            put_literals(client, session_id, literals)
            results[key] = client.get(f"/sessions/{session_id}").json()["literals"]

    results = {}
    t1 = threading.Thread(target=hammer, args=(a["id"], E2, results, "a"))
    t2 = threading.Thread(target=hammer, args=(b["id"], ["pc(m1)", "paper(p1)"], results, "b"))
    t1.start(), t2.start(), t1.join(), t2.join()
    assert sorted(results["a"]) == sorted(E2)
    assert sorted(results["b"]) == ["paper(p1)", "pc(m1)"]


def test_save_and_load_interpretation(client):
    created = make_session(client, "lucy2.lp")
    put_literals(client, created["id"], E1)
    resp = client.post(
        f"/sessions/{created['id']}/interpretation/save", json={"name": "e1"}
    )
    assert resp.status_code == 200
    assert client.get("/interpretations").json()["names"] == ["e1"]

    other = make_session(client, "lucy2.lp")
    resp = client.post(f"/sessions/{other['id']}/interpretation/load", json={"name": "e1"})
    assert resp.status_code == 200
    assert sorted(resp.json()["literals"]) == sorted(E1)


def test_root_serves_page(client):
    resp = client.get("/")
    assert resp.status_code == 200
    assert "debug-asp" in resp.text
