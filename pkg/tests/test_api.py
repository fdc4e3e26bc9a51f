import json

import pytest
from fastapi.testclient import TestClient

from prefseven.service.api import create_app
from prefseven.service.sessions import SessionStore

CSV = "alternative,Math,Phys,Lit,Phil\nS1,80,90,50,70\nS2,70,80,80,70\n" \
      "S3,100,60,50,70\nS4,90,90,60,60\nS5,80,80,70,70\n"

CONFIG = {
    "mode": "value",
    "engine": "lp",
    "perspectives": [
        {"name": "egalitarian", "kind": "perturbation",
         "central": ["1/4", "1/4", "1/4", "1/4"], "radius": "3/20"},
        {"name": "extreme", "kind": "perturbation",
         "central": ["2/5", "2/5", "1/10", "1/10"], "radius": "3/20"},
        {"name": "moderate", "kind": "perturbation",
         "central": ["3/10", "3/10", "1/5", "1/5"], "radius": "3/20"},
    ],
}


@pytest.fixture()
def client(tmp_path):
    app = create_app(SessionStore(root=tmp_path / "store"))
    return TestClient(app)


def _prepared(client):
    sid = client.post("/sessions").json()["id"]
    r = client.put(f"/sessions/{sid}/dataset",
                   json={"format": "csv", "content": CSV})
    assert r.status_code == 200
    r = client.put(f"/sessions/{sid}/config", json=CONFIG)
    assert r.status_code == 200
    return sid


def test_create_and_list_sessions(client):
    r = client.post("/sessions")
    assert r.status_code == 201
    sid = r.json()["id"]
    assert sid in client.get("/sessions").json()["sessions"]


def test_dataset_upload_echoes_shape(client):
    sid = client.post("/sessions").json()["id"]
    r = client.put(f"/sessions/{sid}/dataset",
                   json={"format": "csv", "content": CSV})
    body = r.json()
    assert body["alternatives"] == ["S1", "S2", "S3", "S4", "S5"]
    assert body["criteria"] == ["Math", "Phys", "Lit", "Phil"]
    echoed = client.get(f"/sessions/{sid}/dataset").json()
    assert echoed["alternatives"] == ["S1", "S2", "S3", "S4", "S5"]


def test_dataset_validation_problem(client):
    sid = client.post("/sessions").json()["id"]
    r = client.put(f"/sessions/{sid}/dataset",
                   json={"format": "csv",
                         "content": "alternative,c1\nA,banana\n"})
    assert r.status_code == 422
    assert r.headers["content-type"].startswith("application/problem+json")
    body = r.json()
    assert body["status"] == 422
    assert body["violations"]
    assert "banana" in json.dumps(body["violations"])


def test_config_echo_is_canonical(client):
    sid = client.post("/sessions").json()["id"]
    r = client.put(f"/sessions/{sid}/config",
                   json={**CONFIG, "engine": "smaa",
                         "smaa": {"samples": 1000, "seed": 1}})
    body = r.json()
    assert body["smaa"] == {"samples": 1000, "seed": 1, "threshold": "17/20"}
    assert client.get(f"/sessions/{sid}/config").json() == body


def test_config_rejected_with_violations(client):
    sid = client.post("/sessions").json()["id"]
    r = client.put(f"/sessions/{sid}/config", json={**CONFIG, "mode": "vibes"})
    assert r.status_code == 422
    assert r.json()["violations"]


def test_run_report_verify_and_pairs(client, expected):
    sid = _prepared(client)
    r = client.post(f"/sessions/{sid}/run")
    assert r.status_code == 200
    doc = r.json()
    assert doc["version"] == 1
    assert doc["seven"] == expected["seven"]["value"]
    got = client.get(f"/sessions/{sid}/report").json()
    assert got == doc
    v = client.get(f"/sessions/{sid}/report/verify").json()
    assert v == {"ok": True, "problems": []}
    pair = client.get(f"/sessions/{sid}/pairs/S2/S4").json()
    assert pair["seven"] == "sF"
    assert "narrative" in pair
    missing = client.get(f"/sessions/{sid}/pairs/S2/nope")
    assert missing.status_code == 404


def test_run_before_upload_is_conflict(client):
    sid = client.post("/sessions").json()["id"]
    r = client.post(f"/sessions/{sid}/run")
    assert r.status_code == 409
    assert r.json()["code"] == "no-dataset"
    client.put(f"/sessions/{sid}/dataset",
               json={"format": "csv", "content": CSV})
    r = client.post(f"/sessions/{sid}/run")
    assert r.status_code == 409
    assert r.json()["code"] == "no-config"


def test_report_before_run_is_conflict(client):
    sid = _prepared(client)
    r = client.get(f"/sessions/{sid}/report")
    assert r.status_code == 409
    assert r.json()["code"] == "not-run"


def test_unknown_session_and_version_404(client):
    assert client.get("/sessions/ghost/report").status_code == 404
    sid = _prepared(client)
    client.post(f"/sessions/{sid}/run")
    assert client.get(f"/sessions/{sid}/report?version=9").status_code == 404


def test_whatif_and_history(client, expected):
    sid = _prepared(client)
    client.post(f"/sessions/{sid}/run")
    r = client.post(f"/sessions/{sid}/whatif",
                    json={"scheme": {"type": "deck", "cards": [6, 5, 3, 2]}})
    assert r.status_code == 200
    doc = r.json()
    assert doc["version"] == 2
    assert doc["based_on"] == 1
    scores = [doc["scores"][a]["exact"] for a in doc["alternatives"]]
    assert scores == expected["scores"]["value"]["deck"]
    # stored config unchanged by the what-if
    assert client.get(f"/sessions/{sid}/config").json()["scheme"]["type"] == "basic"
    hist = client.get(f"/sessions/{sid}/history").json()["versions"]
    assert [h["version"] for h in hist] == [1, 2]
    assert hist[1]["based_on"] == 1


def test_infeasible_elicitation_conflict_payload(client):
    sid = client.post("/sessions").json()["id"]
    csv = "alternative,c1,c2,c3,c4\nA,40,10,10,10\nB,30,40,40,40\n" \
          "C,10,40,10,10\nD,40,30,40,40\n"
    client.put(f"/sessions/{sid}/dataset", json={"format": "csv", "content": csv})
    client.put(f"/sessions/{sid}/config", json={
        "mode": "value", "engine": "lp",
        "perspectives": [{"name": "panel", "kind": "elicited",
                          "comparisons": [["A", "B"], ["C", "D"]]}],
    })
    r = client.post(f"/sessions/{sid}/run")
    assert r.status_code == 409
    assert r.headers["content-type"].startswith("application/problem+json")
    body = r.json()
    assert body["code"] == "infeasible-elicitation"
    assert body["perspective"] == "panel"
    assert sorted(tuple(c) for c in body["conflicts"]) == \
        [("A", "B"), ("C", "D")]


def test_dataset_content_required(client):
    sid = client.post("/sessions").json()["id"]
    r = client.put(f"/sessions/{sid}/dataset", json={"format": "csv"})
    assert r.status_code == 422
