import json

import pytest
from fastapi.testclient import TestClient

from roborun.grid import level_to_doc
from roborun.interpreter import execute, trace_to_doc
from roborun.levels import LevelStore
from roborun.parser import parse_program
from roborun.lang import program_to_doc
from roborun.service import create_app
from roborun import wire
from gen import mk_level


@pytest.fixture
def client(tmp_path):
    return TestClient(create_app(LevelStore(tmp_path / "store")))


def program_doc(text):
    return program_to_doc(parse_program(text))


def test_list_levels_fresh_install_is_the_pack(client):
    resp = client.get("/api/levels")
    assert resp.status_code == 200
    body = resp.json()
    assert [lv["id"] for lv in body][:3] == ["l01", "l02", "l03"]
    assert body[0] == {"id": "l01", "name": "First Steps", "width": 5,
                       "height": 1, "shortest": 4}


def test_get_level_document(client):
    resp = client.get("/api/levels/l01")
    assert resp.status_code == 200
    assert resp.json()["start"] == {"x": 0, "y": 0, "facing": "E"}


def test_get_unknown_level_404(client):
    assert client.get("/api/levels/nope").status_code == 404


def test_create_level(client):
    doc = level_to_doc(mk_level(4, 4, goal=(3, 3), name="Student Maze"))
    del doc["id"]
    resp = client.post("/api/levels", json=doc)
    assert resp.status_code == 201
    new_id = resp.json()["id"]
    assert client.get(f"/api/levels/{new_id}").json()["name"] == "Student Maze"
    listed = client.get("/api/levels").json()
    assert listed[-1]["id"] == new_id


def test_create_unsolvable_level_409(client, unsolvable3):
    resp = client.post("/api/levels", json=level_to_doc(unsolvable3))
    assert resp.status_code == 409
    assert resp.json()["diagnostics"][0]["code"] == "E_UNSOLVABLE"


def test_create_invalid_level_400(client):
    doc = level_to_doc(mk_level(3, 3, goal=(0, 0)))
    resp = client.post("/api/levels", json=doc)
    assert resp.status_code == 400
    assert resp.json()["diagnostics"][0]["code"] == "E_START_EQ_GOAL"


def test_parse_ok(client):
    resp = client.post("/api/parse", json={"text": "move 3"})
    assert resp.status_code == 200
    assert resp.json() == {"program": {"body": [{"t": "move", "n": 3, "id": 0}]}}


def test_parse_error_diagnostics(client):
    resp = client.post("/api/parse", json={"text": "move 0"})
    assert resp.status_code == 400
    diag = resp.json()["diagnostics"][0]
    assert diag["code"] == "E_MOVE_RANGE"
    assert diag["span"] == [5, 6]


def test_execute_with_level_id(client):
    resp = client.post("/api/execute", json={
        "level_id": "l01", "program": program_doc("move 4")})
    assert resp.status_code == 200
    body = resp.json()
    assert body["outcome"] == "goal"
    assert body["steps"] == 4


def test_execute_inline_level(client, crash3):
    resp = client.post("/api/execute", json={
        "level": level_to_doc(crash3), "program": program_doc("move 2")})
    assert resp.status_code == 200
    assert resp.json()["outcome"] == "crash"


def test_execute_unknown_level_404(client):
    resp = client.post("/api/execute", json={
        "level_id": "nope", "program": program_doc("move 1")})
    assert resp.status_code == 404


def test_execute_invalid_program_400(client):
    resp = client.post("/api/execute", json={
        "level_id": "l01",
        "program": {"body": [{"t": "move", "n": 0, "id": 0}]}})
    assert resp.status_code == 400
    assert resp.json()["diagnostics"][0]["code"] == "E_MOVE_RANGE"


def test_execute_move_oob_400(client):
    resp = client.post("/api/execute", json={
        "level_id": "l01", "program": program_doc("move 99")})
    assert resp.status_code == 400
    assert resp.json()["diagnostics"][0]["code"] == "E_MOVE_OOB"


def test_execute_respects_max_steps(client, open5):
    resp = client.post("/api/execute", json={
        "level": level_to_doc(open5),
        "program": program_doc("while not at_goal { left }"),
        "max_steps": 50})
    assert resp.json()["outcome"] == "step_limit"
    assert resp.json()["steps"] == 50


def test_execute_requires_level_ref(client):
    resp = client.post("/api/execute", json={"program": program_doc("move 1")})
    assert resp.status_code == 400


def test_malformed_json_body_400(client):
    resp = client.post("/api/execute", content=b"{nope",
                       headers={"content-type": "application/json"})
    assert resp.status_code == 400
    assert resp.json()["diagnostics"][0]["code"] == "E_JSON"


def test_score_round_trip(client):
    resp = client.post("/api/score", json={
        "level_id": "l01", "program": program_doc("repeat 4 { move 1 }"),
        "elapsed_seconds": 30})
    assert resp.status_code == 200
    body = resp.json()
    assert body["trace"]["outcome"] == "goal"
    assert body["score"] == {"completion": 500, "constructs": 100,
                             "brevity": 260, "speed": 170, "total": 1030,
                             "statements": 2, "kinds": ["repeat"]}


def test_score_crashed_program_zero(client, crash3):
    resp = client.post("/api/score", json={
        "level": level_to_doc(crash3), "program": program_doc("move 2"),
        "elapsed_seconds": 3})
    assert resp.json()["score"]["total"] == 0


def test_score_negative_time_400(client):
    resp = client.post("/api/score", json={
        "level_id": "l01", "program": program_doc("move 4"),
        "elapsed_seconds": -1})
    assert resp.status_code == 400
    assert resp.json()["diagnostics"][0]["code"] == "E_TIME"


def test_export_pseudocode(client):
    resp = client.post("/api/export", json={
        "program": program_doc("move 3"), "target": "pseudocode"})
    assert resp.status_code == 200
    assert resp.json() == {"text": "go straight for 3 squares\n"}


def test_export_touchdevelop(client):
    resp = client.post("/api/export", json={
        "program": program_doc("repeat 4 { move 2 }"), "target": "touchdevelop"})
    assert "for 0 <= i < 4 do {" in resp.json()["text"]


def test_export_unknown_target_400(client):
    resp = client.post("/api/export", json={
        "program": program_doc("move 3"), "target": "java"})
    assert resp.status_code == 400


def test_trace_bytes_match_engine_serialization(client, open5):
    program = parse_program("move 2 right move 2")
    resp = client.post("/api/execute", json={
        "level": level_to_doc(open5), "program": program_to_doc(program)})
    expected = wire.document_bytes(trace_to_doc(execute(program, open5)))
    assert resp.content == expected


def test_statelessness(client):
    body = {"level_id": "l01", "program": program_doc("move 4")}
    first = client.post("/api/execute", json=body).content
    for _ in range(3):
        assert client.post("/api/execute", json=body).content == first


def test_score_breakdown_matches_cli_bytes(client, tmp_path):
    import io

    from roborun.cli import main as cli_main
    from roborun.levels import load_pack

    level = next(lv for lv in load_pack() if lv.id == "l01")
    (tmp_path / "l.json").write_bytes(wire.document_bytes(level_to_doc(level)))
    (tmp_path / "p.rr").write_text("repeat 4 { move 1 }")
    out = io.StringIO()
    cli_main(["score", "--level", str(tmp_path / "l.json"),
              "--program", str(tmp_path / "p.rr"), "--time-seconds", "30"],
             stdout=out, stderr=io.StringIO())

    resp = client.post("/api/score", json={
        "level_id": "l01", "program": program_doc("repeat 4 { move 1 }"),
        "elapsed_seconds": 30})
    assert wire.document_text(resp.json()["score"]) == out.getvalue()


def test_ui_dir_served(tmp_path):
    ui = tmp_path / "ui"
    ui.mkdir()
    (ui / "index.html").write_text("<h1>maze</h1>")
    client = TestClient(create_app(LevelStore(tmp_path / "store"), ui_dir=ui))
    resp = client.get("/")
    assert resp.status_code == 200
    assert "maze" in resp.text
    # API still reachable alongside the static mount
    assert client.get("/api/levels").status_code == 200
