import json
import pathlib

from aspdebug.cli import main

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def fx(name):
    return str(FIXTURES / name)


def test_check_answer_set(capsys):
    assert main(["check", fx("lucy1.lp"), fx("s1.int")]) == 0
    assert "is-answer-set" in capsys.readouterr().out


def test_explain_not_answer_set(capsys):
    code = main(["explain", fx("lucy2.lp"), fx("e1.int")])
    out = capsys.readouterr().out
    assert code == 1
    assert "r5" in out and "M=m2" in out and "P=p1" in out and "X=1" in out


def test_explain_json(capsys):
    code = main(["explain", fx("lucy2.lp"), fx("e2.int"), "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 1
    assert payload["verdict"] == "not-answer-set"
    assert payload["unsatisfied"] == []
    assert payload["unfounded_loops"][0]["literals"] == ["bid(m2,p1,1)"]


def test_missing_file_is_exit_2(capsys):
    assert main(["explain", "missing.lp", fx("e1.int")]) == 2


def test_parse_error_is_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.lp"
    bad.write_text("a :- ,.")
    assert main(["check", str(bad), fx("s1.int")]) == 2


def test_usage_error_is_exit_2(capsys):
    assert main(["explain"]) == 2


def test_solve_prints_answer_sets(capsys):
    assert main(["solve", fx("linus_fixed.lp")]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 9
    assert all(line.startswith("{") and line.endswith("}") for line in out)


def test_solve_limit(capsys):
    assert main(["solve", fx("linus_fixed.lp"), "--limit", "3"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 3


def test_ground_output_reparses(capsys):
    from aspdebug.parser import parse_program

    assert main(["ground", fx("lucy2.lp")]) == 0
    out = capsys.readouterr().out
    reparsed = parse_program(out)
    assert len(reparsed.rules) == 4 + 125 + 25


def test_reify_matches_golden(tmp_path, capsys):
    out_file = tmp_path / "facts.lp"
    assert main(["reify", fx("lucy2.lp"), fx("e1.int"), "-o", str(out_file)]) == 0
    golden = (FIXTURES / "goldens" / "delta_lucy2_e1.lp").read_bytes()
    assert out_file.read_bytes() == golden


def test_emit_meta_writes_file(tmp_path):
    out_file = tmp_path / "debug.lp"
    assert main(["emit-meta", fx("lucy1.lp"), fx("s1.int"), "-o", str(out_file)]) == 0
    text = out_file.read_text()
    assert ":- not notAnswerSet." in text
    assert "natNumber(0)." in text


def test_cross_check_without_solver_is_exit_2(capsys, monkeypatch):
    monkeypatch.delenv("ASPDEBUG_SOLVER", raising=False)
    assert main(["cross-check", fx("lucy1.lp"), fx("s1.int")]) == 2


def test_cli_json_equals_api_payload(capsys):
    # the CLI json output and the service payload share one serializer
    from aspdebug.explainer import explain, explanation_payload
    from aspdebug.parser import parse_interpretation, parse_program

    program = parse_program((FIXTURES / "patty1.lp").read_text())
    interp = parse_interpretation((FIXTURES / "e4.int").read_text())
    main(["explain", fx("patty1.lp"), fx("e4.int"), "--format", "json"])
    cli_payload = json.loads(capsys.readouterr().out)
    assert cli_payload == explanation_payload(program, explain(program, interp))
