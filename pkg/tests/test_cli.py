import json

import pytest

from d21link.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariant_text_output(capsys):
    code, out, err = run_cli(capsys, "invariant", "--braid", "1:")
    assert code == 0
    assert out == "2\n"
    assert err == ""


def test_invariant_json_schema(capsys):
    code, out, _ = run_cli(capsys, "invariant", "--braid", "2: 1 1 1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "-2*q^-3"
    assert payload["stats"] == {"slices": 7, "peak_strands": 4,
                                "peak_dimension": 1296}


def test_invariant_from_sliced_file(tmp_path, capsys):
    path = tmp_path / "kink.txt"
    path.write_text("cup 1\ncup 2\npos 1\ncap 2\ncap 1\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "invariant", "--sliced", str(path))
    assert code == 0
    assert out == "-2*q^-1\n"


def test_dubrovnik_outputs(capsys):
    code, out, _ = run_cli(capsys, "dubrovnik", "--braid", "1:", "--specialize")
    assert code == 0
    assert out == "1\n"
    code, out, _ = run_cli(capsys, "dubrovnik", "--braid", "2: 1 1")
    assert code == 0
    assert out == "-a^-1*z^-1 - a^-1*z + 1 + a*z^-1 + a*z\n"


def test_braiding_csv_shapes(capsys):
    code, out, _ = run_cli(capsys, "braiding", "--format", "csv")
    assert code == 0
    rows = out.strip().splitlines()
    assert len(rows) == 36
    assert all(len(row.split(",")) == 36 for row in rows)
    code, out, _ = run_cli(capsys, "braiding", "--format", "csv", "--split")
    rows = out.strip().splitlines()
    assert len(rows) == 36  # 20 + 16
    assert len(rows[0].split(",")) == 20
    assert len(rows[-1].split(",")) == 16


def test_braiding_json_anchors(capsys):
    code, out, _ = run_cli(capsys, "braiding", "--format", "json", "--split")
    assert code == 0
    payload = json.loads(out)
    assert payload["c0_basis"][0] == "v1(x)v1"
    assert payload["c0"][0][0] == "q"
    idx = payload["c1_basis"].index("v3(x)v1")
    assert payload["c1"][idx][idx] == "-q^-1 + q"


def test_output_determinism(capsys):
    runs = set()
    for _ in range(2):
        _, out, _ = run_cli(capsys, "braiding", "--format", "json", "--split")
        runs.add(out)
    assert len(runs) == 1
    runs = set()
    for _ in range(2):
        _, out, _ = run_cli(capsys, "invariant", "--braid", "3: 1 -2 1 -2")
        runs.add(out)
    assert len(runs) == 1


def test_verify_relations_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "relations")
    assert code == 0
    assert "suite relations:" in out
    assert out.strip().endswith("overall: PASS")


def test_verify_json_mode(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "relations", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["suites"][0]["suite"] == "relations"
    assert all(check["passed"] for check in payload["suites"][0]["checks"])


def test_verbose_verify_streams_check_lines(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "relations", "-v")
    assert code == 0
    assert "[PASS] relations:raise-lower-pair:1,1" in out


def test_parse_errors_exit_2(capsys):
    code, _, err = run_cli(capsys, "invariant", "--braid", "2: 7")
    assert code == 2
    assert "error:" in err
    code, _, err = run_cli(capsys, "invariant", "--sliced", "/nonexistent/file")
    assert code == 2


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("D21LINK_SKEIN_BUDGET", "2")
    code, _, err = run_cli(capsys, "dubrovnik", "--braid", "2: 1 1 1")
    assert code == 2
    assert "budget" in err


def test_usage_error_for_unknown_suite(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "nonsense"])
    assert "invalid choice" in capsys.readouterr().err
