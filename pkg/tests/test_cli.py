"""Command line behavior: exit codes, formats, determinism, golden files."""

import json
from pathlib import Path

import pytest

from punctual.cli import main

GOLDEN_DIR = Path(__file__).parent / "golden"


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_fat_point(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--ideal", "x^2, x*y, y^2")
    assert code == 0
    assert "colength: 3" in out
    row = [line for line in out.splitlines() if line.startswith("(0, 0)")][0]
    fields = row.split()
    assert fields[2:8] == ["3", "2", "3", "3", "2", "2"]  # length r e b1 b2 socle


def test_analyze_single_point(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--ideal", "x, y", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    component = payload["components"][0]
    assert component["length"] == 1 and component["b2"] == 1 and component["multiplicity"] == 1


def test_analyze_not_zero_dimensional(capsys):
    code, out, err = run_cli(capsys, "analyze", "--ideal", "x")
    assert code == 3
    assert "not zero-dimensional" in err


def test_analyze_parse_error(capsys):
    code, _, err = run_cli(capsys, "analyze", "--ideal", "x^ + y")
    assert code == 2 and "error" in err


def test_analyze_bad_field(capsys):
    code, _, err = run_cli(capsys, "analyze", "--ideal", "x, y", "--field", "Fp:10")
    assert code == 2


def test_analyze_residual_note(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--ideal", "x^3 - 2*x, y")
    assert code == 0
    assert "non-rational" in out


def test_analyze_file_input(capsys, tmp_path):
    path = tmp_path / "ideal.txt"
    path.write_text("y - x^2\nx^3\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "analyze", "--file", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["colength"] == 3
    code, _, err = run_cli(capsys, "analyze", "--file", str(tmp_path / "missing.txt"))
    assert code == 2


def test_analyze_env_var_field(capsys, monkeypatch):
    monkeypatch.setenv("PUNCTUAL_FIELD", "Fp:7")
    code, out, _ = run_cli(capsys, "analyze", "--ideal", "x^2 - 2, y", "--format", "json")
    assert code == 0
    assert json.loads(out)["field"] == "Fp:7"
    # the flag wins over the environment
    code, out, _ = run_cli(
        capsys, "analyze", "--ideal", "x^2 - 2, y", "--field", "QQ", "--format", "json"
    )
    assert json.loads(out)["field"] == "QQ"


def test_analyze_csv_columns(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--ideal", "x^2 - x, y", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == (
        "point_x,point_y,length,nilpotency,generators,b1,b2,socle,"
        "multiplicity,multiplicity_le_length,multiplicity_eq_length"
    )
    assert lines[1] == "0,0,1,1,2,2,1,1,1,true,true"
    assert lines[2] == "1,0,1,1,2,2,1,1,1,true,true"


def test_verify_command(capsys):
    code, out, _ = run_cli(capsys, "verify", "--ideal", "y - x^2, x^3")
    assert code == 0
    assert "verdict: PASS" in out
    code, out, _ = run_cli(capsys, "verify", "--ideal", "x^2 - x, y", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    degeneration = [r for r in payload["reports"] if r["check"] == "initial_degeneration"][0]
    assert "skipped" in degeneration["summary"]


def test_verify_exit_codes(capsys):
    assert run_cli(capsys, "verify", "--ideal", "x*y")[0] == 3
    assert run_cli(capsys, "verify", "--ideal", "x +")[0] == 2


def test_sweep_range(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--n", "1..12")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 12
    assert all("verdict=pass" in line for line in lines)


def test_sweep_single_n_json_census(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--n", "3..3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["results"][0]["census"] == {"1": 2, "2": 1}
    assert payload["results"][0]["argmax"] == "(2,1)"


def test_sweep_range_error(capsys):
    code, _, err = run_cli(capsys, "sweep", "--n", "0..1")
    assert code == 2 and "range" in err
    assert run_cli(capsys, "sweep", "--n", "5..2")[0] == 2
    assert run_cli(capsys, "sweep", "--n", "abc")[0] == 2


def test_census_command(capsys):
    code, out, _ = run_cli(capsys, "census", "--n", "3..4", "--format", "csv")
    assert code == 0
    assert out == "n,b2,count\n3,1,2\n3,2,1\n4,1,3\n4,2,2\n"
    code, out, _ = run_cli(capsys, "census", "--n", "5")
    assert code == 0 and "n=5" in out


def test_sample_command(capsys):
    code, out, _ = run_cli(
        capsys, "sample", "--field", "Fp:101", "--degree", "3", "--count", "40", "--seed", "42"
    )
    assert code == 0
    assert "socle identity: 40/40" in out
    assert "verdict: PASS" in out


def test_sample_rejects_rationals(capsys):
    code, _, err = run_cli(
        capsys, "sample", "--field", "QQ", "--count", "5", "--seed", "1"
    )
    assert code == 2 and "prime field" in err


def test_sample_zero_count(capsys):
    code, out, _ = run_cli(capsys, "sample", "--count", "0", "--seed", "5")
    assert code == 0
    assert "accepted: 0 of 0" in out


def test_sample_requires_seed(capsys):
    code, _, _ = run_cli(capsys, "sample", "--count", "5")
    assert code == 2


def test_repeated_runs_are_byte_identical(capsys):
    args = ("sample", "--field", "Fp:101", "--count", "30", "--seed", "42", "--format", "json")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    args = ("analyze", "--ideal", "x^2, x*y, y^2", "--format", "json")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_json_round_trips(capsys):
    for args in (
        ("analyze", "--ideal", "y, x^5"),
        ("sweep", "--n", "2..4"),
        ("sample", "--count", "10", "--seed", "3"),
    ):
        _, out, _ = run_cli(capsys, *args, "--format", "json")
        payload = json.loads(out)
        assert json.loads(json.dumps(payload, sort_keys=True)) == payload


GOLDEN_CASES = {
    "analyze_square_max_ideal.json": "x^2, x*y, y^2",
    "analyze_curvilinear.json": "y, x^5",
    "analyze_single_point.json": "x, y",
}


@pytest.mark.parametrize("name,ideal", sorted(GOLDEN_CASES.items()))
def test_golden_analyze_output(capsys, name, ideal):
    code, out, _ = run_cli(capsys, "analyze", "--ideal", ideal, "--format", "json")
    assert code == 0
    expected = (GOLDEN_DIR / name).read_text(encoding="utf-8")
    assert out == expected
