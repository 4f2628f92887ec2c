from __future__ import annotations

import json

from hvectors.cli import main

GORENSTEIN_E6 = "1,10,14,20,14,10,1"
LEVEL_E6 = "1,3,6,10,8,7"


def run_cli(capsys, *args: str) -> tuple[int, str, str]:
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_check_example(capsys) -> None:
    code, out, _ = run_cli(capsys, "check", GORENSTEIN_E6)
    assert code == 0
    assert "symmetric      ✓" in out
    assert "unimodal       ✓" in out
    assert "SI-sequence    ✗ (violation at difference step 2->3)" in out


def test_check_accepts_loose_syntax(capsys) -> None:
    code, out, _ = run_cli(capsys, "check", " (1, 3, 3, 1) ")
    assert code == 0
    assert "SI-sequence    ✓" in out


def test_check_json_roundtrip(capsys) -> None:
    code, out, _ = run_cli(capsys, "check", GORENSTEIN_E6, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["si_sequence"] is False
    assert payload["symmetric"] is True
    assert payload["violations"]["si_sequence"] == {
        "kind": "difference-growth", "index": 2,
    }
    redumped = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    assert redumped == out


def test_check_malformed_vector(capsys) -> None:
    code, _, err = run_cli(capsys, "check", "1,2,x")
    assert code == 2
    assert "error" in err
    code, _, _ = run_cli(capsys, "check", "3,2,1")
    assert code == 2


def test_construct_thm_e_example(capsys) -> None:
    code, out, _ = run_cli(capsys, "construct", "thm-e", "--e", "6")
    assert code == 0
    assert LEVEL_E6 in out
    assert GORENSTEIN_E6 in out
    assert "codimension    10" in out


def test_construct_thm_e_below_six_exits_two(capsys) -> None:
    code, _, err = run_cli(capsys, "construct", "thm-e", "--e", "5")
    assert code == 2
    assert "SI-sequence" in err


def test_construct_thm_r_csv_rows(capsys) -> None:
    code, out, _ = run_cli(
        capsys, "construct", "thm-r", "--d", "10", "--parity", "even",
        "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines == [
        "thm-r-even,10,level,1,3,6,10,15,21,28,36,45,55,66,67,68,"
        "56,42,30,20,12,6,2",
        "thm-r-even,10,gorenstein,1,5,12,22,35,51,70,92,113,122,132,"
        "122,113,92,70,51,35,22,12,5,1",
    ]


def test_construct_lift(capsys) -> None:
    code, out, _ = run_cli(capsys, "construct", "thm-e", "--e", "6", "--a", "2")
    assert code == 0
    assert "1,12,16,22,16,12,1" in out
    assert "codimension    12" in out


def test_construct_missing_parameters(capsys) -> None:
    assert run_cli(capsys, "construct", "thm-r", "--d", "10")[0] == 2
    assert run_cli(capsys, "construct", "thm-e")[0] == 2
    assert run_cli(capsys, "construct", "thm-r", "--d", "9",
                   "--parity", "odd")[0] == 2
    assert run_cli(capsys, "construct", "thm-e", "--e", "6",
                   "--parity", "odd")[0] == 2


def test_verify_thm_e_range(capsys) -> None:
    code, out, _ = run_cli(
        capsys, "verify", "thm-e", "--e", "6..7", "--trials", "1",
        "--seed", "3",
    )
    assert code == 0
    assert out.count("verdict match") == 2


def test_verify_json_is_deterministic(capsys) -> None:
    args = ("verify", "thm-e", "--e", "6", "--trials", "2", "--seed", "11",
            "--format", "json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    report = payload["reports"][0]
    assert report["verdict"] == "match"
    assert report["generator"] == "splitmix64"
    assert report["seed"] == 11
    assert report["characteristic"] == 32003
    assert report["command"].startswith("hvectors verify")
    redumped = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    assert redumped == out1


def test_verify_mismatch_exits_one(capsys) -> None:
    code, out, _ = run_cli(
        capsys, "verify", "thm-e", "--e", "6", "--field", "2",
        "--trials", "1", "--seed", "0",
    )
    assert code == 1
    assert "verdict mismatch" in out


def test_verify_validates_input(capsys) -> None:
    assert run_cli(capsys, "verify", "thm-e", "--e", "5")[0] == 2
    assert run_cli(capsys, "verify", "thm-e", "--e", "6",
                   "--field", "15")[0] == 2
    assert run_cli(capsys, "verify", "thm-e", "--e", "6",
                   "--trials", "0")[0] == 2
    assert run_cli(capsys, "verify", "thm-r", "--d", "10..9")[0] == 2
    assert run_cli(capsys, "verify", "thm-e", "--e", "oops")[0] == 2


def test_verify_inconclusive_policy_exit_zero(capsys) -> None:
    code, out, _ = run_cli(
        capsys, "verify", "thm-r", "--d", "10", "--parity", "odd",
        "--field", "101", "--trials", "1",
    )
    assert code == 0
    assert "verdict inconclusive" in out
    assert "genericity floor" in out


def test_verify_csv(capsys) -> None:
    code, out, _ = run_cli(
        capsys, "verify", "thm-e", "--e", "6", "--trials", "1",
        "--seed", "3", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("thm-e,6,target,1,3,6,10,8,7")
    assert lines[1].startswith("thm-e,6,trial0,")
    assert lines[-1].startswith("thm-e,6,best,")


def test_sweep_rejects_bad_characteristics(capsys) -> None:
    assert run_cli(capsys, "sweep", "thm-e", "--e", "6",
                   "--chars", "0,15")[0] == 2
    assert run_cli(capsys, "sweep", "thm-e", "--e", "6", "--chars", ",")[0] == 2


def test_sweep_small(capsys) -> None:
    code, out, _ = run_cli(
        capsys, "sweep", "thm-e", "--e", "6", "--chars", "101,1009",
        "--trials", "1", "--seed", "2",
    )
    assert code == 0
    assert out.count("verdict match") == 2
    assert "GF(101)" in out and "GF(1009)" in out


def test_out_writes_file(tmp_path, capsys) -> None:
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "construct", "thm-e", "--e", "6", "--format", "json",
        "--out", str(target),
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert payload["gorenstein"] == [1, 10, 14, 20, 14, 10, 1]
    assert payload["level"] == [1, 3, 6, 10, 8, 7]
    assert payload["violation_step"] == [2, 3]


def test_unknown_command_exits_two(capsys) -> None:
    assert run_cli(capsys, "frobnicate")[0] == 2
