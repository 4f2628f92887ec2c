"""Acceptance suite: one test per acceptance criterion, at its stated
tolerance and time budget.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line per
criterion.  CLI criteria drive the real command-line entry point in a
subprocess so encoding, exit codes, and report bytes are all exercised.
"""
from __future__ import annotations

import json
import subprocess
import sys
import time

from hvectors import (
    FieldSpec,
    HVector,
    Violation,
    codim5_family,
    compress_level,
    first_difference,
    first_half,
    hilbert_function,
    is_o_sequence,
    is_si_sequence,
    is_symmetric,
    is_unimodal,
    macaulay_bound,
    monomials,
    sample_scalars,
    si_violation,
    socle_degree_family,
)
from hvectors.inverse_systems import Form
from oracles import lex_segment_growth

GF = FieldSpec(32003)


def run_cli(*args: str) -> tuple[int, bytes, bytes]:
    proc = subprocess.run(
        [sys.executable, "-m", "hvectors", *args], capture_output=True
    )
    return proc.returncode, proc.stdout, proc.stderr


def report(number: int, text: str) -> None:
    print(f"[acceptance] criterion {number:2d}: PASS - {text}")


def test_criterion_01_construct_socle_degree_six() -> None:
    start = time.perf_counter()
    code, out, _ = run_cli("construct", "thm-e", "--e", "6")
    elapsed = time.perf_counter() - start
    text = out.decode()
    assert code == 0
    assert "1,3,6,10,8,7" in text
    assert "1,10,14,20,14,10,1" in text
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    report(1, f"construct thm-e --e 6 exact in {elapsed:.2f}s")


def test_criterion_02_construct_codim5_even_ten() -> None:
    start = time.perf_counter()
    code, out, _ = run_cli("construct", "thm-r", "--d", "10",
                           "--parity", "even")
    elapsed = time.perf_counter() - start
    text = out.decode()
    assert code == 0
    assert "1,3,6,10,15,21,28,36,45,55,66,67,68,56,42,30,20,12,6,2" in text
    assert ("1,5,12,22,35,51,70,92,113,122,132,"
            "122,113,92,70,51,35,22,12,5,1") in text
    assert elapsed < 1.0, f"took {elapsed:.2f}s"
    report(2, f"construct thm-r --d 10 --parity even exact in {elapsed:.2f}s")


def test_criterion_03_verify_socle_degree_six_to_ten() -> None:
    timings = []
    for e in range(6, 11):
        start = time.perf_counter()
        code, out, _ = run_cli(
            "verify", "thm-e", "--e", str(e), "--field", "32003",
            "--trials", "5", "--format", "json",
        )
        elapsed = time.perf_counter() - start
        assert code == 0
        payload = json.loads(out)
        (entry,) = payload["reports"]
        assert entry["verdict"] == "match", (e, entry)
        expected = compress_level(HVector(tuple(range(1, e + 1))), 3, e - 1)
        assert tuple(entry["target"]) == expected.entries
        assert elapsed < 10.0, f"e={e} took {elapsed:.2f}s"
        timings.append(elapsed)
    report(3, "verify thm-e e=6..10 matches the compressed targets "
              f"(max {max(timings):.2f}s per e)")


def test_criterion_04_verify_codim5_ten_both_parities() -> None:
    for parity in ("odd", "even"):
        start = time.perf_counter()
        code, out, _ = run_cli(
            "verify", "thm-r", "--d", "10", "--parity", parity,
            "--field", "32003", "--trials", "5", "--format", "json",
        )
        elapsed = time.perf_counter() - start
        assert code == 0
        payload = json.loads(out)
        (entry,) = payload["reports"]
        assert entry["verdict"] == "match", (parity, entry)
        assert entry["best"] == entry["target"]
        assert elapsed < 60.0, f"{parity} took {elapsed:.2f}s"
    # the bare command covers both parities in one run
    code, out, _ = run_cli("verify", "thm-r", "--d", "10", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    kinds = [r["kind"] for r in payload["reports"]]
    assert kinds == ["thm-r-odd", "thm-r-even"]
    assert all(r["verdict"] == "match" for r in payload["reports"])
    report(4, "verify thm-r --d 10 matches the level tables in every degree")


def test_criterion_05_family_classification_suite() -> None:
    start = time.perf_counter()
    for e in range(6, 15):
        result = socle_degree_family(e)
        g = result.gorenstein
        assert is_symmetric(g) and is_unimodal(g) and not is_si_sequence(g)
        assert g.codimension == e + 4
        assert si_violation(g) == Violation("difference-growth", 2)
        diff = first_difference(first_half(g).entries)
        assert diff[2] == 4 and diff[3] == 6
    for d in range(10, 17):
        for parity in ("odd", "even"):
            g = codim5_family(d, parity).gorenstein
            assert is_symmetric(g) and is_unimodal(g) and not is_si_sequence(g)
            assert g.codimension == 5
            diff = first_difference(g.entries)
            assert diff[d - 1] == d - 1 and diff[d] == d
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"took {elapsed:.2f}s"
    report(5, f"families e=6..14, d=10..16 classified in {elapsed:.2f}s")


def test_criterion_06_macaulay_bound_oracle_equivalence() -> None:
    start = time.perf_counter()
    for i in range(1, 6):
        for n in range(1, 101):
            assert macaulay_bound(n, i) == lex_segment_growth(n, i), (n, i)
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"took {elapsed:.2f}s"
    report(6, f"macaulay_bound equals the lex-segment oracle for n<=100, "
              f"i<=5 in {elapsed:.2f}s")


def test_criterion_07_small_socle_degrees_are_all_si() -> None:
    start = time.perf_counter()
    checked = 0
    for e in (3, 4, 5):
        for r in range(1, 7):
            if e == 3:
                candidates = [(1, r, r, 1)]
            elif e == 4:
                candidates = [(1, r, a, r, 1)
                              for a in range(1, macaulay_bound(r, 1) + 1)]
            else:
                candidates = [(1, r, b, b, r, 1)
                              for b in range(1, macaulay_bound(r, 1) + 1)]
            for entries in candidates:
                h = HVector(entries)
                if not (is_symmetric(h) and is_unimodal(h)
                        and is_o_sequence(h)):
                    continue
                checked += 1
                assert is_si_sequence(h), h
    elapsed = time.perf_counter() - start
    assert checked > 50
    assert elapsed < 10.0, f"took {elapsed:.2f}s"
    report(7, f"all {checked} symmetric unimodal O-sequences with e in "
              f"{{3,4,5}}, h_1<=6 are SI ({elapsed:.2f}s)")


def test_criterion_08_single_form_symmetry_and_compression() -> None:
    start = time.perf_counter()
    cases = [(r, e) for r in (1, 2, 3, 4) for e in range(2, 9)]
    cases += [(r, e) for r in (4, 3, 2, 1) for e in range(8, 1, -1)]
    ran = 0
    for seed, (r, e) in enumerate(cases):
        if ran == 50:
            break
        count = len(monomials(r, e))
        form = Form.from_coefficients(
            r, e, GF, sample_scalars(GF, count, seed=7000 + seed)
        )
        h = hilbert_function([form])
        assert h.entries == tuple(reversed(h.entries)), (r, e)
        assert h.entries == compress_level(None, r, e).entries, (r, e)
        ran += 1
    elapsed = time.perf_counter() - start
    assert ran == 50
    assert elapsed < 30.0, f"took {elapsed:.2f}s"
    report(8, f"{ran} random single-form inverse systems are symmetric and "
              f"compressed ({elapsed:.2f}s)")


def test_criterion_09_characteristic_sweep_socle_degree_six() -> None:
    start = time.perf_counter()
    code, out, _ = run_cli(
        "sweep", "thm-e", "--e", "6", "--chars", "0,101,1009,32003",
        "--format", "json",
    )
    elapsed = time.perf_counter() - start
    assert code == 0
    payload = json.loads(out)
    verdicts = [(r["characteristic"], r["verdict"]) for r in payload["reports"]]
    assert verdicts == [(0, "match"), (101, "match"), (1009, "match"),
                        (32003, "match")]
    assert elapsed < 60.0, f"took {elapsed:.2f}s"
    report(9, f"sweep thm-e --e 6 matches in characteristics 0, 101, 1009, "
              f"32003 ({elapsed:.2f}s)")


def test_criterion_10_reports_are_byte_identical() -> None:
    commands = [
        ("verify", "thm-e", "--e", "7", "--trials", "3", "--seed", "123",
         "--format", "json"),
        ("verify", "thm-r", "--d", "10", "--parity", "even", "--trials", "1",
         "--seed", "99", "--format", "json"),
        ("sweep", "thm-e", "--e", "6", "--chars", "101,1009", "--trials", "2",
         "--seed", "5", "--format", "json"),
    ]
    for command in commands:
        code1, out1, _ = run_cli(*command)
        code2, out2, _ = run_cli(*command)
        assert code1 == code2 == 0
        assert out1 == out2, command
        parsed = json.loads(out1)
        redumped = (json.dumps(parsed, sort_keys=True,
                               separators=(",", ":")) + "\n").encode()
        assert redumped == out1
    report(10, "verify and sweep reports are byte-identical across reruns")
