"""Acceptance criteria, run at full scale with zero tolerance.

Every check is exact rational arithmetic; a single failing instance fails
the criterion.  Each test prints one PASS/FAIL line (run with -s to see
them live).
"""

import json

import pytest

from jkvkit.cli import main
from jkvkit.oracles import FuzzConfig
from jkvkit.suites import run_suite


def _criterion(number, title, report, extra=""):
    status = "PASS" if report.passed else "FAIL"
    line = (
        f"criterion {number:2d} [{title}]: {status} "
        f"({report.instances} instances, {len(report.failures)} failures{extra})"
    )
    print(line)
    if report.failures:
        for f in report.failures[:3]:
            print(f"  failure at instance {f.index}: {f.clause}")
            print(f"  input: {json.dumps(f.payload, sort_keys=True)[:400]}")
    assert report.passed, line


def test_criterion_01_limit_dual_implementation():
    report = run_suite("limits", FuzzConfig(seed=42, count=10_000, box=3))
    _criterion(1, "limit dual-implementation agreement", report,
               extra=f", {report.wall_time:.0f}s")
    assert report.wall_time < 300, "must finish within five minutes"


def test_criterion_02_semisimplicity_oracle():
    report = run_suite("semisimple", FuzzConfig(seed=42, count=2_000))
    _criterion(2, "relative-interior oracle agreement", report)


def test_criterion_03_semisimple_limits_one_orbit():
    report = run_suite("theorem", FuzzConfig(seed=42, count=1_000, box=3))
    _criterion(3, "semisimple limits in one orbit", report)


def test_criterion_04_survey_jkv_corollary():
    report = run_suite("jkv-survey", FuzzConfig(seed=42, count=1_000, box=3))
    _criterion(4, "survey decompositions certify into one orbit", report)


def test_criterion_05_composition_cocharacter():
    report = run_suite("compose-mu", FuzzConfig(seed=42, count=500))
    _criterion(5, "composition relations and minimality", report)


def test_criterion_06_semisimple_limit_conjugacy():
    report = run_suite("limit-conjugacy", FuzzConfig(seed=42, count=300, max_size=4))
    _criterion(6, "matrix limits conjugate to semisimple input", report)


def test_criterion_07a_jkv_vs_classical():
    report = run_suite("jkv-gln", FuzzConfig(seed=42, count=300, max_size=4))
    _criterion(7, "jkv certificate matches classical decomposition", report)


def test_criterion_07b_jordan_chevalley_invariants():
    report = run_suite("jordan-chevalley", FuzzConfig(seed=42, count=1_000, max_size=4))
    _criterion(7, "jordan-chevalley invariants", report)


def test_criterion_08_levi_homomorphism_equivariance():
    report = run_suite("levi-homomorphism", FuzzConfig(seed=42, count=500, max_size=4))
    _criterion(8, "levi homomorphism and limit equivariance", report)


def test_criterion_09_bruhat_soundness():
    report = run_suite("bruhat", FuzzConfig(seed=42, count=1_000, max_size=4))
    _criterion(9, "bruhat factorization soundness", report)


@pytest.fixture
def cli_inputs(tmp_path):
    files = {}
    files["torus"] = tmp_path / "t.json"
    files["torus"].write_text(
        json.dumps(
            {
                "rank": 2,
                "weights": [
                    {"chi": [1, 0], "dim": 1},
                    {"chi": [-1, 0], "dim": 1},
                    {"chi": [1, 1], "dim": 2},
                ],
                "vector": [
                    {"chi": [1, 0], "coords": ["2/3"]},
                    {"chi": [-1, 0], "coords": ["-5"]},
                    {"chi": [1, 1], "coords": ["1", "7/2"]},
                ],
            }
        ),
        encoding="utf-8",
    )
    files["matrix"] = tmp_path / "m.json"
    files["matrix"].write_text(
        json.dumps({"n": 3, "matrix": [["2", "1", "0"], ["0", "2", "0"], ["0", "0", "5"]]}),
        encoding="utf-8",
    )
    files["pair"] = tmp_path / "p.json"
    files["pair"].write_text(
        json.dumps({"n": 2, "x": [["0", "1"], ["0", "0"]], "y": [["0", "3"], ["0", "0"]]}),
        encoding="utf-8",
    )
    return files


def test_criterion_10_cli_determinism(cli_inputs, capsys):
    commands = [
        ["limit", "torus", "--file", str(cli_inputs["torus"]), "--cochar", "1,1"],
        ["semisimple", "torus", "--file", str(cli_inputs["torus"])],
        ["jkv", "torus", "--file", str(cli_inputs["torus"])],
        ["survey", "torus", "--file", str(cli_inputs["torus"]), "--box", "2"],
        ["lambda-min", "torus", "--file", str(cli_inputs["torus"]), "--box", "3"],
        [
            "orbit-eq",
            "torus",
            "--file",
            str(cli_inputs["torus"]),
            "--file2",
            str(cli_inputs["torus"]),
        ],
        [
            "compose-mu",
            "torus",
            "--file",
            str(cli_inputs["torus"]),
            "--lambda0",
            "1,0",
            "--lambda",
            "0,1",
        ],
        ["semisimple", "gln", "--file", str(cli_inputs["matrix"])],
        ["jkv", "gln", "--file", str(cli_inputs["matrix"])],
        ["bruhat", "--file", str(cli_inputs["matrix"])],
        ["jordan-chevalley", "--file", str(cli_inputs["matrix"])],
        ["conjugacy", "--file", str(cli_inputs["pair"])],
        ["verify", "--suite", "theorem", "--seed", "11", "--count", "25"],
        ["verify", "--suite", "bruhat", "--seed", "11", "--count", "50"],
    ]
    failures = []
    for argv in commands:
        code1 = main(argv)
        out1 = capsys.readouterr().out
        code2 = main(argv)
        out2 = capsys.readouterr().out
        if out1 != out2 or code1 != code2:
            failures.append(argv)
    status = "PASS" if not failures else "FAIL"
    print(
        f"criterion 10 [cli byte-identical determinism]: {status} "
        f"({len(commands)} commands, {len(failures)} failures)"
    )
    assert not failures, failures
