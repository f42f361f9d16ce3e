import json
import subprocess
import sys

import pytest

from ktcodes import claims
from ktcodes.claims import ReproduceReport
from ktcodes.cli import main, parse_range
from ktcodes.code import read_code, write_code
from ktcodes.perm import alternating_group


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_distance(capsys):
    assert run(capsys, "distance", "2 3 1", "1 2 3")[:2] == (0, "2\n")
    assert run(capsys, "distance", "6 1 3 5 2 4", "1 2 3 4 5 6")[:2] == (0, "8\n")
    status, out, _ = run(capsys, "distance", "1 2 3 4", "2 1 4 3", "--format", "json")
    assert status == 0 and json.loads(out)["distance"] == 2


def test_distance_usage_errors(capsys):
    status, _, err = run(capsys, "distance", "1 2", "1 2 3")
    assert status == 2 and "degree" in err.lower()
    assert run(capsys, "distance", "1 1 2", "1 2 3")[0] == 2
    assert run(capsys, "distance", "1 2 3")[0] == 2
    assert run(capsys, "no-such-command")[0] == 2


def test_weight_and_puncture(capsys):
    status, out, _ = run(capsys, "weight", "6 1 3 5 2 4", "--format", "json")
    assert status == 0 and json.loads(out) == {"a": "6 1 3 5 2 4", "weight": 8, "parity": "even"}
    assert run(capsys, "puncture", "6 1 3 5 2 4", "3,5,6")[:2] == (0, "2 1 3\n")
    assert run(capsys, "puncture", "6 1 3 5 2 4", "3,9")[0] == 2


def test_ball_size(capsys):
    assert run(capsys, "ball-size", "4", "2")[:2] == (0, "9\n")
    status, out, _ = run(capsys, "ball-size", "30", "5", "--format", "json")
    assert status == 0 and isinstance(json.loads(out)["ball_size"], str)
    assert run(capsys, "ball-size", "4", "-1")[0] == 2


def test_parse_range():
    assert parse_range("2-5") == [2, 3, 4, 5]
    assert parse_range("2,4") == [2, 4]
    assert parse_range("7") == [7]


def test_bounds_by_t(capsys):
    status, out, err = run(capsys, "bounds", "--n", "2-6", "--t", "2-3", "--format", "json")
    assert status == 0
    data = json.loads(out)
    row = next(r for r in data["rows"] if r["n"] == 4 and r["t"] == 2)
    assert row["d"] == 2 and row["averaging"] == "12" and row["sphere_packing"] == "24"
    assert {(c["n"], c["t"]) for c in data["cube_vs_ball"]} == {
        (n, t) for n in range(2, 7) for t in (2, 3) if t <= n
    }
    assert "skipping n=2, t=3" in err


def test_bounds_text_and_errors(capsys):
    status, out, _ = run(capsys, "bounds", "--n", "4", "--d", "1-6")
    assert status == 0 and out.splitlines()[0].split()[:3] == ["n", "d", "t"]
    assert len(out.splitlines()) == 7
    assert run(capsys, "bounds", "--n", "4")[0] == 2
    assert run(capsys, "bounds", "--n", "4", "--d", "2", "--t", "2")[0] == 2
    assert run(capsys, "bounds", "--n", "4", "--d", "20")[0] == 2
    assert run(capsys, "bounds", "--n", "x", "--d", "2")[0] == 2


def test_verify(capsys, tmp_path):
    path = tmp_path / "a4.code"
    write_code(alternating_group(4), path)
    status, out, _ = run(capsys, "verify", str(path), "--t", "2", "--format", "json")
    data = json.loads(out)
    assert status == 0 and data["balanced_for"] == [2]
    assert data["alternating_coset_witness"] == "1 2 3 4"
    status, out, _ = run(capsys, "verify", str(path))
    assert status == 0 and "t=2: balanced" in out and "t=3: not balanced" in out
    bad = tmp_path / "bad.code"
    bad.write_text("n=3\n1 2 3\n")
    assert run(capsys, "verify", str(bad))[0] == 2
    assert run(capsys, "verify", str(tmp_path / "missing.code"))[0] == 2
    assert run(capsys, "verify", str(path), "--t", "9")[0] == 2


def test_search(capsys, tmp_path):
    out_file = tmp_path / "gv.code"
    status, out, _ = run(capsys, "search", "gv", "--n", "4", "--d", "3", "--out", str(out_file), "--format", "json")
    assert status == 0 and json.loads(out)["min_distance"] >= 3
    assert len(read_code(out_file)) == json.loads(out)["size"]
    status, out, _ = run(capsys, "search", "max-code", "--n", "4", "--d", "3", "--format", "json")
    data = json.loads(out)
    assert status == 0 and data["status"] == "exact" and data["size"] == 5
    status, out, _ = run(capsys, "search", "max-code", "--n", "5", "--d", "3", "--budget-nodes", "1")
    assert status == 3 and out.startswith("status=budget_exhausted")
    assert run(capsys, "search", "max-code", "--n", "9", "--d", "3")[0] == 2


def test_classify(capsys, tmp_path):
    status, out, _ = run(capsys, "classify", "--n", "4", "--out-dir", str(tmp_path), "--format", "json")
    data = json.loads(out)
    assert status == 0 and data["count"] == 2
    assert sorted(p.name for p in tmp_path.iterdir()) == ["two_balanced_n4_0.code", "two_balanced_n4_1.code"]
    assert run(capsys, "classify", "--n", "4", "--budget-nodes", "2")[0] == 3
    assert run(capsys, "classify", "--n", "5")[0] == 2


def test_refute(capsys):
    status, out, _ = run(capsys, "refute", "--n", "5", "--t", "3", "--format", "json")
    data = json.loads(out)
    assert status == 0 and data["status"] == "exact" and data["certificate"]
    assert run(capsys, "refute", "--n", "4", "--t", "2")[0] == 2


def test_reproduce_selected(capsys):
    status, out, err = run(capsys, "reproduce", "puncture-example", "claim2", "--format", "json")
    assert status == 0
    report = ReproduceReport.from_dict(json.loads(out))
    assert [r.id for r in report.results] == ["puncture-example", "claim2"]
    assert all(r.status == "pass" for r in report.results)
    assert "puncture-example: pass" in err


def test_reproduce_list_and_unknown(capsys):
    status, out, _ = run(capsys, "reproduce", "--list")
    assert status == 0 and len(out.splitlines()) == len(claims.CLAIMS)
    assert run(capsys, "reproduce", "no-such-claim")[0] == 2


def test_reproduce_reports_failure(capsys, monkeypatch):
    def broken(budget, rng):
        raise AssertionError("deliberately broken")

    failing = claims.Claim("puncture-example", "broken", broken)
    monkeypatch.setitem(claims.CLAIMS, "puncture-example", failing)
    status, out, _ = run(capsys, "reproduce", "puncture-example")
    assert status == 1 and "FAIL" in out


def test_reproduce_json_is_deterministic(capsys):
    outs = [run(capsys, "reproduce", "lemma-emo", "gv-constructive", "--format", "json")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ktcodes", "distance", "2 3 1", "1 2 3"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "2\n"


@pytest.mark.parametrize("flag", ["--strict-determinism", "--no-strict-determinism"])
def test_strict_determinism_flag_accepted(capsys, flag):
    assert run(capsys, "distance", "2 1", "1 2", flag)[:2] == (0, "1\n")
