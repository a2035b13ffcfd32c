import json
import subprocess
import sys

import pytest

from wzsombor.analysis import AnalysisRecord, analyze
from wzsombor.cli import main, run_sweep


def run(*argv):
    return subprocess.run([sys.executable, "-m", "wzsombor", *argv], capture_output=True, text=True)


def test_analyze_18_json(capsys):
    assert main(["analyze", "18", "--json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["num_vertices"] == 11
    assert [(c["divisor"], c["size"], c["kind"]) for c in rec["classes"]] == [
        (2, 6, "independent"),
        (3, 2, "complete"),
        (6, 2, "complete"),
        (9, 1, "complete"),
    ]
    assert rec["oracle_match"] is True


def test_analyze_prime(capsys):
    assert main(["analyze", "7", "--json"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["trivial"] and rec["num_vertices"] == 0 and rec["spectrum"]["pairs"] == []


def test_analyze_12_both_spectra():
    rec = analyze(12, spectrum="both")
    assert rec.spectrum["source"] == "both" and rec.spectrum["match"] is True


def test_json_round_trip():
    for n in (4, 7, 12, 18, 30, 64):
        rec = analyze(n)
        assert AnalysisRecord.from_json(rec.to_json()) == rec


def test_exit_codes(capsys):
    assert run("analyze", "1", "--json").returncode == 2
    proc = run("analyze", "6000", "--method", "oracle", "--json")
    assert proc.returncode == 3
    assert json.loads(proc.stdout)["error"]["type"] == "GuardError"
    assert run("analyze", "abc").returncode == 2


def test_sweep_small():
    text = run_sweep(4, 30, timestamp=False)
    rows = [ln for ln in text.splitlines() if ln and not ln.startswith("#")][1:]
    assert len(rows) == 19
    assert all(r.split(",")[9] == "true" for r in rows)


def test_sweep_prime_only():
    text = run_sweep(7, 7, timestamp=False)
    lines = text.splitlines()
    assert lines[0].startswith("n,N,edges")
    assert lines[1:] == ["# n=7 is prime, skipped"]


def test_sweep_audit_flags():
    text = run_sweep(4, 100, audit=True, timestamp=False)
    flags = {}
    for ln in text.splitlines()[1:]:
        if ln.startswith("#"):
            continue
        cells = ln.split(",")
        flags[int(cells[0])] = int(cells[10])
    assert flags[30] > 0 and flags[12] > 0 and flags[8] > 0


def test_sweep_deterministic(tmp_path, monkeypatch):
    monkeypatch.setenv("WZSOMBOR_OUTPUT_DIR", str(tmp_path))
    assert main(["sweep", "--from", "4", "--to", "40", "--no-timestamp", "--out", "a.csv"]) == 0
    assert main(["sweep", "--from", "4", "--to", "40", "--no-timestamp", "--out", "b.csv"]) == 0
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    stamped = run_sweep(4, 10)
    assert stamped.startswith("# generated ")


def test_export_dot(tmp_path):
    out = tmp_path / "g.dot"
    assert main(["export", "18", "--kind", "dot", "--out", str(out)]) == 0
    text = out.read_text()
    assert sum(" -- " in ln for ln in text.splitlines()) == 40
    assert sum("[label=" in ln for ln in text.splitlines()) == 11
    again = tmp_path / "h.dot"
    main(["export", "18", "--kind", "dot", "--out", str(again)])
    assert again.read_bytes() == out.read_bytes()


def test_export_matrix(tmp_path):
    out = tmp_path / "m9.txt"
    assert main(["export", "9", "--kind", "matrix", "--out", str(out)]) == 0
    assert out.read_text() == "2 1\n0 1 1.4142135623730951\n"
    out4 = tmp_path / "m4.txt"
    assert main(["export", "4", "--kind", "matrix", "--out", str(out4)]) == 0
    assert out4.read_text() == "1 0\n"


def test_export_prime_is_usage_error(tmp_path):
    assert main(["export", "7", "--kind", "dot", "--out", str(tmp_path / "x")]) == 2


def test_export_io_error(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert main(["export", "9", "--kind", "dot", "--out", str(blocker / "sub" / "x.dot")]) == 2
    assert str(blocker) in capsys.readouterr().err


def test_sweep_error_rows(monkeypatch):
    from wzsombor import cli

    def boom(n, method=None, spectrum=None):
        raise RuntimeError("synthetic")

    monkeypatch.setattr(cli, "analyze", boom)
    text = run_sweep(4, 6, timestamp=False)
    assert "RuntimeError: synthetic" in text
