"""Command-line interface: outputs, determinism, exit codes."""
import json

import pytest

from delpezzo.cli import run


def test_curves_table(capsys):
    assert run(["curves", "--r", "3", "--format", "table"]) == 0
    out = capsys.readouterr().out
    assert out.count("\n") == 7  # header + 6 curves
    assert "family" in out


def test_curves_json(capsys):
    assert run(["curves", "--r", "4", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 10
    assert {"class", "family", "coeffs"} == set(data[0])


def test_roots_csv(capsys):
    assert run(["roots", "--r", "3", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "root,coeffs"
    assert len(lines) == 9


def test_rulings_counts(capsys):
    assert run(["rulings", "--r", "5", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert len(data) == 10
    assert all(row["fibers"] == "4" for row in data)


def test_sample_config_roundtrip(tmp_path, capsys):
    out_file = tmp_path / "cfg.json"
    assert run(["sample-config", "--r", "4", "--seed", "7", "--out", str(out_file)]) == 0
    data = json.loads(out_file.read_text())
    assert data["r"] == 4 and len(data["points"]) == 4


def test_sections_and_relations(tmp_path, capsys):
    out_file = tmp_path / "cfg.json"
    run(["sample-config", "--r", "4", "--seed", "7", "--out", str(out_file)])
    capsys.readouterr()
    assert run(["sections", "--config", str(out_file), "--format", "json"]) == 0
    sections = json.loads(capsys.readouterr().out)
    assert len(sections) == 10
    assert run(["relations", "--config", str(out_file)]) == 0
    rels = json.loads(capsys.readouterr().out)
    assert len(rels) == 5
    assert all(len(rel["terms"]) == 3 for rel in rels)


def test_pluecker_command(tmp_path, capsys):
    out_file = tmp_path / "cfg.json"
    run(["sample-config", "--r", "4", "--seed", "3", "--out", str(out_file)])
    capsys.readouterr()
    assert run(["pluecker", "--config", str(out_file)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["pass"]


def test_verify_counts_deterministic(capsys):
    assert run(["verify", "--r", "5", "--suite", "counts", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert run(["verify", "--r", "5", "--suite", "counts", "--format", "json"]) == 0
    assert capsys.readouterr().out == first
    assert "timing" not in first


def test_verify_rejects_bad_config(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"points": [[1,0,0],[0,1,0],[1,1,0],[0,0,1]]}')
    code = run(["verify", "--r", "4", "--suite", "relations", "--config", str(bad)])
    assert code == 1
    assert "degenerate" in capsys.readouterr().err


def test_missing_file_is_exit_2(capsys):
    assert run(["sections", "--config", "/no/such/file.json"]) == 2


def test_jacobian_suite_rejects_out_of_range(capsys):
    assert run(["verify", "--r", "7", "--suite", "jacobian"]) == 2


def test_thread_cap_does_not_change_output(capsys, monkeypatch):
    assert run(["verify", "--r", "4", "--suite", "relations", "--format", "json"]) == 0
    serial = capsys.readouterr().out
    monkeypatch.setenv("COX_DELPEZZO_THREADS", "4")
    assert run(["verify", "--r", "4", "--suite", "relations", "--format", "json"]) == 0
    assert capsys.readouterr().out == serial
