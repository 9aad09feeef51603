import json
import subprocess
import sys

import pytest

from auditcount.cli import EXIT_INCOMPLETE, EXIT_INPUT, EXIT_OK, EXIT_REJECTED, main
from auditcount.corpus import corpus_dir
from auditcount.oracle import SOLVER_ENV

from conftest import TESTS

GOLDEN = TESTS / "golden"


@pytest.fixture
def files(tmp_path):
    src = corpus_dir()
    f = tmp_path / "r3.cnf"
    f.write_bytes((src / "r3_n05_08.cnf").read_bytes())
    f2 = tmp_path / "f2.cnf"
    f2.write_text("p cnf 2 1\n1 2 0\n")
    return tmp_path, f, f2


def run(*argv):
    return main([str(a) for a in argv])


def test_count_then_audit_verified(files, capsys):
    d, f, _ = files
    cert = d / "c.json"
    assert run("count", "-i", f, "--alg", "af", "--cert", cert) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("estimate ") and "params c_low=" in out
    report = d / "rep.json"
    assert run("audit", "-i", f, "--cert", cert, "--out", report) == EXIT_OK
    assert capsys.readouterr().out.startswith("Verified")
    assert json.loads(report.read_text())["verdict"] == "Verified"


def test_audit_stock_certificate(files):
    d, f, _ = files
    cert = d / "s.json"
    assert run("count", "-i", f, "--alg", "stock", "--cert", cert) == EXIT_OK
    assert run("audit", "-i", f, "--cert", cert) == EXIT_OK


def test_audit_tampered_and_mismatched(files, capsys):
    d, f, _ = files
    cert = d / "c.json"
    run("count", "-i", f, "--cert", cert)
    data = json.loads(cert.read_text())
    data["params"]["c_high"] += 9
    bad = d / "bad.json"
    bad.write_text(json.dumps(data))
    capsys.readouterr()
    assert run("audit", "-i", f, "--cert", bad) == EXIT_REJECTED
    assert capsys.readouterr().out.startswith("Rejected")

    other = d / "other.cnf"
    other.write_text(f.read_text().replace("p cnf 5", "p cnf 6"))
    assert run("audit", "-i", other, "--cert", cert) == EXIT_REJECTED
    assert "digest mismatch" in capsys.readouterr().out

    cut = d / "cut.json"
    cut.write_bytes(cert.read_bytes()[:50])
    assert run("audit", "-i", f, "--cert", cut) == EXIT_REJECTED
    assert "malformed" in capsys.readouterr().out


def test_missing_files_and_usage(files, capsys):
    d, f, _ = files
    assert run("count", "-i", d / "nope.cnf") == EXIT_INPUT
    assert run("audit", "-i", f, "--cert", d / "nope.json") == EXIT_INPUT
    assert run("audit", "-i", f) == EXIT_INPUT
    assert run("frobnicate") == EXIT_INPUT
    assert run() == EXIT_INPUT
    assert run("count", "-i", f, "--oracle", "magic") == EXIT_INPUT
    assert run("count", "-i", f, "--trials", "0") == EXIT_INPUT
    bad = d / "bad.cnf"
    bad.write_text("p cnf 2 1\n1 x 0\n")
    assert run("exact", "-i", bad) == EXIT_INPUT
    assert "line 2" in capsys.readouterr().err


def test_exact_counts(corpus, tmp_path, capsys):
    for e in corpus[:8]:
        assert run("exact", "-i", corpus_dir() / f"{e.name}.cnf") == EXIT_OK
        assert capsys.readouterr().out.strip() == str(e.count)


def test_exact_budget(files):
    _, f, _ = files
    assert run("exact", "-i", f, "--max-enum", "2") == EXIT_INPUT


def test_encode_golden_and_budget_row(files, capsys):
    d, _, f2 = files
    out = d / "s.qdimacs"
    assert run("encode", "-i", f2, "--family", "stock", "-m", 1, "--out", out) == EXIT_OK
    assert out.read_bytes() == (GOLDEN / "stock_F2_m1.qdimacs").read_bytes()
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["family,m,n,hash_vars,cell_vars,assign_vars,total", "stock,1,2,4,0,4,8"]


def test_encode_invalid_m(files, capsys):
    _, _, f2 = files
    assert run("encode", "-i", f2, "--family", "stock", "-m", 0) == EXIT_INPUT
    assert run("encode", "-i", f2, "--family", "holes") == EXIT_INPUT
    assert run("encode", "-i", f2, "--family", "stock-audit") == EXIT_INPUT


def test_encode_with_witness(files, capsys):
    d, f, _ = files
    cert = d / "c.json"
    run("count", "-i", f, "--cert", cert)
    capsys.readouterr()
    assert run("encode", "-i", f, "--family", "holes", "--witness", cert) == EXIT_OK
    row = capsys.readouterr().out.splitlines()[1].split(",")
    assert row[0] == "holes" and row[3] == "0"  # substituted hashes leave no hash variables


def test_bench(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    assert run("bench", "--out", out) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "algorithm,n,n_prime,exit_param,query_vars_total"
    assert any(line.startswith("af,8,24,24,48") for line in lines)
    empty = tmp_path / "empty"
    empty.mkdir()
    assert run("bench", "--corpus", empty) == EXIT_INPUT
    assert run("bench", "--corpus", tmp_path / "missing") == EXIT_INPUT


def test_external_oracle_needs_path(files, monkeypatch):
    _, f, _ = files
    monkeypatch.delenv(SOLVER_ENV, raising=False)
    assert run("count", "-i", f, "--oracle", "external") == EXIT_INPUT


def test_external_oracle_timeout_is_incomplete(files):
    _, f, _ = files
    rc = run("count", "-i", f, "--oracle", "external:/bin/true", "--timeout-s", "0")
    assert rc == EXIT_INCOMPLETE


def test_entry_point_is_deterministic(files):
    d, f, _ = files
    outs = []
    for i in range(2):
        cert = d / f"c{i}.json"
        proc = subprocess.run([sys.executable, "-m", "auditcount", "count", "-i", str(f), "--cert", str(cert)],
                              capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
        outs.append((proc.stdout.replace(str(cert), "CERT"), cert.read_bytes()))
    assert outs[0] == outs[1]
