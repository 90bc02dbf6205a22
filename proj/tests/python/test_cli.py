import json
import os
import subprocess

import pytest

CLI = os.environ.get("MNORMLAB_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="MNORMLAB_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_norm_csv():
    p = run("norm", "--f", "exp", "--m", "1", "--orders", "100,200,400", "--format", "csv")
    assert p.returncode == 0, p.stderr
    lines = p.stdout.splitlines()
    assert lines[0] == "n,raw,normalized,predicted,abs_error"
    assert len(lines) == 4
    assert abs(float(lines[1].split(",")[3]) - 1.718282) < 1e-6


def test_gamma_json_round_trip():
    p = run("gamma", "--mode", "integral", "--orders", "256", "--format", "json")
    assert p.returncode == 0, p.stderr
    doc = json.loads(p.stdout)
    row = doc["rows"][0]
    assert abs(row["matrix_route"] - row["closed_route"]) <= 1e-8 * abs(row["closed_route"])
    assert run("gamma", "--mode", "integral", "--orders", "256", "--format", "json").stdout == p.stdout


def test_farey_csv():
    p = run("farey", "--x", "5", "--f", "identity", "--format", "csv")
    assert p.returncode == 0
    row = p.stdout.splitlines()[1].split(",")
    assert row[1] == "10"
    assert float(row[2]) == 0.55


def test_hadamard_and_eigen():
    p = run("hadamard", "--k", "2,3", "--check", "oscillation")
    assert p.stdout.splitlines()[1:] == ["2,4,1,0.5,inconclusive", "3,8,3,0.75,exceeds_half"]
    p = run("eigen", "--f", "exp", "--orders", "2,16", "--tol", "1e-12")
    assert p.returncode == 0, p.stderr


def test_exit_codes():
    assert run("norm", "--orders", "200,100").returncode == 2
    assert run("norm", "--bogus").returncode == 2
    assert run("gamma", "--mode", "integral", "--orders", "4", "--tol", "1e-3").returncode == 2
    assert run().returncode == 2
    p = run("eigen", "--orders", "5000")
    assert p.returncode == 1
    assert "dense limit" in p.stderr


def test_out_file(tmp_path):
    out = tmp_path / "r.json"
    p = run("farey", "--x", "3", "--format", "json", "--out", str(out))
    assert p.returncode == 0 and p.stdout == ""
    assert json.loads(out.read_text())["rows"][0]["phi"] == 4
