"""CLI: formats, exit codes, filtering, canonical ordering."""

import csv
import io
import json

import pytest

from cbsums import cli, identities

FIELDS = list(cli.RECORD_FIELDS)


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_list_counts(capsys):
    code, out, _ = run(["list", "--kind", "congruence"], capsys)
    lines = out.splitlines()
    assert code == 0 and len(lines) >= 25
    assert any(" C321 " in l for l in lines)
    assert any(" E10 " in l for l in lines)
    assert any(" VH_A2 " in l for l in lines)

    code, out, _ = run(["list", "--kind", "identity"], capsys)
    lines = out.splitlines()
    for cid in ("CD1", "CD2", "CD4a", "CD4b", "CD5", "CD6", "CD7", "I_PS03_5"):
        assert any(f" {cid} " in l for l in lines), cid

    code, out, _ = run(["list", "--kind", "series"], capsys)
    assert len(out.splitlines()) == 10

    code, out, _ = run(["list"], capsys)
    assert len(out.splitlines()) >= 25 + 16 + 10


def test_verify_c321_human(capsys):
    code, out, err = run(["verify", "--cases", "C321", "--primes", "5..50"], capsys)
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 13
    assert lines[0] == "PASS congruence C321 p=5: 16 == 16 (mod 25)"
    assert "13 reports, 0 failed" in err


def test_verify_e10_json_record(capsys):
    code, out, _ = run(
        ["verify", "--cases", "E10", "--primes", "5..5", "--format", "json-lines"],
        capsys)
    assert code == 0
    rec = json.loads(out.strip())
    assert rec == {
        "kind": "congruence", "case": "E10", "param": 5,
        "lhs": 2, "rhs": 2, "modulus_or_tolerance": 5,
        "pass": True, "micros": 0,
    }
    assert list(rec) == FIELDS


def test_json_lines_round_trip(capsys):
    code, out, _ = run(
        ["verify", "--cases", "C32*", "--primes", "5..30", "--format", "json-lines"],
        capsys)
    assert code == 0
    lines = out.splitlines()
    for line in lines:
        rec = json.loads(line)
        assert list(rec) == FIELDS
        assert json.dumps(rec) == line


def test_csv_mirrors_json(capsys):
    args = ["verify", "--cases", "E10", "--primes", "5..13"]
    code, jout, _ = run(args + ["--format", "json-lines"], capsys)
    code, cout, _ = run(args + ["--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(cout)))
    assert rows[0] == FIELDS
    jrecs = [json.loads(l) for l in jout.splitlines()]
    assert len(rows) == len(jrecs) + 1
    for row, rec in zip(rows[1:], jrecs):
        assert row == [str(rec[k]).lower() if isinstance(rec[k], bool)
                       else str(rec[k]) for k in FIELDS]


def test_identity_range_parity_filtered(capsys):
    code, out, _ = run(
        ["verify", "--cases", "CD1", "--n", "0..10", "--format", "json-lines"],
        capsys)
    assert code == 0
    ns = [json.loads(l)["param"] for l in out.splitlines()]
    assert ns == [1, 3, 5, 7, 9]


def test_mixed_kinds_sorted_by_case_then_param(capsys):
    code, out, _ = run(
        ["verify", "--cases", "CD1", "--cases", "C321",
         "--n", "1..5", "--primes", "5..11", "--format", "json-lines"],
        capsys)
    assert code == 0
    keys = [(json.loads(l)["case"], json.loads(l)["param"]) for l in out.splitlines()]
    assert keys == sorted(keys)
    assert {k[0] for k in keys} == {"CD1", "C321"}


def test_usage_errors(capsys):
    assert run(["verify", "--cases", "C321"], capsys)[0] == 2  # no range
    assert run(["verify", "--cases", "nope", "--primes", "5..7"], capsys)[0] == 2
    assert run(["verify", "--cases", "C321", "--primes", "7..5"], capsys)[0] == 2
    assert run(["verify", "--cases", "C321", "--primes", "abc"], capsys)[0] == 2
    assert run(["series", "--cases", "nope"], capsys)[0] == 2
    assert run(["series", "--cases", "E20", "--terms", "3"], capsys)[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus-command"])
    assert exc.value.code == 2


def test_exit_one_on_failure(capsys, monkeypatch):
    original = identities.check_identity

    def broken(case, n):
        out = original(case, n)
        return {"lhs": out["lhs"], "rhs": out["rhs"] + 1, "pass": False}

    monkeypatch.setattr(identities, "check_identity", broken)
    code, out, err = run(["verify", "--cases", "CD1", "--n", "1..3"], capsys)
    assert code == 1
    assert "FAIL" in out
    assert "2 failed" in err


def test_fail_fast_truncates(capsys, monkeypatch):
    def broken(case, n):
        return {"lhs": 0, "rhs": 1, "pass": False}

    monkeypatch.setattr(identities, "check_identity", broken)
    code, out, _ = run(
        ["verify", "--cases", "CD1", "--n", "1..9", "--fail-fast"], capsys)
    assert code == 1
    assert len(out.splitlines()) == 1


def test_worker_determinism_bytes(capsys):
    args = ["verify", "--cases", "*", "--primes", "5..40", "--format", "json-lines"]
    code1, out1, _ = run(args + ["--workers", "1"], capsys)
    code2, out2, _ = run(args + ["--workers", "4"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2


def test_series_json(capsys):
    code, out, _ = run(
        ["series", "--cases", "E22", "--terms", "300", "--bits", "128",
         "--format", "json-lines"], capsys)
    assert code == 0
    rec = json.loads(out.strip())
    assert list(rec) == FIELDS
    assert rec["kind"] == "series" and rec["param"] == 300
    assert rec["modulus_or_tolerance"] == 1e-6
    assert rec["pass"] is True
    assert abs(float(rec["lhs"]) - float(rec["rhs"])) < 1e-6


def test_series_pass_by_bracket_human(capsys):
    code, out, _ = run(["series", "--cases", "E20", "--terms", "100"], capsys)
    assert code == 0
    assert "bracket=ok" in out and out.startswith("PASS")


def test_series_workers_match_sequential(capsys):
    args = ["series", "--cases", "S32*", "--terms", "500", "--bits", "128",
            "--format", "json-lines"]
    _, seq, _ = run(args, capsys)
    _, par, _ = run(args + ["--workers", "4"], capsys)
    assert seq == par
