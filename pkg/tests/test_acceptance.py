"""Acceptance criteria.

One test per criterion; each emits a single PASS line on success (the
pytest -v status line mirrors it).  Tolerances and ranges are pinned here
and must not drift.
"""

import time
from fractions import Fraction

from mpmath import mp, mpf

from cbsums import cli, congruences, gamma_p, identities, series
from cbsums.padic import PrimePowerCtx
from cbsums.seqs import primes_in

PRIME_HI = 199
SERIES_N = 100_000
SERIES_BITS = 256
TOL_UNWEIGHTED = 1e-6
TOL_WEIGHTED = 1e-4


def _residue(pair, p, m):
    v, u = pair
    return 0 if v is None else u * p**v % p**m


def test_criterion_1_congruence_sweep():
    t0 = time.monotonic()
    reports = congruences.verify_range(["*"], 5, PRIME_HI, workers=8)
    elapsed = time.monotonic() - t0
    failures = [r for r in reports if not r.passed]
    assert not failures, failures[:5]
    by = {(r.case, r.p): r for r in reports}
    anchors = [
        ("C321", 5, 2, 16, 16),
        ("E09", 5, 2, 0, None),
        ("E10", 5, 1, 2, 2),
        ("E23", 5, 2, 12, 12),
    ]
    for cid, p, m, lhs, rhs in anchors:
        r = by[(cid, p)]
        assert _residue(r.lhs, p, m) == lhs, cid
        if rhs is not None:
            assert _residue(r.rhs, p, m) == rhs, cid
    assert elapsed <= 60.0, elapsed
    ran = sum(1 for r in reports if not r.skipped)
    print(f"criterion 1 congruence sweep 5..{PRIME_HI}: "
          f"PASS ({ran} checks, {elapsed:.1f}s)")


def test_criterion_2_identity_sweep():
    t0 = time.monotonic()
    for cid in identities.identity_ids():
        for n in range(0, 101):
            if identities.in_domain(cid, n):
                assert identities.check_identity(cid, n)["pass"], (cid, n)
    for m in range(0, 51):
        for k in range(0, 51):
            assert identities.wz_certificate_check(m, k) == 0, (m, k)
    for m in range(0, 26):
        assert identities.wz_telescope_check(m), m
    for sid in identities.JET_IDS:
        for k in range(0, 61):
            assert identities.term_jet_check(sid, k), (sid, k)
    elapsed = time.monotonic() - t0
    assert elapsed <= 30.0, elapsed
    print(f"criterion 2 identity sweep: PASS ({elapsed:.1f}s)")


def test_criterion_3_gamma_suite():
    t0 = time.monotonic()
    ctx52 = PrimePowerCtx(5, 2)
    assert gamma_p.gamma_p(Fraction(1, 2), ctx52) == 18
    assert gamma_p.gamma_p(Fraction(1, 4), ctx52) == 21
    assert pow(gamma_p.gamma_p(Fraction(1, 4), ctx52), 4, 25) == 6
    xs = [Fraction(1, 2), Fraction(1, 4), Fraction(3, 4), Fraction(1, 3),
          Fraction(2, 3), Fraction(0), Fraction(1), Fraction(5)]
    for p in primes_in(5, PRIME_HI):
        depths = (2, 3) if p <= 50 else (2,)
        for m in depths:
            ctx = PrimePowerCtx(p, m)
            for x in xs:
                if x.denominator % p == 0:
                    continue
                assert gamma_p.check_functional_eq(x, ctx), (p, m, x)
                assert gamma_p.check_reflection(x, ctx), (p, m, x)
            assert gamma_p.check_half_square(ctx), (p, m)
            if p % 4 == 3:
                assert gamma_p.check_quarter_product(ctx), (p, m)
        assert gamma_p.check_g1_linearity(Fraction(1, 4), PrimePowerCtx(p, 2)), p
        assert gamma_p.check_cd9(p)["pass"], p
        if p % 4 == 3:
            assert gamma_p.check_cd10(p)["pass"], p
    elapsed = time.monotonic() - t0
    print(f"criterion 3 p-adic gamma suite <= {PRIME_HI}: PASS ({elapsed:.1f}s)")


def test_criterion_4_series_suite():
    t0 = time.monotonic()
    tols = {
        "E20": TOL_UNWEIGHTED, "E22": TOL_UNWEIGHTED,
        "VH_B1": TOL_UNWEIGHTED, "VH_A1": TOL_UNWEIGHTED,
        "S321_H": TOL_WEIGHTED, "S321_O": TOL_WEIGHTED,
        "S322_H2": TOL_WEIGHTED, "S322_O2": TOL_WEIGHTED,
        "E61": TOL_WEIGHTED, "E62": TOL_WEIGHTED,
    }
    estimates = {}
    for sid, tol in tols.items():
        out = series.evaluate_series(sid, SERIES_N, SERIES_BITS)
        assert out["abs_gap"] <= tol * abs(out["closed_form"]), (sid, out["rel_gap"])
        estimates[sid] = out["partial"] + out["tail_estimate"]
    for sid in ("E20", "S321_H", "S321_O", "S322_H2", "S322_O2"):
        for n in (100, 1000, 10000):
            out = series.evaluate_series(sid, n, SERIES_BITS)
            assert out["bracket_ok"] is True, (sid, n)
    with mp.workprec(SERIES_BITS):
        clausen = abs(estimates["E22"] ** 2 - estimates["E20"])
        assert clausen <= mpf(TOL_UNWEIGHTED), clausen
    elapsed = time.monotonic() - t0
    assert elapsed <= 300.0, elapsed
    print(f"criterion 4 series suite N={SERIES_N}: PASS ({elapsed:.1f}s)")


def test_criterion_5_coherence():
    for sid, cid in series.PARTNERS.items():
        case = congruences.get_case(cid)
        for k in range(0, 51):
            assert series.exact_term(sid, k) == congruences.exact_term(case, k), \
                (sid, cid, k)
    print("criterion 5 shared-term coherence k<=50: PASS")


def test_criterion_6_determinism(capsys):
    args = ["verify", "--cases", "*", "--primes", "5..100", "--format", "json-lines"]
    assert cli.main(args + ["--workers", "1"]) == 0
    run1 = capsys.readouterr().out
    assert cli.main(args + ["--workers", "8"]) == 0
    run8 = capsys.readouterr().out
    assert run1 == run8 and run1
    print(f"criterion 6 determinism 1 vs 8 workers: PASS "
          f"({len(run1.splitlines())} records)")
