"""Series engine: constants, closed forms, tails, and coherence."""

import pytest
from mpmath import mp, mpf

from cbsums import congruences, series
from cbsums.series import (
    PARTNERS,
    SERIES,
    constants,
    evaluate_series,
    exact_term,
    psi_value_checks,
    series_ids,
)


def test_registry_shape():
    assert len(SERIES) == 10
    assert set(PARTNERS) == set(series_ids())
    # tolerances are registry data
    for sid in ("E20", "E22", "VH_B1", "VH_A1"):
        assert SERIES[sid].tolerance == 1e-6
    for sid in ("S321_H", "S321_O", "S322_H2", "S322_O2", "E61", "E62"):
        assert SERIES[sid].tolerance == 1e-4


def test_constants_match_mpmath():
    c = constants(256)
    with mp.workprec(256):
        refs = {
            "pi": +mp.pi,
            "ln2": mp.ln(2),
            "catalan": +mp.catalan,
            "gamma14": mp.gamma(mpf(1) / 4),
            "gamma34": mp.gamma(mpf(3) / 4),
        }
        for key, ref in refs.items():
            assert abs(c[key] - ref) / abs(ref) < mpf(2) ** -250, key
        assert abs(c["gamma14"] * c["gamma34"] - mp.pi * mp.sqrt(2)) < mpf(2) ** -250


def test_constants_reject_low_precision():
    with pytest.raises(ValueError):
        constants(32)


def test_psi_value_checks():
    assert psi_value_checks(128)
    assert psi_value_checks(256)


def test_closed_forms_clausen_relation():
    with mp.workprec(256):
        c = constants(256)
        e20 = series._closed_form("E20", c)
        e22 = series._closed_form("E22", c)
        assert abs(e22 * e22 - e20) < mpf(2) ** -240


def test_evaluate_all_small_depth():
    for sid in series_ids():
        out = evaluate_series(sid, 2000, 128)
        assert out["passed"], (sid, out["rel_gap"])
        assert out["kind"] == SERIES[sid].kind
        if SERIES[sid].kind == "positive":
            assert out["tail_estimate"] > 0
            assert out["bracket_ok"] is True
        elif SERIES[sid].kind == "geometric":
            assert out["bracket_ok"] is None
            assert out["tail_upper"] is not None
        else:
            assert out["bracket_ok"] is None and out["tail_upper"] is None


def test_bracketing_small_n():
    for sid in ("E20", "S321_H", "S321_O", "S322_H2", "S322_O2"):
        for n in (150, 500):
            out = evaluate_series(sid, n, 192)
            assert out["bracket_ok"] is True, (sid, n)


def test_alternating_averaging_is_sharp():
    out = evaluate_series("VH_B1", 3000, 192)
    assert out["rel_gap"] < mpf("1e-30")


def test_argument_validation():
    with pytest.raises(KeyError):
        evaluate_series("nope", 1000, 128)
    with pytest.raises(ValueError):
        evaluate_series("E20", 5, 128)


def test_determinism():
    a = evaluate_series("S322_O2", 1500, 160)
    b = evaluate_series("S322_O2", 1500, 160)
    for key in ("partial", "tail_estimate", "closed_form", "abs_gap"):
        assert a[key] == b[key]


def test_exact_terms_match_generator():
    with mp.workprec(160):
        for sid in series_ids():
            gen = series._gen_terms(sid, 30)
            for k, approx in enumerate(gen):
                expect = exact_term(sid, k)
                got = mpf(expect.numerator) / expect.denominator
                assert abs(approx - got) <= abs(got) * mpf(2) ** -140, (sid, k)


def test_partner_coherence_sample():
    # full k <= 50 sweep lives in the acceptance suite
    for sid, cid in PARTNERS.items():
        case = congruences.get_case(cid)
        for k in range(21):
            assert exact_term(sid, k) == congruences.exact_term(case, k), (sid, k)
