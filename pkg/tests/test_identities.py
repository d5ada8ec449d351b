"""Exact finite identities, the WZ certificate, and term-jet checks."""

from fractions import Fraction

import pytest

from cbsums.exact import Jet2
from cbsums.identities import (
    IDENTITIES,
    JET_IDS,
    OutOfDomainError,
    check_identity,
    get_identity,
    identity_ids,
    in_domain,
    term_jet_check,
    wz_certificate_check,
    wz_partial,
    wz_telescope_check,
)
from cbsums.seqs import binomial, central_binomial, harmonic


def test_registry_names():
    ids = identity_ids()
    for needed in ("CD1", "CD2", "CD4a", "CD4b", "CD5", "CD6", "CD7",
                   "I_E70", "I_PS03_3", "I_PS03_4", "I_PS03_5", "I_aux_asym"):
        assert needed in ids
    assert len(ids) == len(IDENTITIES)


def test_anchor_cd1():
    out = check_identity("CD1", 1)
    assert out["pass"] and out["lhs"] == out["rhs"] == -1


def test_anchor_cd5():
    out = check_identity("CD5", 2)
    assert out["pass"] and out["lhs"] == Fraction(3, 8)


def test_anchor_cd7():
    out = check_identity("CD7", 1)
    assert out["pass"] and out["lhs"] == -1


def test_anchor_cd4a_vanishes():
    assert check_identity("CD4a", 3)["lhs"] == 0


def test_out_of_domain():
    assert not in_domain("CD5", 3)
    with pytest.raises(OutOfDomainError):
        check_identity("CD5", 3)
    with pytest.raises(KeyError):
        get_identity("nope")


def test_full_registry_sweep_n_100():
    for cid in identity_ids():
        for n in range(0, 101):
            if not in_domain(cid, n):
                continue
            out = check_identity(cid, n)
            assert out["pass"], (cid, n, out["lhs"], out["rhs"])


def test_wz_certificate_exhaustive():
    for m in range(0, 51):
        for k in range(0, 51):
            assert wz_certificate_check(m, k) == 0, (m, k)


def test_wz_telescope():
    assert wz_partial(1) - wz_partial(0) == Fraction(-1, 1) + Fraction(1, 4)
    for m in range(0, 26):
        assert wz_telescope_check(m), m


def test_wz_reproduces_cd7_even_branch():
    # lhs(2m) of the even branch equals S(m) * C(2m,m)^2 / 16^m
    for m in range(0, 21):
        n = 2 * m
        lhs = sum(
            binomial(n, k) * binomial(n + k, k) * central_binomial(k)
            * harmonic(k, 2) * Fraction(1, (-4) ** k)
            for k in range(n + 1)
        )
        assert lhs == wz_partial(m) * binomial(2 * m, m) ** 2 / 16**m, m
        assert lhs == check_identity("CD7", n)["rhs"], m


def test_jet_anchor_dixon_dc():
    from cbsums.identities import _jet_term

    jet = _jet_term("dixon_dc", 1)
    assert jet == Jet2(Fraction(1, 8), Fraction(3, 8), jet.c2)


def test_jets_all_ids_k60():
    assert set(JET_IDS) == {"dixon_dc", "dixon_da", "whipple_dee2", "whipple_daa2"}
    for sid in JET_IDS:
        for k in range(0, 61):
            assert term_jet_check(sid, k), (sid, k)
    with pytest.raises(KeyError):
        term_jet_check("unknown", 1)
