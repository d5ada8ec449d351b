"""Valuation-aware residue arithmetic mod p^m."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cbsums.padic import (
    MAX_EXPONENT,
    NegativeValuationError,
    PadicValue,
    PrimePowerCtx,
    inv_mod,
    padic_compare,
    padic_reduce,
)

CTX52 = PrimePowerCtx(5, 2)


def test_reduce_anchors():
    a = padic_reduce(Fraction(1, 2), CTX52)
    assert (a.v, a.u) == (0, 13)
    b = padic_reduce(Fraction(10, 3), CTX52)
    assert (b.v, b.u) == (1, 9)


def test_reduce_zero_canonical():
    z = padic_reduce(Fraction(0), CTX52)
    assert z.v is None and z.u == 0
    assert padic_compare(z, padic_reduce(0, CTX52))


def test_compare_anchors():
    # comparison is absolute: p^v_a u_a == p^v_b u_b mod p^m
    assert padic_compare(padic_reduce(5, CTX52), padic_reduce(30, CTX52))
    assert not padic_compare(padic_reduce(5, CTX52), padic_reduce(10, CTX52))
    assert padic_compare(padic_reduce(25, CTX52), padic_reduce(0, CTX52))


def test_compare_rejects_negative_valuation():
    bad = padic_reduce(Fraction(1, 5), CTX52)
    assert bad.v == -1
    with pytest.raises(NegativeValuationError):
        padic_compare(bad, padic_reduce(1, CTX52))


def test_inv_mod_anchors():
    assert inv_mod(3, 25) == 17
    assert inv_mod(1, 25) == 1
    with pytest.raises(ValueError):
        inv_mod(5, 25)


def test_ctx_validation():
    with pytest.raises(ValueError):
        PrimePowerCtx(9, 1)
    with pytest.raises(ValueError):
        PrimePowerCtx(5, MAX_EXPONENT + 1)
    with pytest.raises(ValueError):
        PrimePowerCtx(3, 0)
    assert PrimePowerCtx(7, 3).modulus == 343


p_free = st.fractions(min_value=-200, max_value=200, max_denominator=60).filter(
    lambda q: q.denominator % 5)


@given(p_free, p_free)
def test_reduce_is_ring_hom(a, b):
    ra, rb = padic_reduce(a, CTX52), padic_reduce(b, CTX52)
    assert padic_compare(padic_reduce(a + b, CTX52), ra + rb)
    assert padic_compare(padic_reduce(a * b, CTX52), ra * rb)
    assert padic_compare(padic_reduce(a - b, CTX52), ra - rb)


@given(p_free.filter(lambda q: q != 0))
def test_reduce_times_reciprocal_is_one(q):
    prod = padic_reduce(q, CTX52) * padic_reduce(1 / q, CTX52)
    assert (prod.v, prod.u) == (0, 1)


@given(st.integers(0, 5**4 - 1))
def test_residue_matches_integer(n):
    ctx = PrimePowerCtx(5, 4)
    assert padic_reduce(n, ctx).residue() == n % ctx.modulus


def test_residue_at_lower_precision():
    a = padic_reduce(Fraction(1, 2), PrimePowerCtx(5, 4))
    assert a.residue(2) == 13
    assert PadicValue(CTX52, 2, 1).residue() == 0  # v >= m collapses to 0
