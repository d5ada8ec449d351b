"""Backend parity: the compiled kernel must match the pure reference bit for bit."""

import random
from array import array

import pytest

from cbsums import kernels
from cbsums.kernels import pure

HAVE_C = kernels._ckern is not None
needs_c = pytest.mark.skipif(not HAVE_C, reason="compiled kernel not built")


def test_backend_constant():
    assert kernels.BACKEND in ("pure", "c")
    if HAVE_C:
        assert kernels.BACKEND == "c"


def test_normalize_scaled():
    assert kernels.normalize_scaled(5, 25, 0, 0) == (None, 0)
    assert kernels.normalize_scaled(5, 25, -1, 10) == (0, 2)
    assert kernels.normalize_scaled(5, 25, 2, 3) == (2, 3)


def test_pure_gamma_points_validates():
    with pytest.raises(ValueError):
        pure.gamma_points(5, 25, [25])
    with pytest.raises(ValueError):
        pure.gamma_points(5, 25, [-1, 3])
    assert pure.gamma_points(5, 25, []) == []
    assert pure.gamma_points(5, 25, [0, 1, 1]) == [1, 24, 24]


def test_pure_row_tables_validate():
    with pytest.raises(ValueError):
        pure.row_binomial_padic(7, 7, 49)
    with pytest.raises(ValueError):
        pure.row_shift_binomial_padic(4, 7, 49)


def test_pure_harmonic_validates():
    with pytest.raises(ValueError):
        pure.harmonic_padic(5, 25, 4, 1, "x")
    with pytest.raises(ValueError):
        pure.harmonic_padic(5, 25, 4, 2, "dbl")


@needs_c
def test_parity_random_grid():
    ck = kernels._ckern
    rng = random.Random(20240817)
    for p in (5, 7, 13, 97, 199):
        for m in (1, 2, 3):
            pm = p**m
            cap = min(pm, 300000)
            pts = [rng.randrange(cap) for _ in range(25)] + [0, cap - 1]
            assert pure.gamma_points(p, pm, pts) == ck.gamma_points(p, pm, pts)
            kmax = min(2 * p + 5, 120)
            a = pure.central_binomial_padic(p, pm, kmax)
            b = ck.central_binomial_padic(p, pm, kmax)
            assert list(a[0]) == list(b[0]) and list(a[1]) == list(b[1])
            n = (p - 1) // 2
            assert list(pure.row_binomial_padic(n, p, pm)) == \
                list(ck.row_binomial_padic(n, p, pm))
            nsh = (p - 1) // 4
            assert list(pure.row_shift_binomial_padic(nsh, p, pm)) == \
                list(ck.row_shift_binomial_padic(nsh, p, pm))
            for kind, r in (("h", 1), ("h", 2), ("o", 1), ("o", 2), ("dbl", 1)):
                a = pure.harmonic_padic(p, pm, kmax, r, kind)
                b = ck.harmonic_padic(p, pm, kmax, r, kind)
                assert list(a[0]) == list(b[0]) and list(a[1]) == list(b[1])
            for core, e, sgn in ((0, 3, 1), (0, 5, -1), (1, 3, -1), (0, 1, 1)):
                kh = kmax if core == 0 else n
                ws = array("q", [rng.choice([0, 0, -1, -2]) for _ in range(kh + 1)])
                wr = array("q", [rng.randrange(pm) for _ in range(kh + 1)])
                binv = pow(rng.randrange(1, p), -1, pm)
                assert pure.weighted_sum(p, pm, core, n, e, binv, sgn, 0, kh, ws, wr) \
                    == ck.weighted_sum(p, pm, core, n, e, binv, sgn, 0, kh, ws, wr)


@needs_c
def test_parity_error_paths():
    ck = kernels._ckern
    for args in ((5, 25, [25]), (5, 25, [-1, 3])):
        with pytest.raises(ValueError):
            ck.gamma_points(*args)
    with pytest.raises(ValueError):
        ck.row_binomial_padic(7, 7, 49)
    with pytest.raises(ValueError):
        ck.harmonic_padic(5, 25, 4, 2, "dbl")


@needs_c
def test_dispatch_uses_c_below_limit():
    assert kernels._use_c(5**3)
    assert not kernels._use_c(1 << 64)
    # a huge modulus silently falls back to the pure path
    big = 5**30
    got = kernels.gamma_points(5, big, [7])
    assert got == pure.gamma_points(5, big, [7])


def test_weighted_sum_zero_weights_skipped():
    ws = array("q", [0, 0, -1])
    wr = array("q", [0, 0, 0])
    assert pure.weighted_sum(5, 25, 0, 0, 3, 1, 1, 0, 2, ws, wr) == (0, 0)
