"""Combinatorial sequence generators against independent second methods."""

from fractions import Fraction
from math import factorial

import pytest

from cbsums.seqs import (
    bernoulli,
    binomial,
    c_m,
    central_binomial,
    euler_number,
    fermat_quotient,
    harmonic,
    odd_harmonic,
    pochhammer,
    primes_in,
    shifted_harmonic,
)


def akiyama_tanigawa(n):
    """Second method for Bernoulli numbers (B1 = +1/2 convention)."""
    a = [Fraction(1, j + 1) for j in range(n + 1)]
    for j in range(1, n + 1):
        for i in range(n + 1 - j):
            a[i] = (i + 1) * (a[i] - a[i + 1])
    return a[0]


def zigzag(upto):
    """Boustrophedon transform of 1,0,0,...; z[n] is the n-th zigzag number."""
    z = [1]
    row = [1]
    for _ in range(upto):
        prev = row[::-1]
        row = [0]
        for x in prev:
            row.append(row[-1] + x)
        z.append(row[-1])
    return z


def test_harmonic_anchors():
    assert harmonic(3, 1) == Fraction(11, 6)
    assert odd_harmonic(2, 1) == Fraction(4, 3)
    assert harmonic(0, 2) == 0


def test_shifted_harmonic():
    assert shifted_harmonic(2, 1, Fraction(1, 2)) == Fraction(8, 3)
    assert shifted_harmonic(2, 1, Fraction(1, 2)) == 2 * odd_harmonic(2, 1)
    for k in (0, 1, 5, 9):
        for r in (1, 2):
            assert shifted_harmonic(k, r, Fraction(1)) == harmonic(k, r)
    assert shifted_harmonic(0, 2, Fraction(7, 3)) == 0
    with pytest.raises(ZeroDivisionError):
        shifted_harmonic(3, 1, Fraction(-1))


def test_odd_harmonic_vs_double_identity():
    for r in (1, 2):
        half = Fraction(1, 2**r)
        for k in range(51):
            assert odd_harmonic(k, r) == harmonic(2 * k, r) - half * harmonic(k, r)


def test_binomials():
    assert central_binomial(2) == 6
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)
    assert binomial(4, 5) == 0
    assert binomial(4, -1) == 0
    for k in range(201):
        assert central_binomial(k) == pochhammer(Fraction(1, 2), k) * 4**k / factorial(k)


def test_bernoulli_against_akiyama_tanigawa():
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(1) == Fraction(-1, 2)  # pinned convention
    for n in range(0, 61, 2):
        assert bernoulli(n) == akiyama_tanigawa(n)
    for n in range(3, 61, 2):
        assert bernoulli(n) == 0


def test_euler_against_zigzag_triangle():
    z = zigzag(60)
    assert euler_number(2) == -1
    assert euler_number(4) == 5
    assert euler_number(3) == 0
    for n in range(0, 61, 2):
        assert euler_number(n) == (-1) ** (n // 2) * z[n]
    for n in range(1, 61, 2):
        assert euler_number(n) == 0


def test_fermat_quotient():
    assert fermat_quotient(2, 5) == 3
    assert fermat_quotient(2, 3) == 1
    assert fermat_quotient(2, 7) == 9
    for p in primes_in(5, 60):
        q = fermat_quotient(2, p)
        assert (2 ** (p - 1) - 1) == q * p
    with pytest.raises(ValueError):
        fermat_quotient(10, 5)


def test_c_m_values():
    assert c_m(0) == 6
    assert c_m(1) == -70
    assert c_m(2) == Fraction(6006, 5)
    for m in range(21):
        val = c_m(m)
        assert (val > 0) == (m % 2 == 0)
        ref = Fraction(
            (-1) ** m * factorial(6 * m + 3) * factorial(m) ** 3,
            factorial(3 * m + 1) * factorial(2 * m + 1) ** 3,
        )
        assert val == ref
        # denominator stays supported on primes below 2m+2
        for p in primes_in(2 * m + 2, 6 * m + 3):
            assert val.denominator % p


def test_primes_in():
    assert primes_in(5, 20) == [5, 7, 11, 13, 17, 19]
    assert primes_in(24, 28) == []
    assert primes_in(2, 3) == [2, 3]
    assert primes_in(5, 5) == [5]
