"""Integer and rational sequences used across the registries.

Conventions pinned here:
  * H_0 = O_0 = 0; harmonic values are exact Fractions.
  * bernoulli uses B_1 = -1/2 (the recurrence sum C(n+1,k) B_k = 0).
  * euler_number is the secant-number convention E_0 = 1, E_2 = -1, E_4 = 5;
    odd indices are 0.
  * binomial(n, k) is 0 outside 0 <= k <= n, which is what makes the
    telescoping certificate checks well-defined at boundary k.

Caches are plain module-level lists grown on demand.  Growing is not
re-entrant; completed prefixes are safe to read concurrently (worker
processes each hold their own copy anyway).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, isqrt
from typing import List

__all__ = [
    "bernoulli",
    "binomial",
    "c_number",
    "central_binomial",
    "euler_number",
    "fermat_quotient",
    "harmonic",
    "is_prime",
    "odd_harmonic",
    "pochhammer",
    "primes_in",
    "shifted_harmonic",
]


# ---------------------------------------------------------------------------
# harmonic families

_H_CACHE: dict[int, List[Fraction]] = {}
_O_CACHE: dict[int, List[Fraction]] = {}


def _grow(cache: List[Fraction], n: int, step) -> None:
    while len(cache) <= n:
        k = len(cache)
        cache.append(cache[-1] + step(k))


def harmonic(n: int, r: int = 1) -> Fraction:
    """Generalized harmonic number H_n^(r) = sum_{j<=n} 1/j^r."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cache = _H_CACHE.setdefault(r, [Fraction(0)])
    _grow(cache, n, lambda k: Fraction(1, k**r))
    return cache[n]


def odd_harmonic(n: int, r: int = 1) -> Fraction:
    """O_n^(r) = sum_{j<=n} 1/(2j-1)^r."""
    if n < 0:
        raise ValueError("n must be >= 0")
    cache = _O_CACHE.setdefault(r, [Fraction(0)])
    _grow(cache, n, lambda k: Fraction(1, (2 * k - 1) ** r))
    return cache[n]


def shifted_harmonic(k: int, r: int, x: Fraction) -> Fraction:
    """H_k^(r)(x) = sum_{j=0}^{k-1} 1/(x+j)^r; H_k(1) = H_k, H_k(1/2) = 2 O_k."""
    x = Fraction(x)
    total = Fraction(0)
    for j in range(k):
        total += 1 / (x + j) ** r
    return total


# ---------------------------------------------------------------------------
# binomial family

def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def central_binomial(k: int) -> int:
    return comb(2 * k, k)


def pochhammer(x: Fraction, k: int) -> Fraction:
    """Rising factorial (x)_k = x (x+1) ... (x+k-1), (x)_0 = 1."""
    x = Fraction(x)
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


# ---------------------------------------------------------------------------
# Bernoulli / Euler numbers

_BERN: List[Fraction] = [Fraction(1)]
_EULER: List[int] = [1]


def bernoulli(n: int) -> Fraction:
    """B_n with B_1 = -1/2, via sum_{k<=n} C(n+1,k) B_k = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_BERN) <= n:
        j = len(_BERN)
        acc = Fraction(0)
        for k in range(j):
            acc += comb(j + 1, k) * _BERN[k]
        _BERN.append(-acc / (j + 1))
    return _BERN[n]


def euler_number(n: int) -> int:
    """Secant-convention E_n (E_2 = -1, E_4 = 5, ...); odd n gives 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n % 2 == 1:
        return 0
    half = n // 2
    while len(_EULER) <= half:
        j = len(_EULER)
        acc = 0
        for k in range(j):
            acc += comb(2 * j, 2 * k) * _EULER[k]
        _EULER.append(-acc)
    return _EULER[half]


# ---------------------------------------------------------------------------
# misc number theory

def fermat_quotient(a: int, p: int) -> int:
    """q_p(a) = (a^(p-1) - 1) / p, exact; requires p odd prime, p does not divide a."""
    if a % p == 0:
        raise ValueError(f"p={p} divides a={a}")
    num = pow(a, p - 1) - 1
    if num % p:
        raise ValueError(f"p={p} is not prime (Fermat test failed for a={a})")
    return num // p


def c_m(m: int) -> Fraction:
    """c_m = (-1)^m (6m+3)! (m!)^3 / ((3m+1)! ((2m+1)!)^3).

    c_0 = 6 and c_1 = -70 are integers but c_2 = 6006/5 already is not; the
    denominator only carries primes < 2m+2, so reduction mod p^2 with
    p = 4m+3 (the one consumer) is always defined.
    """
    num = factorial(6 * m + 3) * factorial(m) ** 3
    den = factorial(3 * m + 1) * factorial(2 * m + 1) ** 3
    q = Fraction(num, den)
    return -q if m % 2 else q


def primes_in(lo: int, hi: int) -> List[int]:
    """Primes p with lo <= p <= hi, by sieve."""
    if hi < 2 or hi < lo:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for d in range(2, isqrt(hi) + 1):
        if sieve[d]:
            sieve[d * d :: d] = bytearray(len(sieve[d * d :: d]))
    return [n for n in range(max(lo, 2), hi + 1) if sieve[n]]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
