"""Morita p-adic Gamma at rational arguments, plus the lemma checks.

Gamma_p(n) = (-1)^n prod_{0 <= k < n, p !| k} k for integers n >= 0, extended
continuously to p-adic integers.  A rational x with p-free denominator is
evaluated through its integer representative a = x mod p^m in [0, p^m);
continuity makes Gamma_p(a) correct to the full m digits.

The check_* functions cover the functional equation, the reflection formula,
the two square/product identities at 1/2 and 1/4, the floor(p/4) binomial and
c_m lemmas, and a finite-difference probe for the derivative coefficient
G_1(a) together with its linearity in b.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, Union

from . import kernels
from .padic import PrimePowerCtx, inv_mod
from .seqs import binomial, c_m

Rat = Union[int, Fraction]

__all__ = [
    "NotPadicIntegerError",
    "gamma_p",
    "gamma_p_many",
    "s_p",
    "check_functional_eq",
    "check_reflection",
    "check_half_square",
    "check_quarter_product",
    "g1_probe",
    "check_g1_linearity",
    "check_cd9",
    "check_cd10",
]


class NotPadicIntegerError(ValueError):
    """Argument has p in its denominator."""


def _rep(x: Rat, p: int, pm: int) -> int:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NotPadicIntegerError(f"{x} is not a {p}-adic integer")
    return x.numerator * inv_mod(x.denominator, pm) % pm


def _vp(x: Fraction, p: int) -> int:
    # valuation of a nonzero rational; caller handles x == 0
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def gamma_p(x: Rat, ctx: PrimePowerCtx) -> int:
    """Gamma_p(x) as a unit residue mod ctx.modulus.

    Anchors: gamma_p(0) = 1, gamma_p(1) = -1; at p=5, m=2:
    gamma_p(1/2) = 18, gamma_p(1/4) = 21.
    """
    pm = ctx.modulus
    return kernels.gamma_points(ctx.p, pm, [_rep(x, ctx.p, pm)])[0]


def gamma_p_many(xs: Sequence[Rat], ctx: PrimePowerCtx) -> List[int]:
    """Gamma_p at several arguments with a single ascending product sweep."""
    pm = ctx.modulus
    reps = [_rep(x, ctx.p, pm) for x in xs]
    return kernels.gamma_points(ctx.p, pm, reps)


def s_p(x: Rat, ctx: PrimePowerCtx) -> int:
    """The integer in {1, ..., p} congruent to x mod p."""
    r = _rep(x, ctx.p, ctx.p)
    return r if r else ctx.p


def check_functional_eq(x: Rat, ctx: PrimePowerCtx) -> bool:
    """Gamma_p(x+1) = -x Gamma_p(x) for unit x, -Gamma_p(x) for p | x."""
    x = Fraction(x)
    pm = ctx.modulus
    g0, g1 = gamma_p_many([x, x + 1], ctx)
    if x != 0 and _vp(x, ctx.p) == 0:
        want = (pm - _rep(x, ctx.p, pm) * g0) % pm
    else:
        want = (pm - g0) % pm
    return g1 == want


def check_reflection(x: Rat, ctx: PrimePowerCtx) -> bool:
    """Gamma_p(x) Gamma_p(1-x) = (-1)^(s_p(x))."""
    pm = ctx.modulus
    g0, g1 = gamma_p_many([Fraction(x), 1 - Fraction(x)], ctx)
    want = pm - 1 if s_p(x, ctx) % 2 else 1
    return g0 * g1 % pm == want


def check_half_square(ctx: PrimePowerCtx) -> bool:
    """Gamma_p(1/2)^2 = (-1)^((p+1)/2)."""
    pm = ctx.modulus
    g = gamma_p(Fraction(1, 2), ctx)
    want = pm - 1 if ((ctx.p + 1) // 2) % 2 else 1
    return g * g % pm == want


def check_quarter_product(ctx: PrimePowerCtx) -> bool:
    """Gamma_p(1/4) Gamma_p(3/4) = (-1)^((p+1)/4), for p = 3 mod 4."""
    if ctx.p % 4 != 3:
        raise ValueError("quarter product identity needs p = 3 mod 4")
    pm = ctx.modulus
    g14, g34 = gamma_p_many([Fraction(1, 4), Fraction(3, 4)], ctx)
    want = pm - 1 if ((ctx.p + 1) // 4) % 2 else 1
    return g14 * g34 % pm == want


def g1_probe(a: Rat, ctx: PrimePowerCtx) -> int:
    """Finite-difference slope (Gamma_p(a+p)/Gamma_p(a) - 1)/p, mod p.

    This is the testable surrogate for the derivative coefficient G_1(a): the
    expansion Gamma_p(a + bp) = Gamma_p(a)(1 + G_1(a) b p) mod p^2 is then
    checked as linearity in b by check_g1_linearity.
    """
    p = ctx.p
    pm2 = p * p
    a0 = _rep(a, p, pm2)
    g0, g1 = kernels.gamma_points(p, pm2, [a0, (a0 + p) % pm2])
    ratio = g1 * inv_mod(g0, pm2) % pm2
    if ratio % p != 1:
        raise AssertionError("continuity violated; kernel bug")
    return (ratio - 1) // p % p


def check_g1_linearity(a: Rat, ctx: PrimePowerCtx) -> bool:
    """Gamma_p(a+bp)/Gamma_p(a) = 1 + g1_probe(a) b p mod p^2 for all b mod p."""
    p = ctx.p
    pm2 = p * p
    a0 = _rep(a, p, pm2)
    gs = kernels.gamma_points(p, pm2, [(a0 + b * p) % pm2 for b in range(p)])
    ghat = g1_probe(a, ctx)
    inv0 = inv_mod(gs[0], pm2)
    return all(
        gs[b] * inv0 % pm2 == (1 + ghat * b * p) % pm2 for b in range(p)
    )


def check_cd9(p: int) -> Dict[str, object]:
    """C(2m,m)^2/16^m vs the Gamma_p(1/4)^4 branches mod p^2, m = floor(p/4)."""
    ctx = PrimePowerCtx(p, 2)
    pm = ctx.modulus
    m4 = p // 4
    lhs = pow(binomial(2 * m4, m4), 2, pm) * inv_mod(pow(16, m4, pm), pm) % pm
    g4 = pow(gamma_p(Fraction(1, 4), ctx), 4, pm)
    if p % 4 == 1:
        rhs = (pm - g4) % pm
    else:
        rhs = 16 * inv_mod(g4, pm) % pm * (1 + 2 * p) % pm
    return {"lhs": lhs, "rhs": rhs, "pass": lhs == rhs}


def check_cd10(p: int) -> Dict[str, object]:
    """c_m = (p/2) Gamma_p(1/4)^4 mod p^2, m = floor(p/4), p = 3 mod 4."""
    if p % 4 != 3:
        raise ValueError("c_m congruence needs p = 3 mod 4")
    ctx = PrimePowerCtx(p, 2)
    pm = ctx.modulus
    m4 = p // 4
    cv = c_m(m4)
    lhs = cv.numerator * inv_mod(cv.denominator, pm) % pm
    g4 = pow(gamma_p(Fraction(1, 4), ctx), 4, pm)
    rhs = p * inv_mod(2, pm) % pm * g4 % pm
    return {"lhs": lhs, "rhs": rhs, "pass": lhs == rhs}
