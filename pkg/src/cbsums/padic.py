"""Prime-power modular arithmetic with explicit valuations.

A value is stored as ``p**v * u`` where ``u`` is a unit (coprime to p) kept
modulo ``p**m``; ``v`` may be negative (harmonic weights like H_{2k} or
O_k^(2) pick up 1/p factors once the index crosses p).  The exact zero is the
canonical pair ``v = +infinity, u = 0``, represented here by ``v is None``.

Precision model: a PadicValue carries m digits of *relative* precision.
Multiplication and division preserve relative precision exactly.  Addition
aligns both operands at the smaller valuation; if the leading digits cancel,
the renormalized unit has fewer reliable digits.  Callers that accumulate
long sums therefore work a couple of digits above the modulus they finally
compare at (see cbsums.congruences, which uses two guard digits; with all
atomic inputs exact to m digits and valuations >= -2, the ultrametric
inequality makes the accumulated sum exact modulo p**(m-2)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

__all__ = [
    "MAX_EXPONENT",
    "NegativeValuationError",
    "PadicValue",
    "PrimePowerCtx",
    "inv_mod",
    "padic_compare",
    "padic_reduce",
]

# Hard cap on the context exponent.  Registry congruences never exceed depth 4;
# the scan engine adds two guard digits, so 8 leaves slack.  Config, not
# architecture: nothing below depends on its exact value.
MAX_EXPONENT = 8


class NegativeValuationError(ValueError):
    """Raised when an operation needs a p-adic integer but v < 0."""


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimePowerCtx:
    """Context for arithmetic modulo p**m, p an odd prime, 1 <= m <= MAX_EXPONENT."""

    p: int
    m: int

    def __post_init__(self) -> None:
        if not _is_odd_prime(self.p):
            raise ValueError(f"p must be an odd prime, got {self.p}")
        if not 1 <= self.m <= MAX_EXPONENT:
            raise ValueError(f"m must be in 1..{MAX_EXPONENT}, got {self.m}")

    @property
    def modulus(self) -> int:
        return self.p**self.m

    def reduce(self, q: Union[int, Fraction]) -> "PadicValue":
        return padic_reduce(q, self)


def inv_mod(a: int, modulus: int) -> int:
    """Inverse of a modulo ``modulus``; ValueError if gcd(a, modulus) > 1."""
    try:
        return pow(a, -1, modulus)
    except ValueError:
        raise ValueError(f"{a} is not invertible modulo {modulus}") from None


def _split_valuation(n: int, p: int) -> tuple[int, int]:
    # n != 0
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


@dataclass(frozen=True)
class PadicValue:
    """p**v * u with u a unit modulo ctx.modulus; v None encodes exact zero."""

    ctx: PrimePowerCtx
    v: Optional[int]
    u: int

    def __post_init__(self) -> None:
        if self.v is None:
            if self.u != 0:
                raise ValueError("zero must have u == 0")
        else:
            if not 0 < self.u < self.ctx.modulus or self.u % self.ctx.p == 0:
                raise ValueError(f"u={self.u} is not a reduced unit mod {self.ctx.modulus}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ctx: PrimePowerCtx) -> "PadicValue":
        return cls(ctx, None, 0)

    @classmethod
    def from_unit(cls, ctx: PrimePowerCtx, u: int, v: int = 0) -> "PadicValue":
        return cls(ctx, v, u % ctx.modulus)

    # -- predicates --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.v is None

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "PadicValue") -> None:
        if self.ctx != other.ctx:
            raise ValueError("mixed contexts")

    def __add__(self, other: "PadicValue") -> "PadicValue":
        self._check(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        a, b = self, other
        if a.v > b.v:
            a, b = b, a
        pm = self.ctx.modulus
        w = (a.u + b.u * pow(self.ctx.p, b.v - a.v, pm)) % pm
        if w == 0:
            return PadicValue.zero(self.ctx)
        t, unit = _split_valuation(w, self.ctx.p)
        return PadicValue(self.ctx, a.v + t, unit % pm)

    def __neg__(self) -> "PadicValue":
        if self.is_zero:
            return self
        return PadicValue(self.ctx, self.v, self.ctx.modulus - self.u)

    def __sub__(self, other: "PadicValue") -> "PadicValue":
        return self + (-other)

    def __mul__(self, other: "PadicValue") -> "PadicValue":
        self._check(other)
        if self.is_zero or other.is_zero:
            return PadicValue.zero(self.ctx)
        return PadicValue(self.ctx, self.v + other.v, self.u * other.u % self.ctx.modulus)

    def __truediv__(self, other: "PadicValue") -> "PadicValue":
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by p-adic zero")
        if self.is_zero:
            return self
        u = self.u * inv_mod(other.u, self.ctx.modulus) % self.ctx.modulus
        return PadicValue(self.ctx, self.v - other.v, u)

    # -- views -------------------------------------------------------------

    def residue(self, m: Optional[int] = None) -> int:
        """Residue of the value modulo p**m (default: context m).

        Defined only for p-adic integers: raises NegativeValuationError when
        v < 0.
        """
        if m is None:
            m = self.ctx.m
        if self.is_zero:
            return 0
        if self.v < 0:
            raise NegativeValuationError(f"residue of negative-valuation value {self!r}")
        mod = self.ctx.p**m
        return self.u * pow(self.ctx.p, self.v, mod) % mod

    def __repr__(self) -> str:
        if self.is_zero:
            return f"PadicValue(0 @ {self.ctx.p}^{self.ctx.m})"
        return f"PadicValue({self.ctx.p}^{self.v} * {self.u} @ {self.ctx.p}^{self.ctx.m})"


def padic_reduce(q: Union[int, Fraction], ctx: PrimePowerCtx) -> PadicValue:
    """Exact reduction of a rational into (v, u) form.

    The denominator's p-part moves into a negative valuation, so any rational
    is representable; only a zero input produces the canonical zero.
    """
    q = Fraction(q)
    if q == 0:
        return PadicValue.zero(ctx)
    vn, num = _split_valuation(q.numerator, ctx.p)
    vd, den = _split_valuation(q.denominator, ctx.p)
    pm = ctx.modulus
    u = num * inv_mod(den, pm) % pm
    return PadicValue(ctx, vn - vd, u)


def padic_compare(a: PadicValue, b: PadicValue, m: Optional[int] = None) -> bool:
    """Congruence test a == b modulo p**m (default: context m).

    Both sides must be p-adic integers; comparing values of negative valuation
    raises NegativeValuationError (the registry guarantees integrality, so a
    negative valuation reaching a comparison is a bug upstream).
    """
    if a.ctx != b.ctx:
        raise ValueError("mixed contexts")
    return a.residue(m) == b.residue(m)
