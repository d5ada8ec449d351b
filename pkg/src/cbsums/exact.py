"""Exact rational scalars and degree-2 jets.

BigRational is stdlib ``fractions.Fraction``: always normalized, positive
denominator, exact field arithmetic, and division by zero raises.  The alias
exists so callers name the role rather than the implementation.

Jet2 tracks a value together with its first two derivatives in a formal
parameter eps, i.e. arithmetic in Q[eps]/(eps^3).  Identity right-hand sides
differentiated in a series parameter are read off the eps^1 / eps^2 slots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = ["BigRational", "Jet2", "jet_arith", "rat_arith"]

BigRational = Fraction

_Scalar = Union[int, Fraction]


def rat_arith(a: _Scalar, b: _Scalar, op: str) -> Fraction:
    """Dispatch one exact rational operation; '/' by zero raises ZeroDivisionError."""
    a, b = Fraction(a), Fraction(b)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class Jet2:
    """c0 + c1*eps + c2*eps^2, truncated at eps^3, exact coefficients."""

    c0: Fraction
    c1: Fraction = Fraction(0)
    c2: Fraction = Fraction(0)

    @classmethod
    def constant(cls, c: _Scalar) -> "Jet2":
        return cls(Fraction(c))

    @classmethod
    def linear(cls, c0: _Scalar, c1: _Scalar) -> "Jet2":
        """c0 + c1*eps; the building block for shifted series parameters."""
        return cls(Fraction(c0), Fraction(c1))

    def _coerce(self, other: Union["Jet2", _Scalar]) -> "Jet2":
        if isinstance(other, Jet2):
            return other
        return Jet2.constant(other)

    def __add__(self, other):
        o = self._coerce(other)
        return Jet2(self.c0 + o.c0, self.c1 + o.c1, self.c2 + o.c2)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.c0, -self.c1, -self.c2)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        return Jet2(
            self.c0 * o.c0,
            self.c0 * o.c1 + self.c1 * o.c0,
            self.c0 * o.c2 + self.c1 * o.c1 + self.c2 * o.c0,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Jet2":
        """Multiplicative inverse; requires a unit constant term."""
        if self.c0 == 0:
            raise ZeroDivisionError("jet with zero constant term has no inverse")
        i0 = 1 / self.c0
        i1 = -self.c1 * i0 * i0
        i2 = (self.c1 * self.c1 - self.c0 * self.c2) * i0 * i0 * i0
        return Jet2(i0, i1, i2)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()


def jet_arith(a: Jet2, b: Jet2, op: str) -> Jet2:
    """Dispatch one jet operation; '/' by a zero-constant-term jet raises."""
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown op {op!r}")
