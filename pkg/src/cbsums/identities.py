"""Exact finite identities, the WZ certificate, and per-term jet checks.

All arithmetic is over BigRational (Fraction); a passing check is exact
equality, never a tolerance.  The registry covers the two incomplete-sum
identities for C(2k,k) H_k / 4^k, the alternating product-binomial pairs,
the cube identities tied to c_m, the signed C(n,k) C(n+k,k) C(2k,k) family
with harmonic weights, the two-branch half-base identity, and the three
asymmetry-weighted power identities.

The WZ pair (F, G) certifies the even branch of the H^(2) identity: the
certificate difference vanishes identically, the weighted partial sums S(m)
telescope to the alternating zeta tail, and substitution reproduces the
registry entry at n = 2m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

from .exact import Jet2
from .seqs import binomial, c_m, central_binomial, harmonic, odd_harmonic

__all__ = [
    "IdentityCase",
    "OutOfDomainError",
    "IDENTITIES",
    "identity_ids",
    "get_identity",
    "in_domain",
    "check_identity",
    "wz_f",
    "wz_g",
    "wz_certificate_check",
    "wz_partial",
    "wz_telescope_check",
    "term_jet_check",
    "JET_IDS",
]


class OutOfDomainError(ValueError):
    """n violates the identity's parity or range constraint."""


@dataclass(frozen=True)
class IdentityCase:
    id: str
    n_min: int
    parity: Optional[str]  # None | "odd" | "even"
    lhs: Callable[[int], Fraction]
    rhs: Callable[[int], Fraction]
    statement: str


def _alt_zeta2(n: int) -> Fraction:
    return sum(Fraction((-1) ** k, k * k) for k in range(1, n + 1))


def _lhs_deg1_h(n):
    return sum(Fraction(central_binomial(k), 4**k) * harmonic(k) for k in range(1, n))


def _rhs_deg1_h(n):
    return Fraction(central_binomial(n) * 2 * n, 4**n) * (harmonic(n - 1) - 2) + 2


def _lhs_deg1_h2(n):
    return sum(Fraction(central_binomial(k), 4**k) * harmonic(k, 2) for k in range(1, n))


def _rhs_deg1_h2(n):
    head = Fraction(central_binomial(n) * 2 * n, 4**n) * harmonic(n - 1, 2)
    return head - 2 * sum(Fraction(central_binomial(k), k * 4**k) for k in range(1, n))


def _lhs_prod_h(n):
    return sum(
        binomial(n, k) * binomial(n + k, k) * (-1) ** k * harmonic(k)
        for k in range(1, n + 1)
    )


def _lhs_prod_h2(n):
    return sum(
        binomial(n, k) * binomial(n + k, k) * (-1) ** k * harmonic(k, 2)
        for k in range(1, n + 1)
    )


def _cube_sum(n, weight):
    return sum((-1) ** k * binomial(n, k) ** 3 * weight(k) for k in range(n + 1))


def _rhs_cd2(n):
    m = (n - 1) // 2
    return c_m(m) / 2 * (
        harmonic(m) - 4 * harmonic(2 * m + 1) - harmonic(3 * m + 2) + 2 * harmonic(6 * m + 4)
    )


def _signed_prod_sum(n, weight):
    return sum(
        binomial(n, k) * binomial(n + k, k) * central_binomial(k) * weight(k)
        * Fraction(1, (-4) ** k)
        for k in range(n + 1)
    )


def _rhs_cd7(n):
    if n % 2 == 0:
        return Fraction(binomial(n, n // 2) ** 2, 4**n) * _alt_zeta2(n)
    h = (n - 1) // 2
    return Fraction(-(4 ** (n - 1)), binomial(n - 1, h) ** 2 * n * n)


def _lhs_e70(n):
    return sum(
        binomial(n, k) * binomial(n + k, k) * harmonic(k) * Fraction(1, (-2) ** k)
        for k in range(n + 1)
    )


def _rhs_e70(n):
    if n % 2 == 0:
        return Fraction(binomial(n, n // 2) * (-1) ** (n // 2), 2**n) * harmonic(n)
    h = (n - 1) // 2
    return Fraction((-1) ** ((n + 1) // 2) * 2 ** (n - 1), binomial(n - 1, h) * n)


def _ps03(n, d):
    return sum(
        binomial(n, k) ** d * (1 + d * (n - 2 * k) * harmonic(k)) for k in range(n + 1)
    )


def _rhs_ps03_5(n):
    return Fraction(
        (-1) ** n
        * sum(binomial(n, k) ** 2 * binomial(n + k, k) for k in range(n + 1))
    )


IDENTITIES: Dict[str, IdentityCase] = {}


def _add(case: IdentityCase) -> None:
    IDENTITIES[case.id] = case


_add(IdentityCase("I_deg1_H", 1, None, _lhs_deg1_h, _rhs_deg1_h,
                  "sum_{k<n} C(2k,k) H_k/4^k == C(2n,n) 2n (H_{n-1}-2)/4^n + 2"))
_add(IdentityCase("I_deg1_H2", 1, None, _lhs_deg1_h2, _rhs_deg1_h2,
                  "sum_{k<n} C(2k,k) H2_k/4^k == C(2n,n) 2n H2_{n-1}/4^n - 2 sum_{k<n} C(2k,k)/(k 4^k)"))
_add(IdentityCase("I_prod_H", 0, None, _lhs_prod_h,
                  lambda n: 2 * (-1) ** n * harmonic(n),
                  "sum (-1)^k C(n,k) C(n+k,k) H_k == 2(-1)^n H_n"))
_add(IdentityCase("I_prod_H2", 0, None, _lhs_prod_h2,
                  lambda n: 2 * (-1) ** (n + 1) * _alt_zeta2(n),
                  "sum (-1)^k C(n,k) C(n+k,k) H2_k == -2(-1)^n sum_{k<=n} (-1)^k/k^2"))
_add(IdentityCase("CD4a", 1, "odd", lambda n: _cube_sum(n, lambda k: Fraction(1)),
                  lambda n: Fraction(0),
                  "sum (-1)^k C(n,k)^3 == 0, odd n"))
_add(IdentityCase("CD4b", 1, "odd",
                  lambda n: _cube_sum(n, lambda k: harmonic(k) * harmonic(n - k)),
                  lambda n: Fraction(0),
                  "sum (-1)^k C(n,k)^3 H_k H_{n-k} == 0, odd n"))
_add(IdentityCase("CD1", 1, "odd", lambda n: _cube_sum(n, harmonic),
                  lambda n: -c_m((n - 1) // 2) / 6,
                  "sum (-1)^k C(n,k)^3 H_k == -c_m/6, n = 2m+1"))
_add(IdentityCase("CD2", 1, "odd",
                  lambda n: _cube_sum(n, lambda k: 3 * harmonic(k) ** 2 + harmonic(k, 2)),
                  _rhs_cd2,
                  "sum (-1)^k C(n,k)^3 (3H_k^2+H2_k) == (c_m/2)(H_m-4H_{2m+1}-H_{3m+2}+2H_{6m+4})"))
_add(IdentityCase("CD5", 0, "even", lambda n: _signed_prod_sum(n, harmonic),
                  lambda n: Fraction(binomial(n, n // 2) ** 2, 4**n) * harmonic(n),
                  "sum C(n,k) C(n+k,k) C(2k,k) H_k/(-4)^k == C(n,n/2)^2 H_n/4^n, even n"))
_add(IdentityCase("CD6", 0, "even",
                  lambda n: _signed_prod_sum(n, lambda k: harmonic(2 * k)),
                  lambda n: Fraction(binomial(n, n // 2) ** 2, 2 * 4**n) * harmonic(n),
                  "sum C(n,k) C(n+k,k) C(2k,k) H_{2k}/(-4)^k == C(n,n/2)^2 H_n/(2 4^n), even n"))
_add(IdentityCase("CD7", 0, None,
                  lambda n: _signed_prod_sum(n, lambda k: harmonic(k, 2)),
                  _rhs_cd7,
                  "sum C(n,k) C(n+k,k) C(2k,k) H2_k/(-4)^k == two-branch closed form"))
_add(IdentityCase("I_E70", 0, None, _lhs_e70, _rhs_e70,
                  "sum C(n,k) C(n+k,k) H_k/(-2)^k == two-branch closed form"))
_add(IdentityCase("I_PS03_3", 0, None, lambda n: Fraction(_ps03(n, 3)),
                  lambda n: Fraction((-1) ** n),
                  "sum C(n,k)^3 (1+3(n-2k)H_k) == (-1)^n"))
_add(IdentityCase("I_PS03_4", 0, None, lambda n: Fraction(_ps03(n, 4)),
                  lambda n: Fraction((-1) ** n * central_binomial(n)),
                  "sum C(n,k)^4 (1+4(n-2k)H_k) == (-1)^n C(2n,n)"))
_add(IdentityCase("I_PS03_5", 0, None, lambda n: Fraction(_ps03(n, 5)), _rhs_ps03_5,
                  "sum C(n,k)^5 (1+5(n-2k)H_k) == (-1)^n sum C(n,k)^2 C(n+k,k)"))
_add(IdentityCase("I_aux_asym", 0, None,
                  lambda n: sum(
                      binomial(n, k) ** 3 * (n - 2 * k) * harmonic(k) * harmonic(n - k)
                      for k in range(n + 1)
                  ) + Fraction(0),
                  lambda n: Fraction(0),
                  "sum C(n,k)^3 (n-2k) H_k H_{n-k} == 0"))


def identity_ids() -> List[str]:
    return list(IDENTITIES)


def get_identity(case: Union[str, IdentityCase]) -> IdentityCase:
    if isinstance(case, IdentityCase):
        return case
    try:
        return IDENTITIES[case]
    except KeyError:
        raise KeyError(f"unknown identity {case!r}") from None


def in_domain(case: Union[str, IdentityCase], n: int) -> bool:
    case = get_identity(case)
    if n < case.n_min:
        return False
    if case.parity == "odd":
        return n % 2 == 1
    if case.parity == "even":
        return n % 2 == 0
    return True


def check_identity(case: Union[str, IdentityCase], n: int) -> Dict[str, object]:
    """Exact evaluation of both sides; raises OutOfDomainError off-domain."""
    case = get_identity(case)
    if not in_domain(case, n):
        raise OutOfDomainError(f"{case.id} not applicable at n={n}")
    lhs = Fraction(case.lhs(n))
    rhs = Fraction(case.rhs(n))
    return {"lhs": lhs, "rhs": rhs, "pass": lhs == rhs}


# ---------------------------------------------------------------------------
# WZ pair


def wz_f(m: int, k: int) -> Fraction:
    """F(m,k); out-of-support binomials make it vanish off 0 <= k <= 2m."""
    b = binomial(2 * m, k) * binomial(2 * m + k, k) * central_binomial(k)
    if b == 0:
        return Fraction(0)
    return Fraction(b, binomial(2 * m, m) ** 2) * Fraction(-4) ** (2 * m - k)


def wz_g(m: int, k: int) -> Fraction:
    """G(m,k); support is 1 <= k <= 2m+2 via the C(2m+1,k-1) factor."""
    b = binomial(2 * m + 1, k - 1) * binomial(2 * m + k, k) * central_binomial(k)
    if b == 0:
        return Fraction(0)
    lead = Fraction(-2 * (4 * m + 3) * k * k, (2 * m + 1) ** 3)
    return lead * Fraction(b, binomial(2 * m, m) ** 2) * Fraction(-4) ** (2 * m - k)


def wz_certificate_check(m: int, k: int) -> Fraction:
    """F(m+1,k) - F(m,k) - G(m,k+1) + G(m,k); identically zero."""
    return wz_f(m + 1, k) - wz_f(m, k) - wz_g(m, k + 1) + wz_g(m, k)


def wz_partial(m: int) -> Fraction:
    """S(m) = sum_k F(m,k) H_k^(2) (finite support)."""
    return sum(wz_f(m, k) * harmonic(k, 2) for k in range(1, 2 * m + 1)) + Fraction(0)


def wz_telescope_check(m: int) -> bool:
    """S(m+1) - S(m) == -1/(2m+1)^2 + 1/(2m+2)^2, and S(m) is the
    alternating zeta partial sum (both checked exactly)."""
    step = wz_partial(m + 1) - wz_partial(m)
    want = -Fraction(1, (2 * m + 1) ** 2) + Fraction(1, (2 * m + 2) ** 2)
    return step == want and wz_partial(m) == _alt_zeta2(2 * m)


# ---------------------------------------------------------------------------
# term jets for the parameter-derivative steps

# per id: perturbed numerator parameters (value, eps slope) and denominator
# parameters; the term ratio t_{k+1}/t_k = prod(a+k)/(prod(b+k) (k+1))
_HALF = Fraction(1, 2)
_JET_PARAMS: Dict[str, Tuple[List[Tuple[Fraction, int]], List[Tuple[Fraction, int]]]] = {
    "dixon_dc": ([(_HALF, 0), (_HALF, 0), (_HALF, 1)], [(Fraction(1), 0), (Fraction(1), -1)]),
    "dixon_da": ([(_HALF, 1), (_HALF, 0), (_HALF, 0)], [(Fraction(1), 1), (Fraction(1), 1)]),
    "whipple_dee2": ([(_HALF, 0)] * 3, [(Fraction(1), 1), (Fraction(1), -1)]),
    "whipple_daa2": ([(_HALF, 1), (_HALF, -1), (_HALF, 0)], [(Fraction(1), 0), (Fraction(1), 0)]),
}

JET_IDS = tuple(_JET_PARAMS)


def _jet_term(series_id: str, k: int) -> Jet2:
    try:
        a_params, b_params = _JET_PARAMS[series_id]
    except KeyError:
        raise KeyError(f"unknown jet series {series_id!r}") from None
    t = Jet2.constant(1)
    for j in range(k):
        num = Jet2.constant(1)
        for c0, ce in a_params:
            num = num * Jet2.linear(c0 + j, ce)
        den = Jet2.constant(j + 1)
        for c0, ce in b_params:
            den = den * Jet2.linear(c0 + j, ce)
        t = t * num / den
    return t


def term_jet_check(series_id: str, k: int) -> bool:
    """Check the eps-expansion of the k-th perturbed term against its
    harmonic-weight closed form; exact equality of jet coefficients."""
    t = _jet_term(series_id, k)
    base = Fraction(central_binomial(k) ** 3, 64**k)
    if t.c0 != base:
        return False
    if series_id == "dixon_dc":
        return t.c1 == base * (2 * odd_harmonic(k) + harmonic(k))
    if series_id == "dixon_da":
        return t.c1 == base * (2 * odd_harmonic(k) - 2 * harmonic(k))
    if series_id == "whipple_dee2":
        return t.c1 == 0 and 2 * t.c2 == base * 2 * harmonic(k, 2)
    if series_id == "whipple_daa2":
        return t.c1 == 0 and 2 * t.c2 == base * (-8) * odd_harmonic(k, 2)
    raise KeyError(f"unknown jet series {series_id!r}")
