"""Supercongruence registry and verification engine.

Every case compares a truncated sum (or an exact auxiliary quantity) against
a closed form modulo p**m.  Left sides fall into four shapes:

  central   sum_k sign^k C(2k,k)^e w_k / base^k over k = k_lo .. p-1
  row       sum_k (-1)^k C(n,k)^3 w_k with n = (p-1)/2
  direct    a single exact rational (harmonic value, power, alternating sum)
  family    a per-k congruence checked pointwise over k = 0 .. (p-1)/2

Central and row sums run through cbsums.kernels at working precision
p**(m+2): every atom entering a term has valuation >= -2 (the only negative
contributions come from H_{2k}, O_k and O_k^(2) weights), so by the
ultrametric inequality two guard digits make the accumulated residue exact
at the compared modulus.

Right sides combine exact atoms (p, q_p(2), B_{p-3}, E_{p-3}, E_{2p-4},
harmonic values) with Morita Gamma residues.  A Gamma lift taken mod p^j is
exact enough whenever it multiplies a p-adic integer and j digits are
compared, so each branch requests the smallest adequate precision; the whole
expression is then reduced through padic_reduce.
"""

from __future__ import annotations

import fnmatch
import time
from array import array
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from . import kernels
from .gamma_p import gamma_p, gamma_p_many
from .padic import PadicValue, PrimePowerCtx, inv_mod, padic_compare, padic_reduce
from .seqs import (
    bernoulli,
    binomial,
    central_binomial,
    euler_number,
    fermat_quotient,
    harmonic,
    odd_harmonic,
    primes_in,
)

GUARD_DIGITS = 2

ResiduePair = Tuple[Optional[int], int]


# ---------------------------------------------------------------------------
# per-prime atom cache


class PrimeData:
    """Lazy cache of the exact and Gamma atoms consumed by right sides."""

    def __init__(self, p: int):
        self.p = p
        self.n = (p - 1) // 2
        self._gamma4: Dict[int, int] = {}
        self._ghq2: Dict[int, int] = {}

    @property
    def q(self) -> int:
        return fermat_quotient(2, self.p)

    @property
    def b3(self) -> Fraction:
        return bernoulli(self.p - 3)

    @property
    def e1(self) -> int:
        return euler_number(self.p - 3)

    @property
    def e2(self) -> int:
        return euler_number(2 * self.p - 4)

    @property
    def sign_half(self) -> int:
        # (-1)^((p-1)/2): +1 for p = 1 mod 4, -1 for p = 3 mod 4
        return -1 if self.n % 2 else 1

    def gamma4_quarter(self, m: int) -> int:
        """Gamma_p(1/4)^4 mod p^m."""
        if m not in self._gamma4:
            ctx = PrimePowerCtx(self.p, m)
            self._gamma4[m] = pow(gamma_p(Fraction(1, 4), ctx), 4, ctx.modulus)
        return self._gamma4[m]

    def gamma_half_quarter2(self, m: int) -> int:
        """Gamma_p(1/2) Gamma_p(1/4)^2 mod p^m."""
        if m not in self._ghq2:
            ctx = PrimePowerCtx(self.p, m)
            gh, gq = gamma_p_many([Fraction(1, 2), Fraction(1, 4)], ctx)
            self._ghq2[m] = gh * gq % ctx.modulus * gq % ctx.modulus
        return self._ghq2[m]


# ---------------------------------------------------------------------------
# case table


@dataclass(frozen=True)
class CongruenceCase:
    """One registry entry; the summand fields only apply to sum shapes."""

    id: str
    kind: str  # central | row | direct | family | clausen
    m: int  # compared modulus power
    klass: Optional[int] = None  # required p mod 4, or None
    e: int = 0
    base: int = 1
    weight: str = "one"
    sign: int = 1
    k_lo: int = 0
    lhs_fn: Optional[Callable[[int], Fraction]] = None
    rhs_fn: Optional[Callable[[int, PrimeData], Fraction]] = None
    statement: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one (case, prime) check.

    lhs/rhs hold (v, u) pairs; v is None for an exact zero.  For family
    cases they hold the pair at the first failing k, or the last k when all
    pass.  skipped marks primes outside the case's residue class.
    """

    case: str
    p: int
    m: int
    lhs: ResiduePair
    rhs: ResiduePair
    passed: bool
    micros: int
    skipped: bool = False


def _pair(x: PadicValue) -> ResiduePair:
    return (x.v, x.u)


# -- right sides, frozen against exact-rational brute force at p <= 19 ------


def _rhs_h2_improved(p: int, d: PrimeData) -> Fraction:
    if p % 4 == 1:
        return Fraction(-d.gamma4_quarter(3))
    return Fraction(-p * p, 16) * d.gamma4_quarter(1)


def _rhs_deg1_h(p: int, d: PrimeData) -> Fraction:
    q = d.q
    return 2 - 2 * p + 4 * p * p * q - 6 * p**3 * q * q - Fraction(p**3, 3) * d.b3


def _rhs_deg1_h2(p: int, d: PrimeData) -> Fraction:
    q = d.q
    return -4 * q + 2 * p * q * q - Fraction(4, 3) * p * p * q**3 - Fraction(p * p, 2) * d.b3


def _rhs_ta10(p: int, d: PrimeData) -> Fraction:
    return -harmonic(d.n)


def _rhs_e12a(p: int, d: PrimeData) -> Fraction:
    return -Fraction(p * p, 3) * d.b3


def _rhs_e12b(p: int, d: PrimeData) -> Fraction:
    q = d.q
    return Fraction(1 + 2 * p * q + p * p * q * q)


def _rhs_e13a(p: int, d: PrimeData) -> Fraction:
    return Fraction(2 * p, 3) * d.b3


def _rhs_e13b(p: int, d: PrimeData) -> Fraction:
    q = d.q
    return -2 * q + p * q * q - Fraction(2, 3) * p * p * q**3 - Fraction(7, 12) * p * p * d.b3


def _rhs_e04a(p: int, d: PrimeData) -> Fraction:
    return Fraction(7 * p, 3) * d.b3


def _rhs_e04b(p: int, d: PrimeData) -> Fraction:
    return d.sign_half * (8 * d.e1 - 4 * d.e2) + Fraction(14 * p, 3) * d.b3


def _rhs_e03(p: int, d: PrimeData) -> Fraction:
    return Fraction(d.sign_half * (4 * d.e1 - 2 * d.e2))


def _rhs_deg2_h(p: int, d: PrimeData) -> Fraction:
    q = d.q
    return -d.sign_half * (4 * q - 2 * p * q * q)


def _rhs_deg2_h2(p: int, d: PrimeData) -> Fraction:
    return Fraction(-8 * d.e1 + 4 * d.e2)


def _rhs_c321(p: int, d: PrimeData) -> Fraction:
    q = d.q
    if p % 4 == 1:
        return Fraction(d.gamma4_quarter(2)) * (2 * q - p * q * q)
    return Fraction(-p, 12) * d.gamma4_quarter(1)


def _rhs_c322(p: int, d: PrimeData) -> Fraction:
    if p % 4 == 1:
        return Fraction(-d.gamma4_quarter(2)) * (4 * d.e1 - 2 * d.e2)
    return Fraction(-1, 4) * d.gamma4_quarter(2)


def _rhs_e09(p: int, d: PrimeData) -> Fraction:
    if p % 4 == 1:
        return Fraction(0)
    return Fraction(-p, 12) * d.gamma4_quarter(1)


def _rhs_e10(p: int, d: PrimeData) -> Fraction:
    if p % 4 == 1:
        return Fraction(d.gamma4_quarter(1) * d.e1, 2)
    return Fraction(-d.gamma4_quarter(1), 16)


def _rhs_e25(p: int, d: PrimeData) -> Fraction:
    return Fraction(-p, 8) * d.gamma4_quarter(1)


def _rhs_e23(p: int, d: PrimeData) -> Fraction:
    if p % 4 == 1:
        sgn = -1 if ((p + 1) // 2) % 2 else 1
        return Fraction(sgn * d.gamma_half_quarter2(2))
    return Fraction(0)


def _rhs_e70(p: int, d: PrimeData) -> Fraction:
    q = d.q
    if p % 4 == 1:
        return Fraction(d.gamma_half_quarter2(2)) * (2 * q - p * q * q)
    return Fraction(d.gamma_half_quarter2(2), 2)


def _rhs_vh_b2(p: int, d: PrimeData) -> Fraction:
    return Fraction(d.sign_half * p)


def _rhs_vh_a2(p: int, d: PrimeData) -> Fraction:
    # -p / Gamma_p(3/4)^4 = -p Gamma_p(1/4)^4 since their product is a 4th
    # root of unity squared (reflection)
    if p % 4 == 1:
        return Fraction(-p * d.gamma4_quarter(2))
    return Fraction(0)


def _rhs_e63(p: int, d: PrimeData) -> Fraction:
    return Fraction(d.sign_half * (2 + 6 * p * d.q))


def _rhs_e64(p: int, d: PrimeData) -> Fraction:
    return Fraction(2 + 12 * p * d.q)


def _rhs_e65(p: int, d: PrimeData) -> Fraction:
    if p % 4 == 1:
        return Fraction(-(2 + 10 * p * d.q) * d.gamma4_quarter(2))
    return Fraction(0)


# -- direct left sides ------------------------------------------------------


def _lhs_h_full(p: int) -> Fraction:
    return harmonic(p - 1)


def _lhs_4_power(p: int) -> Fraction:
    return Fraction(4 ** (p - 1))


def _lhs_h2_full(p: int) -> Fraction:
    return harmonic(p - 1, 2)


def _lhs_h_half(p: int) -> Fraction:
    return harmonic((p - 1) // 2)


def _lhs_h2_half(p: int) -> Fraction:
    return harmonic((p - 1) // 2, 2)


def _lhs_h2_quarter(p: int) -> Fraction:
    return harmonic(p // 4, 2)


def _lhs_alt_half(p: int) -> Fraction:
    return sum(Fraction((-1) ** k, k * k) for k in range(1, (p - 1) // 2 + 1))


CASES: Dict[str, CongruenceCase] = {}


def _add(case: CongruenceCase) -> None:
    CASES[case.id] = case


_add(CongruenceCase("H2_improved", "central", 3, None, e=3, base=64, weight="one",
                    rhs_fn=_rhs_h2_improved,
                    statement="sum C(2k,k)^3/64^k, k<p == -G4 (p=1 mod 4) | -(p^2/16) G4 (p=3) mod p^3"))
_add(CongruenceCase("deg1_H", "central", 4, None, e=1, base=4, weight="h1", k_lo=1,
                    rhs_fn=_rhs_deg1_h,
                    statement="sum C(2k,k) H_k/4^k == 2-2p+4p^2 q-6p^3 q^2-p^3 B/3 mod p^4"))
_add(CongruenceCase("deg1_H2", "central", 3, None, e=1, base=4, weight="h2", k_lo=1,
                    rhs_fn=_rhs_deg1_h2,
                    statement="sum C(2k,k) H2_k/4^k == -4q+2pq^2-4p^2 q^3/3-p^2 B/2 mod p^3"))
_add(CongruenceCase("aux_Ta10", "central", 3, None, e=1, base=4, weight="inv_k", k_lo=1,
                    rhs_fn=_rhs_ta10,
                    statement="sum C(2k,k)/(k 4^k) == -H_{(p-1)/2} mod p^3"))
_add(CongruenceCase("aux_E12a", "direct", 3, None, lhs_fn=_lhs_h_full, rhs_fn=_rhs_e12a,
                    statement="H_{p-1} == -p^2 B/3 mod p^3"))
_add(CongruenceCase("aux_E12b", "direct", 3, None, lhs_fn=_lhs_4_power, rhs_fn=_rhs_e12b,
                    statement="4^{p-1} == 1+2pq+p^2 q^2 mod p^3"))
_add(CongruenceCase("aux_E13a", "direct", 2, None, lhs_fn=_lhs_h2_full, rhs_fn=_rhs_e13a,
                    statement="H2_{p-1} == 2pB/3 mod p^2"))
_add(CongruenceCase("aux_E13b", "direct", 3, None, lhs_fn=_lhs_h_half, rhs_fn=_rhs_e13b,
                    statement="H_{(p-1)/2} == -2q+pq^2-2p^2 q^3/3-7p^2 B/12 mod p^3"))
_add(CongruenceCase("aux_E04a", "direct", 2, None, lhs_fn=_lhs_h2_half, rhs_fn=_rhs_e04a,
                    statement="H2_{(p-1)/2} == 7pB/3 mod p^2"))
_add(CongruenceCase("aux_E04b", "direct", 2, None, lhs_fn=_lhs_h2_quarter, rhs_fn=_rhs_e04b,
                    statement="H2_{floor(p/4)} == (-1)^{(p-1)/2}(8E-4E') + 14pB/3 mod p^2"))
_add(CongruenceCase("aux_E03", "direct", 2, None, lhs_fn=_lhs_alt_half, rhs_fn=_rhs_e03,
                    statement="sum (-1)^k/k^2, k<=(p-1)/2 == (-1)^{(p-1)/2}(4E-2E') mod p^2"))
_add(CongruenceCase("deg2_H", "central", 2, None, e=2, base=16, weight="h1", k_lo=1,
                    rhs_fn=_rhs_deg2_h,
                    statement="sum C(2k,k)^2 H_k/16^k == (-1)^{(p+1)/2}(4q-2pq^2) mod p^2"))
_add(CongruenceCase("deg2_H2", "central", 2, None, e=2, base=16, weight="h2", k_lo=1,
                    rhs_fn=_rhs_deg2_h2,
                    statement="sum C(2k,k)^2 H2_k/16^k == -8E+4E' mod p^2"))
_add(CongruenceCase("C321", "central", 2, None, e=3, base=64, weight="h1", k_lo=1,
                    rhs_fn=_rhs_c321,
                    statement="sum C(2k,k)^3 H_k/64^k == G4(2q-pq^2) | -(p/12) G4 mod p^2"))
_add(CongruenceCase("C322", "central", 2, None, e=3, base=64, weight="h2", k_lo=1,
                    rhs_fn=_rhs_c322,
                    statement="sum C(2k,k)^3 H2_k/64^k == -G4(4E-2E') | -G4/4 mod p^2"))
_add(CongruenceCase("E09", "central", 2, None, e=3, base=64, weight="o1", k_lo=1,
                    rhs_fn=_rhs_e09,
                    statement="sum C(2k,k)^3 O_k/64^k == 0 | -(p/12) G4 mod p^2"))
_add(CongruenceCase("E10", "central", 1, None, e=3, base=64, weight="o2", k_lo=1,
                    rhs_fn=_rhs_e10,
                    statement="sum C(2k,k)^3 O2_k/64^k == G4 E/2 | -G4/16 mod p"))
_add(CongruenceCase("E25", "central", 2, 3, e=3, base=64, weight="hdbl", k_lo=1,
                    rhs_fn=_rhs_e25,
                    statement="sum C(2k,k)^3 H_{2k}/64^k == -(p/8) G4 mod p^2 (p=3 mod 4)"))
_add(CongruenceCase("E07sum", "row", 2, 3,
                    statement="sum (-1)^k C(n,k)^3 H_{2k} == -(p/4) sum (-1)^k C(n,k)^3 H2_k mod p^2"))
_add(CongruenceCase("remark_q", "central", 1, None, e=3, base=64, weight="hdbl_minus_h1", k_lo=1,
                    statement="sum C(2k,k)^3 (H_{2k}-H_k)/64^k == q * sum C(2k,k)^3/64^k mod p"))
_add(CongruenceCase("remark_0_H", "central", 1, 3, e=3, base=64, weight="h1", k_lo=1,
                    statement="sum C(2k,k)^3 H_k/64^k == 0 mod p (p=3 mod 4)"))
_add(CongruenceCase("remark_0_H2K", "central", 1, 3, e=3, base=64, weight="hdbl", k_lo=1,
                    statement="sum C(2k,k)^3 H_{2k}/64^k == 0 mod p (p=3 mod 4)"))
_add(CongruenceCase("E23", "central", 2, None, e=2, base=32, weight="one",
                    rhs_fn=_rhs_e23,
                    statement="sum C(2k,k)^2/32^k == (-1)^{(p+1)/2} Gh Gq^2 | 0 mod p^2"))
_add(CongruenceCase("clausen_trunc", "clausen", 2, None,
                    statement="(sum C(2k,k)^2/32^k)^2 == sum C(2k,k)^3/64^k mod p^2"))
_add(CongruenceCase("E70", "central", 2, None, e=2, base=32, weight="h1",
                    rhs_fn=_rhs_e70,
                    statement="sum C(2k,k)^2 H_k/32^k == Gh Gq^2 (2q-pq^2) | Gh Gq^2/2 mod p^2"))
_add(CongruenceCase("VH_B2", "central", 3, None, e=3, base=64, weight="fourk1", sign=-1,
                    rhs_fn=_rhs_vh_b2,
                    statement="sum (-1)^k (4k+1) C(2k,k)^3/64^k == (-1)^{(p-1)/2} p mod p^3"))
_add(CongruenceCase("VH_A2", "central", 3, None, e=5, base=1024, weight="fourk1", sign=-1,
                    rhs_fn=_rhs_vh_a2,
                    statement="sum (-1)^k (4k+1) C(2k,k)^5/1024^k == -p G4 | 0 mod p^3"))
_add(CongruenceCase("E63", "central", 2, None, e=3, base=64, weight="aff3", sign=-1,
                    rhs_fn=_rhs_e63,
                    statement="sum (-1)^k C(2k,k)^3 (2-3(4k+1)H_k)/64^k == (-1)^{(p-1)/2}(2+6pq) mod p^2"))
_add(CongruenceCase("E64", "central", 2, None, e=4, base=256, weight="aff4",
                    rhs_fn=_rhs_e64,
                    statement="sum C(2k,k)^4 (2-4(4k+1)H_k)/256^k == 2+12pq mod p^2"))
_add(CongruenceCase("E65", "central", 2, None, e=5, base=1024, weight="aff5", sign=-1,
                    rhs_fn=_rhs_e65,
                    statement="sum (-1)^k C(2k,k)^5 (2-5(4k+1)H_k)/1024^k == -(2+10pq) G4 | 0 mod p^2"))
_add(CongruenceCase("fam_E01", "family", 2,
                    statement="C(n,k) C(n+k,k) (-1)^k == C(2k,k)^2/16^k mod p^2, k<=n"))
_add(CongruenceCase("fam_E02", "family", 2,
                    statement="C(2k,k)/4^k == (-1)^k C(n,k)(1-(p/2)(H_n-H_{n-k})) mod p^2, k<=n"))
_add(CongruenceCase("fam_E06", "family", 1,
                    statement="H_{2k} == (H_k+H_{n-k}-H_n)/2 mod p, k<=n"))
_add(CongruenceCase("fam_E11", "family", 1,
                    statement="O2_k == -H2_{n-k}/4 mod p, k<=n"))


def case_ids() -> List[str]:
    return list(CASES)


def get_case(case: Union[str, CongruenceCase]) -> CongruenceCase:
    if isinstance(case, CongruenceCase):
        return case
    try:
        return CASES[case]
    except KeyError:
        raise KeyError(f"unknown congruence case {case!r}") from None


def match_ids(patterns: Sequence[str]) -> List[str]:
    """Expand glob patterns against the registry, preserving registry order."""
    out = []
    for cid in CASES:
        if any(fnmatch.fnmatchcase(cid, pat) for pat in patterns):
            out.append(cid)
    return out


def admissible(case: Union[str, CongruenceCase], p: int) -> bool:
    case = get_case(case)
    return case.klass is None or p % 4 == case.klass


# ---------------------------------------------------------------------------
# exact summand (coherence oracle and the series twin)


def exact_term(case: Union[str, CongruenceCase], k: int) -> Fraction:
    """The k-th summand as an exact rational; central-sum cases only."""
    case = get_case(case)
    if case.kind != "central":
        raise ValueError(f"case {case.id} has no central summand")
    w = _exact_weight(case.weight, k)
    core = Fraction(central_binomial(k) ** case.e * case.sign**k, case.base**k)
    return core * w


def _exact_weight(code: str, k: int) -> Fraction:
    if code == "one":
        return Fraction(1)
    if code == "h1":
        return harmonic(k)
    if code == "h2":
        return harmonic(k, 2)
    if code == "o1":
        return odd_harmonic(k)
    if code == "o2":
        return odd_harmonic(k, 2)
    if code == "hdbl":
        return harmonic(2 * k)
    if code == "hdbl_minus_h1":
        return harmonic(2 * k) - harmonic(k)
    if code == "inv_k":
        return Fraction(1, k) if k else Fraction(0)
    if code == "fourk1":
        return Fraction(4 * k + 1)
    if code.startswith("aff"):
        d = int(code[3:])
        return 2 - d * (4 * k + 1) * harmonic(k)
    raise ValueError(f"unknown weight {code!r}")


# ---------------------------------------------------------------------------
# modular weight tables


def _weight_arrays(p: int, pm: int, code: str, kmax: int) -> Tuple[array, array]:
    """Scaled residues of w_k for k = 0..kmax at modulus pm."""
    if code == "one":
        return array("q", [0] * (kmax + 1)), array("q", [1] * (kmax + 1))
    if code in ("h1", "h2"):
        return kernels.harmonic_padic(p, pm, kmax, 2 if code == "h2" else 1, "h")
    if code in ("o1", "o2"):
        return kernels.harmonic_padic(p, pm, kmax, 2 if code == "o2" else 1, "o")
    if code == "hdbl":
        return kernels.harmonic_padic(p, pm, kmax, 1, "dbl")
    if code == "hdbl_minus_h1":
        sd, rd = kernels.harmonic_padic(p, pm, kmax, 1, "dbl")
        sh, rh = kernels.harmonic_padic(p, pm, kmax, 1, "h")
        return _combine(p, pm, sd, rd, 1, sh, rh, -1)
    if code == "inv_k":
        scales = array("q", [0])
        res = array("q", [0])
        for k in range(1, kmax + 1):
            v, unit = 0, k
            while unit % p == 0:
                unit //= p
                v += 1
            scales.append(-v)
            res.append(inv_mod(unit, pm))
        return scales, res
    if code == "fourk1":
        scales = array("q")
        res = array("q")
        for k in range(kmax + 1):
            v, unit = 0, 4 * k + 1
            while unit % p == 0:
                unit //= p
                v += 1
            scales.append(v)
            res.append(unit % pm)
        return scales, res
    if code.startswith("aff"):
        d = int(code[3:])
        sh, rh = kernels.harmonic_padic(p, pm, kmax, 1, "h")
        sa = array("q")
        ra = array("q")
        for k in range(kmax + 1):
            # d(4k+1) H_k at its own scale
            v, unit = 0, d * (4 * k + 1)
            while unit % p == 0:
                unit //= p
                v += 1
            s1, r1 = sh[k] + v, rh[k] * unit % pm
            s, r = _add_scaled(p, pm, 0, 2, s1, (pm - r1) % pm)
            sa.append(s)
            ra.append(r)
        return sa, ra
    raise ValueError(f"unknown weight {code!r}")


def _add_scaled(p: int, pm: int, s1: int, r1: int, s2: int, r2: int) -> Tuple[int, int]:
    if r1 == 0:
        return s2, r2
    if r2 == 0:
        return s1, r1
    s = min(s1, s2)
    r = (r1 * p ** (s1 - s) + r2 * p ** (s2 - s)) % pm
    return s, r


def _combine(p, pm, s1, r1, c1, s2, r2, c2) -> Tuple[array, array]:
    scales = array("q")
    res = array("q")
    for k in range(len(s1)):
        a = r1[k] * c1 % pm
        b = r2[k] * c2 % pm
        s, r = _add_scaled(p, pm, s1[k], a, s2[k], b)
        scales.append(s)
        res.append(r)
    return scales, res


# ---------------------------------------------------------------------------
# engine


def _work_precision(m: int) -> int:
    return m + GUARD_DIGITS


def _scaled_to_value(p: int, M: int, m: int, scale: int, res: int) -> PadicValue:
    v, u = kernels.normalize_scaled(p, p**M, scale, res)
    ctx = PrimePowerCtx(p, m)
    if v is None:
        return PadicValue.zero(ctx)
    return PadicValue(ctx, v, u % ctx.modulus)


def _central_sum(p: int, m: int, e: int, base: int, weight: str, sign: int,
                 k_lo: int) -> PadicValue:
    M = _work_precision(m)
    pm = p**M
    ws, wr = _weight_arrays(p, pm, weight, p - 1)
    binv = inv_mod(base % pm, pm)
    s, r = kernels.weighted_sum(
        p, pm, kernels.CORE_CENTRAL, 0, e, binv, sign, k_lo, p - 1, ws, wr
    )
    return _scaled_to_value(p, M, m, s, r)


def _row_sum(p: int, m: int, weight: str, k_lo: int) -> PadicValue:
    n = (p - 1) // 2
    M = _work_precision(m)
    pm = p**M
    ws, wr = _weight_arrays(p, pm, weight, n)
    s, r = kernels.weighted_sum(
        p, pm, kernels.CORE_ROW, n, 3, 1, -1, k_lo, n, ws, wr
    )
    return _scaled_to_value(p, M, m, s, r)


def eval_truncated_sum(case: Union[str, CongruenceCase], p: int) -> PadicValue:
    """Left side of a sum-shaped case as a PadicValue at precision p^m."""
    case = get_case(case)
    if case.kind == "central":
        return _central_sum(p, case.m, case.e, case.base, case.weight, case.sign, case.k_lo)
    if case.kind == "row":
        return _row_sum(p, case.m, "hdbl", 1)
    if case.kind == "clausen":
        return _central_sum(p, case.m, 2, 32, "one", 1, 0)
    if case.kind == "direct":
        return padic_reduce(case.lhs_fn(p), PrimePowerCtx(p, case.m))
    raise ValueError(f"case {case.id} has no single truncated sum")


def eval_rhs(case: Union[str, CongruenceCase], p: int,
             data: Optional[PrimeData] = None) -> PadicValue:
    """Right side of a case as a PadicValue at precision p^m."""
    case = get_case(case)
    ctx = PrimePowerCtx(p, case.m)
    if case.rhs_fn is not None:
        return padic_reduce(case.rhs_fn(p, data or PrimeData(p)), ctx)
    if case.id == "remark_q":
        total = _central_sum(p, 1, 3, 64, "one", 1, 0)
        return padic_reduce(Fraction(fermat_quotient(2, p)), ctx) * total
    if case.id in ("remark_0_H", "remark_0_H2K"):
        return PadicValue.zero(ctx)
    if case.id == "E07sum":
        s2 = _row_sum(p, case.m, "h2", 0)
        return padic_reduce(Fraction(-p, 4), ctx) * s2
    if case.id == "clausen_trunc":
        return _central_sum(p, case.m, 3, 64, "one", 1, 0)
    raise ValueError(f"case {case.id} has no rhs recipe")


def _family_points(case_id: str, p: int) -> List[Tuple[Fraction, Fraction]]:
    n = (p - 1) // 2
    pts = []
    for k in range(n + 1):
        if case_id == "fam_E01":
            lhs = Fraction(binomial(n, k) * binomial(n + k, k) * (-1) ** k)
            rhs = Fraction(central_binomial(k) ** 2, 16**k)
        elif case_id == "fam_E02":
            lhs = Fraction(central_binomial(k), 4**k)
            rhs = (-1) ** k * binomial(n, k) * (
                1 - Fraction(p, 2) * (harmonic(n) - harmonic(n - k))
            )
        elif case_id == "fam_E06":
            lhs = harmonic(2 * k)
            rhs = Fraction(1, 2) * (harmonic(k) + harmonic(n - k) - harmonic(n))
        elif case_id == "fam_E11":
            lhs = odd_harmonic(k, 2)
            rhs = -Fraction(1, 4) * harmonic(n - k, 2)
        else:
            raise ValueError(f"unknown family {case_id}")
        pts.append((lhs, rhs))
    return pts


def verify(case: Union[str, CongruenceCase], p: int,
           data: Optional[PrimeData] = None) -> VerificationReport:
    """Check one case at one prime; p must be admissible (see admissible())."""
    case = get_case(case)
    if not admissible(case, p):
        return VerificationReport(case.id, p, case.m, (None, 0), (None, 0),
                                  True, 0, skipped=True)
    t0 = time.perf_counter_ns()
    ctx = PrimePowerCtx(p, case.m)
    if case.kind == "family":
        lhs_pair = rhs_pair = (None, 0)
        ok = True
        for lq, rq in _family_points(case.id, p):
            lv = padic_reduce(lq, ctx)
            rv = padic_reduce(rq, ctx)
            lhs_pair, rhs_pair = _pair(lv), _pair(rv)
            if not padic_compare(lv, rv):
                ok = False
                break
    else:
        lhs = eval_truncated_sum(case, p)
        rhs = eval_rhs(case, p, data)
        if case.kind == "clausen":
            lhs = lhs * lhs
        lhs_pair, rhs_pair = _pair(lhs), _pair(rhs)
        ok = padic_compare(lhs, rhs)
    micros = (time.perf_counter_ns() - t0) // 1000
    return VerificationReport(case.id, p, case.m, lhs_pair, rhs_pair, ok, micros)


def _verify_prime(args: Tuple[Sequence[str], int]) -> List[VerificationReport]:
    ids, p = args
    data = PrimeData(p)
    return [verify(cid, p, data) for cid in ids]


def verify_range(case_ids_or_globs: Sequence[str], p_lo: int, p_hi: int,
                 workers: int = 1, fail_fast: bool = False) -> List[VerificationReport]:
    """Run the given cases over all primes in [p_lo, p_hi].

    Inadmissible (case, p) pairs are reported as skips.  Output is sorted by
    (case id, p) and is independent of the worker count.
    """
    ids = match_ids(case_ids_or_globs)
    if not ids:
        raise KeyError(f"no congruence case matches {list(case_ids_or_globs)!r}")
    primes = [p for p in primes_in(p_lo, p_hi) if p > 3]
    reports: List[VerificationReport] = []
    if workers > 1 and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_verify_prime, [(ids, p) for p in primes]):
                reports.extend(chunk)
                if fail_fast and any(not r.passed for r in chunk):
                    break
    else:
        for p in primes:
            chunk = _verify_prime((ids, p))
            reports.extend(chunk)
            if fail_fast and any(not r.passed for r in chunk):
                break
    reports.sort(key=lambda r: (r.case, r.p))
    return reports
