"""High-precision evaluation of the infinite central-binomial series.

Ten registry entries: six positive series with k^(-3/2)-scale terms (with
and without harmonic-type weights), slowly convergent, handled as N exact
terms plus an Euler-Maclaurin tail over the term asymptotics; three
alternating series handled by iterated averaging of the trailing partial
sums; and one geometrically convergent square-of-2F1 series handled by
direct continuation with a ratio bound.

Closed forms use only pi, ln 2, Catalan's constant G, and Gamma(3/4).
constants() builds them from scratch: pi/ln2/euler from mpmath's standard
algorithms, Gamma(1/4) from the AGM relation Gamma(1/4)^2 =
2 sqrt(2 pi) pi / AGM(1, sqrt 2), Gamma(3/4) by reflection, and G by the
Cohen-Villegas-Zagier acceleration of sum (-1)^k/(2k+1)^2.

Tolerances are registry data.  The positive series also carry a bracketing
certificate independent of tail-model accuracy: terms are positive, so
partial <= closed, and the model tail inflated by (1 + 4/N) dominates the
true tail by a wide margin against the O(1/N) model truncation error.

exact_term gives the k-th summand as a BigRational; it must (and does)
agree with the congruence registry's summand for the partnered truncated
congruence, see PARTNERS.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from mpmath import mp, mpf

from .seqs import central_binomial, harmonic, odd_harmonic

__all__ = [
    "SeriesCase",
    "SERIES",
    "PARTNERS",
    "series_ids",
    "get_series",
    "constants",
    "evaluate_series",
    "psi_value_checks",
    "exact_term",
]

POSITIVE_TOL = 1e-6
WEIGHTED_TOL = 1e-4


@dataclass(frozen=True)
class SeriesCase:
    id: str
    kind: str  # positive | alternating | geometric
    tolerance: float
    statement: str


SERIES: Dict[str, SeriesCase] = {}


def _add(case: SeriesCase) -> None:
    SERIES[case.id] = case


_add(SeriesCase("E20", "positive", POSITIVE_TOL,
                "sum C(2k,k)^3/64^k == pi/Gamma(3/4)^4"))
_add(SeriesCase("E22", "geometric", POSITIVE_TOL,
                "sum C(2k,k)^2/32^k == sqrt(pi)/Gamma(3/4)^2"))
_add(SeriesCase("S321_H", "positive", WEIGHTED_TOL,
                "sum C(2k,k)^3 H_k/64^k == 2 pi (pi - 3 ln 2)/(3 Gamma(3/4)^4)"))
_add(SeriesCase("S321_O", "positive", WEIGHTED_TOL,
                "sum C(2k,k)^3 O_k/64^k == pi^2/(6 Gamma(3/4)^4)"))
_add(SeriesCase("S322_H2", "positive", WEIGHTED_TOL,
                "sum C(2k,k)^3 H2_k/64^k == pi (12G - pi^2)/(3 Gamma(3/4)^4)"))
_add(SeriesCase("S322_O2", "positive", WEIGHTED_TOL,
                "sum C(2k,k)^3 O2_k/64^k == pi (pi^2 - 8G)/(8 Gamma(3/4)^4)"))
_add(SeriesCase("E61", "alternating", WEIGHTED_TOL,
                "sum (-1)^k C(2k,k)^3 (2-3(4k+1)H_k)/64^k == 12 ln 2/pi"))
_add(SeriesCase("E62", "alternating", WEIGHTED_TOL,
                "sum (-1)^k C(2k,k)^5 (2-5(4k+1)H_k)/1024^k == 4(15 ln 2 - 2 pi)/(3 Gamma(3/4)^4)"))
_add(SeriesCase("VH_B1", "alternating", POSITIVE_TOL,
                "sum (-1)^k (4k+1) C(2k,k)^3/64^k == 2/pi"))
_add(SeriesCase("VH_A1", "alternating", POSITIVE_TOL,
                "sum (-1)^k (4k+1) C(2k,k)^5/1024^k == 2/Gamma(3/4)^4"))

# series id -> congruence registry id with the identical summand
PARTNERS: Dict[str, str] = {
    "E20": "H2_improved",
    "E22": "E23",
    "S321_H": "C321",
    "S321_O": "E09",
    "S322_H2": "C322",
    "S322_O2": "E10",
    "E61": "E63",
    "E62": "E65",
    "VH_B1": "VH_B2",
    "VH_A1": "VH_A2",
}


def series_ids() -> List[str]:
    return list(SERIES)


def get_series(sid: Union[str, SeriesCase]) -> SeriesCase:
    if isinstance(sid, SeriesCase):
        return sid
    try:
        return SERIES[sid]
    except KeyError:
        raise KeyError(f"unknown series {sid!r}") from None


# ---------------------------------------------------------------------------
# constants


def _agm(a, b, eps):
    while abs(a - b) > eps:
        a, b = (a + b) / 2, mp.sqrt(a * b)
    return a


def _catalan_cvz(n: int):
    # Cohen-Villegas-Zagier acceleration of beta(2); error ~ (3+2 sqrt 2)^-n
    d = (3 + 2 * mp.sqrt(2)) ** n
    d = (d + 1 / d) / 2
    b, c, s = mpf(-1), -d, mpf(0)
    for k in range(n):
        c = b - c
        s += c / mpf(2 * k + 1) ** 2
        b = (k + n) * (k - n) * b / ((k + mpf(1) / 2) * (k + 1))
    return s / d


def constants(precision_bits: int) -> Dict[str, mpf]:
    """pi, ln2, catalan, gamma14, gamma34 (plus euler) at the given precision.

    All values are computed with 16 guard bits and are accurate to ~2 ulp.
    """
    if precision_bits < 64:
        raise ValueError("precision must be at least 64 bits")
    with mp.workprec(precision_bits + 16):
        pi = +mp.pi
        ln2 = mp.ln(2)
        euler = +mp.euler
        agm = _agm(mpf(1), mp.sqrt(2), mpf(2) ** (-(precision_bits + 8)))
        g14 = mp.sqrt(2 * mp.sqrt(2 * pi) * pi / agm)
        g34 = pi * mp.sqrt(2) / g14
        iters = max(64, precision_bits // 2 + 32)
        catalan = _catalan_cvz(iters)
    return {
        "pi": pi,
        "ln2": ln2,
        "euler": euler,
        "catalan": catalan,
        "gamma14": g14,
        "gamma34": g34,
    }


def _closed_form(sid: str, c: Dict[str, mpf]):
    pi, ln2, G = c["pi"], c["ln2"], c["catalan"]
    g4 = c["gamma34"] ** 4
    if sid == "E20":
        return pi / g4
    if sid == "E22":
        return mp.sqrt(pi) / c["gamma34"] ** 2
    if sid == "S321_H":
        return 2 * pi * (pi - 3 * ln2) / (3 * g4)
    if sid == "S321_O":
        return pi**2 / (6 * g4)
    if sid == "S322_H2":
        return pi * (12 * G - pi**2) / (3 * g4)
    if sid == "S322_O2":
        return pi * (pi**2 - 8 * G) / (8 * g4)
    if sid == "E61":
        return 12 * ln2 / pi
    if sid == "E62":
        return 4 * (15 * ln2 - 2 * pi) / (3 * g4)
    if sid == "VH_B1":
        return 2 / pi
    if sid == "VH_A1":
        return 2 / g4
    raise KeyError(sid)


# ---------------------------------------------------------------------------
# exact terms (shared recipes with the congruence registry)


def exact_term(sid: str, k: int) -> Fraction:
    cb = central_binomial(k)
    if sid == "E20":
        return Fraction(cb**3, 64**k)
    if sid == "E22":
        return Fraction(cb**2, 32**k)
    if sid == "S321_H":
        return Fraction(cb**3, 64**k) * harmonic(k)
    if sid == "S321_O":
        return Fraction(cb**3, 64**k) * odd_harmonic(k)
    if sid == "S322_H2":
        return Fraction(cb**3, 64**k) * harmonic(k, 2)
    if sid == "S322_O2":
        return Fraction(cb**3, 64**k) * odd_harmonic(k, 2)
    if sid == "E61":
        return Fraction((-1) ** k * cb**3, 64**k) * (2 - 3 * (4 * k + 1) * harmonic(k))
    if sid == "E62":
        return Fraction((-1) ** k * cb**5, 1024**k) * (2 - 5 * (4 * k + 1) * harmonic(k))
    if sid == "VH_B1":
        return Fraction((-1) ** k * (4 * k + 1) * cb**3, 64**k)
    if sid == "VH_A1":
        return Fraction((-1) ** k * (4 * k + 1) * cb**5, 1024**k)
    raise KeyError(f"unknown series {sid!r}")


# ---------------------------------------------------------------------------
# incremental term generator


def _gen_terms(sid: str, n_terms: int):
    """Yield t_0 .. t_{n_terms} as mpf at the current working precision."""
    c = mpf(1)  # C(2k,k)/4^k
    hk = mpf(0)
    h2k = mpf(0)
    ok = mpf(0)
    o2k = mpf(0)
    for k in range(n_terms + 1):
        if k:
            c = c * (2 * k - 1) / (2 * k)
            hk += mpf(1) / k
            h2k += mpf(1) / (k * k)
            ok += mpf(1) / (2 * k - 1)
            o2k += mpf(1) / ((2 * k - 1) ** 2)
        c3 = c * c * c
        if sid == "E20":
            yield c3
        elif sid == "E22":
            yield c * c / mpf(2) ** k
        elif sid == "S321_H":
            yield c3 * hk
        elif sid == "S321_O":
            yield c3 * ok
        elif sid == "S322_H2":
            yield c3 * h2k
        elif sid == "S322_O2":
            yield c3 * o2k
        elif sid == "E61":
            yield (2 - 3 * (4 * k + 1) * hk) * c3 * (-1) ** k
        elif sid == "E62":
            yield (2 - 5 * (4 * k + 1) * hk) * c3 * c * c * (-1) ** k
        elif sid == "VH_B1":
            yield (4 * k + 1) * c3 * (-1) ** k
        elif sid == "VH_A1":
            yield (4 * k + 1) * c3 * c * c * (-1) ** k
        else:
            raise KeyError(f"unknown series {sid!r}")


# ---------------------------------------------------------------------------
# tails

# term_k ~ sum over (s, j, coeff): coeff * k^-s * ln(k)^j, two correction
# orders below the leading k^-3/2; coefficient builders take the constants
def _tail_family(sid: str, c: Dict[str, mpf]) -> List[Tuple[mpf, int, mpf]]:
    pi, ln2, gE = c["pi"], c["ln2"], c["euler"]
    P = pi ** mpf("-1.5")
    h = mpf(1) / 2
    if sid == "E20":
        return [(mpf(3) / 2, 0, P), (mpf(5) / 2, 0, -3 * P / 8),
                (mpf(7) / 2, 0, 9 * P / 128)]
    if sid == "S321_H":
        return [(mpf(3) / 2, 1, P), (mpf(3) / 2, 0, gE * P),
                (mpf(5) / 2, 1, -3 * P / 8), (mpf(5) / 2, 0, P * (h - 3 * gE / 8)),
                (mpf(7) / 2, 1, 9 * P / 128),
                (mpf(7) / 2, 0, P * (9 * gE / 128 - mpf(3) / 16 - mpf(1) / 12))]
    if sid == "S321_O":
        L = ln2 + gE / 2
        return [(mpf(3) / 2, 1, P / 2), (mpf(3) / 2, 0, L * P),
                (mpf(5) / 2, 1, -3 * P / 16), (mpf(5) / 2, 0, -3 * P * L / 8),
                (mpf(7) / 2, 1, 9 * P / 256),
                (mpf(7) / 2, 0, P * (9 * L / 128 + mpf(1) / 48))]
    if sid == "S322_H2":
        Z = pi * pi / 6
        return [(mpf(3) / 2, 0, P * Z), (mpf(5) / 2, 0, P * (-1 - 3 * Z / 8)),
                (mpf(7) / 2, 0, P * (h + mpf(3) / 8 + 9 * Z / 128))]
    if sid == "S322_O2":
        Z = pi * pi / 8
        return [(mpf(3) / 2, 0, P * Z), (mpf(5) / 2, 0, P * (-mpf(1) / 4 - 3 * Z / 8)),
                (mpf(7) / 2, 0, P * (mpf(3) / 32 + 9 * Z / 128))]
    raise KeyError(sid)


def _tail_model(sid: str, N: int, c: Dict[str, mpf]):
    """Euler-Maclaurin tail: integral of the asymptotic family over (N, inf)
    minus f(N)/2 minus f'(N)/12."""
    T = mpf(0)
    lnN = mp.ln(N)
    for s, j, cf in _tail_family(sid, c):
        Npow = mpf(N) ** (1 - s)
        if j == 0:
            integral = Npow / (s - 1)
        else:
            integral = Npow * (lnN / (s - 1) + 1 / (s - 1) ** 2)
        f = cf * mpf(N) ** (-s) * lnN**j
        fp = cf * (-s) * mpf(N) ** (-s - 1) * lnN**j
        if j:
            fp += cf * j * mpf(N) ** (-s - 1) * lnN ** (j - 1)
        T += cf * integral - f / 2 - fp / 12
    return T


_AVG_LEVELS = 32


def _averaged_limit(partials: Sequence[mpf]):
    """Iterated pairwise means of the last _AVG_LEVELS+1 partial sums."""
    w = list(partials[-(_AVG_LEVELS + 1):])
    while len(w) > 1:
        w = [(w[i] + w[i + 1]) / 2 for i in range(len(w) - 1)]
    return w[0]


def _geometric_continuation(N: int, last_c: mpf, partial: mpf):
    """Extend C(2k,k)^2/32^k past N; ratio < 1/2 so 64 extra terms leave a
    remainder below the last added term."""
    extra = mpf(0)
    cc = last_c
    k = N
    for _ in range(64):
        k += 1
        cc = cc * (mpf(2 * k - 1) / (2 * k)) ** 2 / 2
        extra += cc
    return extra, cc


def evaluate_series(sid: str, n_terms: int, precision_bits: int) -> Dict[str, object]:
    """Partial sum + tail estimate vs closed form.

    Returns partial, tail_estimate, closed_form, abs_gap, rel_gap, tolerance,
    passed, plus an upper tail bound for the positive/geometric kinds and,
    for the slow positive entries, the bracketing verdict
    closed in [partial, partial + tail_upper]; a true bracket passes the
    case even when the digit gap is large.
    """
    case = get_series(sid)
    if n_terms < 10:
        raise ValueError("need at least 10 terms")
    with mp.workprec(precision_bits):
        consts = constants(precision_bits)
        closed = _closed_form(case.id, consts)
        partial = mpf(0)
        window: List[mpf] = []
        last_term = mpf(0)
        for t in _gen_terms(case.id, n_terms):
            partial += t
            last_term = t
            if case.kind == "alternating":
                window.append(partial)
                if len(window) > _AVG_LEVELS + 1:
                    window.pop(0)
        upper = None
        bracket_ok = None
        if case.kind == "positive":
            tail = _tail_model(case.id, n_terms, consts)
            upper = tail * (1 + mpf(4) / n_terms) + abs(closed) * mpf(2) ** (
                -precision_bits // 2
            )
        elif case.kind == "geometric":
            # tail is sub-ulp for N >= ~500, so no bracketing certificate here;
            # the invariant only covers the k^(-3/2) entries anyway
            extra, bound = _geometric_continuation(n_terms, last_term, partial)
            tail = extra
            upper = extra + bound
        else:
            est = _averaged_limit(window)
            tail = est - partial
        if case.kind == "positive":
            bracket_ok = bool(partial <= closed <= partial + upper)
        est = partial + tail
        abs_gap = abs(est - closed)
        rel_gap = abs_gap / abs(closed)
        passed = bool(rel_gap <= case.tolerance) or bracket_ok is True
        return {
            "id": case.id,
            "kind": case.kind,
            "n_terms": n_terms,
            "partial": partial,
            "tail_estimate": tail,
            "closed_form": closed,
            "abs_gap": abs_gap,
            "rel_gap": rel_gap,
            "tolerance": case.tolerance,
            "passed": passed,
            "tail_upper": upper,
            "bracket_ok": bracket_ok,
        }


def psi_value_checks(precision_bits: int) -> bool:
    """Digamma/trigamma special values against independently built constants.

    psi(1/2)-psi(1) = -ln 4, psi(1/4)-psi(1) = -ln 8 - pi/2,
    psi(3/4)-psi(1) = -ln 8 + pi/2, psi1(1/4) = pi^2 + 8G,
    psi1(3/4) = pi^2 - 8G.  psi comes from mpmath's reflection/recurrence
    machinery, the right sides from constants(); agreement within
    2^(1 - precision/2) closes the loop on both.
    """
    with mp.workprec(precision_bits):
        c = constants(precision_bits)
        pi, ln2, G = c["pi"], c["ln2"], c["catalan"]
        tol = mpf(2) ** (1 - precision_bits // 2)
        q = mpf(1) / 4
        checks = [
            mp.psi(0, mpf(1) / 2) - mp.psi(0, 1) + 2 * ln2,
            mp.psi(0, q) - mp.psi(0, 1) + 3 * ln2 + pi / 2,
            mp.psi(0, 3 * q) - mp.psi(0, 1) + 3 * ln2 - pi / 2,
            mp.psi(1, q) - (pi**2 + 8 * G),
            mp.psi(1, 3 * q) - (pi**2 - 8 * G),
        ]
        return all(abs(x) <= tol for x in checks)
