"""Kernel backend selection.

The compiled extension (cbsums.kernels._ckern, Cython) is preferred when it
imports cleanly and the modulus fits in 63 bits; the pure-Python twin in
cbsums.kernels.pure is the fallback and the reference implementation.  Set
CBSUMS_KERNEL=pure or CBSUMS_KERNEL=c to force one side; forcing c without
the extension installed raises at import time.
"""

from __future__ import annotations

import importlib
import os

from . import pure as _pure
from .pure import CORE_CENTRAL, CORE_ROW, normalize_scaled

# explicit import_module: a `from . import _ckern` here would short-circuit
# on the sentinel attribute and never load the extension
_ckern = None
_forced = os.environ.get("CBSUMS_KERNEL", "").strip().lower()
if _forced not in ("", "pure", "c"):
    raise ImportError(f"CBSUMS_KERNEL must be 'pure' or 'c', not {_forced!r}")
if _forced != "pure":
    try:
        _ckern = importlib.import_module("._ckern", __name__)
    except ImportError:
        _ckern = None
        if _forced == "c":
            raise

BACKEND = "c" if _ckern is not None else "pure"

# compiled kernels hold residues in 64-bit words; sums need one bit of
# headroom, so only route moduli below 2**63 to the extension
_C_LIMIT = 1 << 63


def _use_c(pm: int) -> bool:
    return _ckern is not None and pm < _C_LIMIT


def gamma_points(p, pm, points):
    if _use_c(pm):
        return _ckern.gamma_points(p, pm, list(points))
    return _pure.gamma_points(p, pm, points)


def central_binomial_padic(p, pm, kmax):
    if _use_c(pm):
        return _ckern.central_binomial_padic(p, pm, kmax)
    return _pure.central_binomial_padic(p, pm, kmax)


def row_binomial_padic(n, p, pm):
    if _use_c(pm):
        return _ckern.row_binomial_padic(n, p, pm)
    return _pure.row_binomial_padic(n, p, pm)


def row_shift_binomial_padic(n, p, pm):
    if _use_c(pm):
        return _ckern.row_shift_binomial_padic(n, p, pm)
    return _pure.row_shift_binomial_padic(n, p, pm)


def harmonic_padic(p, pm, kmax, r, kind):
    if _use_c(pm):
        return _ckern.harmonic_padic(p, pm, kmax, r, kind)
    return _pure.harmonic_padic(p, pm, kmax, r, kind)


def weighted_sum(p, pm, core, nrow, e, binv, sign, klo, khi, wscales, wres):
    if _use_c(pm):
        return _ckern.weighted_sum(
            p, pm, core, nrow, e, binv, sign, klo, khi, wscales, wres
        )
    return _pure.weighted_sum(
        p, pm, core, nrow, e, binv, sign, klo, khi, wscales, wres
    )


__all__ = [
    "BACKEND",
    "CORE_CENTRAL",
    "CORE_ROW",
    "gamma_points",
    "central_binomial_padic",
    "row_binomial_padic",
    "row_shift_binomial_padic",
    "harmonic_padic",
    "weighted_sum",
    "normalize_scaled",
]
