"""Pure-Python kernel implementations.

Shared conventions with the compiled twin (cbsums.kernels._ckern):

  * "scaled residue" tables: arrays (scales, res) with value_k congruent to
    p**scales[k] * res[k] modulo p**(scales[k] + M) where pm = p**M.  Scales
    are 0 for p-adic integers and go negative when a 1/p enters (H_{2k},
    O_k^(r) past the crossing index).
  * gamma_points evaluates the Morita factorial product Gamma_p(n) =
    (-1)^n prod_{0<=j<n, p !| j} j  (mod pm) for integer points in one
    ascending sweep.
  * weighted_sum accumulates sum_k sign^k * core(k)^e * binv^k * w_k at a
    dynamic scale; rescaling on a drop in valuation is what keeps the result
    exact to the guard-digit bound documented in cbsums.padic.

Everything here is deliberately loop-shaped so the two backends stay line
comparable; speed in this module comes only from chunked big-int products in
the gamma sweep.
"""

from __future__ import annotations

from array import array
from math import prod
from typing import List, Sequence, Tuple

CORE_CENTRAL = 0  # C(2k,k)
CORE_ROW = 1  # C(n,k), n fixed

_CHUNK = 64


def _vp(n: int, p: int) -> Tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def gamma_points(p: int, pm: int, points: Sequence[int]) -> List[int]:
    """Morita gamma at integer arguments, one running product.

    Each point must lie in [0, pm).  Output order matches input order.
    """
    order = sorted(set(points))
    if order and not (0 <= order[0] and order[-1] < pm):
        raise ValueError("points must lie in [0, pm)")
    out = {}
    acc = 1
    cur = 0
    block: List[int] = []
    for t in order:
        for j in range(cur, t):
            if j % p:
                block.append(j)
                if len(block) >= _CHUNK:
                    acc = acc * prod(block) % pm
                    block.clear()
        if block:
            acc = acc * prod(block) % pm
            block.clear()
        cur = t
        out[t] = (pm - acc) % pm if t % 2 else acc % pm
    return [out[t] for t in points]


def central_binomial_padic(p: int, pm: int, kmax: int) -> Tuple[array, array]:
    """C(2k,k) as (valuations, units) for k = 0..kmax."""
    vs = array("q")
    us = array("q")
    cv, cu = 0, 1
    for k in range(kmax + 1):
        if k:
            dv1, m1 = _vp(2 * k - 1, p)
            dv2, m2 = _vp(k, p)
            cv += dv1 - dv2
            cu = cu * 2 * m1 % pm * pow(m2, -1, pm) % pm
        vs.append(cv)
        us.append(cu)
    return vs, us


def row_binomial_padic(n: int, p: int, pm: int) -> array:
    """C(n,k) mod pm for k = 0..n; requires n < p so every value is a unit."""
    if n >= p:
        raise ValueError("row table needs n < p")
    us = array("q")
    c = 1
    for k in range(n + 1):
        if k:
            c = c * (n - k + 1) % pm * pow(k, -1, pm) % pm
        us.append(c)
    return us


def row_shift_binomial_padic(n: int, p: int, pm: int) -> array:
    """C(n+k,k) mod pm for k = 0..n; requires 2n < p so every value is a unit."""
    if 2 * n >= p:
        raise ValueError("shifted row table needs 2n < p")
    us = array("q")
    c = 1
    for k in range(n + 1):
        if k:
            c = c * (n + k) % pm * pow(k, -1, pm) % pm
        us.append(c)
    return us


def harmonic_padic(p: int, pm: int, kmax: int, r: int, kind: str) -> Tuple[array, array]:
    """Scaled residues of H_k^(r) ('h'), O_k^(r) ('o') or H_{2k} ('dbl', r = 1).

    Entry k is the running sum after k steps; 'dbl' adds 1/(2k-1) + 1/(2k)
    per step so index k holds H_{2k}.
    """
    if kind not in ("h", "o", "dbl"):
        raise ValueError(f"unknown kind {kind!r}")
    if kind == "dbl" and r != 1:
        raise ValueError("dbl table is order 1 only")
    scales = array("q")
    res = array("q")
    scale, acc = 0, 0

    def add(j: int) -> Tuple[int, int]:
        nonlocal scale, acc
        t, unit = _vp(j, p)
        ts = -r * t
        tr = pow(unit, -r, pm)
        if ts < scale:
            acc = acc * p ** (scale - ts) % pm
            scale = ts
        acc = (acc + tr * p ** (ts - scale)) % pm
        return scale, acc

    scales.append(0)
    res.append(0)
    for k in range(1, kmax + 1):
        if kind == "h":
            add(k)
        elif kind == "o":
            add(2 * k - 1)
        else:
            add(2 * k - 1)
            add(2 * k)
        scales.append(scale)
        res.append(acc)
    return scales, res


def weighted_sum(
    p: int,
    pm: int,
    core: int,
    nrow: int,
    e: int,
    binv: int,
    sign: int,
    klo: int,
    khi: int,
    wscales: Sequence[int],
    wres: Sequence[int],
) -> Tuple[int, int]:
    """sum_{k=klo}^{khi} sign^k * core(k)^e * binv^k * w_k, scaled residue.

    core: CORE_CENTRAL gives C(2k,k), CORE_ROW gives C(nrow,k).  The weight
    arrays are scaled residues indexed by k (index 0 .. khi at least).
    Returns (scale, res) with the sum congruent to p**scale * res; res == 0
    means zero at this precision.
    """
    cv, cu = 0, 1  # core value p^cv * cu
    bpow = 1
    sg = 1
    scale, acc = 0, 0
    for k in range(khi + 1):
        if k:
            if core == CORE_CENTRAL:
                dv1, m1 = _vp(2 * k - 1, p)
                dv2, m2 = _vp(k, p)
                cv += dv1 - dv2
                cu = cu * 2 * m1 % pm * pow(m2, -1, pm) % pm
            else:
                cu = cu * (nrow - k + 1) % pm * pow(k, -1, pm) % pm
            bpow = bpow * binv % pm
            if sign < 0:
                sg = -sg
        if k < klo:
            continue
        wr = wres[k]
        if wr == 0:
            continue
        ts = e * cv + wscales[k]
        tr = pow(cu, e, pm) * bpow % pm * wr % pm
        if sg < 0:
            tr = (pm - tr) % pm
        if ts < scale:
            acc = acc * p ** (scale - ts) % pm
            scale = ts
        acc = (acc + tr * p ** (ts - scale)) % pm
    return scale, acc


def normalize_scaled(p: int, pm: int, scale: int, res: int) -> Tuple[int, int]:
    """Strip p factors from a scaled residue: (v, unit), or (None, 0) for zero."""
    res %= pm
    if res == 0:
        return None, 0
    t, unit = _vp(res, p)
    return scale + t, unit % pm
