# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel twin of cbsums.kernels.pure.

Same functions, same scaled-residue conventions, same outputs bit for bit;
the dispatch layer only routes here when the modulus fits in 63 bits, so
residues live in 64-bit words and products go through unsigned __int128.
"""

from cpython cimport array

import array as _array

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

CORE_CENTRAL = 0
CORE_ROW = 1

cdef array.array _I64 = _array.array("q", [])


cdef inline u64 mulmod(u64 a, u64 b, u64 m):
    return <u64> ((<u128> a * b) % m)


cdef inline u64 powmod(u64 b, u64 e, u64 m):
    cdef u64 r = 1 % m
    b = b % m
    while e:
        if e & 1:
            r = mulmod(r, b, m)
        b = mulmod(b, b, m)
        e >>= 1
    return r


cdef inline u64 invmod(u64 a, u64 m) except? 0:
    # extended gcd; remainders stay non-negative, coefficients may not
    cdef i64 r0 = <i64> m, r1 = <i64> (a % m)
    cdef i64 s0 = 0, s1 = 1, q, t
    while r1:
        q = r0 / r1
        t = r0 - q * r1
        r0 = r1
        r1 = t
        t = s0 - q * s1
        s0 = s1
        s1 = t
    if r0 != 1:
        raise ZeroDivisionError("not a unit modulo pm")
    if s0 < 0:
        s0 += <i64> m
    return <u64> s0


cdef inline u64 strip(u64 n, u64 p, int *v):
    v[0] = 0
    while n % p == 0:
        n = n / p
        v[0] += 1
    return n


def gamma_points(p, pm, points):
    """Morita gamma at integer arguments, one running product.

    Each point must lie in [0, pm).  Output order matches input order.
    """
    order = sorted(set(points))
    # wraparound is off module-wide, so no order[-1] here
    if order and not (0 <= order[0] and order[len(order) - 1] < pm):
        raise ValueError("points must lie in [0, pm)")
    cdef u64 cp = p, cpm = pm
    cdef u64 acc = 1 % cpm, j, t, cur = 0
    out = {}
    for point in order:
        t = point
        j = cur
        while j < t:
            if j % cp:
                acc = mulmod(acc, j, cpm)
            j += 1
        cur = t
        out[point] = (cpm - acc) % cpm if t & 1 else acc
    return [out[t] for t in points]


def central_binomial_padic(p, pm, kmax):
    """C(2k,k) as (valuations, units) for k = 0..kmax."""
    cdef u64 cp = p, cpm = pm
    cdef Py_ssize_t n = kmax + 1, k
    cdef array.array vs = array.clone(_I64, n, zero=False)
    cdef array.array us = array.clone(_I64, n, zero=False)
    cdef i64[:] vsv = vs
    cdef i64[:] usv = us
    cdef i64 cv = 0
    cdef u64 cu = 1 % cpm, m1, m2
    cdef int dv1, dv2
    for k in range(n):
        if k:
            m1 = strip(2 * k - 1, cp, &dv1)
            m2 = strip(k, cp, &dv2)
            cv += dv1 - dv2
            cu = mulmod(mulmod(cu, (2 * m1) % cpm, cpm), invmod(m2, cpm), cpm)
        vsv[k] = cv
        usv[k] = <i64> cu
    return vs, us


def row_binomial_padic(n, p, pm):
    """C(n,k) mod pm for k = 0..n; requires n < p so every value is a unit."""
    if n >= p:
        raise ValueError("row table needs n < p")
    cdef u64 cpm = pm, c = 1 % cpm
    cdef i64 cn = n
    cdef Py_ssize_t size = n + 1, k
    cdef array.array us = array.clone(_I64, size, zero=False)
    cdef i64[:] usv = us
    for k in range(size):
        if k:
            c = mulmod(mulmod(c, <u64> (cn - k + 1), cpm), invmod(<u64> k, cpm), cpm)
        usv[k] = <i64> c
    return us


def row_shift_binomial_padic(n, p, pm):
    """C(n+k,k) mod pm for k = 0..n; requires 2n < p so every value is a unit."""
    if 2 * n >= p:
        raise ValueError("shifted row table needs 2n < p")
    cdef u64 cpm = pm, c = 1 % cpm
    cdef i64 cn = n
    cdef Py_ssize_t size = n + 1, k
    cdef array.array us = array.clone(_I64, size, zero=False)
    cdef i64[:] usv = us
    for k in range(size):
        if k:
            c = mulmod(mulmod(c, <u64> (cn + k), cpm), invmod(<u64> k, cpm), cpm)
        usv[k] = <i64> c
    return us


cdef inline void accum(u64 tr, i64 ts, u64 cp, u64 cpm, i64 *scale, u64 *acc):
    # fold p**ts * tr into the running scaled residue
    if ts < scale[0]:
        acc[0] = mulmod(acc[0], powmod(cp, <u64> (scale[0] - ts), cpm), cpm)
        scale[0] = ts
    acc[0] = (acc[0] + mulmod(tr, powmod(cp, <u64> (ts - scale[0]), cpm), cpm)) % cpm


def harmonic_padic(p, pm, kmax, r, kind):
    """Scaled residues of H_k^(r) ('h'), O_k^(r) ('o') or H_{2k} ('dbl', r = 1).

    Entry k is the running sum after k steps; 'dbl' adds 1/(2k-1) + 1/(2k)
    per step so index k holds H_{2k}.
    """
    if kind not in ("h", "o", "dbl"):
        raise ValueError(f"unknown kind {kind!r}")
    if kind == "dbl" and r != 1:
        raise ValueError("dbl table is order 1 only")
    cdef u64 cp = p, cpm = pm
    cdef int rr = r, mode = 0 if kind == "h" else (1 if kind == "o" else 2)
    cdef Py_ssize_t size = kmax + 1, k
    cdef array.array scales = array.clone(_I64, size, zero=False)
    cdef array.array res = array.clone(_I64, size, zero=False)
    cdef i64[:] sv = scales
    cdef i64[:] rv = res
    cdef i64 scale = 0, ts
    cdef u64 acc = 0, unit, tr
    cdef int t
    sv[0] = 0
    rv[0] = 0
    for k in range(1, size):
        if mode == 0:
            unit = strip(<u64> k, cp, &t)
        else:
            unit = strip(<u64> (2 * k - 1), cp, &t)
        ts = -(<i64> rr) * t
        tr = powmod(invmod(unit, cpm), <u64> rr, cpm)
        accum(tr, ts, cp, cpm, &scale, &acc)
        if mode == 2:
            unit = strip(<u64> (2 * k), cp, &t)
            ts = -(<i64> t)
            tr = invmod(unit, cpm)
            accum(tr, ts, cp, cpm, &scale, &acc)
        sv[k] = scale
        rv[k] = <i64> acc
    return scales, res


def weighted_sum(p, pm, core, nrow, e, binv, sign, klo, khi, wscales, wres):
    """sum_{k=klo}^{khi} sign^k * core(k)^e * binv^k * w_k, scaled residue.

    core: CORE_CENTRAL gives C(2k,k), CORE_ROW gives C(nrow,k).  The weight
    arrays are scaled residues indexed by k (index 0 .. khi at least).
    Returns (scale, res) with the sum congruent to p**scale * res; res == 0
    means zero at this precision.
    """
    cdef i64[:] wsv = wscales
    cdef i64[:] wrv = wres
    cdef u64 cp = p, cpm = pm, cbinv = binv
    cdef u64 cu = 1 % cpm, bpow = 1 % cpm, m1, m2, tr
    cdef i64 cv = 0, scale = 0, ts, cnrow = nrow
    cdef u64 acc = 0
    cdef int sg = 1, ccore = core, ce = e, csign = sign, dv1, dv2
    cdef Py_ssize_t k, cklo = klo, ckhi = khi
    cbinv = cbinv % cpm
    for k in range(ckhi + 1):
        if k:
            if ccore == 0:
                m1 = strip(<u64> (2 * k - 1), cp, &dv1)
                m2 = strip(<u64> k, cp, &dv2)
                cv += dv1 - dv2
                cu = mulmod(mulmod(cu, (2 * m1) % cpm, cpm), invmod(m2, cpm), cpm)
            else:
                cu = mulmod(mulmod(cu, <u64> (cnrow - k + 1), cpm), invmod(<u64> k, cpm), cpm)
            bpow = mulmod(bpow, cbinv, cpm)
            if csign < 0:
                sg = -sg
        if k < cklo:
            continue
        if wrv[k] == 0:
            continue
        ts = ce * cv + wsv[k]
        tr = mulmod(mulmod(powmod(cu, <u64> ce, cpm), bpow, cpm), <u64> wrv[k], cpm)
        if sg < 0:
            tr = (cpm - tr) % cpm
        if ts < scale:
            acc = mulmod(acc, powmod(cp, <u64> (scale - ts), cpm), cpm)
            scale = ts
        acc = (acc + mulmod(tr, powmod(cp, <u64> (ts - scale), cpm), cpm)) % cpm
    return scale, acc
