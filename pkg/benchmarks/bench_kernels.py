"""Benchmark the pure-Python kernels against the compiled extension.

Runs the three table builders and the weighted-sum inner loop on both
backends at a configurable prime power and reports best-of-N wall times.

Usage:
    python3 benchmarks/bench_kernels.py [--p 199] [--m 2] [--repeat 5]
"""

import argparse
import sys
import time

from cbsums import kernels
from cbsums.kernels import pure


def _best(fn, repeat):
    best = None
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, out


def _jobs(p, pm):
    points = list(range(pm))
    kmax = pm - 1
    hs, hr = pure.harmonic_padic(p, pm, kmax, 1, "h")
    binv = pow(64, -1, pm)
    return [
        ("gamma_points", lambda b: b.gamma_points(p, pm, points)),
        ("central_binomial", lambda b: b.central_binomial_padic(p, pm, kmax)),
        ("harmonic r=1", lambda b: b.harmonic_padic(p, pm, kmax, 1, "h")),
        ("weighted_sum e=3", lambda b: b.weighted_sum(
            p, pm, pure.CORE_CENTRAL, 0, 3, binv, 1, 0, kmax, hs, hr)),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=199)
    ap.add_argument("--m", type=int, default=2)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    pm = args.p ** args.m
    ck = kernels._ckern
    print(f"p={args.p} m={args.m} (modulus {pm}), best of {args.repeat}")
    if ck is None:
        print("compiled extension not available; timing pure backend only")
    rows = []
    for name, job in _jobs(args.p, pm):
        t_pure, r_pure = _best(lambda: job(pure), args.repeat)
        if ck is not None and pm < (1 << 63):
            t_c, r_c = _best(lambda: job(ck), args.repeat)
            # both backends must agree element for element
            if isinstance(r_pure, tuple):
                same = all(list(a) == list(b) if hasattr(a, "__len__") else a == b
                           for a, b in zip(r_pure, r_c))
            else:
                same = list(r_pure) == list(r_c)
            if not same:
                print(f"MISMATCH in {name}", file=sys.stderr)
                return 1
            rows.append((name, t_pure, t_c))
        else:
            rows.append((name, t_pure, None))

    print(f"{'kernel':<20} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, tp, tc in rows:
        if tc is None:
            print(f"{name:<20} {tp * 1e3:>8.2f}ms {'-':>10} {'-':>8}")
        else:
            print(f"{name:<20} {tp * 1e3:>8.2f}ms {tc * 1e3:>8.2f}ms "
                  f"{tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
