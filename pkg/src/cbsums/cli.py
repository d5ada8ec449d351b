"""Batch driver: scan primes, run identity/series suites, export reports.

Three subcommands. `verify` runs congruence cases over a prime range and/or
identity cases over an n range, `series` evaluates the infinite-series
registry at a given depth and precision, `list` dumps the registries.

Every check becomes one report record with the fields {kind, case, param,
lhs, rhs, modulus_or_tolerance, pass, micros} in all output formats.
Records are canonically ordered by (case id, parameter) before emission and
the micros field is zeroed, so output bytes are reproducible across worker
counts; wall-clock totals go to stderr instead.  Inadmissible (case, prime)
pairs and out-of-domain n are filtered out, not reported.

Exit status: 0 if every emitted report passes, 1 if any fails, 2 on usage
errors (bad ranges, unknown case ids, malformed flags).
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fnmatch import fnmatchcase
from typing import Dict, List, Optional, Sequence, Tuple

from mpmath import mp

from . import congruences, identities
from . import series as series_mod

RECORD_FIELDS = ("kind", "case", "param", "lhs", "rhs",
                 "modulus_or_tolerance", "pass", "micros")


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    cases: List[str]
    primes: Optional[Tuple[int, int]] = None
    n_range: Optional[Tuple[int, int]] = None
    terms: int = 100000
    bits: int = 256
    fmt: str = "human"
    workers: int = 1
    fail_fast: bool = False


def _parse_range(text: str, flag: str) -> Tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if not m:
        raise UsageError(f"{flag} expects lo..hi, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise UsageError(f"{flag} range is empty: {text}")
    return lo, hi


def _match(patterns: Sequence[str], ids: Sequence[str], where: str) -> List[str]:
    """Registry-order ids matching any pattern; every pattern must hit."""
    for pat in patterns:
        if not any(fnmatchcase(i, pat) for i in ids):
            raise UsageError(f"--cases {pat!r} matches no {where} id")
    return [i for i in ids if any(fnmatchcase(i, p) for p in patterns)]


def _residue(pair, p: int, m: int) -> int:
    v, u = pair
    if v is None:
        return 0
    pm = p**m
    return (u * pow(p, v, pm)) % pm


def _record(kind, case, param, lhs, rhs, mod_or_tol, passed) -> Dict[str, object]:
    return {
        "kind": kind,
        "case": case,
        "param": param,
        "lhs": lhs,
        "rhs": rhs,
        "modulus_or_tolerance": mod_or_tol,
        "pass": bool(passed),
        "micros": 0,
    }


def cmd_verify(cfg: RunConfig) -> List[Dict[str, object]]:
    if cfg.primes is None and cfg.n_range is None:
        raise UsageError("verify needs --primes and/or --n")
    searched: List[str] = []
    if cfg.primes is not None:
        searched += congruences.case_ids()
    if cfg.n_range is not None:
        searched += identities.identity_ids()
    _match(cfg.cases, searched, "congruence/identity")

    records: List[Dict[str, object]] = []
    if cfg.primes is not None:
        cids = [i for i in congruences.case_ids()
                if any(fnmatchcase(i, p) for p in cfg.cases)]
        if cids:
            reports = congruences.verify_range(
                cids, cfg.primes[0], cfg.primes[1],
                workers=cfg.workers, fail_fast=cfg.fail_fast)
            for r in reports:
                if r.skipped:
                    continue
                records.append(_record(
                    "congruence", r.case, r.p,
                    _residue(r.lhs, r.p, r.m), _residue(r.rhs, r.p, r.m),
                    r.p**r.m, r.passed))
    if cfg.n_range is not None and not (
            cfg.fail_fast and any(not r["pass"] for r in records)):
        iids = [i for i in identities.identity_ids()
                if any(fnmatchcase(i, p) for p in cfg.cases)]
        done = False
        for cid in iids:
            for n in range(cfg.n_range[0], cfg.n_range[1] + 1):
                if not identities.in_domain(cid, n):
                    continue
                res = identities.check_identity(cid, n)
                records.append(_record(
                    "identity", cid, n, str(res["lhs"]), str(res["rhs"]),
                    0, res["pass"]))
                if cfg.fail_fast and not res["pass"]:
                    done = True
                    break
            if done:
                break
    records.sort(key=lambda r: (r["case"], r["param"]))
    return records


def _series_job(args: Tuple[str, int, int]) -> Dict[str, object]:
    """Evaluate one series; return only plain strings/numbers (pickle-safe)."""
    sid, terms, bits = args
    r = series_mod.evaluate_series(sid, terms, bits)
    with mp.workprec(bits):
        est = r["partial"] + r["tail_estimate"]
        rec = _record("series", sid, terms, mp.nstr(est, 40),
                      mp.nstr(r["closed_form"], 40), r["tolerance"], r["passed"])
        rec["_detail"] = (
            f"partial={mp.nstr(r['partial'], 20)} "
            f"tail={mp.nstr(r['tail_estimate'], 20)} "
            f"closed={mp.nstr(r['closed_form'], 20)} "
            f"gap={mp.nstr(r['rel_gap'], 3)} tol={r['tolerance']:g}"
            + ("" if r["bracket_ok"] is None
               else f" bracket={'ok' if r['bracket_ok'] else 'FAIL'}"))
    return rec


def cmd_series(cfg: RunConfig) -> List[Dict[str, object]]:
    sids = _match(cfg.cases, series_mod.series_ids(), "series")
    if cfg.terms < 10:
        raise UsageError("--terms must be at least 10")
    jobs = [(sid, cfg.terms, cfg.bits) for sid in sids]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            records = list(pool.map(_series_job, jobs))
    else:
        records = [_series_job(j) for j in jobs]
    if cfg.fail_fast:
        cut = next((i for i, r in enumerate(records) if not r["pass"]),
                   len(records) - 1)
        records = records[:cut + 1]
    records.sort(key=lambda r: (r["case"], r["param"]))
    return records


def cmd_list(kind: Optional[str]) -> List[str]:
    lines = []
    if kind in (None, "congruence"):
        for cid in congruences.case_ids():
            c = congruences.get_case(cid)
            dom = f"mod p^{c.m}" + (" p=3(4)" if c.klass == 3 else "")
            lines.append(f"congruence {cid:14s} {dom:16s} {c.statement}")
    if kind in (None, "identity"):
        for iid in identities.identity_ids():
            c = identities.get_identity(iid)
            dom = (c.parity or "all") + f" n>={c.n_min}"
            lines.append(f"identity   {iid:14s} {dom:16s} {c.statement}")
    if kind in (None, "series"):
        for sid in series_mod.series_ids():
            c = series_mod.get_series(sid)
            dom = f"{c.kind} tol={c.tolerance:g}"
            lines.append(f"series     {sid:14s} {dom:16s} {c.statement}")
    return lines


def _human(r: Dict[str, object]) -> str:
    st = "PASS" if r["pass"] else "FAIL"
    if r["kind"] == "congruence":
        op = "==" if r["pass"] else "!="
        body = f"{r['lhs']} {op} {r['rhs']} (mod {r['modulus_or_tolerance']})"
        return f"{st} congruence {r['case']} p={r['param']}: {body}"
    if r["kind"] == "identity":
        op = "==" if r["pass"] else "!="
        return (f"{st} identity {r['case']} n={r['param']}: "
                f"{r['lhs']} {op} {r['rhs']} (exact)")
    return f"{st} series {r['case']} N={r['param']}: {r['_detail']}"


def _emit(records: List[Dict[str, object]], fmt: str, out) -> None:
    if fmt == "human":
        for r in records:
            out.write(_human(r) + "\n")
        return
    clean = [{k: r[k] for k in RECORD_FIELDS} for r in records]
    if fmt == "json-lines":
        for r in clean:
            out.write(json.dumps(r) + "\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(RECORD_FIELDS)
        for r in clean:
            row = [str(r[k]).lower() if isinstance(r[k], bool) else r[k]
                   for k in RECORD_FIELDS]
            w.writerow(row)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cbsums",
        description="verify central-binomial congruences, identities, and series")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cases", action="append", metavar="GLOB",
                       help="case-id glob, repeatable (default: *)")
        p.add_argument("--format", default="human", dest="fmt",
                       choices=["human", "json-lines", "csv"])
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--fail-fast", action="store_true")

    pv = sub.add_parser("verify", help="congruence / identity checks")
    common(pv)
    pv.add_argument("--primes", metavar="LO..HI", help="prime range, inclusive")
    pv.add_argument("--n", metavar="LO..HI", help="identity n range, inclusive")

    ps = sub.add_parser("series", help="series evaluations")
    common(ps)
    ps.add_argument("--terms", type=int, default=100000, metavar="N")
    ps.add_argument("--bits", type=int, default=256, metavar="B")

    pl = sub.add_parser("list", help="dump the registries")
    pl.add_argument("--kind", choices=["congruence", "identity", "series"])
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list":
            for line in cmd_list(args.kind):
                print(line)
            return 0
        cfg = RunConfig(
            command=args.command,
            cases=args.cases or ["*"],
            fmt=args.fmt,
            workers=max(1, args.workers),
            fail_fast=args.fail_fast,
        )
        if args.command == "verify":
            cfg.primes = _parse_range(args.primes, "--primes") if args.primes else None
            cfg.n_range = _parse_range(args.n, "--n") if args.n else None
            records = cmd_verify(cfg)
        else:
            cfg.terms = args.terms
            cfg.bits = args.bits
            records = cmd_series(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(records, cfg.fmt, sys.stdout)
    failed = sum(1 for r in records if not r["pass"])
    print(f"{len(records)} reports, {failed} failed", file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
