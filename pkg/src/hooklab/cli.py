"""Command-line entry point: ``hooklab <command> ...``.

Exit codes: 0 success / verified, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import asymptotics as asy
from . import report
from .oracle import ORACLE_CAP, Kind, PartitionClass, hook_total_oracle
from .qseries import hook_count

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def int_list(text: str) -> list[int]:
    """Parse '3', '3,4,5' or '2-6'."""
    out: list[int] = []
    try:
        for chunk in text.split(","):
            chunk = chunk.strip()
            if "-" in chunk[1:]:
                lo, hi = chunk.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            elif chunk:
                out.append(int(chunk))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}")
    if not out:
        raise argparse.ArgumentTypeError("empty integer list")
    return out


def _flatten(values) -> list[int]:
    return sorted({v for group in values for v in group})


def _emit(lines: Sequence[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _emit_json(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


class UsageError(Exception):
    pass


def cmd_count(args) -> int:
    cls = PartitionClass(Kind(args.cls), args.ell)
    if args.t < 1 or args.n < 0:
        raise UsageError("need t >= 1 and n >= 0")
    if args.method == "oracle":
        if args.n > args.oracle_cap:
            raise UsageError(f"oracle method is capped at n <= {args.oracle_cap}")
        rec = hook_total_oracle(args.n, args.t, cls)
    else:
        if args.t not in (1, 2, 3):
            raise UsageError("series method needs t in {1,2,3}; use --method oracle")
        rec = hook_count(args.n, args.t, cls, cache_dir=args.cache_dir)
    if args.format == "json":
        _emit_json({"schema": report.SCHEMA, "command": "count", **rec.as_dict()})
    elif args.format == "csv":
        d = rec.as_dict()
        _emit([",".join(d), ",".join(str(v) for v in d.values())])
    else:
        _emit([str(rec.count)])
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.nmax > ORACLE_CAP or args.nmax < 0:
        raise UsageError(f"--nmax must lie in [0, {ORACLE_CAP}]")
    if args.ell_max < 2:
        raise UsageError("--ell-max must be >= 2")
    res = report.verify(args.ell_max, args.nmax, cache_dir=args.cache_dir)
    if args.format == "json":
        _emit_json(
            {
                "schema": report.SCHEMA,
                "command": "verify",
                "ell_max": res.ell_max,
                "n_max": res.n_max,
                "cells_checked": res.cells_checked,
                "ok": res.ok,
                "discrepancies": [vars(d) for d in res.discrepancies],
                "liwang_failures": [list(f) for f in res.liwang_failures],
            }
        )
    else:
        lines = [f"checked {res.cells_checked} cells (ell<={res.ell_max}, n<={res.n_max})"]
        for d in res.discrepancies:
            lines.append(f"MISMATCH ell={d.ell} t={d.t} n={d.n} class={d.kind} series={d.series} oracle={d.oracle}")
        for ell, n, diff, lw in res.liwang_failures:
            lines.append(f"LIWANG ell={ell} n={n} d1-b1={diff} count={lw}")
        lines.append("OK" if res.ok else "FAILED")
        _emit(lines)
    return EXIT_OK if res.ok else EXIT_FAIL


def cmd_table2(args) -> int:
    ns = _flatten(args.n or [[100, 500]])
    ells = _flatten(args.ell or [[3, 4, 5]])
    ts = _flatten(args.t or [[2, 3]])
    if any(t not in (1, 2, 3) for t in ts) or min(ns) < 1 or min(ells) < 2:
        raise UsageError("table2 needs t in {1,2,3}, n >= 1, ell >= 2")
    tab = report.table2(ns, ells, ts, cache_dir=args.cache_dir)
    if args.format == "json":
        _emit_json(tab.as_dict())
    else:
        _emit(tab.csv_lines())
    return EXIT_OK


def cmd_scan(args) -> int:
    ells = _flatten(args.ell or [[2, 3, 4, 5, 6]])
    ts = _flatten(args.t or [[1, 2, 3]])
    if min(ells) < 2 or min(ts) < 1 or args.nmax < 1:
        raise UsageError("scan needs ell >= 2, t >= 1, nmax >= 1")
    rep = report.scan(ells, ts, args.nmax, cache_dir=args.cache_dir)
    if args.format == "json":
        _emit_json(rep.as_dict())
        return EXIT_OK
    if args.format == "csv":
        _emit(rep.csv_lines())
        return EXIT_OK
    lines = [f"tail half: n in [{report.tail_start(args.nmax)}, {args.nmax}]"]
    for c in rep.cells:
        tag = "" if c.asserted else "  (oracle evidence only)"
        lines.append(
            f"ell={c.ell} t={c.t}: {c.verdict:<10} predicted={c.predicted or '-'} "
            f"last_failure={c.last_failure}{tag}"
        )
    for chk in rep.inequalities:
        where = f"ell={chk.ell}" + (f" t={chk.t}" if chk.t else "")
        lines.append(f"{chk.family:<13} {where}: {'holds' if chk.holds else 'fails at ' + str(chk.failures)}")
    _emit(lines)
    return EXIT_OK


def cmd_constants(args) -> int:
    ells = _flatten(args.ell or [[2, 3, 4, 5, 6]])
    consts = [asy.limit_constants(ell) for ell in ells]
    if args.format == "json":
        _emit_json({"schema": report.SCHEMA, "command": "constants", "constants": [c.as_dict() for c in consts]})
        return EXIT_OK
    keys = list(consts[0].as_dict())
    lines = [",".join(keys)]
    for c in consts:
        lines.append(",".join(repr(v) for v in c.as_dict().values()))
    _emit(lines)
    return EXIT_OK


def cmd_limits(args) -> int:
    ells = _flatten(args.ell or [[2, 3, 5]])
    ts = _flatten(args.t or [[1, 2, 3]])
    checks = [
        report.cusp_check(kind, ell, t)
        for ell in ells
        for t in ts
        for kind in (Kind.REGULAR, Kind.DISTINCT)
    ]
    if args.format == "json":
        _emit_json(
            {
                "schema": report.SCHEMA,
                "command": "limits",
                "z": list(report.CUSP_Z),
                "checks": [
                    {
                        "class": c.kind,
                        "ell": c.ell,
                        "t": c.t,
                        "target": c.target,
                        "scaled": list(c.scaled),
                        "errors": list(c.errors),
                        "constant_term": c.constant_term,
                        "converges": c.converges,
                    }
                    for c in checks
                ],
            }
        )
        return EXIT_OK
    lines = ["class,ell,t,target," + ",".join(f"err_z{z:g}" for z in report.CUSP_Z) + ",constant_term,converges"]
    for c in checks:
        lines.append(
            ",".join(
                [c.kind, str(c.ell), str(c.t), f"{c.target:.10f}"]
                + [f"{e:.3e}" for e in c.errors]
                + ["" if c.constant_term is None else f"{c.constant_term:.6f}", str(int(c.converges))]
            )
        )
    _emit(lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hooklab", description=__doc__.splitlines()[0])
    p.add_argument("--cache-dir", default=None, help="series cache directory (else $HOOKLAB_CACHE)")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default):
        sp.add_argument("--format", choices=("csv", "json", "plain"), default=default)

    c = sub.add_parser("count", help="exact b_{l,t}(n) or d_{l,t}(n)")
    c.add_argument("--ell", type=int, required=True)
    c.add_argument("--t", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--class", dest="cls", choices=("regular", "distinct"), required=True)
    c.add_argument("--method", choices=("oracle", "series"), default="series")
    c.add_argument("--oracle-cap", type=int, default=ORACLE_CAP)
    fmt(c, "plain")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="series vs brute force, plus the Li-Wang identity")
    v.add_argument("--ell-max", type=int, default=6)
    v.add_argument("--nmax", type=int, default=35)
    fmt(v, "plain")
    v.set_defaults(func=cmd_verify)

    t2 = sub.add_parser("table2", help="ratio table against the asymptotic main terms")
    t2.add_argument("--n", type=int_list, action="append")
    t2.add_argument("--ell", type=int_list, action="append")
    t2.add_argument("--t", type=int_list, action="append")
    fmt(t2, "csv")
    t2.set_defaults(func=cmd_table2)

    s = sub.add_parser("scan", help="dominance scan and inequality families")
    s.add_argument("--ell", type=int_list, action="append")
    s.add_argument("--t", type=int_list, action="append")
    s.add_argument("--nmax", type=int, default=100)
    fmt(s, "plain")
    s.set_defaults(func=cmd_scan)

    k = sub.add_parser("constants", help="alpha_t, beta_t, r_t for each ell")
    k.add_argument("--ell", type=int_list, action="append")
    fmt(k, "csv")
    k.set_defaults(func=cmd_constants)

    lim = sub.add_parser("limits", help="z * factor(e^{-2 pi z}) against the cusp constants")
    lim.add_argument("--ell", type=int_list, action="append")
    lim.add_argument("--t", type=int_list, action="append")
    fmt(lim, "csv")
    lim.set_defaults(func=cmd_limits)

    # allow --cache-dir after the subcommand too
    for sp in (c, v, t2, s, lim):
        sp.add_argument("--cache-dir", default=argparse.SUPPRESS)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"hooklab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
