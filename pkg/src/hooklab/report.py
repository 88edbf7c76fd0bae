"""Verification, Table-2 style ratio tables, and dominance scans."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from typing import Callable, Iterable, Sequence

from . import asymptotics as asy
from .oracle import (
    ORACLE_CAP,
    Kind,
    PartitionClass,
    hook_totals_oracle,
    liwang_difference_count,
)
from .qseries import TruncatedSeries, hook_count_series

SCHEMA = "hooklab-1"

SeriesProvider = Callable[[PartitionClass, int, int], TruncatedSeries]


def half_up(x: float, places: int = 4) -> str:
    """Round half-up to ``places`` decimals, returned as a string."""
    q = Decimal(1).scaleb(-places)
    return str(Decimal(repr(x)).quantize(q, rounding=ROUND_HALF_UP))


# --- verify ------------------------------------------------------------------

@dataclass(frozen=True)
class Discrepancy:
    ell: int
    t: int
    n: int
    kind: str
    series: int
    oracle: int


@dataclass
class VerifyResult:
    ell_max: int
    n_max: int
    cells_checked: int = 0
    discrepancies: list[Discrepancy] = field(default_factory=list)
    liwang_failures: list[tuple[int, int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies and not self.liwang_failures


def verify(
    ell_max: int,
    n_max: int,
    series: SeriesProvider | None = None,
    cache_dir=None,
) -> VerifyResult:
    """Compare series coefficients with brute force for l <= ell_max, n <= n_max.

    Also checks d_{l,1}(n) - b_{l,1}(n) against the direct Li-Wang count.
    """
    if ell_max < 2:
        raise ValueError("ell_max must be >= 2")
    if not 0 <= n_max <= ORACLE_CAP:
        raise ValueError(f"n_max must lie in [0, {ORACLE_CAP}]")
    if series is None:
        series = lambda cls, t, N: hook_count_series(cls, t, N, cache_dir=cache_dir)  # noqa: E731
    result = VerifyResult(ell_max, n_max)
    for ell in range(2, ell_max + 1):
        t1: dict[Kind, list[int]] = {}
        for kind in (Kind.REGULAR, Kind.DISTINCT):
            cls = PartitionClass(kind, ell)
            hist = [hook_totals_oracle(n, cls) for n in range(n_max + 1)]
            for t in (1, 2, 3):
                s = series(cls, t, n_max)
                for n in range(n_max + 1):
                    result.cells_checked += 1
                    if s[n] != hist[n][t]:
                        result.discrepancies.append(
                            Discrepancy(ell, t, n, kind.value, s[n], hist[n][t])
                        )
            t1[kind] = [h[1] for h in hist]
        for n in range(n_max + 1):
            diff = t1[Kind.DISTINCT][n] - t1[Kind.REGULAR][n]
            lw = liwang_difference_count(n, ell)
            if diff != lw:
                result.liwang_failures.append((ell, n, diff, lw))
    return result


# --- ratio table ---------------------------------------------------------------

@dataclass(frozen=True)
class RatioRow:
    t: int
    ell: int
    n: int
    d_over_b: float
    b_over_main: float
    d_over_main: float

    def rounded(self) -> tuple[str, str, str]:
        return (half_up(self.d_over_b), half_up(self.b_over_main), half_up(self.d_over_main))


def ratio_row(ell: int, t: int, n: int, cache_dir=None) -> RatioRow:
    b = hook_count_series(PartitionClass.regular(ell), t, n, cache_dir=cache_dir)[n]
    d = hook_count_series(PartitionClass.distinct(ell), t, n, cache_dir=cache_dir)[n]
    return RatioRow(
        t,
        ell,
        n,
        math.exp(math.log(d) - math.log(b)),
        asy.ratio_to_estimate(b, asy.b_main(ell, t, n)),
        asy.ratio_to_estimate(d, asy.d_main(ell, t, n)),
    )


@dataclass
class Table2:
    rows: list[RatioRow]
    limits: dict[tuple[int, int], float]  # (t, ell) -> r_{l,t}

    def csv_lines(self) -> list[str]:
        lines = ["t,ell,n,d_over_b,b_over_main,d_over_main"]
        for t in sorted({r.t for r in self.rows} | {k[0] for k in self.limits}):
            for row in self.rows:
                if row.t == t:
                    lines.append(",".join([str(t), str(row.ell), str(row.n), *row.rounded()]))
            for (tt, ell), r in sorted(self.limits.items()):
                if tt == t:
                    lines.append(f"{t},{ell},r,{half_up(r)},,")
        return lines

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": "table2",
            "rows": [
                {
                    "t": r.t,
                    "ell": r.ell,
                    "n": r.n,
                    "d_over_b": r.rounded()[0],
                    "b_over_main": r.rounded()[1],
                    "d_over_main": r.rounded()[2],
                }
                for r in self.rows
            ],
            "limits": [
                {"t": t, "ell": ell, "r": half_up(r)} for (t, ell), r in sorted(self.limits.items())
            ],
        }


def table2(
    n_list: Sequence[int],
    ell_list: Sequence[int] = (3, 4, 5),
    t_list: Sequence[int] = (2, 3),
    cache_dir=None,
) -> Table2:
    rows = []
    N = max(n_list)
    for t in t_list:
        for ell in ell_list:
            # expand once at the largest n, reuse for the smaller ones
            hook_count_series(PartitionClass.regular(ell), t, N, cache_dir=cache_dir)
            hook_count_series(PartitionClass.distinct(ell), t, N, cache_dir=cache_dir)
    for t in t_list:
        for n in sorted(n_list):
            for ell in ell_list:
                rows.append(ratio_row(ell, t, n, cache_dir=cache_dir))
    limits = {(t, ell): asy.limit_constants(ell).r[t - 1] for t in t_list for ell in ell_list}
    return Table2(rows, limits)


# --- dominance scans ---------------------------------------------------------------

B_DOMINANT = "b-dominant"
D_DOMINANT = "d-dominant"
TIE = "tie"
MIXED = "mixed"


def dominance(b: Sequence[int], d: Sequence[int]) -> str:
    if all(x == y for x, y in zip(b, d)):
        return TIE
    if all(x >= y for x, y in zip(b, d)):
        return B_DOMINANT
    if all(y >= x for x, y in zip(b, d)):
        return D_DOMINANT
    return MIXED


def predicted_letter(ell: int, t: int) -> str | None:
    """'b' or 'd' from the sign of beta_t - alpha_t; None where no constants exist."""
    if t not in (1, 2, 3):
        return None
    return "d" if asy.beta(ell, t) > asy.alpha(ell, t) else "b"


@dataclass
class ScanCell:
    ell: int
    t: int
    n_max: int
    method: str
    verdict: str
    predicted: str | None
    failures: list[int]
    asserted: bool

    @property
    def last_failure(self) -> int | None:
        return self.failures[-1] if self.failures else None

    @property
    def letter(self) -> str | None:
        return {B_DOMINANT: "b", D_DOMINANT: "d"}.get(self.verdict)

    @property
    def disagrees(self) -> bool:
        return self.predicted is not None and self.letter != self.predicted


@dataclass
class InequalityCheck:
    family: str
    ell: int
    t: int | None
    failures: list[int]

    @property
    def holds(self) -> bool:
        return not self.failures


@dataclass
class ScanReport:
    ell_range: tuple[int, int]
    t_values: tuple[int, ...]
    n_max: int
    cells: list[ScanCell]
    inequalities: list[InequalityCheck]

    def cell(self, ell: int, t: int) -> ScanCell:
        for c in self.cells:
            if c.ell == ell and c.t == t:
                return c
        raise KeyError((ell, t))

    def as_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": "scan",
            "ell_range": list(self.ell_range),
            "t_values": list(self.t_values),
            "n_max": self.n_max,
            "cells": [
                {**asdict(c), "last_failure": c.last_failure, "disagrees": c.disagrees}
                for c in self.cells
            ],
            "inequalities": [{**asdict(i), "holds": i.holds} for i in self.inequalities],
        }

    def csv_lines(self) -> list[str]:
        lines = ["ell,t,n_max,method,verdict,predicted,last_failure,disagrees,asserted"]
        for c in self.cells:
            lines.append(
                ",".join(
                    str(v)
                    for v in (
                        c.ell,
                        c.t,
                        c.n_max,
                        c.method,
                        c.verdict,
                        c.predicted or "",
                        "" if c.last_failure is None else c.last_failure,
                        int(c.disagrees),
                        int(c.asserted),
                    )
                )
            )
        return lines


def tail_start(n_max: int) -> int:
    return math.ceil(n_max / 2)


def _counts(kind: Kind, ell: int, t: int, n_max: int, cache_dir=None) -> list[int]:
    cls = PartitionClass(kind, ell)
    if t in (1, 2, 3):
        return list(hook_count_series(cls, t, n_max, cache_dir=cache_dir).coeffs)
    return [hook_totals_oracle(n, cls)[t] for n in range(n_max + 1)]


def _failures(lhs: Sequence[int], rhs: Sequence[int], start: int) -> list[int]:
    """Indices n >= start where lhs[n] >= rhs[n] fails."""
    return [n for n in range(start, len(lhs)) if lhs[n] < rhs[n]]


def scan(
    ell_values: Iterable[int],
    t_values: Iterable[int],
    n_max: int,
    cache_dir=None,
    oracle_cap: int = ORACLE_CAP,
) -> ScanReport:
    """Dominance verdicts over the tail half of [0, n_max], plus the
    within-class inequality families for t = 1, 2, 3.

    Verdicts use exact counts only; predictions use constants only.  Cells
    with t >= 4 have no generating function and are probed by enumeration
    up to ``oracle_cap``; they are reported but never asserted.
    """
    ells = sorted(set(ell_values))
    ts = tuple(sorted(set(t_values)))
    start = tail_start(n_max)
    cells = []
    for ell in ells:
        for t in ts:
            series_backed = t in (1, 2, 3)
            nm = n_max if series_backed else min(n_max, oracle_cap)
            b = _counts(Kind.REGULAR, ell, t, nm, cache_dir)
            d = _counts(Kind.DISTINCT, ell, t, nm, cache_dir)
            lo = tail_start(nm)
            predicted = predicted_letter(ell, t)
            if predicted == "b":
                fails = _failures(b, d, 0)
            elif predicted == "d":
                fails = _failures(d, b, 0)
            else:
                fails = []
            cells.append(
                ScanCell(
                    ell,
                    t,
                    nm,
                    "series" if series_backed else "oracle",
                    dominance(b[lo:], d[lo:]),
                    predicted,
                    fails,
                    series_backed,
                )
            )

    checks: list[InequalityCheck] = []
    series_ts = [t for t in ts if t in (1, 2, 3)]
    if series_ts:
        for ell in ells:
            b = {t: _counts(Kind.REGULAR, ell, t, n_max, cache_dir) for t in (1, 2, 3)}
            d = {t: _counts(Kind.DISTINCT, ell, t, n_max, cache_dir) for t in (1, 2, 3)}
            checks.append(InequalityCheck("b2>=b1", ell, None, _failures(b[2], b[1], start)))
            checks.append(InequalityCheck("b2>=b3", ell, None, _failures(b[2], b[3], start)))
            checks.append(InequalityCheck("d1>=d2", ell, None, _failures(d[1], d[2], start)))
            checks.append(InequalityCheck("d2>=d3", ell, None, _failures(d[2], d[3], start)))
            for t in series_ts:
                b_next = _counts(Kind.REGULAR, ell + 1, t, n_max, cache_dir)
                checks.append(
                    InequalityCheck("b(l+1)>=b(l)", ell, t, _failures(b_next, b[t], start))
                )
    return ScanReport((ells[0], ells[-1]), ts, n_max, cells, checks)


# --- cusp limits ------------------------------------------------------------------

CUSP_Z = (1e-2, 1e-3, 1e-4)
MIN_DECADE_SHRINK = 3.0


@dataclass
class CuspCheck:
    kind: str
    ell: int
    t: int
    target: float
    scaled: tuple[float, ...]  # z * factor(e^{-2 pi z}) at each z in CUSP_Z
    constant_term: float | None  # factor - alpha/(2 pi z) at the smallest z (b only)

    @property
    def errors(self) -> tuple[float, ...]:
        return tuple(abs(s - self.target) for s in self.scaled)

    @property
    def converges(self) -> bool:
        e = self.errors
        return all(b < a and a >= MIN_DECADE_SHRINK * b for a, b in zip(e, e[1:]))


def cusp_check(kind: Kind, ell: int, t: int, zs: Sequence[float] = CUSP_Z) -> CuspCheck:
    kind = Kind(kind)
    f = asy.eval_b_factor_near_one if kind is Kind.REGULAR else asy.eval_d_factor_near_one
    scaled = tuple(z * f(ell, t, z) for z in zs)
    const = None
    if kind is Kind.REGULAR and t in (2, 3):
        z = zs[-1]
        const = f(ell, t, z) - asy.alpha(ell, t) / (2 * math.pi * z)
    return CuspCheck(kind.value, ell, t, asy.cusp_leading_constant(kind, ell, t), scaled, const)
