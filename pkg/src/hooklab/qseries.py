"""Exact truncated power series over Python integers.

Every generating function here is a sum of terms ``numerator / prod(1 - q^k)``
with a sparse integer numerator.  Terms are expanded as written, with no
algebraic simplification; all cancellation happens in the coefficients.

The hook-count series are

    sum_n b_{l,t}(n) q^n = P_l(q) * B_{l,t}(q)
    sum_n d_{l,t}(n) q^n = P_l(q) * D_{l,t}(q)

where P_l(q) = (q^l; q^l)_inf / (q; q)_inf counts l-regular partitions.
"""

from __future__ import annotations

import functools
import json
import logging
import os
from dataclasses import dataclass
from operator import add
from pathlib import Path
from typing import Iterable, Sequence

from .oracle import HookCountRecord, Kind, PartitionClass

log = logging.getLogger(__name__)

CACHE_ENV = "HOOKLAB_CACHE"


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients of q^0 .. q^N."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_terms(cls, N: int, terms: dict[int, int] | Iterable[tuple[int, int]]) -> "TruncatedSeries":
        c = [0] * (N + 1)
        items = terms.items() if isinstance(terms, dict) else terms
        for e, v in items:
            if 0 <= e <= N:
                c[e] += v
        return cls(tuple(c))

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls.from_terms(N, {0: 1})

    def truncate(self, N: int) -> "TruncatedSeries":
        if N > self.N:
            raise ValueError(f"cannot extend a series of order {self.N} to {N}")
        return TruncatedSeries(self.coeffs[: N + 1])

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_add(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(tuple(map(add, a.coeffs, b.coeffs)))


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def _mul_lists(a: Sequence[int], b: Sequence[int], N: int) -> list[int]:
    # schoolbook Cauchy product; skipping zero rows pays off for sparse factors
    c = [0] * (N + 1)
    for i in range(min(N, len(a) - 1) + 1):
        ai = a[i]
        if ai:
            c[i:] = map(add, c[i:], [ai * x for x in b[: N + 1 - i]])
    return c


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    N = min(a.N, b.N)
    return TruncatedSeries(tuple(_mul_lists(a.coeffs, b.coeffs, N)))


def _div_inplace(c: list[int], k: int) -> None:
    for n in range(k, len(c)):
        c[n] += c[n - k]


def div_one_minus_power(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """a / (1 - q^k) via c_n = a_n + c_{n-k}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    c = list(a.coeffs)
    _div_inplace(c, k)
    return TruncatedSeries(tuple(c))


# --- sparse numerators -----------------------------------------------------

Sparse = dict[int, int]


def _sparse_mul(a: Sparse, b: Sparse, N: int) -> Sparse:
    out: Sparse = {}
    for ea, va in a.items():
        for eb, vb in b.items():
            e = ea + eb
            if e <= N:
                out[e] = out.get(e, 0) + va * vb
    return {e: v for e, v in out.items() if v}


def _binomial(a: int) -> Sparse:
    """1 - q^a  (zero polynomial when a == 0)."""
    if a == 0:
        return {}
    return {0: 1, a: -1}


def _product(*factors: Sparse, N: int) -> Sparse:
    out: Sparse = {0: 1}
    for f in factors:
        out = _sparse_mul(out, f, N)
    return out


@dataclass(frozen=True)
class RationalTerm:
    """numerator / prod_k (1 - q^k)."""

    numerator: tuple[tuple[int, int], ...]
    denominators: tuple[int, ...]

    @classmethod
    def make(cls, numerator: Sparse, denominators: Iterable[int] = ()) -> "RationalTerm":
        return cls(tuple(sorted(numerator.items())), tuple(denominators))

    @property
    def order(self) -> int | None:
        """Lowest exponent with a nonzero numerator coefficient."""
        exps = [e for e, v in self.numerator if v]
        return min(exps) if exps else None


def _expand_terms(terms: Iterable[RationalTerm], N: int) -> list[int]:
    total = [0] * (N + 1)
    for term in terms:
        lo = term.order
        if lo is None or lo > N:
            continue
        # work on the window q^lo..q^N only; division never lowers the order
        window = [0] * (N + 1 - lo)
        for e, v in term.numerator:
            if e <= N:
                window[e - lo] += v
        for k in term.denominators:
            if k < len(window):
                _div_inplace(window, k)
        total[lo:] = map(add, total[lo:], window)
    return total


def expand(terms: Iterable[RationalTerm], N: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(_expand_terms(terms, N)))


# --- the generating functions ----------------------------------------------

def _check_t(t: int) -> None:
    if t not in (1, 2, 3):
        raise ValueError(f"generating functions exist only for t in {{1,2,3}}, got t={t}")


def _check_ell(ell: int) -> None:
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")


@functools.lru_cache(maxsize=64)
def class_partition_series(ell: int, N: int) -> TruncatedSeries:
    """prod_{m <= N, ell does not divide m} 1/(1 - q^m)."""
    _check_ell(ell)
    c = [1] + [0] * N
    for m in range(1, N + 1):
        if m % ell:
            _div_inplace(c, m)
    return TruncatedSeries(tuple(c))


def b_factor_terms(ell: int, t: int, N: int) -> list[RationalTerm]:
    _check_ell(ell)
    _check_t(t)
    L = ell
    R = RationalTerm.make
    if t == 1:
        return [R({1: 1}, (1,)), R({L: -1}, (L,))]
    if t == 2:
        return [
            R({2: 2}, (2,)),
            R({L: -1}, (L,)),
            R({2 * L - 1: 1, 2 * L: -1, 2 * L + 1: 1}, (2 * L,)),
        ]
    if ell == 2:
        # the general closed form admits even parts when l = 2 (residues -1
        # and -3 coincide); this is the direct case count for odd parts
        return [
            R({3: 1}, (2,)),
            R({4: -1}, (4,)),
            R({6: 1}, (4,)),
            R({3: 1}, (6,)),
        ]
    return [
        R({3: 3}, (3,)),
        R({L: -1}, (L,)),
        R({2 * L - 2: 1, 2 * L: -1, 2 * L + 2: 1}, (2 * L,)),
        R(
            {
                3 * L - 3: -1,
                3 * L - 2: 1,
                3 * L - 1: 1,
                3 * L: -2,
                3 * L + 1: 1,
                3 * L + 2: 1,
                3 * L + 3: -1,
            },
            (3 * L,),
        ),
    ]


def _d_summand_terms(ell: int, t: int, m: int, N: int) -> list[RationalTerm]:
    L = ell
    M = m + 1
    R = RationalTerm.make
    mono = lambda e: {e: 1}  # noqa: E731
    B = _binomial
    if t == 1:
        return [R(_product(mono(M), B((L - 1) * M), N=N), (L * M,))]
    if t == 2:
        return [
            R(
                _product(mono(m + 2), B(M), B((L - 1) * (m + 2)), N=N),
                (L * M, L * (m + 2)),
            ),
            R(_product(mono(2 * M), B((L - 2) * M), N=N), (L * M,)),
        ]
    # t == 3
    bracket = dict(B((L - 1) * (m + 2)))
    for e, v in _product(mono(1), B((L - 2) * (m + 2)), N=N).items():
        bracket[e] = bracket.get(e, 0) + v
    terms = [
        R(
            _product(mono(m + 3), B(M), B(m + 2), B((L - 1) * (m + 3)), N=N),
            (L * M, L * (m + 2), L * (m + 3)),
        ),
        R(_product(mono(2 * m + 3), B(M), bracket, N=N), (L * M, L * (m + 2))),
    ]
    if L >= 3:
        # at least three copies of m+1; impossible when l < 3
        terms.append(R(_product(mono(3 * M), B((L - 3) * M), N=N), (L * M,)))
    return terms


def d_summand(ell: int, t: int, m: int, N: int) -> list[RationalTerm]:
    """Terms of the m-th summand of D_{l,t}; checks they start at q^(m+1)."""
    terms = _d_summand_terms(ell, t, m, N)
    for term in terms:
        lo = term.order
        if lo is not None and lo < m + 1:
            raise AssertionError(
                f"D_{ell},{t} summand m={m} has a term of order {lo} < {m + 1}"
            )
    return terms


def d_factor_terms(ell: int, t: int, N: int) -> list[RationalTerm]:
    _check_ell(ell)
    _check_t(t)
    # summand m starts at q^(m+1), so m <= N-1 covers every coefficient up to q^N
    return [term for m in range(N) for term in d_summand(ell, t, m, N)]


def b_factor_series(ell: int, t: int, N: int) -> TruncatedSeries:
    return expand(b_factor_terms(ell, t, N), N)


def d_factor_series(ell: int, t: int, N: int) -> TruncatedSeries:
    return expand(d_factor_terms(ell, t, N), N)


def factor_series(cls: PartitionClass, t: int, N: int) -> TruncatedSeries:
    if cls.kind is Kind.REGULAR:
        return b_factor_series(cls.ell, t, N)
    return d_factor_series(cls.ell, t, N)


@functools.lru_cache(maxsize=128)
def _hook_count_series(kind: Kind, ell: int, t: int, N: int) -> TruncatedSeries:
    cls = PartitionClass(kind, ell)
    return series_mul(class_partition_series(ell, N), factor_series(cls, t, N))


def hook_count_series(
    cls: PartitionClass, t: int, N: int, cache_dir: str | os.PathLike | None = None
) -> TruncatedSeries:
    """Coefficient n is b_{l,t}(n) or d_{l,t}(n), exactly."""
    _check_t(t)
    if N < 0:
        raise ValueError("N must be >= 0")
    cache = resolve_cache_dir(cache_dir)
    if cache is not None:
        hit = load_cached(cache, cls, t, N)
        if hit is not None:
            return hit
    s = _hook_count_series(cls.kind, cls.ell, t, N)
    if cache is not None:
        store_cached(cache, cls, t, s)
    return s


def hook_count(n: int, t: int, cls: PartitionClass, **kw) -> HookCountRecord:
    s = hook_count_series(cls, t, n, **kw)
    return HookCountRecord(cls.ell, t, n, cls.kind, s[n], "series")


# --- on-disk cache -----------------------------------------------------------

def resolve_cache_dir(cache_dir: str | os.PathLike | None) -> Path | None:
    if cache_dir is None:
        cache_dir = os.environ.get(CACHE_ENV) or None
    return Path(cache_dir) if cache_dir is not None else None


def _cache_name(cls: PartitionClass, t: int, N: int) -> str:
    return f"{cls.kind.value}-l{cls.ell}-t{t}-N{N}.json"


def store_cached(cache_dir: Path, cls: PartitionClass, t: int, s: TruncatedSeries) -> Path:
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = cache_dir / _cache_name(cls, t, s.N)
    payload = {
        "class": cls.kind.value,
        "ell": cls.ell,
        "t": t,
        "N": s.N,
        "coeffs": [str(c) for c in s.coeffs],
    }
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(payload))
    tmp.replace(path)
    return path


def load_cached(cache_dir: Path, cls: PartitionClass, t: int, N: int) -> TruncatedSeries | None:
    """Smallest cached series of order >= N for the key, truncated to N."""
    if not cache_dir.is_dir():
        return None
    best: tuple[int, Path] | None = None
    prefix = f"{cls.kind.value}-l{cls.ell}-t{t}-N"
    for path in cache_dir.glob(prefix + "*.json"):
        try:
            order = int(path.stem[len(prefix):])
        except ValueError:
            continue
        if order >= N and (best is None or order < best[0]):
            best = (order, path)
    if best is None:
        return None
    data = json.loads(best[1].read_text())
    if (data["class"], data["ell"], data["t"], data["N"]) != (cls.kind.value, cls.ell, t, best[0]):
        log.warning("cache entry %s has mismatched key, ignoring", best[1])
        return None
    coeffs = tuple(int(c) for c in data["coeffs"])
    if len(coeffs) != data["N"] + 1:
        log.warning("cache entry %s is truncated, ignoring", best[1])
        return None
    return TruncatedSeries(coeffs).truncate(N)
