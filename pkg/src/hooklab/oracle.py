"""Brute-force enumeration of ell-regular and ell-distinct partitions.

These generators are the trusted reference for the q-series engine: every
count here comes from listing partitions one at a time.
"""

from __future__ import annotations

import enum
import functools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .partitions import Partition, hook_histogram

ORACLE_CAP = 40


class Kind(str, enum.Enum):
    REGULAR = "regular"
    DISTINCT = "distinct"


@dataclass(frozen=True)
class PartitionClass:
    kind: Kind
    ell: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.ell < 2:
            raise ValueError(f"ell must be >= 2, got {self.ell}")

    @classmethod
    def regular(cls, ell: int) -> "PartitionClass":
        return cls(Kind.REGULAR, ell)

    @classmethod
    def distinct(cls, ell: int) -> "PartitionClass":
        return cls(Kind.DISTINCT, ell)

    @property
    def letter(self) -> str:
        return "b" if self.kind is Kind.REGULAR else "d"


@dataclass(frozen=True)
class HookCountRecord:
    ell: int
    t: int
    n: int
    kind: Kind
    count: int
    method: str  # "oracle" | "series"

    def as_dict(self) -> dict:
        return {
            "ell": self.ell,
            "t": self.t,
            "n": self.n,
            "class": self.kind.value,
            "count": str(self.count),
            "method": self.method,
        }


def _regular(n: int, max_part: int, ell: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for part in range(min(n, max_part), 0, -1):
        if part % ell == 0:
            continue
        for rest in _regular(n - part, part, ell):
            yield (part,) + rest


def _distinct(n: int, max_part: int, ell: int) -> Iterator[tuple[int, ...]]:
    # choose the largest part value and its multiplicity (1..ell-1) together
    if n == 0:
        yield ()
        return
    for part in range(min(n, max_part), 0, -1):
        for mu in range(min(ell - 1, n // part), 0, -1):
            block = (part,) * mu
            for rest in _distinct(n - mu * part, part - 1, ell):
                yield block + rest


def generate(n: int, cls: PartitionClass) -> Iterator[Partition]:
    """Yield every partition of n in the class once, reverse-lex order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    gen = _regular if cls.kind is Kind.REGULAR else _distinct
    for parts in gen(n, n, cls.ell):
        yield Partition(parts)


def class_count(n: int, cls: PartitionClass) -> int:
    return sum(1 for _ in generate(n, cls))


def hook_totals_oracle(n: int, cls: PartitionClass) -> Counter[int]:
    """Total hook-length histogram over all class partitions of n."""
    return Counter(_hook_totals(n, cls))


@functools.lru_cache(maxsize=512)
def _hook_totals(n: int, cls: PartitionClass) -> Counter[int]:
    total: Counter[int] = Counter()
    for p in generate(n, cls):
        total.update(hook_histogram(p))
    return total


def hook_total_oracle(n: int, t: int, cls: PartitionClass) -> HookCountRecord:
    if t < 1:
        raise ValueError("t must be >= 1")
    count = hook_totals_oracle(n, cls)[t]
    return HookCountRecord(cls.ell, t, n, cls.kind, count, "oracle")


def liwang_difference_count(n: int, ell: int) -> int:
    """Partitions of n with exactly one part value of multiplicity in
    (ell, 2*ell) and every other multiplicity below ell.

    Equals d_{ell,1}(n) - b_{ell,1}(n).  The lower bound is strict; the
    inclusive reading breaks the identity already at n=2, ell=2.
    """
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    count = 0
    # every part may appear up to 2*ell-1 times; filter afterwards
    for parts in _distinct(n, n, 2 * ell):
        mults = Counter(parts).values()
        big = [mu for mu in mults if mu >= ell]
        if len(big) == 1 and big[0] > ell:
            count += 1
    return count
