"""Young-diagram primitives: partitions, conjugation, hook lengths.

Boxes are indexed 1-based as (row, column).  Hook lengths are computed from
the arm + leg + 1 formula using the conjugate partition, never by walking
the diagram.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class Partition:
    """A non-increasing tuple of positive parts."""

    parts: tuple[int, ...] = ()
    weight: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be non-increasing: {parts}")
        if parts and parts[-1] < 1:
            raise ValueError(f"parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> "Partition":
        parts: list[int] = []
        for value in sorted(mult, reverse=True):
            parts.extend([value] * mult[value])
        return cls(tuple(parts))

    def multiplicities(self) -> dict[int, int]:
        """(value, multiplicity) view of the partition."""
        return dict(Counter(self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Partition{self.parts}"


def conjugate(p: Partition) -> Partition:
    parts = p.parts
    if not parts:
        return p
    # lambda'_j = #{i : lambda_i >= j}; parts are sorted so a pointer walk suffices
    conj = []
    i = len(parts)
    for j in range(1, parts[0] + 1):
        while i > 0 and parts[i - 1] < j:
            i -= 1
        conj.append(i)
    return Partition(tuple(conj))


def hook_profile(p: Partition) -> list[list[int]]:
    """Hook lengths of every box, one list per row.

    >>> hook_profile(Partition((5, 4, 2, 1)))
    [[8, 6, 4, 3, 1], [6, 4, 2, 1], [3, 1], [1]]
    """
    conj = conjugate(p).parts
    return [
        [row - j + conj[j - 1] - i + 1 for j in range(1, row + 1)]
        for i, row in enumerate(p.parts, start=1)
    ]


def hook_lengths(p: Partition) -> Iterator[int]:
    conj = conjugate(p).parts
    for i, row in enumerate(p.parts, start=1):
        for j in range(1, row + 1):
            yield row - j + conj[j - 1] - i + 1


def hook_histogram(p: Partition) -> Counter[int]:
    """Map hook length -> number of boxes with that hook length."""
    return Counter(hook_lengths(p))


def count_hooks(p: Partition, t: int) -> int:
    if t < 1:
        raise ValueError("hook length t must be >= 1")
    if t > p.weight:
        return 0
    return sum(1 for h in hook_lengths(p) if h == t)


def _check_ell(ell: int) -> None:
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")


def is_regular(p: Partition, ell: int) -> bool:
    """True iff no part is divisible by ``ell``."""
    _check_ell(ell)
    return all(part % ell for part in p.parts)


def is_distinct(p: Partition, ell: int) -> bool:
    """True iff every part value occurs fewer than ``ell`` times."""
    _check_ell(ell)
    return all(mu < ell for mu in Counter(p.parts).values())


def _base_digits(value: int, base: int) -> Iterable[tuple[int, int]]:
    i = 0
    while value:
        value, digit = divmod(value, base)
        if digit:
            yield i, digit
        i += 1


def glaisher(p: Partition, ell: int) -> Partition:
    """Glaisher's map from ell-regular to ell-distinct partitions.

    A part value m of multiplicity mu = sum a_i ell^i becomes a_i copies of
    m * ell^i for each base-ell digit a_i.
    """
    if not is_regular(p, ell):
        raise ValueError(f"{p} is not {ell}-regular")
    out: Counter[int] = Counter()
    for value, mu in p.multiplicities().items():
        for i, digit in _base_digits(mu, ell):
            out[value * ell**i] += digit
    return Partition.from_multiplicities(out)
