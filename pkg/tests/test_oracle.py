from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hooklab.oracle import (
    Kind,
    PartitionClass,
    class_count,
    generate,
    hook_total_oracle,
    hook_totals_oracle,
    liwang_difference_count,
)
from hooklab.partitions import Partition, count_hooks

from test_partitions import all_partitions

# frozen from an independent brute-force prototype, n = 0..12
FROZEN = {
    ("regular", 2, 2): [0, 0, 1, 2, 2, 4, 6, 8, 11, 15, 20, 26, 34],
    ("distinct", 2, 2): [0, 0, 1, 1, 2, 3, 4, 6, 8, 11, 14, 19, 24],
    ("regular", 2, 3): [0, 0, 0, 2, 1, 2, 5, 5, 7, 11, 15, 18, 25],
    ("distinct", 2, 3): [0, 0, 0, 2, 1, 3, 4, 6, 7, 11, 15, 18, 25],
    ("regular", 3, 1): [0, 1, 2, 3, 5, 8, 12, 17, 24, 34, 46, 62, 83],
    ("distinct", 3, 1): [0, 1, 2, 3, 6, 9, 13, 19, 28, 39, 53, 71, 97],
    ("regular", 3, 2): [0, 0, 2, 1, 5, 5, 11, 13, 22, 28, 43, 53, 79],
    ("distinct", 3, 2): [0, 0, 2, 1, 5, 6, 10, 13, 23, 27, 44, 52, 79],
    ("regular", 3, 3): [0, 0, 0, 2, 3, 5, 6, 11, 17, 23, 33, 46, 63],
    ("distinct", 3, 3): [0, 0, 0, 2, 2, 4, 7, 10, 14, 21, 30, 42, 54],
}

LIWANG = {
    2: [0, 0, 0, 1, 0, 1, 2, 2, 2, 4, 6, 6],
    3: [0, 0, 0, 0, 1, 1, 1, 2, 4, 5, 7, 9],
}


def naive_members(n, cls):
    keep = []
    for parts in all_partitions(n):
        mult = Counter(parts)
        if cls.kind is Kind.REGULAR:
            ok = all(p % cls.ell for p in parts)
        else:
            ok = all(m < cls.ell for m in mult.values())
        if ok:
            keep.append(Partition(parts))
    return keep


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_hook_totals(key):
    kind, ell, t = key
    cls = PartitionClass(Kind(kind), ell)
    assert [hook_total_oracle(n, t, cls).count for n in range(13)] == FROZEN[key]


@pytest.mark.parametrize("kind", ["regular", "distinct"])
@pytest.mark.parametrize("ell", [2, 3, 4, 5])
def test_generate_matches_naive_filter(kind, ell):
    cls = PartitionClass(Kind(kind), ell)
    for n in range(16):
        got = list(generate(n, cls))
        assert len(got) == len(set(got))
        assert set(got) == set(naive_members(n, cls))


def test_generate_is_reverse_lex():
    got = [p.parts for p in generate(6, PartitionClass.distinct(2))]
    assert got == sorted(got, reverse=True)


@pytest.mark.parametrize("ell", [2, 3, 4, 6])
def test_class_sizes_agree(ell):
    # Glaisher: both classes have the same size for every n
    for n in range(25):
        assert class_count(n, PartitionClass.regular(ell)) == class_count(n, PartitionClass.distinct(ell))


@pytest.mark.parametrize("ell", [2, 3])
def test_liwang_frozen(ell):
    assert [liwang_difference_count(n, ell) for n in range(12)] == LIWANG[ell]


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_liwang_equals_t1_difference(ell):
    for n in range(21):
        d = hook_total_oracle(n, 1, PartitionClass.distinct(ell)).count
        b = hook_total_oracle(n, 1, PartitionClass.regular(ell)).count
        assert d - b == liwang_difference_count(n, ell)


def test_empty_partition_has_no_hooks():
    assert hook_totals_oracle(0, PartitionClass.regular(3)) == Counter()
    assert class_count(0, PartitionClass.distinct(2)) == 1


@given(st.integers(0, 14), st.integers(2, 5), st.integers(1, 6), st.sampled_from(list(Kind)))
def test_totals_are_sums_of_single_counts(n, ell, t, kind):
    cls = PartitionClass(kind, ell)
    expected = sum(count_hooks(p, t) for p in naive_members(n, cls))
    assert hook_total_oracle(n, t, cls).count == expected


def test_record_as_dict():
    rec = hook_total_oracle(5, 2, PartitionClass.distinct(3))
    assert rec.as_dict() == {
        "ell": 3, "t": 2, "n": 5, "class": "distinct", "count": "6", "method": "oracle",
    }


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        PartitionClass.regular(1)
    with pytest.raises(ValueError):
        list(generate(-1, PartitionClass.regular(2)))
    with pytest.raises(ValueError):
        hook_total_oracle(3, 0, PartitionClass.regular(2))
    with pytest.raises(ValueError):
        liwang_difference_count(3, 1)
