import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hooklab.oracle import Kind, PartitionClass, hook_total_oracle
from hooklab.qseries import (
    CACHE_ENV,
    RationalTerm,
    TruncatedSeries,
    b_factor_series,
    b_factor_terms,
    class_partition_series,
    d_factor_series,
    d_summand,
    div_one_minus_power,
    expand,
    hook_count,
    hook_count_series,
    load_cached,
    series_mul,
    series_sub,
)

S = TruncatedSeries
series = st.integers(0, 8).flatmap(
    lambda n: st.lists(st.integers(-50, 50), min_size=n + 1, max_size=n + 1).map(S)
)


def test_mul_examples():
    assert (S((1, 1, 0)) * S((1, 1, 0))).coeffs == (1, 2, 1)
    geo = S((1,) * 5)
    assert (geo * S((1, -1, 0, 0, 0))).coeffs == (1, 0, 0, 0, 0)


def test_mul_truncates_to_shorter():
    assert (S((1, 1, 1)) * S((1, 1))).N == 1


@pytest.mark.parametrize(
    "a, k, expected",
    [
        ((1, 0, 0, 0, 0, 0), 1, (1, 1, 1, 1, 1, 1)),
        ((0, 1, 0, 0, 0, 0), 2, (0, 1, 0, 1, 0, 1)),
        ((1, 0, 0, -1, 0, 0), 1, (1, 1, 1, 0, 0, 0)),
    ],
)
def test_div_examples(a, k, expected):
    assert div_one_minus_power(S(a), k).coeffs == expected


def test_div_rejects_k0():
    with pytest.raises(ValueError):
        div_one_minus_power(S((1,)), 0)


@given(series, series)
def test_mul_commutes(a, b):
    assert (a * b).coeffs == (b * a).coeffs


@given(series)
def test_mul_identity(a):
    assert (a * S.one(a.N)).coeffs == a.coeffs


@given(series, st.integers(1, 6))
def test_div_then_mul_roundtrip(a, k):
    back = div_one_minus_power(a, k) * S.from_terms(a.N, {0: 1, k: -1})
    assert back.coeffs == a.coeffs


@given(series, series)
def test_add_sub_inverse(a, b):
    N = min(a.N, b.N)
    a, b = a.truncate(N), b.truncate(N)
    assert series_sub(a + b, b).coeffs == a.coeffs


def test_truncate_cannot_extend():
    with pytest.raises(ValueError):
        S((1, 2)).truncate(3)


def test_rational_term_order():
    assert RationalTerm.make({5: 1, 3: -2}).order == 3
    assert RationalTerm.make({}).order is None
    assert expand([RationalTerm.make({2: 1}, (1,))], 4).coeffs == (0, 0, 1, 1, 1)


@pytest.mark.parametrize("ell, N, expected", [(2, 5, (1, 1, 1, 2, 2, 3)), (3, 4, (1, 1, 2, 2, 4))])
def test_class_partition_series(ell, N, expected):
    assert class_partition_series(ell, N).coeffs == expected


def test_b21_expansion():
    assert b_factor_series(2, 1, 4).coeffs == (0, 1, 0, 1, 0)


def test_b42_third_numerator():
    third = b_factor_terms(4, 2, 20)[2]
    assert third.numerator == ((7, 1), (8, -1), (9, 1))
    assert third.denominators == (8,)


def test_d21_expansion():
    assert d_factor_series(2, 1, 3).coeffs == (0, 1, 0, 2)


@pytest.mark.parametrize("ell", [2, 3, 5])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_factors_have_no_constant_term(ell, t):
    assert b_factor_series(ell, t, 6)[0] == 0
    assert d_factor_series(ell, t, 6)[0] == 0


@pytest.mark.parametrize("ell", [2, 3, 4, 6])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_d_summands_start_at_m_plus_one(ell, t):
    for m in range(12):
        for term in d_summand(ell, t, m, 40):
            assert term.order is None or term.order >= m + 1


@pytest.mark.parametrize("kind", ["regular", "distinct"])
@pytest.mark.parametrize("ell", [2, 3, 4, 7])
@pytest.mark.parametrize("t", [1, 2, 3])
def test_series_match_oracle(kind, ell, t):
    cls = PartitionClass(Kind(kind), ell)
    s = hook_count_series(cls, t, 22)
    assert list(s.coeffs) == [hook_total_oracle(n, t, cls).count for n in range(23)]


def test_hook_count_examples():
    assert hook_count(3, 2, PartitionClass.regular(2)).count == 2
    assert hook_count(3, 1, PartitionClass.distinct(2)).count == 3
    assert hook_count(0, 1, PartitionClass.distinct(5)).count == 0


def test_series_truncation_is_consistent():
    cls = PartitionClass.distinct(3)
    assert hook_count_series(cls, 3, 60).truncate(30) == hook_count_series(cls, 3, 30)


def test_rejects_t4():
    with pytest.raises(ValueError):
        hook_count_series(PartitionClass.regular(3), 4, 10)


def test_cache_roundtrip(tmp_path):
    cls = PartitionClass.regular(3)
    s = hook_count_series(cls, 2, 50, cache_dir=tmp_path)
    files = sorted(p.name for p in tmp_path.iterdir())
    assert files == ["regular-l3-t2-N50.json"]
    data = json.loads((tmp_path / files[0]).read_text())
    assert data["coeffs"] == [str(c) for c in s.coeffs]
    # smaller orders are served from the larger entry
    assert load_cached(tmp_path, cls, 2, 20) == s.truncate(20)
    assert load_cached(tmp_path, cls, 2, 51) is None


def test_cache_ignores_mismatched_key(tmp_path):
    cls = PartitionClass.regular(3)
    hook_count_series(cls, 2, 10, cache_dir=tmp_path)
    path = tmp_path / "regular-l3-t2-N10.json"
    data = json.loads(path.read_text())
    data["ell"] = 4
    path.write_text(json.dumps(data))
    assert load_cached(tmp_path, cls, 2, 10) is None


def test_cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    hook_count_series(PartitionClass.distinct(4), 1, 12)
    assert (tmp_path / "distinct-l4-t1-N12.json").exists()


def test_large_coefficients_are_exact():
    s = hook_count_series(PartitionClass.regular(3), 2, 800)
    assert s[800] > 2**64
    assert series_mul(s, S.one(800))[800] == s[800]
