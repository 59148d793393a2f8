from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdwalk.core import UsageError
from gdwalk.enumerate import brute_force_oracle, moment_table, series_vector, trapezoid_area
from gdwalk.walks import StepSet


def test_catalan_counts():
    counts = series_vector(StepSet([1, -1]), 20)
    assert [counts[2 * n] for n in range(11)] == [comb(2 * n, n) // (n + 1) for n in range(11)]
    assert all(counts[2 * n + 1] == 0 for n in range(10))


def test_motzkin_counts():
    assert series_vector(StepSet([1, 0, -1]), 8) == [1, 1, 2, 4, 9, 21, 51, 127, 323]


def test_strict_walks_are_nonempty_and_touch_only_at_ends():
    strict = series_vector(StepSet([1, 0, -1]), 6, strict=True)
    assert strict[:2] == [0, 0]
    assert strict[2:] == [1, 1, 2, 4, 9]


def test_trapezoid_area_is_half_integer():
    # steps, not heights
    assert trapezoid_area([1, -1]) == 1
    assert trapezoid_area([2, -1, -1]) == 3
    assert trapezoid_area([1, -2], start=1) == Fraction(5, 2)
    assert trapezoid_area([1, 0, -1]) == 2


def test_area_sum_prefix():
    assert series_vector(StepSet([2, 1, 0, -1, -2]), 6, 1) == [0, 0, 3, 18, 113, 636, 3487]


def test_strict_dyck_area_is_power_of_four():
    col = series_vector(StepSet([1, -1]), 24, 1, strict=True)
    assert [col[2 * n] for n in range(1, 13)] == [4 ** (n - 1) for n in range(1, 13)]


def test_moment_table_rejects_bad_input():
    with pytest.raises(UsageError):
        moment_table(StepSet([1, -1]), -1)


subsets = st.sets(st.integers(-2, 2), min_size=1).map(StepSet)


@settings(max_examples=40, deadline=None)
@given(subsets, st.integers(0, 7), st.booleans())
def test_dp_matches_brute_force(S, n, strict):
    table = moment_table(S, n, 2, strict)
    walks = brute_force_oracle(S, n, strict)
    for r in range(3):
        assert table.moment(n, r) == sum(a ** r for _, a in walks)


@settings(max_examples=30, deadline=None)
@given(subsets, st.integers(0, 12))
def test_reversal_preserves_moments(S, n):
    a = moment_table(S, n, 2)
    b = moment_table(S.reversed(), n, 2)
    assert [a.moment(n, r) for r in range(3)] == [b.moment(n, r) for r in range(3)]
