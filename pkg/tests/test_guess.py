from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdwalk.core import UsageError
from gdwalk.guess import (Recurrence, SingularRecurrence, differences_decreasing, estimate_area_constant,
                          extend, guess_recurrence)
from gdwalk.walks import StepSet


def test_catalan_recurrence():
    seq = [comb(2 * n, n) // (n + 1) for n in range(30)]
    rec = guess_recurrence(seq, 2, 1)
    assert rec.render() == "(n + 2)*a(n+1) - (4*n + 2)*a(n) = 0"
    assert extend(rec, seq[:1], 30) == seq


def test_random_sequence_has_no_small_recurrence():
    import random
    rng = random.Random(1)
    seq = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(60)]
    assert guess_recurrence(seq, 2, 2) is None


def test_too_few_terms():
    with pytest.raises(UsageError):
        guess_recurrence([1, 2, 3], 2, 2)


def test_singular_leading_coefficient():
    rec = Recurrence(((1,), (-3, 1)))  # (n - 3) a(n+1) + a(n) = 0
    with pytest.raises(SingularRecurrence) as info:
        extend(rec, [1], 10)
    assert info.value.n == 3


def test_dict_round_trip():
    rec = Recurrence(((2, 4), (-2, -1)))
    assert Recurrence.from_dict(rec.as_dict()) == rec


@settings(max_examples=25, deadline=None)
@given(st.integers(-3, 3).filter(bool), st.integers(1, 3), st.integers(-5, 5).filter(bool))
def test_recovers_geometric_times_polynomial(a, k, c):
    seq = [c * a ** n * (n + 1) ** k for n in range(50)]
    rec = guess_recurrence(seq, 1, 3)
    assert rec is not None and rec.order == 1
    assert extend(rec, seq[:1], 50) == [Fraction(x) for x in seq]


def test_area_ratio_settles():
    est = estimate_area_constant(StepSet([1, -1]), 200)
    assert est.period == 2
    assert est.differences_decreasing
    assert 0.55 < float(est.extrapolated) < 0.7


def test_differences_decreasing_detects_oscillation():
    from decimal import Decimal
    pts = [(n, Decimal((-1) ** n)) for n in range(20)]
    assert not differences_decreasing(pts, 1)


def test_common_factor_vanishing_in_range_is_kept():
    # strict Dyck areas: 0, 0, 1, 0, 4, 0, 16, ...; the fit needs the factor n
    from gdwalk.enumerate import series_vector
    seq = series_vector(StepSet([1, -1]), 30, 1, strict=True)
    rec = guess_recurrence(seq[:22], 2, 1)
    assert rec.render() == "n*a(n+2) - 4*n*a(n) = 0"
    assert rec.singular_points() == [0]
    assert rec.seed_length == 3
    assert extend(rec, seq[:rec.seed_length], 31) == seq
