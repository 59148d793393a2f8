import pytest

from gdwalk.core import UsageError, parse_polynomial
from gdwalk.enumerate import series_vector
from gdwalk.verify import EQ_TABLE, AlgebraicEquation, series_divisor, verify_series
from gdwalk.walks import StepSet


def _eq(text):
    return AlgebraicEquation(parse_polynomial(text, EQ_TABLE), StepSet([1, -1]), False, 0)


def test_dyck_equation_passes():
    report = verify_series(_eq("t^2*X^2 - X + 1"), series_vector(StepSet([1, -1]), 40), 40)
    assert report.passed and report.first_failure is None


def test_wrong_equation_reports_first_failure():
    report = verify_series(_eq("t^2*X^2 - X + 1 + t^7"), series_vector(StepSet([1, -1]), 40), 40)
    assert not report.passed
    assert report.first_failure == 7


def test_order_too_low():
    with pytest.raises(UsageError):
        verify_series(_eq("t^9*X - 1"), [1] * 12, 12)


def test_normalization_is_primitive():
    assert _eq("-2*t^2*X^2 + 2*X - 2").poly == parse_polynomial("t^2*X^2 - X + 1", EQ_TABLE)


def test_series_divisor_picks_true_factor():
    good = parse_polynomial("t^2*X^2 - X + 1", EQ_TABLE)
    spurious = parse_polynomial("t*X + 1", EQ_TABLE)
    found = series_divisor(good * spurious, series_vector(StepSet([1, -1]), 60))
    assert found.primitive_part() == good
