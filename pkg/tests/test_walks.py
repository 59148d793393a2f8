import pytest

from gdwalk.core import parse_polynomial
from gdwalk.verify import EQ_TABLE
from gdwalk.walks import QuantityRef, StepSet, build_straight_system, required_quantities, straight_equation


def test_stepset_dedup_and_order():
    S = StepSet([1, -1, 1, 0])
    assert len(S) == 3
    assert list(S) == [1, 0, -1]
    assert str(S) == "{1, 0, -1}"
    assert S.positive == (1,) and S.negative == (-1,) and S.has_zero


def test_trivial_sets():
    assert StepSet([1, 2, 3]).is_trivial()
    assert StepSet([0]).is_trivial()
    assert not StepSet([2, -1]).is_trivial()


def test_dyck_system():
    system = build_straight_system(StepSet([1, -1]))
    assert [q.name for q in system.quantities] == ["f00", "g00"]
    assert system.render() == ["f00 = f00*g00 + 1", "g00 = t^2*f00"]


def test_required_quantities_closed():
    qs = required_quantities(StepSet([2, 1, 0, -1, -2]))
    assert QuantityRef("F", 0, 0) in qs
    assert len(qs) == 7


@pytest.mark.parametrize("steps, strict, text", [
    ((1, -1), False, "t^2*X^2 - X + 1"),
    ((1, -1), True, "X^2 - X + t^2"),
    ((1, 0, -1), False, "t^2*X^2 + t*X - X + 1"),
    ((1, 2, 3), False, "X - 1"),
    ((0, 1), False, "-t*X + X - 1"),
    ((1, 2), True, "X"),
])
def test_straight_equations(steps, strict, text):
    eq = straight_equation(StepSet(steps), strict)
    assert eq.same_as(parse_polynomial(text, EQ_TABLE))


def test_spurious_factor_removed_for_1212():
    eq = straight_equation(StepSet([1, 2, -1, -2]))
    assert eq.poly.degree("X") == 4
    assert eq.same_as(parse_polynomial(
        "t^4*X^4 - 2*t^3*X^3 - t^2*X^3 + 3*t^2*X^2 + 2*t*X^2 - 2*t*X - X + 1", EQ_TABLE))


def test_reversal_symmetry():
    a = straight_equation(StepSet([2, -1]))
    b = straight_equation(StepSet([1, -2]))
    assert a.poly == b.poly
