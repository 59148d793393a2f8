from gdwalk.area import area_equation, expand_first_order, q_system
from gdwalk.core import parse_polynomial
from gdwalk.verify import EQ_TABLE
from gdwalk.walks import QuantityRef, StepSet


def test_dyck_q_system():
    lines = [eq.render() for eq in q_system(StepSet([1, -1]))]
    assert lines == ["f00(t) = 1 + g00(t)*f00(t)", "g00(t) = t^2*q*f00(q*t)"]


def test_half_powers_of_q_appear_with_zero_step():
    text = " ".join(eq.render() for eq in q_system(StepSet([2, 1, 0, -1, -2])))
    assert "q^(1/2)" in text and "q^(3/2)" in text


def test_expansion_sizes():
    ex = expand_first_order(q_system(StepSet([1, -1])), QuantityRef("F", 0, 0), "X")
    assert len(ex.equations) >= 4
    assert "X" in ex.table.names and "t" in ex.table.names


def test_dyck_area_equation():
    eq = area_equation(StepSet([1, -1]))
    assert eq.same_as(parse_polynomial("t^2 - (4*t^2 - 1)*(2*t^2 - 1)*X + t^2*(4*t^2 - 1)^2*X^2", EQ_TABLE))


def test_strict_motzkin_area_equation():
    eq = area_equation(StepSet([1, 0, -1]), strict=True)
    assert eq.same_as(parse_polynomial("(3*t^2 + 2*t - 1)*X + t^2", EQ_TABLE))


def test_trivial_area_is_zero():
    assert area_equation(StepSet([1, 0])).render() == "X = 0"
