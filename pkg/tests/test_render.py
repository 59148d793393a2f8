from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from gdwalk.core import Polynomial, parse_polynomial
from gdwalk.guess import Recurrence
from gdwalk.render import (equation_from_obj, render_json, report_from_obj, report_obj, series_from_obj,
                           series_obj)
from gdwalk.verify import EQ_TABLE, AlgebraicEquation, VerifyReport
from gdwalk.walks import StepSet
import json


def test_examples():
    X = EQ_TABLE.gen("X")
    assert render_json(X - 1) == '{"vars":["t","X"],"terms":[{"coef":"1","t":0,"X":1},{"coef":"-1","t":0,"X":0}]}'
    assert render_json([1, 0, 1]) == '["1","0","1"]'
    eq = AlgebraicEquation(parse_polynomial("(4*t^2 - 1)*X + t^2", EQ_TABLE), StepSet([1, -1]), True, 1)
    assert render_json(eq) == ('{"vars":["t","X"],"terms":[{"coef":"4","t":2,"X":1},'
                               '{"coef":"-1","t":0,"X":1},{"coef":"1","t":2,"X":0}]}')


def test_rationals_as_fractions():
    assert series_obj([Fraction(1, 2), -3]) == ["1/2", "-3"]


polys = st.dictionaries(st.tuples(st.integers(0, 5), st.integers(0, 5)),
                        st.fractions(min_value=-9, max_value=9, max_denominator=5),
                        max_size=6).map(lambda d: Polynomial(EQ_TABLE, d))


@settings(max_examples=60, deadline=None)
@given(polys)
def test_equation_round_trip(p):
    text = render_json(p)
    assert equation_from_obj(json.loads(text)) == p
    assert render_json(p) == text


@settings(max_examples=60, deadline=None)
@given(st.lists(st.fractions(max_denominator=9), max_size=10))
def test_series_round_trip(s):
    assert series_from_obj(json.loads(render_json(s))) == s


def test_report_and_recurrence_round_trip():
    for r in (VerifyReport(True, 40), VerifyReport(False, 40, 3, Fraction(-2, 3))):
        assert report_from_obj(json.loads(render_json(r))) == r
        assert report_from_obj(report_obj(r)) == r
    rec = Recurrence(((2, 4), (-2, -1)))
    assert Recurrence.from_dict(json.loads(render_json(rec))) == rec
