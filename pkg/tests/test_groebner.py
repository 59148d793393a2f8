import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdwalk.core import Polynomial, VariableTable, parse_polynomial
from gdwalk.groebner import Budget, BudgetExceeded, buchberger, eliminate, is_groebner, reduce, s_polynomial

T3 = VariableTable(("x", "y", "z"))


def test_s_polynomial_cancels_leads():
    f = parse_polynomial("x^2*y - 1", T3)
    g = parse_polynomial("x*y^2 - x", T3)
    s = s_polynomial(f, g)
    assert s == parse_polynomial("x^2 - y", T3)


def test_reduce_by_basis():
    basis = [parse_polynomial("x - y", T3)]
    assert reduce(parse_polynomial("x^2", T3), basis) == parse_polynomial("y^2", T3)


def test_buchberger_textbook_example():
    # twisted cubic: reduced lex basis is {x - z^3... } in any order
    gens = [parse_polynomial(s, T3) for s in ("x - z^3", "y - z^2")]
    G = buchberger(gens)
    assert is_groebner(list(G))
    assert {g.render() for g in G} == {"x - z^3", "y - z^2"}


def test_unit_ideal():
    gens = [parse_polynomial(s, T3) for s in ("x*y - 1", "x")]
    G = buchberger(gens)
    assert [g.render() for g in G] == ["1"]


def test_eliminate_circle_line():
    table = VariableTable(("y", "x"))
    gens = [parse_polynomial(s, table) for s in ("x^2 + y^2 - 1", "y - x")]
    assert [g.render() for g in eliminate(gens, ["x"])] == ["2*x^2 - 1"]


def test_eliminate_with_generic_parameter():
    table = VariableTable(("f", "X", "t"))
    # f = 1 + t*f^2, X = f : Catalan
    gens = [parse_polynomial(s, table) for s in ("f - 1 - t*f^2", "X - f")]
    found = eliminate(gens, ["X", "t"], target="X", generic="t")
    assert found[0] == parse_polynomial("t*X^2 - X + 1", table)


def test_budget_exceeded_is_raised_with_stats():
    table = VariableTable(("Y", "Z", "X", "t"))
    Y, Z, X, t = table.gens()
    gens = [X - Y ** 2 - Z ** 2 - 1, Y - X ** 2 - 3 * Z ** 2 - t, Z - X * Y * Z - t - 1]
    with pytest.raises(BudgetExceeded) as info:
        eliminate(gens, ["X", "t"], budget=Budget(max_pairs=5))
    assert info.value.stats.pairs_processed > 5


def test_table_order_is_checked():
    table = VariableTable(("x", "y"))
    with pytest.raises(Exception):
        eliminate([parse_polynomial("x - y", table)], ["x"])


small = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
                        st.integers(-3, 3), min_size=1, max_size=3).map(lambda d: Polynomial(T3, d))


@settings(max_examples=25, deadline=None)
@given(st.lists(small, min_size=1, max_size=3))
def test_buchberger_output_is_a_basis_of_the_ideal(gens):
    try:
        G = list(buchberger(gens, Budget(max_pairs=400, max_degree=14)))
    except BudgetExceeded:
        return
    assert is_groebner(G)
    for g in gens:
        assert reduce(g, G).is_zero()
