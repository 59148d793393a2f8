from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from gdwalk import linalg


def test_nullspace_simple():
    rows = [[1, 2, 3], [2, 4, 6]]
    basis = linalg.nullspace(rows, 3)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(r[i] * v[i] for i in range(3)) == 0 for r in rows)


def test_rank_mod_and_fractions():
    rows = [[Fraction(1, 2), 1], [1, 2]]
    assert linalg.rank_mod(rows, 2) == 1
    assert linalg.nullspace(rows, 2) == [[-2, 1]]


matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=1, max_size=5)
    .map(lambda rows: (rows, n)))


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_rank_nullity(data):
    rows, n = data
    basis = linalg.nullspace(rows, n)
    for v in basis:
        assert all(sum(r[i] * v[i] for i in range(n)) == 0 for r in rows)
    assert len(basis) + linalg.rank_mod(rows, n) == n
