import random

from hypothesis import given, settings
from hypothesis import strategies as st

from gdwalk import upoly

coeffs = st.lists(st.integers(-10 ** 6, 10 ** 6), max_size=14).map(upoly.trim)
big = st.lists(st.integers(-10 ** 40, 10 ** 40), min_size=1, max_size=20).map(upoly.trim)


def _schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return upoly.trim(out)


@settings(max_examples=80, deadline=None)
@given(big, big)
def test_mul_matches_schoolbook(a, b):
    assert upoly.mul(a, b) == _schoolbook(a, b)


@settings(max_examples=80, deadline=None)
@given(coeffs, coeffs)
def test_divexact_inverts_mul(a, b):
    if b:
        assert upoly.divexact(upoly.mul(a, b), b) == a


@settings(max_examples=60, deadline=None)
@given(coeffs, coeffs, coeffs)
def test_gcd_contains_common_factor(a, b, c):
    if not c or not (a or b):
        return
    g = upoly.gcd_poly(upoly.mul(a, c), upoly.mul(b, c))
    assert upoly.divexact(g, upoly.primitive(c)) is not None
    if a:
        assert upoly.divexact(upoly.mul(a, c), g) is not None
    if b:
        assert upoly.divexact(upoly.mul(b, c), g) is not None


def test_gcd_known_cases():
    # (t - 1)(5t - 1) and (t - 1)^2
    p = upoly.mul((-1, 1), (-1, 5))
    q = upoly.mul((-1, 1), (-1, 1))
    assert upoly.gcd_poly(p, q) == (-1, 1)
    assert upoly.gcd_poly((6,), (4, 2)) == (2,)
    assert upoly.gcd_poly((), (3, -6)) == (1, -2) or upoly.gcd_poly((), (3, -6)) == (-1, 2) \
        or upoly.content(upoly.gcd_poly((), (3, -6))) == 3


def test_gcd_of_large_coprime_polys():
    rng = random.Random(5)
    a = upoly.trim([rng.randint(-10 ** 30, 10 ** 30) for _ in range(25)])
    b = upoly.trim([rng.randint(-10 ** 30, 10 ** 30) for _ in range(25)])
    c = upoly.trim([rng.randint(-100, 100) for _ in range(6)] + [1])
    g = upoly.gcd_poly(upoly.mul(a, c), upoly.mul(b, c))
    assert upoly.divexact(g, c) is not None
    assert upoly.degree(g) == upoly.degree(c)


def test_pack_unpack():
    a = (5, -3, 0, 7, -1)
    assert upoly.unpack(upoly.pack(a, 4), 4, len(a)) == a


def test_evaluate_and_degree():
    a = (1, 2, 3)
    assert upoly.evaluate(a, 2) == 17
    assert upoly.degree(a) == 2
    assert upoly.divexact((1, 1), (2, 1)) is None
