"""Dense univariate polynomials over Z as tuples, constant term first.

The zero polynomial is the empty tuple; every other value has a nonzero last
entry.
"""
from __future__ import annotations

from math import gcd
from typing import Optional, Sequence, Tuple

UPoly = Tuple[int, ...]

ONE: UPoly = (1,)


def trim(coeffs: Sequence[int]) -> UPoly:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def neg(a: UPoly) -> UPoly:
    return tuple(-x for x in a)


def add(a: UPoly, b: UPoly) -> UPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return trim(out)


def sub(a: UPoly, b: UPoly) -> UPoly:
    out = list(a) + [0] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return trim(out)


def _digit_bytes(bound: int) -> int:
    """Bytes per packed digit able to hold values in (-bound, bound)."""
    return (bound.bit_length() + 1) // 8 + 1


def pack(a: UPoly, nbytes: int) -> int:
    """``a`` evaluated at ``2^(8*nbytes)``; digits must fit in ``nbytes`` signed bytes."""
    half = 1 << (8 * nbytes - 1)
    raw = b"".join((c + half).to_bytes(nbytes, "little") for c in a)
    return int.from_bytes(raw, "little") - _offset(len(a), nbytes)


def unpack(value: int, nbytes: int, ndigits: int) -> UPoly:
    """Inverse of :func:`pack`, digits taken in the symmetric range."""
    half = 1 << (8 * nbytes - 1)
    raw = (value + _offset(ndigits, nbytes)).to_bytes(nbytes * ndigits, "little")
    return trim([int.from_bytes(raw[i:i + nbytes], "little") - half
                 for i in range(0, len(raw), nbytes)])


_OFFSETS = {}


def _offset(ndigits: int, nbytes: int) -> int:
    key = (ndigits, nbytes)
    v = _OFFSETS.get(key)
    if v is None:
        v = int.from_bytes((b"\x00" * (nbytes - 1) + b"\x80") * ndigits, "little")
        if len(_OFFSETS) > 4096:
            _OFFSETS.clear()
        _OFFSETS[key] = v
    return v


def _eval_shift(a: Sequence[int], bits: int) -> int:
    """``a`` at ``2^bits`` for coefficients of any size (divide and conquer)."""
    if len(a) <= 16:
        acc = 0
        for c in reversed(a):
            acc = (acc << bits) + c
        return acc
    m = len(a) // 2
    return _eval_shift(a[:m], bits) + (_eval_shift(a[m:], bits) << (bits * m))


def _height(a: UPoly) -> int:
    return max(abs(x) for x in a)


def mul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return ()
    if len(a) > 8 and len(b) > 8:
        # Kronecker substitution: one big-integer product
        nbytes = _digit_bytes(min(len(a), len(b)) * _height(a) * _height(b))
        return unpack(pack(a, nbytes) * pack(b, nbytes), nbytes, len(a) + len(b) - 1)
    if len(a) == 1:
        c = a[0]
        return tuple(c * y for y in b)
    if len(b) == 1:
        c = b[0]
        return tuple(c * x for x in a)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def scale(a: UPoly, c: int) -> UPoly:
    return tuple(c * x for x in a) if c else ()


def content(a: UPoly) -> int:
    return gcd(*a) if a else 0


def divexact(a: UPoly, b: UPoly) -> Optional[UPoly]:
    """``a / b`` if ``b`` divides ``a`` in Z[t], else ``None``."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return ()
    if len(b) == 1:
        c = b[0]
        if any(x % c for x in a):
            return None
        return tuple(x // c for x in a)
    if len(a) < len(b):
        return None
    rem = list(a)
    lb, db = b[-1], len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + db]
        if c % lb:
            return None
        c //= lb
        q[k] = c
        if c:
            for i, y in enumerate(b):
                rem[k + i] -= c * y
    if any(rem[:db]):
        return None
    return tuple(q)


def primitive(a: UPoly) -> UPoly:
    """Content-free associate with positive leading coefficient."""
    if not a:
        return a
    g = content(a)
    if a[-1] < 0:
        g = -g
    return a if g == 1 else tuple(x // g for x in a)


def pseudo_rem(a: UPoly, b: UPoly) -> UPoly:
    rem = list(a)
    lb, db = b[-1], len(b) - 1
    while len(rem) - 1 >= db and rem:
        la = rem[-1]
        shift = len(rem) - 1 - db
        g = gcd(la, lb)
        ma, mb = lb // g, la // g
        rem = [x * ma for x in rem]
        for i, y in enumerate(b):
            rem[i + shift] -= mb * y
        while rem and rem[-1] == 0:
            rem.pop()
    return tuple(rem)


def _gcd_heuristic(a: UPoly, b: UPoly) -> Optional[UPoly]:
    """Primitive gcd of primitive ``a`` and ``b`` by evaluation at a power of 2, or None.

    The integer gcd of the values, read back in symmetric base xi, is the true
    gcd whenever it divides both inputs and xi exceeds twice the coefficient
    bound for divisors (Mignotte: 2^deg * height * sqrt(len)).
    """
    n = min(len(a), len(b))
    bound = min(_height(a), _height(b)) * (n + 1) << n
    nbytes = _digit_bytes(2 * bound + 2) + 1
    for _ in range(4):
        h = gcd(_eval_shift(a, 8 * nbytes), _eval_shift(b, 8 * nbytes))
        g = primitive(unpack(h, nbytes, h.bit_length() // (8 * nbytes) + 2))
        if g and divexact(a, g) is not None and divexact(b, g) is not None:
            return g
        nbytes += 2
    return None


def gcd_poly(a: UPoly, b: UPoly) -> UPoly:
    """Greatest common divisor in Z[t] (integer content included), positive leading coefficient."""
    if not a:
        return primitive(b) if b else ()
    if not b:
        return primitive(a)
    c = gcd(content(a), content(b))
    if len(a) == 1 or len(b) == 1:
        return (c,)
    a, b = primitive(a), primitive(b)
    g = _gcd_heuristic(a, b)
    if g is not None:
        return scale(g, c)
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return (c,)
        a, b = b, primitive(pseudo_rem(a, b))
    return scale(a, c)


def evaluate(a: UPoly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def degree(a: UPoly) -> int:
    return len(a) - 1
