"""Exact right nullspaces of rational matrices.

Rows are scaled to integers and eliminated fraction-free, dividing each
updated row by its content; back substitution uses Fractions.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import List, Sequence

MODULUS = 2_147_483_647  # 2^31 - 1


def _integer_row(row: Sequence) -> List[int]:
    den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(Fraction(x) * den) for x in row]


def _primitive(row: List[int]) -> List[int]:
    g = gcd(*row)
    if g > 1:
        return [x // g for x in row]
    return row


def echelon(rows: Sequence[Sequence], ncols: int):
    """Integer row echelon form: (rows, pivot columns)."""
    work = [_primitive(_integer_row(r)) for r in rows]
    work = [r for r in work if any(r)]
    out, pivots = [], []
    for col in range(ncols):
        k = next((i for i, r in enumerate(work) if r[col]), None)
        if k is None:
            continue
        piv = work.pop(k)
        p = piv[col]
        nxt = []
        for r in work:
            c = r[col]
            if c:
                g = gcd(p, c)
                a, b = p // g, c // g
                r = _primitive([a * x - b * y for x, y in zip(r, piv)])
                if not any(r):
                    continue
            nxt.append(r)
        work = nxt
        out.append(piv)
        pivots.append(col)
        if not work:
            break
    return out, pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List[int]]:
    """Basis of {v : rows * v = 0}, one primitive integer vector per free column."""
    ech, pivots = echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in reversed(list(zip(ech, pivots))):
            s = sum(row[c] * x[c] for c in range(p + 1, ncols) if row[c] and x[c])
            x[p] = Fraction(-s) / row[p]
        den = lcm(*(v.denominator for v in x))
        basis.append(_primitive([int(v * den) for v in x]))
    return basis


def _mod(x, p: int) -> int:
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, p) % p


def rank_mod(rows: Sequence[Sequence], ncols: int, p: int = MODULUS) -> int:
    """Rank over Z/p (a lower bound for the rank over Q, equal for all but finitely many p)."""
    work = [[_mod(x, p) for x in r] for r in rows]
    rank = 0
    for col in range(ncols):
        k = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if k is None:
            continue
        work[rank], work[k] = work[k], work[rank]
        piv = work[rank]
        inv = pow(piv[col], -1, p)
        for i in range(rank + 1, len(work)):
            c = work[i][col]
            if c:
                f = c * inv % p
                work[i] = [(x - f * y) % p for x, y in zip(work[i], piv)]
        rank += 1
    return rank
