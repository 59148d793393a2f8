"""Guessing linear recurrences with polynomial coefficients, and area asymptotics.

A recurrence of order d and degree k is sum_{i<=d} p_i(n) a(n+i) = 0 with
deg p_i <= k.  Its coefficients are found as the nullspace of the linear
system given by the first terms and must then hold on at least ten more.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

from . import linalg, upoly
from .core import UsageError

HOLDOUT = 10


class SingularRecurrence(UsageError):
    """The leading coefficient vanishes where a new term is needed."""

    def __init__(self, n: int):
        super().__init__(f"leading coefficient vanishes at n={n}")
        self.n = n


def _poly_str(p: Sequence[int]) -> str:
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "n" if k == 1 else f"n^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def _eval(p: Sequence[int], n) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * n + c
    return acc


@dataclass(frozen=True)
class Recurrence:
    """sum_i coeffs[i](n) * a(n+i) = 0; coeffs[i] lists coefficients of n^0, n^1, ..."""

    coeffs: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        coeffs = tuple(upoly.trim(int(x) for x in p) for p in self.coeffs)
        if len(coeffs) < 2 or not coeffs[-1]:
            raise UsageError("a recurrence needs order >= 1 and a nonzero leading coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        return max(len(p) for p in self.coeffs) - 1

    def residual(self, seq: Sequence, n: int):
        return sum(_eval(p, n) * seq[n + i] for i, p in enumerate(self.coeffs) if p)

    def holds(self, seq: Sequence, start: int = 0) -> bool:
        return all(self.residual(seq, n) == 0 for n in range(start, len(seq) - self.order))

    def singular_points(self) -> List[int]:
        """Nonnegative integers n where the leading coefficient vanishes."""
        lead = self.coeffs[-1]
        if len(lead) == 1:
            return []
        bound = 1 + max(abs(Fraction(c, lead[-1])) for c in lead[:-1])
        return [n for n in range(int(bound) + 1) if _eval(lead, n) == 0]

    @property
    def seed_length(self) -> int:
        """Initial terms needed so that ``extend`` never meets a singular point."""
        return self.order + 1 + max(self.singular_points(), default=-1)

    def render(self) -> str:
        out = []
        for i in range(self.order, -1, -1):
            p = self.coeffs[i]
            if not p:
                continue
            neg = p[-1] < 0
            body = _poly_str([-c for c in p] if neg else p)
            term = "a(n)" if i == 0 else f"a(n+{i})"
            nterms = sum(1 for c in p if c)
            if body == "1":
                piece = term
            elif nterms > 1:
                piece = f"({body})*{term}"
            else:
                piece = f"{body}*{term}"
            if not out:
                out.append(("-" if neg else "") + piece)
            else:
                out.append((" - " if neg else " + ") + piece)
        return "".join(out) + " = 0"

    def __str__(self):
        return self.render()

    def as_dict(self) -> dict:
        return {"order": self.order, "coeffs": [[str(c) for c in p] for p in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> "Recurrence":
        return cls(tuple(tuple(int(c) for c in p) for p in data["coeffs"]))


def _normalize(coeffs: List[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    """Divide out the integer content and make the leading coefficient positive.

    A common polynomial factor is kept: the search tries smaller shapes first,
    so such a factor only survives when it vanishes at some n in range, and
    dividing it out would break the recurrence there.
    """
    g = gcd(*(c for p in coeffs for c in p))
    if coeffs[-1][-1] < 0:
        g = -g
    return [tuple(c // g for c in p) for p in coeffs]


def _fit(seq: Sequence[Fraction], d: int, k: int, rows: int) -> Optional[Recurrence]:
    matrix = []
    for n in range(rows):
        powers = [n ** j for j in range(k + 1)]
        matrix.append([powers[j] * seq[n + i] for i in range(d + 1) for j in range(k + 1)])
    basis = linalg.nullspace(matrix, (d + 1) * (k + 1))
    for v in basis:
        coeffs = [upoly.trim(v[i * (k + 1):(i + 1) * (k + 1)]) for i in range(d + 1)]
        if not coeffs[-1]:
            continue  # really a lower order recurrence
        return Recurrence(tuple(_normalize(coeffs)))
    return None


def search_order(max_order: int, max_deg: int) -> List[Tuple[int, int]]:
    """Ansatz shapes (order, degree) by increasing size, then smaller order."""
    cells = [(d, k) for d in range(1, max_order + 1) for k in range(max_deg + 1)]
    return sorted(cells, key=lambda c: ((c[0] + 1) * (c[1] + 1), c[0]))


def guess_recurrence(seq: Sequence, max_order: int = 4, max_deg: int = 4) -> Optional[Recurrence]:
    """Smallest recurrence fitted on the leading terms and confirmed on the rest, or None."""
    need = (max_order + 1) * (max_deg + 1) + max_order + HOLDOUT
    if len(seq) < need:
        raise UsageError(f"need at least {need} terms, got {len(seq)}")
    seq = [Fraction(x) for x in seq]
    for d, k in search_order(max_order, max_deg):
        rows = len(seq) - d - HOLDOUT
        rec = _fit(seq, d, k, rows)
        if rec is not None and rec.holds(seq):
            return rec
    return None


def extend(rec: Recurrence, seed: Sequence, N: int) -> List[Fraction]:
    """First N terms of the sequence with the given initial terms."""
    out = [Fraction(x) for x in seed]
    if len(out) < rec.order:
        raise UsageError(f"need {rec.order} initial terms, got {len(out)}")
    d = rec.order
    lead = rec.coeffs[-1]
    while len(out) < N:
        n = len(out) - d
        c = _eval(lead, n)
        if c == 0:
            raise SingularRecurrence(n)
        s = sum(_eval(p, n) * out[n + i] for i, p in enumerate(rec.coeffs[:-1]) if p)
        out.append(-s / c)
    return out[:N]


# ---------------------------------------------------------------------------
# asymptotics of the mean area


@dataclass(frozen=True)
class AreaEstimate:
    """e(n) = m(n,1) / (m(n,0) * n^(3/2)) on lengths with walks, plus extrapolation."""

    points: Tuple[Tuple[int, Decimal], ...]
    period: int
    extrapolated: Optional[Decimal]
    differences_decreasing: bool

    def as_dict(self) -> dict:
        return {
            "period": self.period,
            "points": [[n, str(e)] for n, e in self.points],
            "extrapolated": None if self.extrapolated is None else str(self.extrapolated),
            "differences_decreasing": self.differences_decreasing,
        }


def differences_decreasing(points: Sequence[Tuple[int, Decimal]], period: int, last: int = 10) -> bool:
    """|e(n) - e(n-period)| strictly decreases over the last ``last`` points."""
    values = dict(points)
    ns = [n for n, _ in points if n - period in values][-last:]
    diffs = [abs(values[n] - values[n - period]) for n in ns]
    return len(diffs) >= 2 and all(b < a for a, b in zip(diffs, diffs[1:]))


def estimate_area_constant(S, N: int, precision: int = 40) -> AreaEstimate:
    from .enumerate import moment_table
    from .walks import StepSet

    S = S if isinstance(S, StepSet) else StepSet(S)
    if S.is_trivial():
        raise UsageError(f"step set {S} is trivial")
    if N < 20:
        raise UsageError("N must be at least 20")
    table = moment_table(S, N, 1)
    support = [n for n in range(1, N + 1) if table.count(n)]
    period = 0
    for n in support:
        period = gcd(period, n)
    points = []
    with localcontext() as ctx:
        ctx.prec = precision
        for n in support:
            m1 = table.moment(n, 1)
            ratio = Decimal(m1.numerator) / (Decimal(m1.denominator) * table.count(n))
            points.append((n, ratio / (Decimal(n) * Decimal(n).sqrt())))
        extrapolated = None
        if len(points) >= 2:
            # e(n) ~ c + c1/sqrt(n): eliminate the c1 term between n and about n/4
            n2, e2 = points[-1]
            n1, e1 = min(points[:-1], key=lambda pt: abs(4 * pt[0] - n2))
            r1, r2 = Decimal(n1).sqrt(), Decimal(n2).sqrt()
            extrapolated = (e2 * r2 - e1 * r1) / (r2 - r1)
    return AreaEstimate(tuple(points), period, extrapolated, differences_decreasing(points, period))
