"""Check algebraic equations against truncated power series."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from . import linalg, upoly
from .core import Polynomial, UsageError, VariableTable

EQ_TABLE = VariableTable(("X", "t"))


@dataclass(frozen=True)
class AlgebraicEquation:
    """``poly(t, X) = 0`` for the generating function described by the other fields.

    ``moment`` is 0 for plain counting and 1 for the sum of areas.
    """

    poly: Polynomial
    steps: object = None
    strict: bool = False
    moment: int = 0

    def __post_init__(self):
        poly = self.poly
        if poly.table != EQ_TABLE:
            poly = poly.retable(EQ_TABLE)
        if poly.is_zero() or poly.degree("X") < 1:
            raise UsageError("an algebraic equation must involve X")
        object.__setattr__(self, "poly", poly.primitive_part())

    def coefficients(self) -> List[Polynomial]:
        """Coefficients of X^0 .. X^d as lists of t-coefficients."""
        d = self.poly.degree("X")
        out = [dict() for _ in range(d + 1)]
        for (ex, et), c in self.poly.terms.items():
            out[ex][et] = c
        return out

    def same_as(self, other) -> bool:
        other_poly = other.poly if isinstance(other, AlgebraicEquation) else other
        return self.poly == other_poly.retable(EQ_TABLE).primitive_part()

    def render(self) -> str:
        return f"{self.poly.render()} = 0"

    def __str__(self):
        return self.render()

    @property
    def description(self) -> str:
        what = "sum of areas" if self.moment else "number"
        kind = "strict" if self.strict else "weak"
        return f"{what} of {kind} walks with steps {self.steps}"


def _series_mul(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> List[Fraction]:
    out = [Fraction(0)] * n
    nz = [(j, y) for j, y in enumerate(b[:n]) if y]
    for i, x in enumerate(a[:n]):
        if not x:
            continue
        for j, y in nz:
            if i + j >= n:
                break
            out[i + j] += x * y
    return out


def residual_series(eq: AlgebraicEquation, series: Sequence, N: int) -> List[Fraction]:
    """Coefficients of t^0 .. t^N in ``eq.poly(t, sum a_n t^n)``."""
    if len(series) < N + 1:
        raise UsageError(f"need {N + 1} series terms, got {len(series)}")
    n = N + 1
    s = [Fraction(x) for x in series[:n]]
    coeffs = eq.coefficients()
    acc = [Fraction(0)] * n
    for ci in reversed(coeffs):
        acc = _series_mul(acc, s, n)
        for e, c in ci.items():
            if e < n:
                acc[e] += c
    return acc


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    order: int
    first_failure: Optional[int] = None
    residual: Optional[Fraction] = None

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "order": self.order,
            "first_failure": self.first_failure,
            "residual": None if self.residual is None else str(self.residual),
        }

    def render(self) -> str:
        if self.passed:
            return f"PASS: equation vanishes to O(t^{self.order + 1})"
        return f"FAIL: nonzero residual {self.residual} at t^{self.first_failure}"


def verify_series(eq: AlgebraicEquation, series: Sequence, N: int) -> VerifyReport:
    """Pass iff every coefficient up to t^N of the substituted equation is zero."""
    deg_t = eq.poly.degree("t")
    if N < deg_t + 5:
        raise UsageError(f"truncation order {N} too low for t-degree {deg_t} (need >= {deg_t + 5})")
    res = residual_series(eq, series, N)
    for k, r in enumerate(res):
        if r:
            return VerifyReport(False, N, k, r)
    return VerifyReport(True, N)


# ---------------------------------------------------------------------------
# picking the divisor that the series satisfies
#
# If H is the minimal polynomial of the series x over Q(t) and Q is any
# polynomial of X-degree d and t-degree e with Q(x) = O(t^M), then either
# H divides Q or Res_X(Q, H) is a nonzero polynomial of t-degree at most
# d*deg_t(H) + deg_X(H)*e whose valuation is at least M.  So with M above that
# bound the vanishing ansatz solutions are exactly the multiples of H.


def _ansatz_rows(powers: List[List[Fraction]], d: int, e: int, rows: int) -> List[List[Fraction]]:
    """Row k: coefficient of t^k in sum c[i,j] t^j x^i, unknowns ordered (i, j)."""
    out = []
    for k in range(rows):
        out.append([powers[i][k - j] if k >= j else Fraction(0)
                    for i in range(d + 1) for j in range(e + 1)])
    return out


def _rows_needed(d: int, e: int, dX: int, T: int) -> int:
    return max((d + 1) * (e + 1) + 8, d * T + dX * e + 1)


def divisor_terms_needed(poly: Polynomial) -> int:
    """Series length for :func:`series_divisor` on ``poly``."""
    dX, T = poly.degree("X"), poly.degree("t")
    return max((_rows_needed(d, T, dX, T) for d in range(1, dX)), default=0) + 1


def _x_coefficients(poly: Polynomial) -> List[upoly.UPoly]:
    dX = poly.degree("X")
    rows = [[0] * (poly.degree("t") + 1) for _ in range(dX + 1)]
    for (ex, et), c in poly.terms.items():
        rows[ex][et] = int(c)
    return [upoly.trim(r) for r in rows]


def _divides(A: List[upoly.UPoly], P: List[upoly.UPoly]) -> bool:
    """Exact division test in Z[t][X] (``A`` primitive)."""
    P = list(P)
    dA = len(A) - 1
    for k in range(len(P) - 1 - dA, -1, -1):
        q = upoly.divexact(P[k + dA], A[-1])
        if q is None:
            return False
        if q:
            for i, a in enumerate(A):
                P[k + i] = upoly.sub(P[k + i], upoly.mul(q, a))
    return not any(P)


def series_divisor(poly: Polynomial, series: Sequence) -> Polynomial:
    """The primitive divisor of ``poly`` of least X-degree vanishing on ``series``.

    ``poly`` must vanish on the series exactly; only its degrees bound the
    search.  Returns ``poly`` itself (made primitive) when no proper divisor
    qualifies.
    """
    poly = poly.retable(EQ_TABLE).primitive_part()
    dX, T = poly.degree("X"), poly.degree("t")
    if dX <= 1:
        return poly
    need = divisor_terms_needed(poly)
    if len(series) < need:
        raise UsageError(f"need {need} series terms, got {len(series)}")
    x = [Fraction(v) for v in series[:need]]
    powers = [[Fraction(1)] + [Fraction(0)] * (need - 1), x]
    for _ in range(dX - 2):
        powers.append(_series_mul(powers[-1], x, need))
    P = _x_coefficients(poly)
    for d in range(1, dX):
        rows = _ansatz_rows(powers, d, T, _rows_needed(d, T, dX, T))
        nullity = (d + 1) * (T + 1) - linalg.rank_mod(rows, (d + 1) * (T + 1))
        if nullity == 0:
            continue
        # multiples c(t)*H fill the nullspace, so deg_t H = T + 1 - nullity
        for e in (T + 1 - nullity, T):
            if e < 0:
                continue
            rows = _ansatz_rows(powers, d, e, _rows_needed(d, e, dX, T))
            basis = linalg.nullspace(rows, (d + 1) * (e + 1))
            if not basis:
                continue
            v = basis[0]
            A = [upoly.trim(v[i * (e + 1):(i + 1) * (e + 1)]) for i in range(d + 1)]
            while A and not A[-1]:
                A.pop()
            if len(A) < 2:
                continue
            g = ()
            for c in A:
                g = upoly.gcd_poly(g, c)
            A = [upoly.divexact(c, g) for c in A]
            if _divides(A, P):
                terms = {(i, j): c for i, row in enumerate(A) for j, c in enumerate(row) if c}
                return Polynomial(EQ_TABLE, terms).primitive_part()
    return poly
