"""Dynamic-programming enumeration of walks with area moments.

The DP runs over (length, height) and carries, for every state, the power
sums M_r = sum over walks of (2*area)^r.  Doubling keeps everything integral;
the trapezoid step from y to y' adds y + y' to the doubled area.

Strict walks have at least two steps and all interior heights >= 1, so a
single flat step is not a strict walk.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Tuple

from .core import UsageError
from .walks import StepSet

BRUTE_FORCE_LIMIT = 10 ** 7


@dataclass(frozen=True)
class MomentTable:
    S: StepSet
    N: int
    R: int
    strict: bool
    cells: Tuple[Tuple[Fraction, ...], ...]  # cells[n][r]

    def moment(self, n: int, r: int) -> Fraction:
        return self.cells[n][r]

    def count(self, n: int) -> int:
        return int(self.cells[n][0])

    def column(self, r: int) -> List[Fraction]:
        if not 0 <= r <= self.R:
            raise UsageError(f"moment {r} not in table (R={self.R})")
        return [row[r] for row in self.cells]


def _shift(moments: List[int], d: int, binom) -> List[int]:
    """Power sums after adding d to every (doubled) area."""
    if d == 0:
        return list(moments)
    powers = [1]
    for _ in range(len(moments)):
        powers.append(powers[-1] * d)
    return [sum(binom[r][j] * powers[r - j] * moments[j] for j in range(r + 1))
            for r in range(len(moments))]


def _add_into(target: Dict[int, List[int]], y: int, vec: List[int]):
    cur = target.get(y)
    if cur is None:
        target[y] = vec
    else:
        for i, v in enumerate(vec):
            cur[i] += v


def moment_table(S, N: int, R: int = 0, strict: bool = False) -> MomentTable:
    S = S if isinstance(S, StepSet) else StepSet(S)
    if N < 0 or R < 0:
        raise UsageError("N and R must be nonnegative")
    binom = [[comb(r, j) for j in range(r + 1)] for r in range(R + 1)]
    down = S.max_down
    zero = [0] * (R + 1)
    totals = [list(zero) for _ in range(N + 1)]
    if not strict:
        totals[0][0] = 1
    states: Dict[int, List[int]] = {0: [1] + [0] * R}
    for n in range(1, N + 1):
        remaining = N - n
        nxt: Dict[int, List[int]] = {}
        for y, vec in states.items():
            for s in S:
                y2 = y + s
                if y2 < 0:
                    continue
                if strict and y2 == 0:
                    # closing an excursion; needs at least two steps
                    if n >= 2:
                        for i, v in enumerate(_shift(vec, y, binom)):
                            totals[n][i] += v
                    continue
                if y2 > remaining * down:
                    continue  # cannot get back to 0 in time
                _add_into(nxt, y2, _shift(vec, y + y2, binom))
        states = nxt
        if not strict and 0 in states:
            totals[n] = list(states[0])
    cells = tuple(tuple(Fraction(v, 2 ** r) for r, v in enumerate(row)) for row in totals)
    return MomentTable(S, N, R, strict, cells)


def series_vector(S, N: int, r: int = 0, strict: bool = False) -> List[Fraction]:
    """Coefficients 0..N of the r-th area moment generating function."""
    return moment_table(S, N, r, strict).column(r)


def trapezoid_area(walk, start: int = 0) -> Fraction:
    y, twice = start, 0
    for s in walk:
        twice += 2 * y + s
        y += s
    return Fraction(twice, 2)


def brute_force_oracle(S, n: int, strict: bool = False) -> List[Tuple[Tuple[int, ...], Fraction]]:
    """All admissible walks of length n with their areas, by exhaustive search."""
    S = S if isinstance(S, StepSet) else StepSet(S)
    if n < 0:
        raise UsageError("n must be nonnegative")
    if len(S) ** n > BRUTE_FORCE_LIMIT:
        raise UsageError(f"{len(S)}^{n} walks exceeds the brute-force limit {BRUTE_FORCE_LIMIT}")
    if strict and n < 2:
        return []
    steps = sorted(S.steps, reverse=True)
    floor = 1 if strict else 0
    down = S.max_down
    out = []
    walk: List[int] = []

    def extend(y: int):
        k = len(walk)
        if k == n:
            if y == 0:
                out.append((tuple(walk), trapezoid_area(walk)))
            return
        for s in steps:
            y2 = y + s
            last = k + 1 == n
            if y2 < (0 if last else floor) or y2 > (n - k - 1) * down:
                continue
            walk.append(s)
            extend(y2)
            walk.pop()

    extend(0)
    return out
