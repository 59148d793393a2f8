"""Reference results for generalized Dyck walks, checked end to end.

Each ``criterion_*`` function returns a :class:`Outcome`; ``run_all`` runs
them in order.  Expected values below are the reference equations, system
blocks and term lists, transcribed as polynomials and tuples.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Dict, List, Optional

from .area import area_equation, q_system
from .core import VariableTable, parse_polynomial
from .enumerate import brute_force_oracle, moment_table, series_vector
from .groebner import Budget, BudgetExceeded, eliminate
from .guess import estimate_area_constant, extend, guess_recurrence
from .verify import EQ_TABLE, verify_series
from .walks import StepSet, build_straight_system, straight_equation

DEGREE_12 = (
    "X^12 + 6*X^11 + (4*t + 3)*X^10 + (18*t - 21)*X^9 + (6*t^2 - 8)*X^8"
    " + (18*t^2 - 44*t - 9)*X^7 + (4*t^3 + 9*t^2 + 20*t + 60)*X^6"
    " + (6*t^3 + 29*t^2 + 96*t + 43)*X^5 + (t^4 + 30*t^3 + 16*t^2 - 14*t - 24)*X^4"
    " + (52*t^3 + 177*t^2 + 232*t + 50)*X^3 + (18*t^4 - 12*t^3 + 89*t^2 + 242*t + 149)*X^2"
    " + (54*t^3 + 12*t^2 - 150*t - 105)*X + 81*t^4 + 378*t^3 + 612*t^2 + 396*t + 99"
)

STRAIGHT_SYSTEM_1212 = (
    "f00 = f00*g00 + 1",
    "f01 = f00*g01",
    "f10 = g10*f00",
    "f11 = f01*g10 + f00",
    "g00 = t^2*f00 + t^2*f01 + t^2*f10 + t^2*f11",
    "g01 = t*f00 + t*f10",
    "g10 = t*f00 + t*f01",
)

# lhs -> (constant, {(t power, doubled q power, sorted factors)})
Q_SYSTEM_21012 = {
    "f01": (0, {(0, 0, (("f00", "t"), ("g01", "t")))}),
    "f10": (0, {(0, 0, (("f00", "t"), ("g10", "t")))}),
    "f11": (0, {(0, 0, (("f01", "t"), ("g10", "t"))), (0, 0, (("f00", "qt"),))}),
    "g01": (0, {(1, 1, (("f00", "qt"),)), (1, 2, (("f10", "qt"),))}),
    "g10": (0, {(1, 2, (("f01", "qt"),)), (1, 1, (("f00", "qt"),))}),
    "f00": (1, {(0, 0, (("f00", "t"), ("g00", "t"))), (1, 0, (("f00", "t"),))}),
    "g00": (0, {(2, 3, (("f01", "qt"),)), (2, 2, (("f00", "qt"),)),
                (2, 4, (("f11", "qt"),)), (2, 3, (("f10", "qt"),))}),
}

AREA_EQUATIONS = {
    "a": ((1, -1), False, "t^2 - (4*t^2 - 1)*(2*t^2 - 1)*X + t^2*(4*t^2 - 1)^2*X^2"),
    "b": ((1, 0, -1), False,
          "t^2 - (3*t - 1)*(t + 1)*(t^2 + 2*t - 1)*X + t^2*(3*t - 1)^2*(t + 1)^2*X^2"),
    "c": ((1, -1), True, "(4*t^2 - 1)*X + t^2"),
    "d": ((1, 0, -1), True, "(3*t^2 + 2*t - 1)*X + t^2"),
    "e": ((2, 1, 0, -1, -2), False,
          "t^2*(775*t^4 - 1460*t^3 + 1006*t^2 - 264*t + 24)"
          " + (t - 1)*(5*t - 1)*(425*t^6 - 1520*t^5 + 1527*t^4 - 68*t^3 - 282*t^2 + 88*t - 8)*X"
          " - t*(150*t^5 + 540*t^4 - 889*t^3 - 240*t^2 + 228*t - 32)*(t - 1)^2*(5*t - 1)^2*X^2"
          " - 2*t^2*(5*t + 4)*(5*t^3 - t^2 - 17*t + 4)*(t - 1)^3*(5*t - 1)^3*X^3"
          " + t^4*(5*t + 4)^2*(t - 1)^4*(5*t - 1)^4*X^4"),
}

AREA_TERMS_21012 = (
    0, 0, 3, 18, 113, 636, 3487, 18656, 98429, 514012, 2664690, 13737758, 70522801,
    360806214, 1840913908, 9371761174, 47621259557, 241601881822, 1224111502194,
    6195045902854, 31321134873744, 158217553824544, 798622703316154, 4028438371631942,
    20308239308212037, 102323623873153810, 515313296262175206, 2594054240062008690,
    13053194513626873348, 65659889953142043376,
)


@dataclass
class Outcome:
    number: int
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    parts: Dict[str, bool] = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" -- {self.detail}" if self.detail else ""
        return f"[{status}] {self.number:2d}. {self.title} ({self.seconds:.1f}s){extra}"


def nontrivial_subsets(steps=(2, 1, 0, -1, -2)) -> List[StepSet]:
    out = []
    for k in range(2, len(steps) + 1):
        for combo in itertools.combinations(steps, k):
            S = StepSet(combo)
            if not S.is_trivial():
                out.append(S)
    return out


def _timed(number: int, title: str, body: Callable[[], tuple]) -> Outcome:
    start = time.monotonic()
    try:
        passed, detail, parts = body()
    except BudgetExceeded as exc:
        passed, detail, parts = False, f"budget exceeded: {exc.reason}", {}
    return Outcome(number, title, passed, detail, time.monotonic() - start, parts)


def criterion_1() -> Outcome:
    def body():
        table = VariableTable(("Y", "Z", "X", "t"))
        Y, Z, X, t = table.gens()
        gens = [X - Y ** 2 - Z ** 2 - 1, Y - X ** 2 - 3 * Z ** 2 - t, Z - X * Y * Z - t - 1]
        start = time.monotonic()
        found = eliminate(gens, ["X", "t"], target="X")
        took = time.monotonic() - start
        expected = parse_polynomial(DEGREE_12, table)
        same = bool(found) and found[0].primitive_part() == expected.primitive_part()
        return same and took <= 60, f"eliminant matches: {same}, {took:.1f}s (limit 60s)", {}
    return _timed(1, "Groebner worked example, degree-12 eliminant", body)


def criterion_2() -> Outcome:
    def body():
        start = time.monotonic()
        eq = straight_equation(StepSet((1, -1)))
        took = time.monotonic() - start
        same = eq.same_as(parse_polynomial("t^2*X^2 - X + 1", EQ_TABLE))
        return same and took <= 1, f"{eq.render()} in {took:.2f}s", {}
    return _timed(2, "straight Dyck equation", body)


def criterion_3() -> Outcome:
    def body():
        system = build_straight_system(StepSet((1, 2, -1, -2)))
        table = VariableTable(tuple(sorted(system.table.names)))
        got = {eq.retable(table).primitive_part() for eq in system.equations}
        want = {parse_polynomial(line, table).primitive_part() for line in STRAIGHT_SYSTEM_1212}
        names = {q.name for q in system.quantities}
        want_names = {"f00", "f01", "f10", "f11", "g00", "g01", "g10"}
        ok = got == want and names == want_names and len(system.equations) == 7
        return ok, f"{len(system.equations)} equations, quantities {sorted(names)}", {}
    return _timed(3, "straight system for {1,2,-1,-2}", body)


def _q_signature(eq):
    terms = set()
    for term in eq.rhs:
        if term.coef != 1:
            return None
        factors = tuple(sorted((q.name, arg) for q, arg in term.factors))
        terms.add((term.t_exp, term.half_q_exp, factors))
    return int(eq.constant), terms


def criterion_4() -> Outcome:
    def body():
        system = q_system(StepSet((2, 1, 0, -1, -2)))
        got = {eq.lhs.name: _q_signature(eq) for eq in system}
        ok = got == Q_SYSTEM_21012 and len(system) == len(Q_SYSTEM_21012)
        bad = sorted(k for k in Q_SYSTEM_21012 if got.get(k) != Q_SYSTEM_21012[k])
        return ok, "all 7 functional equations match" if ok else f"mismatch in {bad}", {}
    return _timed(4, "q-system for {2,1,0,-1,-2}", body)


def criterion_5(parts: Optional[str] = None, budget: Optional[Budget] = None) -> Outcome:
    def body():
        results, notes = {}, []
        for key, (steps, strict, text) in AREA_EQUATIONS.items():
            if parts and key not in parts:
                continue
            start = time.monotonic()
            eq = area_equation(StepSet(steps), strict, budget)
            took = time.monotonic() - start
            ok = eq.same_as(parse_polynomial(text, EQ_TABLE))
            if key == "e":
                ok = ok and took <= 15 * 60
            results[key] = ok
            notes.append(f"({key}) {'ok' if ok else 'MISMATCH'} {took:.1f}s")
        return all(results.values()), ", ".join(notes), results
    return _timed(5, "area equations (a)-(e)", body)


def criterion_6() -> Outcome:
    def body():
        start = time.monotonic()
        column = moment_table(StepSet((2, 1, 0, -1, -2)), 29, 1).column(1)
        took = time.monotonic() - start
        ok = tuple(column) == AREA_TERMS_21012 and took <= 10
        return ok, f"30 terms {'match' if tuple(column) == AREA_TERMS_21012 else 'differ'} in {took:.2f}s", {}
    return _timed(6, "sum-of-areas terms for {2,1,0,-1,-2}", body)


def criterion_7() -> Outcome:
    def body():
        S = StepSet((1, -1))
        dp = series_vector(S, 24, 1, strict=True)
        expected = [4 ** (n - 1) for n in range(1, 13)]
        from_dp = [dp[2 * n] for n in range(1, 13)] == expected
        rec = guess_recurrence(dp[:22], 2, 1)
        ext = extend(rec, dp[:rec.seed_length], 25) if rec else []
        from_rec = bool(ext) and [ext[2 * n] for n in range(1, 13)] == expected
        return from_dp and from_rec, f"DP {from_dp}, recurrence {rec} -> {from_rec}", {}
    return _timed(7, "strict Dyck area 4^(n-1)", body)


def criterion_8(max_n: int = 10) -> Outcome:
    def body():
        bad = []
        for S in nontrivial_subsets():
            for strict in (False, True):
                table = moment_table(S, max_n, 2, strict)
                for n in range(max_n + 1):
                    walks = brute_force_oracle(S, n, strict)
                    sums = [sum(area ** r for _, area in walks) for r in range(3)]
                    if sums != [table.moment(n, r) for r in range(3)]:
                        bad.append((str(S), strict, n))
        return not bad, "all agree" if not bad else f"disagreements: {bad[:5]}", {}
    return _timed(8, "DP against brute force, n <= 10", body)


def criterion_9(order: int = 40, budget: Optional[Budget] = None, subsets=None,
                progress: Callable[[str], None] = None) -> Outcome:
    def body():
        results, failures = {}, []
        for S in subsets or nontrivial_subsets():
            for strict in (False, True):
                for moment, make in ((0, straight_equation), (1, area_equation)):
                    key = f"{S} {'strict' if strict else 'weak'} r={moment}"
                    start = time.monotonic()
                    try:
                        eq = make(S, strict, budget)
                        N = max(order, eq.poly.degree("t") + 5)
                        report = verify_series(eq, series_vector(S, N, moment, strict), N)
                        ok, note = report.passed, report.render()
                    except BudgetExceeded as exc:
                        ok, note = False, f"budget exceeded: {exc.reason}"
                    results[key] = ok
                    if not ok:
                        failures.append(f"{key}: {note}")
                    if progress:
                        progress(f"{key}: {'ok' if ok else note} ({time.monotonic() - start:.1f}s)")
        passed = all(results.values())
        detail = f"{sum(results.values())}/{len(results)} verified to O(t^{order})"
        if failures:
            detail += "; " + "; ".join(failures)
        return passed, detail, results
    return _timed(9, "equations vs DP series for all subsets of {-2..2}", body)


def criterion_10() -> Outcome:
    def body():
        catalan = [comb(2 * n, n) // (n + 1) for n in range(30)]
        rec = guess_recurrence(catalan, 2, 1)
        catalan_ok = rec is not None and rec.coeffs == ((2, 4), (2, 1)) or \
            (rec is not None and rec.coeffs == ((-2, -4), (2, 1)))
        notes, ok = [f"Catalan: {rec}"], catalan_ok
        for steps in ((1, -1), (1, 0, -1)):
            for r in (0, 1):
                truth = series_vector(StepSet(steps), 100, r)
                rec = guess_recurrence(truth[:60], 4, 4)
                good = rec is not None and extend(rec, truth[:rec.seed_length], 101) == truth
                ok = ok and good
                notes.append(f"{steps} r={r}: {'ok' if good else 'FAILED'}")
        return ok, "; ".join(notes), {}
    return _timed(10, "guessed recurrences extend to n=100", body)


def criterion_11(N: int = 400) -> Outcome:
    def body():
        notes, ok = [], True
        for steps in ((1, -1), (1, 0, -1)):
            est = estimate_area_constant(StepSet(steps), N)
            ok = ok and est.differences_decreasing
            notes.append(f"{steps}: period {est.period}, e({est.points[-1][0]}) = "
                         f"{float(est.points[-1][1]):.6f}, extrapolated {float(est.extrapolated):.6f}")
        return ok, "; ".join(notes), {}
    return _timed(11, "mean-area ratio settles", body)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def run_all(report: Callable[[str], None] = print, progress: Callable[[str], None] = None) -> List[Outcome]:
    outcomes = []
    for crit in CRITERIA:
        outcome = crit(progress=progress) if crit is criterion_9 else crit()
        report(outcome.line())
        outcomes.append(outcome)
    return outcomes
