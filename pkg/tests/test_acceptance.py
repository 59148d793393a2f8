"""Acceptance criteria, one test each, at their stated tolerances.

Every test prints a ``[PASS]``/``[FAIL]`` line; the lines are also gathered
into the terminal summary.  Running this file directly prints the same lines
without pytest.
"""
import time

import pytest

from gdwalk import reproduce

RESULTS = []


def _check(outcome, limit=None):
    line = outcome.line()
    if limit is not None and outcome.seconds > limit:
        outcome.passed = False
        line = outcome.line() + f" -- exceeded {limit}s"
    RESULTS.append(line)
    print(line)
    assert outcome.passed, line


def test_criterion_01_groebner_worked_example():
    _check(reproduce.criterion_1(), limit=60)


def test_criterion_02_straight_dyck():
    _check(reproduce.criterion_2())


def test_criterion_03_straight_system():
    _check(reproduce.criterion_3())


def test_criterion_04_q_system():
    _check(reproduce.criterion_4())


def test_criterion_05_area_equations():
    _check(reproduce.criterion_5())


def test_criterion_06_area_terms():
    _check(reproduce.criterion_6(), limit=10)


def test_criterion_07_strict_dyck_powers_of_four():
    _check(reproduce.criterion_7())


def test_criterion_08_dp_against_brute_force():
    _check(reproduce.criterion_8(), limit=5 * 60)


def test_criterion_09_series_cross_check():
    _check(reproduce.criterion_9(), limit=30 * 60)


def test_criterion_10_guessing():
    _check(reproduce.criterion_10())


def test_criterion_11_asymptotics():
    _check(reproduce.criterion_11())


if __name__ == "__main__":
    start = time.monotonic()
    outcomes = reproduce.run_all()
    print(f"{sum(o.passed for o in outcomes)}/{len(outcomes)} criteria passed "
          f"in {time.monotonic() - start:.0f}s")
