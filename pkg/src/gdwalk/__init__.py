"""Generalized Dyck walks: algebraic equations, exact enumeration and area moments."""
from .area import area_equation, q_system
from .core import Polynomial, UsageError, VariableTable, parse_polynomial
from .enumerate import brute_force_oracle, moment_table, series_vector
from .groebner import Budget, BudgetExceeded, buchberger, eliminate
from .guess import Recurrence, estimate_area_constant, extend, guess_recurrence
from .verify import AlgebraicEquation, VerifyReport, verify_series
from .walks import StepSet, build_straight_system, straight_equation

__all__ = [
    "AlgebraicEquation", "Budget", "BudgetExceeded", "Polynomial", "Recurrence", "StepSet",
    "UsageError", "VariableTable", "VerifyReport", "area_equation", "brute_force_oracle",
    "buchberger", "build_straight_system", "eliminate", "estimate_area_constant", "extend",
    "guess_recurrence", "moment_table", "parse_polynomial", "q_system", "series_vector",
    "straight_equation", "verify_series",
]
