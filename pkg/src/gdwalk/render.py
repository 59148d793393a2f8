"""Byte-stable JSON for equations, series, systems, recurrences and reports."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .core import Polynomial, UsageError
from .verify import EQ_TABLE, AlgebraicEquation, VerifyReport


def scalar_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def equation_obj(eq) -> dict:
    poly = eq.poly if isinstance(eq, AlgebraicEquation) else eq.retable(EQ_TABLE)
    terms = sorted(poly.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))
    return {"vars": ["t", "X"],
            "terms": [{"coef": scalar_str(c), "t": et, "X": ex} for (ex, et), c in terms]}


def equation_from_obj(obj: dict) -> Polynomial:
    if obj.get("vars") != ["t", "X"]:
        raise UsageError("equation JSON must have vars [\"t\", \"X\"]")
    terms = {}
    for term in obj["terms"]:
        key = (int(term["X"]), int(term["t"]))
        terms[key] = terms.get(key, 0) + Fraction(term["coef"])
    return Polynomial(EQ_TABLE, terms)


def series_obj(series: Sequence) -> list:
    return [scalar_str(x) for x in series]


def series_from_obj(obj) -> list:
    return [Fraction(x) for x in obj]


def system_obj(system) -> dict:
    """Straight system (polynomials) or q-system (list of functional equations)."""
    if hasattr(system, "equations"):
        lines = system.render()
        names = [q.name for q in system.quantities]
    else:
        lines = [eq.render() for eq in system]
        names = [eq.lhs.name for eq in system]
    return {"quantities": names, "equations": lines}


def report_obj(report: VerifyReport) -> dict:
    return report.as_dict()


def report_from_obj(obj: dict) -> VerifyReport:
    residual = obj.get("residual")
    return VerifyReport(bool(obj["passed"]), int(obj["order"]), obj.get("first_failure"),
                        None if residual is None else Fraction(residual))


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=True)


def render_json(obj) -> str:
    """JSON text for any object the command line emits."""
    from .guess import AreaEstimate, Recurrence

    if isinstance(obj, (AlgebraicEquation, Polynomial)):
        return dumps(equation_obj(obj))
    if isinstance(obj, VerifyReport):
        return dumps(report_obj(obj))
    if isinstance(obj, (Recurrence, AreaEstimate)):
        return dumps(obj.as_dict())
    if isinstance(obj, (list, tuple)) and all(isinstance(x, (int, Fraction)) for x in obj):
        return dumps(series_obj(obj))
    if hasattr(obj, "equations") or isinstance(obj, list):
        return dumps(system_obj(obj))
    if isinstance(obj, dict):
        return dumps(obj)
    raise UsageError(f"cannot render {type(obj).__name__} as JSON")
