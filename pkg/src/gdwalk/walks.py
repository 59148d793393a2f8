"""Equation systems for generalized Dyck walks (straight enumeration).

``f[a,b]`` counts walks from height ``a`` to height ``b`` staying weakly above
the axis, ``g[a,b]`` the nonempty ones touching the axis only at an endpoint
(``a == 0`` or ``b == 0``).  Each quantity gets one defining polynomial
``quantity - rhs``; eliminating everything but ``f[0,0]`` (or ``g[0,0]`` for
strict walks) gives the algebraic equation of the generating function.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .core import Polynomial, UsageError, VariableTable
from .groebner import Budget, eliminate

F, G = "F", "G"


@dataclass(frozen=True)
class StepSet:
    steps: FrozenSet[int]

    def __init__(self, steps: Iterable[int]):
        object.__setattr__(self, "steps", frozenset(int(s) for s in steps))

    @property
    def positive(self) -> Tuple[int, ...]:
        return tuple(sorted(s for s in self.steps if s > 0))

    @property
    def negative(self) -> Tuple[int, ...]:
        return tuple(sorted((s for s in self.steps if s < 0), reverse=True))

    @property
    def has_zero(self) -> bool:
        return 0 in self.steps

    def is_trivial(self) -> bool:
        return not (self.positive and self.negative)

    def reversed(self) -> "StepSet":
        return StepSet(-s for s in self.steps)

    @property
    def max_up(self) -> int:
        return max(self.positive, default=0)

    @property
    def max_down(self) -> int:
        return max((-s for s in self.negative), default=0)

    def __iter__(self):
        return iter(sorted(self.steps, reverse=True))

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return "{" + ", ".join(str(s) for s in self) + "}"


@dataclass(frozen=True, order=True)
class QuantityRef:
    kind: str
    a: int
    b: int

    def __post_init__(self):
        if self.kind not in (F, G) or self.a < 0 or self.b < 0:
            raise UsageError(f"bad quantity {self.kind}({self.a},{self.b})")
        if self.kind == G and self.a > 0 and self.b > 0:
            raise UsageError(f"g[{self.a},{self.b}] is identically 0 and never generated")

    @property
    def name(self) -> str:
        sep = "" if self.a < 10 and self.b < 10 else "_"
        return f"{self.kind.lower()}{self.a}{sep}{self.b}"

    def __str__(self):
        return self.name


def _f_refs(S: StepSet, a: int, b: int) -> List[Tuple[QuantityRef, ...]]:
    """Right-hand side of the f[a,b] rule as a list of products (empty tuple = 1)."""
    if a > 0 and b > 0:
        return [(QuantityRef(G, a, 0), QuantityRef(F, 0, b)), (QuantityRef(F, a - 1, b - 1),)]
    if a > 0:
        return [(QuantityRef(G, a, 0), QuantityRef(F, 0, 0))]
    if b > 0:
        return [(QuantityRef(F, 0, 0), QuantityRef(G, 0, b))]
    return [(), (QuantityRef(G, 0, 0), QuantityRef(F, 0, 0))]


def _g_refs(S: StepSet, a: int, b: int) -> List[Tuple[int, int, QuantityRef]]:
    """Terms ``(t power, doubled q power, f quantity)`` of the g[a,b] rule."""
    if a > 0 and b > 0:
        raise UsageError(f"g[{a},{b}] is identically 0 and never generated")
    P, N = S.positive, S.negative
    if a == 0 and b > 0:
        return [(1, i, QuantityRef(F, i - 1, b - 1)) for i in P]
    if b == 0 and a > 0:
        return [(1, -j, QuantityRef(F, a - 1, -j - 1)) for j in N]
    return [(2, i - j, QuantityRef(F, i - 1, -j - 1)) for i in P for j in N]


def references(S: StepSet, q: QuantityRef) -> List[QuantityRef]:
    if q.kind == F:
        return [r for prod in _f_refs(S, q.a, q.b) for r in prod]
    return [r for _t, _h, r in _g_refs(S, q.a, q.b)]


def required_quantities(S: StepSet, strict: bool = False) -> List[QuantityRef]:
    """Closure of the target under the f/g rules; F before G, then by (a, b)."""
    if S.is_trivial():
        raise UsageError(f"step set {S} is trivial")
    start = QuantityRef(G, 0, 0) if strict else QuantityRef(F, 0, 0)
    seen = {start}
    todo = [start]
    while todo:
        q = todo.pop()
        assert q.a < S.max_up and q.b < S.max_down, q
        for r in references(S, q):
            if r not in seen:
                seen.add(r)
                todo.append(r)
    return sorted(seen)


def _check_in_closure(S: StepSet, a: int, b: int):
    if S.is_trivial() or not (0 <= a < S.max_up and 0 <= b < S.max_down):
        raise UsageError(f"({a},{b}) is outside the closure for {S}")


@dataclass(frozen=True)
class EquationSystem:
    equations: Tuple[Polynomial, ...]
    quantities: Tuple[QuantityRef, ...]
    target: QuantityRef
    table: VariableTable

    def render(self) -> List[str]:
        return [f"{q.name} = {(self.table.gen(q.name) - eq).render()}"
                for q, eq in zip(self.quantities, self.equations)]


def system_table(quantities: Iterable[QuantityRef], target: QuantityRef, target_name: str = None) -> VariableTable:
    """Non-target quantities (G before F, then by (a, b)), target, then t."""
    others = sorted((q for q in quantities if q != target), key=lambda q: (q.kind != G, q.a, q.b))
    return VariableTable(tuple(q.name for q in others) + (target_name or target.name, "t"))


def _table_for(S: StepSet, table: Optional[VariableTable], strict: bool = False) -> VariableTable:
    if table is not None:
        return table
    qs = required_quantities(S, strict)
    return system_table(qs, QuantityRef(G, 0, 0) if strict else QuantityRef(F, 0, 0))


def make_eq_f(S: StepSet, a: int, b: int, table: VariableTable = None) -> Polynomial:
    """``f[a,b] - rhs`` for the straight enumeration."""
    _check_in_closure(S, a, b)
    table = _table_for(S, table)
    var = lambda q: table.gen(q.name)
    rhs = table.const(0)
    for prod in _f_refs(S, a, b):
        term = table.const(1)
        for q in prod:
            term = term * var(q)
        rhs = rhs + term
    if a == 0 and b == 0 and S.has_zero:
        rhs = rhs + table.gen("t") * var(QuantityRef(F, 0, 0))
    return var(QuantityRef(F, a, b)) - rhs


def make_eq_g(S: StepSet, a: int, b: int, table: VariableTable = None) -> Polynomial:
    """``g[a,b] - rhs`` for the straight enumeration."""
    if a > 0 and b > 0:
        raise UsageError(f"g[{a},{b}] is identically 0 and never generated")
    _check_in_closure(S, a, b)
    table = _table_for(S, table)
    t = table.gen("t")
    rhs = table.const(0)
    for tpow, _h, q in _g_refs(S, a, b):
        rhs = rhs + t ** tpow * table.gen(q.name)
    return table.gen(QuantityRef(G, a, b).name) - rhs


def build_straight_system(S: StepSet, strict: bool = False) -> EquationSystem:
    quantities = required_quantities(S, strict)
    target = QuantityRef(G, 0, 0) if strict else QuantityRef(F, 0, 0)
    table = system_table(quantities, target)
    eqs = []
    for q in quantities:
        maker = make_eq_f if q.kind == F else make_eq_g
        eqs.append(maker(S, q.a, q.b, table))
    return EquationSystem(tuple(eqs), tuple(quantities), target, table)


def trivial_equation(S: StepSet, strict: bool):
    """Equation for step sets without both up and down steps, or ``None``."""
    from .verify import EQ_TABLE

    if not S.is_trivial():
        return None
    X, t = EQ_TABLE.gens()
    if strict:
        return X
    if S.has_zero:
        return (1 - t) * X - 1
    return X - 1


def straight_equation(S: StepSet, strict: bool = False, budget: Budget = None, stats_out: list = None):
    """Primitive algebraic equation Q(t, X) = 0 for the walk generating function."""
    from .verify import AlgebraicEquation

    trivial = trivial_equation(S, strict)
    if trivial is not None:
        return AlgebraicEquation(trivial, S, strict, 0)
    system = build_straight_system(S, strict)
    names = system.table.names
    table = VariableTable(names[:-2] + ("X", "t"))
    gens = [Polynomial(table, eq.terms) for eq in system.equations]
    found = eliminate(gens, ["X", "t"], target="X", budget=budget, generic="t", stats_out=stats_out)
    if not found:
        raise NoRelationFound(f"no relation for X(t) found for {S}")
    return AlgebraicEquation(drop_extraneous(found[0], S, strict, 0), S, strict, 0)


def drop_extraneous(poly: Polynomial, S: StepSet, strict: bool, moment: int) -> Polynomial:
    """Divisor of an eliminant that the enumerated series actually satisfies.

    The elimination ideal can carry factors from solution components that are
    not power series (for instance a curve of solutions with f00 = -1/t).
    """
    from .enumerate import series_vector
    from .verify import EQ_TABLE, divisor_terms_needed, series_divisor

    poly = poly.retable(EQ_TABLE)
    if poly.degree("X") <= 1:
        return poly
    n = divisor_terms_needed(poly)
    return series_divisor(poly, series_vector(S, n, moment, strict))


class NoRelationFound(RuntimeError):
    pass
