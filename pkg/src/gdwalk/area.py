"""Area-weighted functional equations and their first-order jet at q = 1.

Walks are weighted by ``t^length * q^area`` with the trapezoid area.  A
quantity evaluated at ``q*t`` accounts for lowering a walk by one unit, and
the first/last step of a ``g`` excursion contributes ``q^(i/2)``.  Writing
every quantity as ``Q0 + (q-1)*Q1`` and using ``Q(qt) = Q0 + (q-1)*(t*Q0' + Q1)``
turns the functional system into polynomial equations in ``Q0``, ``Q1`` and
``Q0'`` (closed by differentiating the order-0 equations in ``t``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .core import Polynomial, UsageError, VariableTable
from .groebner import Budget, eliminate
from .verify import EQ_TABLE, AlgebraicEquation
from .walks import F, G, NoRelationFound, QuantityRef, StepSet, _check_in_closure, _f_refs, _g_refs, drop_extraneous, required_quantities

AT_T, AT_QT = "t", "qt"


@dataclass(frozen=True)
class FunctionalTerm:
    """``coef * t^t_exp * q^(half_q_exp/2) * prod(factors)``."""

    coef: Fraction
    t_exp: int
    half_q_exp: int
    factors: Tuple[Tuple[QuantityRef, str], ...]

    def render(self) -> str:
        parts = []
        if self.coef != 1:
            parts.append(str(self.coef))
        if self.t_exp == 1:
            parts.append("t")
        elif self.t_exp > 1:
            parts.append(f"t^{self.t_exp}")
        h = self.half_q_exp
        if h == 2:
            parts.append("q")
        elif h and h % 2 == 0:
            parts.append(f"q^{h // 2}")
        elif h:
            parts.append(f"q^({h}/2)")
        for q, arg in self.factors:
            parts.append(f"{q.name}({'q*t' if arg == AT_QT else 't'})")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class FunctionalEquation:
    lhs: QuantityRef
    rhs: Tuple[FunctionalTerm, ...]
    constant: Fraction = Fraction(0)

    def render(self) -> str:
        pieces = []
        if self.constant:
            pieces.append(str(self.constant))
        pieces.extend(term.render() for term in self.rhs)
        return f"{self.lhs.name}(t) = " + (" + ".join(pieces) if pieces else "0")

    def quantities(self) -> List[QuantityRef]:
        out = [self.lhs]
        for term in self.rhs:
            out.extend(q for q, _ in term.factors)
        return out


def q_make_eq_f(S: StepSet, a: int, b: int) -> FunctionalEquation:
    _check_in_closure(S, a, b)
    terms = []
    constant = Fraction(0)
    for prod in _f_refs(S, a, b):
        if not prod:
            constant += 1
        elif len(prod) == 1:
            # lowered walk: lost one unit of area per step
            terms.append(FunctionalTerm(Fraction(1), 0, 0, ((prod[0], AT_QT),)))
        else:
            terms.append(FunctionalTerm(Fraction(1), 0, 0, tuple((q, AT_T) for q in prod)))
    if a == 0 and b == 0 and S.has_zero:
        terms.append(FunctionalTerm(Fraction(1), 1, 0, ((QuantityRef(F, 0, 0), AT_T),)))
    return FunctionalEquation(QuantityRef(F, a, b), tuple(terms), constant)


def q_make_eq_g(S: StepSet, a: int, b: int) -> FunctionalEquation:
    if a > 0 and b > 0:
        raise UsageError(f"g[{a},{b}] is identically 0 and never generated")
    _check_in_closure(S, a, b)
    terms = tuple(FunctionalTerm(Fraction(1), tpow, h, ((q, AT_QT),)) for tpow, h, q in _g_refs(S, a, b))
    return FunctionalEquation(QuantityRef(G, a, b), terms)


def q_system(S: StepSet, strict: bool = False) -> List[FunctionalEquation]:
    return [(q_make_eq_f if q.kind == F else q_make_eq_g)(S, q.a, q.b)
            for q in required_quantities(S, strict)]


def jet_names(q: QuantityRef) -> Tuple[str, str, str]:
    """Variable names for the order-0 value, order-1 coefficient and t-derivative."""
    return f"{q.name}_0", f"{q.name}_1", f"D{q.name}_0"


@dataclass(frozen=True)
class ExpandedSystem:
    table: VariableTable
    quantities: Tuple[QuantityRef, ...]
    order0: Tuple[Polynomial, ...]
    order1: Tuple[Polynomial, ...]
    derivatives: Tuple[Polynomial, ...]
    target: str

    @property
    def equations(self) -> Tuple[Polynomial, ...]:
        return self.order0 + self.order1 + self.derivatives

    @property
    def variables(self) -> Dict[QuantityRef, Tuple[str, str, str]]:
        return {q: jet_names(q) for q in self.quantities}


def expanded_table(quantities, target: QuantityRef, target_name: str = "X") -> VariableTable:
    """Non-target Q1, D-variables, non-target Q0, target Q0, target Q1, t.

    The linear unknowns (Q1 and D) go first so lex elimination solves them
    before touching the order-0 block.
    """
    ordered = sorted(quantities, key=lambda q: (q.kind != G, q.a, q.b))
    others = [q for q in ordered if q != target]
    names = [jet_names(q)[1] for q in others]
    names += [jet_names(q)[2] for q in ordered]
    names += [jet_names(q)[0] for q in others]
    names += [jet_names(target)[0], target_name, "t"]
    return VariableTable(tuple(names))


def expand_first_order(system: List[FunctionalEquation], target: QuantityRef = None,
                       target_name: str = None) -> ExpandedSystem:
    """Coefficients of (q-1)^0 and (q-1)^1 plus t-derivatives of the order-0 block."""
    quantities = []
    for eq in system:
        if eq.lhs in quantities:
            raise UsageError(f"two equations for {eq.lhs}")
        quantities.append(eq.lhs)
    for eq in system:
        for q in eq.quantities():
            if q not in quantities:
                raise UsageError(f"{q} has no equation; system is not closed")
    target = target or quantities[0]
    rename = {jet_names(target)[1]: target_name} if target_name else {}
    table = expanded_table(quantities, target, target_name or jet_names(target)[1])
    var = lambda name: table.gen(rename.get(name, name))
    t = table.gen("t")
    one, zero = table.const(1), table.const(0)

    def factor_jet(q: QuantityRef, arg: str):
        v0, v1, d = (var(n) for n in jet_names(q))
        return (v0, v1) if arg == AT_T else (v0, t * d + v1)

    eq0, eq1 = [], []
    for eq in system:
        lhs0, lhs1 = factor_jet(eq.lhs, AT_T)
        rhs0, rhs1 = table.const(eq.constant), zero
        for term in eq.rhs:
            a0 = t ** term.t_exp * term.coef
            a1 = a0 * Fraction(term.half_q_exp, 2)
            for q, arg in term.factors:
                b0, b1 = factor_jet(q, arg)
                a0, a1 = a0 * b0, a0 * b1 + a1 * b0
            rhs0, rhs1 = rhs0 + a0, rhs1 + a1
        eq0.append(lhs0 - rhs0)
        eq1.append(lhs1 - rhs1)

    derivs = []
    for p in eq0:
        dp = p.diff("t")
        for q in quantities:
            v0, _v1, d = jet_names(q)
            dp = dp + p.diff(v0) * var(d)
        derivs.append(dp)
    target_var = target_name or jet_names(target)[1]
    return ExpandedSystem(table, tuple(quantities), tuple(eq0), tuple(eq1), tuple(derivs), target_var)


def area_equation(S: StepSet, strict: bool = False, budget: Budget = None,
                  stats_out: list = None) -> AlgebraicEquation:
    """Algebraic equation for the generating function of the sum of areas."""
    if S.is_trivial():
        # only flat runs at height 0 survive: every area is 0
        return AlgebraicEquation(EQ_TABLE.gen("X"), S, strict, 1)
    target = QuantityRef(G, 0, 0) if strict else QuantityRef(F, 0, 0)
    ex = expand_first_order(q_system(S, strict), target, "X")
    found = eliminate(list(ex.equations), ["X", "t"], target="X", budget=budget, generic="t",
                      stats_out=stats_out)
    if not found:
        raise NoRelationFound(f"no relation for the area generating function of {S}")
    return AlgebraicEquation(drop_extraneous(found[0], S, strict, 1), S, strict, 1)
