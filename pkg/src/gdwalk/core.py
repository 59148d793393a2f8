"""Exact multivariate polynomials with rational coefficients.

A :class:`Polynomial` is a sparse map from exponent tuples to nonzero
:class:`fractions.Fraction` coefficients over a :class:`VariableTable`.
Monomials compare by pure lexicographic order on the exponent tuples, so
the first variable in the table is the greatest one.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterator, Mapping, Sequence, Tuple, Union

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


class UsageError(ValueError):
    """Raised when an operation receives arguments outside its contract."""


@dataclass(frozen=True)
class VariableTable:
    """Ordered, duplicate-free variable names; earlier names are greater."""

    names: Tuple[str, ...]
    order: str = "lex"
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise UsageError(f"duplicate variable names in {names}")
        if self.order != "lex":
            raise UsageError(f"unsupported monomial order {self.order!r}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __len__(self):
        return len(self.names)

    def __contains__(self, name):
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"unknown variable {name!r}") from None

    def gen(self, name: str) -> "Polynomial":
        i = self.index(name)
        return Polynomial(self, {tuple(int(j == i) for j in range(len(self))): Fraction(1)})

    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(n) for n in self.names)

    def const(self, c: Scalar) -> "Polynomial":
        return Polynomial(self, {self.zero_monomial(): c})

    def zero_monomial(self) -> Monomial:
        return (0,) * len(self.names)


def _clean(terms: Mapping[Monomial, Scalar]) -> Dict[Monomial, Fraction]:
    return {m: Fraction(c) for m, c in terms.items() if c != 0}


class Polynomial:
    """Immutable sparse polynomial over ``table`` with Fraction coefficients."""

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table: VariableTable, terms: Mapping[Monomial, Scalar] = (), *, _trusted=False):
        self.table = table
        if _trusted:
            self.terms = terms
        else:
            terms = dict(terms)
            n = len(table)
            for m in terms:
                if len(m) != n or any(e < 0 for e in m):
                    raise UsageError(f"bad monomial {m} for {n} variables")
            self.terms = _clean(terms)
        self._hash = None

    # construction helpers -------------------------------------------------

    def _new(self, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        return Polynomial(self.table, terms, _trusted=True)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.table != self.table:
                raise UsageError("polynomials live over different variable tables")
            return other
        if isinstance(other, (int, Fraction)):
            return self.table.const(other)
        return NotImplemented

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return self._new(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise UsageError("exponent must be a nonnegative integer")
        result = self.table.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return self._new({})
        return self._new({m: v * c for m, v in self.terms.items()})

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.table.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table.names, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> Iterator[Monomial]:
        """Monomials in decreasing lex order."""
        return iter(sorted(self.terms, reverse=True))

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        for m in self.monomials():
            yield m, self.terms[m]

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise UsageError("zero polynomial has no leading monomial")
        return max(self.terms)

    def leading_coefficient(self) -> Fraction:
        return self.terms[self.leading_monomial()]

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def degree(self, var: str) -> int:
        i = self.table.index(var)
        return max((m[i] for m in self.terms), default=0)

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def variables(self) -> Tuple[str, ...]:
        used = [False] * len(self.table)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used[i] = True
        return tuple(n for n, u in zip(self.table.names, used) if u)

    # calculus and normalisation -------------------------------------------

    def diff(self, var: str) -> "Polynomial":
        i = self.table.index(var)
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                out[m[:i] + (e - 1,) + m[i + 1:]] = c * e
        return self._new(out)

    def primitive_part(self) -> "Polynomial":
        """Integral, content-free multiple of ``self`` with positive leading coefficient."""
        if not self.terms:
            raise UsageError("primitive part of the zero polynomial is undefined")
        den = reduce(_lcm, (c.denominator for c in self.terms.values()), 1)
        ints = {m: c.numerator * (den // c.denominator) for m, c in self.terms.items()}
        g = reduce(gcd, ints.values(), 0)
        if ints[max(ints)] < 0:
            g = -g
        return self._new({m: Fraction(v // g) for m, v in ints.items()})

    def subs(self, values: Mapping[str, Union[Scalar, "Polynomial"]]) -> "Polynomial":
        """Substitute scalars or polynomials (over the same table) for variables."""
        idx = {self.table.index(k): v for k, v in values.items()}
        result = self.table.const(0)
        powers: Dict[Tuple[int, int], Polynomial] = {}
        for m, c in self.terms.items():
            keep = tuple(0 if i in idx else e for i, e in enumerate(m))
            term = Polynomial(self.table, {keep: c}, _trusted=True)
            for i, v in idx.items():
                e = m[i]
                if e:
                    if not isinstance(v, Polynomial):
                        term = term.scale(Fraction(v) ** e)
                    else:
                        key = (i, e)
                        if key not in powers:
                            powers[key] = v ** e
                        term = term * powers[key]
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        missing = set(self.variables()) - set(values)
        if missing:
            raise UsageError(f"no value for {sorted(missing)}")
        vec = [Fraction(values.get(n, 0)) for n in self.table.names]
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in zip(vec, m):
                if e:
                    term *= v ** e
            total += term
        return total

    def retable(self, table: VariableTable) -> "Polynomial":
        """The same polynomial over another table containing all used variables."""
        used = set(self.variables())
        pos = [table.index(n) if n in used else None for n in self.table.names]
        n = len(table)
        out = {}
        for m, c in self.terms.items():
            new = [0] * n
            for j, e in zip(pos, m):
                if e:
                    new[j] = e
            out[tuple(new)] = c
        return Polynomial(table, out, _trusted=True)

    # text -----------------------------------------------------------------

    def render(self, factor_order: Sequence[str] = None) -> str:
        """Canonical text: decreasing lex terms, ``*`` products, ``^`` powers.

        Factors inside a term are written smallest variable first (``t^2*X^2``)
        unless ``factor_order`` says otherwise.
        """
        if not self.terms:
            return "0"
        names = self.table.names
        order = [self.table.index(v) for v in factor_order] if factor_order else list(range(len(names)))[::-1]
        parts = []
        for m, c in self.items():
            factors = []
            for i in order:
                e = m[i]
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append(f"{names[i]}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Polynomial({self.render()!r}, vars={list(self.table.names)})"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def poly_arith(op: str, a: Polynomial, b: Polynomial = None) -> Polynomial:
    """Dispatch ``add``/``sub``/``mul``/``neg`` on polynomials sharing a table."""
    if op == "neg":
        return -a
    if b is None or not isinstance(b, Polynomial) or a.table != b.table:
        raise UsageError("binary polynomial operations need a shared variable table")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise UsageError(f"unknown operation {op!r}")




_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    out, pos = [], 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise UsageError(f"cannot parse polynomial near {text[pos:]!r}")
        num, name, op = m.groups()
        out.append(("num", int(num)) if num else ("name", name) if name else ("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, table: VariableTable):
        self.tokens, self.pos, self.table = tokens, 0, table

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, op=None):
        tok = self.peek()
        if tok[0] is None or (op is not None and tok != ("op", op)):
            raise UsageError(f"expected {op or 'more input'} at token {self.pos}")
        self.pos += 1
        return tok

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.total_degree() > 0 or rhs.is_zero():
                    raise UsageError("can only divide by a nonzero constant")
                acc = acc.scale(1 / rhs.terms[rhs.table.zero_monomial()])
        return acc

    def unary(self) -> Polynomial:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, value = self.take()
            if kind != "num":
                raise UsageError("exponents must be nonnegative integers")
            base = base ** value
        return base

    def atom(self) -> Polynomial:
        kind, value = self.take()
        if kind == "num":
            return self.table.const(value)
        if kind == "name":
            return self.table.gen(value)
        if value == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise UsageError(f"unexpected {value!r}")


def parse_polynomial(text: str, table: VariableTable) -> Polynomial:
    """Parse ``+ - * / ^`` expressions with parentheses; ``lhs = rhs`` gives ``lhs - rhs``."""
    sides = text.split("=")
    if len(sides) > 2:
        raise UsageError("at most one '=' allowed")
    polys = []
    for side in sides:
        tokens = _tokenize(side)
        if not tokens:
            raise UsageError("empty polynomial")
        parser = _Parser(tokens, table)
        polys.append(parser.expr())
        if parser.pos != len(tokens):
            raise UsageError(f"unexpected trailing input in {side.strip()!r}")
    return polys[0] - polys[1] if len(polys) == 2 else polys[0]


def integer_terms(p: Polynomial) -> Dict[Monomial, int]:
    """Primitive integer coefficient map of ``p`` (used by the Gröbner kernel)."""
    return {m: int(c) for m, c in p.primitive_part().terms.items()}


def from_integer_terms(table: VariableTable, terms: Mapping[Monomial, int]) -> Polynomial:
    return Polynomial(table, {m: Fraction(c) for m, c in terms.items()}, _trusted=True)
