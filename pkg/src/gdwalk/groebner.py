"""Buchberger's algorithm over Q with pure lex order, and elimination.

Internally polynomials are dicts ``{exponent tuple: int}`` kept primitive
(fraction-free reduction followed by content stripping).  Pairs are chosen by
the normal strategy; Gebauer-Moeller bookkeeping applies Buchberger's product
(coprimality) and chain criteria.
"""
from __future__ import annotations

import heapq
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import upoly
from .core import Monomial, Polynomial, UsageError, VariableTable, from_integer_terms, integer_terms

IntPoly = Dict[Monomial, int]
ParamPoly = Dict[Monomial, Tuple[int, ...]]

log = logging.getLogger(__name__)


@dataclass
class Budget:
    """Resource limits for one basis computation."""

    max_pairs: int = 200_000
    max_degree: int = 120
    max_basis: int = 5_000
    timeout_seconds: Optional[float] = None


@dataclass
class GroebnerStats:
    pairs_processed: int = 0
    pairs_skipped: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    max_degree_seen: int = 0
    basis_size: int = 0
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


class BudgetExceeded(RuntimeError):
    """A basis computation hit one of its :class:`Budget` limits."""

    def __init__(self, reason: str, stats: GroebnerStats):
        super().__init__(f"Groebner budget exceeded: {reason} ({stats.as_dict()})")
        self.reason = reason
        self.stats = stats


@dataclass(frozen=True)
class IdealBasis:
    generators: Tuple[Polynomial, ...]
    is_groebner: bool
    stats: GroebnerStats = field(default_factory=GroebnerStats, compare=False)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


# ---------------------------------------------------------------------------
# integer kernel


def _divides(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm_mono(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _mask(m: Monomial) -> int:
    bits = 0
    for i, e in enumerate(m):
        if e:
            bits |= 1 << i
    return bits


def _content(p: IntPoly) -> int:
    g = 0
    for c in p.values():
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _make_primitive(p: IntPoly) -> IntPoly:
    if not p:
        return p
    g = _content(p)
    if p[max(p)] < 0:
        g = -g
    if g == 1:
        return p
    return {m: c // g for m, c in p.items()}


class _Reducer:
    """Lead-term index over a list of integer polynomials."""

    __slots__ = ("polys", "leads", "masks", "lcs")

    def __init__(self, polys: Sequence[IntPoly] = ()):
        self.polys: List[IntPoly] = []
        self.leads: List[Monomial] = []
        self.masks: List[int] = []
        self.lcs: List[int] = []
        for p in polys:
            self.add(p)

    def add(self, p: IntPoly):
        lm = max(p)
        self.polys.append(p)
        self.leads.append(lm)
        self.masks.append(_mask(lm))
        self.lcs.append(p[lm])

    def find(self, m: Monomial) -> int:
        mm = _mask(m)
        for k, (lm, mk) in enumerate(zip(self.leads, self.masks)):
            if mk & ~mm == 0 and _divides(lm, m):
                return k
        return -1


def _normal_form(p: IntPoly, red: _Reducer, stats: Optional[GroebnerStats] = None, full: bool = True) -> IntPoly:
    """Fraction-free normal form of ``p``: a nonzero integer multiple of the true remainder."""
    p = dict(p)
    rem: IntPoly = {}
    steps = 0
    while p:
        m = max(p)
        k = red.find(m)
        if k < 0:
            if not full:
                rem.update(p)
                break
            rem[m] = p.pop(m)
            continue
        g = red.polys[k]
        lm = red.leads[k]
        c = p[m]
        lc = red.lcs[k]
        d = gcd(c, lc)
        a, b = lc // d, c // d
        if a < 0:
            a, b = -a, -b
        if a != 1:
            for key in p:
                p[key] *= a
            for key in rem:
                rem[key] *= a
        shift = tuple(x - y for x, y in zip(m, lm))
        for gm, gc in g.items():
            key = tuple(x + y for x, y in zip(gm, shift))
            v = p.get(key, 0) - b * gc
            if v:
                p[key] = v
            else:
                p.pop(key, None)
        steps += 1
        if steps % 16 == 0 and a != 1:
            cont = gcd(_content(p), _content(rem))
            if cont > 1:
                p = {key: v // cont for key, v in p.items()}
                rem = {key: v // cont for key, v in rem.items()}
    if stats is not None:
        stats.reductions += steps
    return _make_primitive(rem)


def _s_poly(f: IntPoly, g: IntPoly) -> IntPoly:
    lf, lg = max(f), max(g)
    L = _lcm_mono(lf, lg)
    cf, cg = f[lf], g[lg]
    d = gcd(cf, cg)
    a, b = cg // d, cf // d
    sf = tuple(x - y for x, y in zip(L, lf))
    sg = tuple(x - y for x, y in zip(L, lg))
    out: IntPoly = {}
    for m, c in f.items():
        out[tuple(x + y for x, y in zip(m, sf))] = a * c
    for m, c in g.items():
        key = tuple(x + y for x, y in zip(m, sg))
        v = out.get(key, 0) - b * c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def _total_degree(p: IntPoly) -> int:
    return max(sum(m) for m in p)


# ---------------------------------------------------------------------------
# Z[t] kernel: monomials in the other variables, coefficients dense in t


def _to_param(p: IntPoly, param: int) -> ParamPoly:
    acc: Dict[Monomial, list] = {}
    for m, c in p.items():
        e = m[param]
        key = m[:param] + m[param + 1:]
        row = acc.setdefault(key, [])
        if len(row) <= e:
            row.extend([0] * (e + 1 - len(row)))
        row[e] += c
    return {k: upoly.trim(v) for k, v in acc.items() if any(v)}


def _from_param(p: ParamPoly, param: int) -> IntPoly:
    out: IntPoly = {}
    for key, coef in p.items():
        for e, c in enumerate(coef):
            if c:
                out[key[:param] + (e,) + key[param:]] = c
    return out


def _strip_content(p: ParamPoly) -> ParamPoly:
    """Divide every coefficient by their common gcd in Z[t].

    The gcd of all coefficients is guessed as gcd(c0, sum r_i c_i) for fixed
    small multipliers and confirmed by exact division; a coefficient that
    refuses to divide is folded in and the division retried.
    """
    coeffs = sorted(p.values(), key=len)
    if not coeffs:
        return p
    mix: upoly.UPoly = ()
    for i, c in enumerate(coeffs[1:]):
        mix = upoly.add(mix, upoly.scale(c, 1 + (i * 7919) % 31))
    g = upoly.gcd_poly(coeffs[0], mix) if mix else upoly.primitive(coeffs[0])
    while True:
        if g == upoly.ONE:
            return p
        out = {}
        for m, c in p.items():
            q = upoly.divexact(c, g)
            if q is None:
                g = upoly.gcd_poly(g, c)
                break
            out[m] = q
        else:
            return out


def _param_primitive(p: ParamPoly) -> ParamPoly:
    """Divide by the content in Z[t]; the leading coefficient ends up positive."""
    if not p:
        return p
    p = _strip_content(p)
    if p[max(p)][-1] < 0:
        p = {m: upoly.neg(c) for m, c in p.items()}
    return p


def _cofactors(c: upoly.UPoly, lc: upoly.UPoly) -> Tuple[upoly.UPoly, upoly.UPoly]:
    """``(a, b)`` with ``a*c == b*lc`` and ``a`` as small as cheaply possible."""
    q = upoly.divexact(c, lc)
    if q is not None:
        return upoly.ONE, q
    d = upoly.gcd_poly(c, lc)
    return upoly.divexact(lc, d), upoly.divexact(c, d)


def _param_normal_form(p: ParamPoly, red: _Reducer, stats: Optional[GroebnerStats] = None) -> ParamPoly:
    """Fraction-free normal form over Z[t], made primitive."""
    p = dict(p)
    rem: ParamPoly = {}
    steps = 0
    grown = False
    while p:
        m = max(p)
        k = red.find(m)
        if k < 0:
            rem[m] = p.pop(m)
            continue
        g = red.polys[k]
        lm = red.leads[k]
        a, b = _cofactors(p[m], red.lcs[k])
        if a != upoly.ONE:
            grown = True
            for key in p:
                p[key] = upoly.mul(a, p[key])
            for key in rem:
                rem[key] = upoly.mul(a, rem[key])
        shift = tuple(x - y for x, y in zip(m, lm))
        for gm, gc in g.items():
            key = tuple(x + y for x, y in zip(gm, shift))
            v = upoly.sub(p.get(key, ()), upoly.mul(b, gc))
            if v:
                p[key] = v
            else:
                p.pop(key, None)
        steps += 1
        if grown and steps % 16 == 0:
            grown = False
            both = _strip_content({**{(0,) + k: v for k, v in p.items()},
                                   **{(1,) + k: v for k, v in rem.items()}})
            p = {k[1:]: v for k, v in both.items() if k[0] == 0}
            rem = {k[1:]: v for k, v in both.items() if k[0] == 1}
    if stats is not None:
        stats.reductions += steps
    return _param_primitive(rem)


def _param_s_poly(f: ParamPoly, g: ParamPoly) -> ParamPoly:
    lf, lg = max(f), max(g)
    L = _lcm_mono(lf, lg)
    a, b = _cofactors(f[lf], g[lg])
    sf = tuple(x - y for x, y in zip(L, lf))
    sg = tuple(x - y for x, y in zip(L, lg))
    out: ParamPoly = {}
    for m, c in f.items():
        out[tuple(x + y for x, y in zip(m, sf))] = upoly.mul(a, c)
    for m, c in g.items():
        key = tuple(x + y for x, y in zip(m, sg))
        v = upoly.sub(out.get(key, ()), upoly.mul(b, c))
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def _param_degree(p: ParamPoly) -> int:
    # the parameter lives in the coefficients and does not count
    return max(sum(m) for m in p)


class _Kernel:
    def __init__(self, nf, spoly, degree):
        self.nf, self.spoly, self.degree = nf, spoly, degree


INTEGER_KERNEL = _Kernel(_normal_form, _s_poly, _total_degree)
PARAM_KERNEL = _Kernel(_param_normal_form, _param_s_poly, _param_degree)


def _complete(gens: list, budget: Budget, stats: GroebnerStats, kernel: _Kernel = INTEGER_KERNEL,
              wanted=None) -> list:
    """Reduced basis of the ideal spanned by ``gens`` (primitive, sorted by leading monomial).

    With ``wanted`` given, only basis elements satisfying it are tail-reduced
    and returned.
    """
    start = time.monotonic()
    polys: List[IntPoly] = []
    leads: List[Monomial] = []
    active: List[int] = []
    pairs: List[Tuple[Monomial, int, int]] = []

    def check_time():
        if budget.timeout_seconds is not None and time.monotonic() - start > budget.timeout_seconds:
            stats.seconds = time.monotonic() - start
            raise BudgetExceeded("timeout", stats)

    def insert(h: IntPoly):
        nonlocal active, pairs
        deg = kernel.degree(h)
        stats.max_degree_seen = max(stats.max_degree_seen, deg)
        if deg > budget.max_degree:
            raise BudgetExceeded(f"total degree {deg} > {budget.max_degree}", stats)
        hi = len(polys)
        polys.append(h)
        lh = max(h)
        leads.append(lh)
        # Gebauer-Moeller update
        cand = [(_lcm_mono(lh, leads[g]), g) for g in active]
        kept = []
        for idx, (l1, g1) in enumerate(cand):
            if _coprime(lh, leads[g1]):
                kept.append((l1, g1, True))
                continue
            dominated = False
            for l2, _g2 in cand[idx + 1:]:
                if _divides(l2, l1):
                    dominated = True
                    break
            if not dominated:
                for l2, _g2, _c in kept:
                    if _divides(l2, l1):
                        dominated = True
                        break
            if dominated:
                stats.pairs_skipped += 1
            else:
                kept.append((l1, g1, False))
        new_pairs = []
        for l1, g1, cop in kept:
            if cop:
                stats.pairs_skipped += 1
            else:
                new_pairs.append((l1, g1, hi))
        old = []
        for entry in pairs:
            L, i, j = entry
            if (_divides(lh, L) and _lcm_mono(leads[i], lh) != L and _lcm_mono(leads[j], lh) != L):
                stats.pairs_skipped += 1
            else:
                old.append(entry)
        pairs = old + new_pairs
        heapq.heapify(pairs)
        active = [g for g in active if not _divides(lh, leads[g])] + [hi]
        if len(active) > budget.max_basis:
            raise BudgetExceeded(f"basis size {len(active)} > {budget.max_basis}", stats)

    # seed with inter-reduced, primitive inputs in order
    for g in gens:
        red = _Reducer([polys[i] for i in active])
        h = kernel.nf(g, red, stats)
        if h:
            insert(h)

    while pairs:
        check_time()
        L, i, j = heapq.heappop(pairs)
        stats.pairs_processed += 1
        if stats.pairs_processed > budget.max_pairs:
            raise BudgetExceeded(f"pair count > {budget.max_pairs}", stats)
        s = kernel.spoly(polys[i], polys[j])
        red = _Reducer([polys[k] for k in active])
        h = kernel.nf(s, red, stats) if s else {}
        if not h:
            stats.zero_reductions += 1
            continue
        if log.isEnabledFor(logging.DEBUG):
            log.debug("pair %d: new lm %s, %d terms, degree %d, basis %d, queue %d",
                      stats.pairs_processed, max(h), len(h), kernel.degree(h), len(active), len(pairs))
        insert(h)

    basis = [polys[k] for k in active]
    # minimal already (Gebauer-Moeller drops divisible leads); now tail-reduce
    out = []
    for idx, g in enumerate(basis):
        if wanted is not None and not wanted(g):
            continue
        others = _Reducer(basis[:idx] + basis[idx + 1:])
        out.append(kernel.nf(g, others))
    stats.basis_size = len(basis)
    stats.seconds = time.monotonic() - start
    out.sort(key=max)
    return out


def _mul(p: IntPoly, q: IntPoly) -> IntPoly:
    out: IntPoly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            key = tuple(x + y for x, y in zip(m1, m2))
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def _definition(p: IntPoly, v: int):
    """``(c, r)`` if ``p == c*x_v + r`` with integer ``c`` and ``r`` free of ``x_v``."""
    c = None
    r: IntPoly = {}
    for m, coef in p.items():
        e = m[v]
        if e == 0:
            r[m] = coef
        elif e == 1 and c is None and not any(x for i, x in enumerate(m) if i != v):
            c = coef
        else:
            return None
    return None if c is None else (c, r)


def _substitute(q: IntPoly, v: int, c: int, r: IntPoly) -> IntPoly:
    """``c^k * q`` evaluated at ``x_v = -r/c`` where ``k = deg_v(q)``."""
    k = max(m[v] for m in q)
    if k == 0:
        return q
    by_power: Dict[int, IntPoly] = {}
    for m, coef in q.items():
        e = m[v]
        by_power.setdefault(e, {})[m[:v] + (0,) + m[v + 1:]] = coef
    neg_r = {m: -x for m, x in r.items()}
    out: IntPoly = {}
    power = {tuple(0 for _ in next(iter(q))): 1}
    for j in range(k + 1):
        if j in by_power:
            scale = c ** (k - j)
            for m, x in _mul(by_power[j], power).items():
                val = out.get(m, 0) + scale * x
                if val:
                    out[m] = val
                else:
                    out.pop(m, None)
        if j < k:
            power = _mul(power, neg_r)
    return out


def presubstitute(gens: List[IntPoly], eliminable: Sequence[int]) -> List[IntPoly]:
    """Remove variables defined linearly by a generator ``c*x + r`` (``r`` free of ``x``).

    Replacing ``x`` by ``-r/c`` everywhere and dropping that generator leaves
    the elimination ideal in the remaining variables unchanged.  The shortest
    available definition is used first; ties go to the greater variable.
    """
    gens = [g for g in (_make_primitive(dict(g)) for g in gens) if g]
    remaining = list(eliminable)
    while True:
        best = None
        for v in remaining:
            for gi, g in enumerate(gens):
                d = _definition(g, v)
                if d is not None and (best is None or len(d[1]) < len(best[3][1])):
                    best = (v, gi, g, d)
        if best is None:
            return gens
        v, gi, _g, (c, r) = best
        remaining.remove(v)
        rest = gens[:gi] + gens[gi + 1:]
        gens = [h for h in (_make_primitive(_substitute(q, v, c, r)) for q in rest) if h]


# ---------------------------------------------------------------------------
# public API


def _check_table(polys: Iterable[Polynomial]) -> VariableTable:
    polys = list(polys)
    if not polys:
        raise UsageError("need at least one polynomial")
    table = polys[0].table
    for p in polys:
        if p.table != table:
            raise UsageError("polynomials live over different variable tables")
    return table


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """``(L/lt(f))*f - (L/lt(g))*g`` with ``L`` the lcm of the leading monomials."""
    table = _check_table([f, g])
    if f.is_zero() or g.is_zero():
        raise UsageError("S-polynomial of a zero polynomial")
    lf, lg = f.leading_monomial(), g.leading_monomial()
    L = _lcm_mono(lf, lg)
    mf = Polynomial(table, {tuple(x - y for x, y in zip(L, lf)): 1 / f.terms[lf]})
    mg = Polynomial(table, {tuple(x - y for x, y in zip(L, lg)): 1 / g.terms[lg]})
    return mf * f - mg * g


def reduce(f: Polynomial, basis) -> Polynomial:
    """Normal form of ``f`` modulo ``basis`` (an :class:`IdealBasis` or a sequence).

    The greatest reducible monomial is always reduced first, using the first
    generator in list order whose leading monomial divides it.
    """
    gens = list(basis.generators if isinstance(basis, IdealBasis) else basis)
    if not gens:
        return f
    _check_table([f] + gens)
    gens = [g for g in gens if not g.is_zero()]
    if f.is_zero() or not gens:
        return f
    leads = [g.leading_monomial() for g in gens]
    p = dict(f.terms)
    rem: Dict[Monomial, Fraction] = {}
    while p:
        m = max(p)
        for g, lm in zip(gens, leads):
            if _divides(lm, m):
                factor = p[m] / g.terms[lm]
                shift = tuple(x - y for x, y in zip(m, lm))
                for gm, gc in g.terms.items():
                    key = tuple(x + y for x, y in zip(gm, shift))
                    v = p.get(key, 0) - factor * gc
                    if v:
                        p[key] = v
                    else:
                        p.pop(key, None)
                break
        else:
            rem[m] = p.pop(m)
    return Polynomial(f.table, rem)


def buchberger(gens: Sequence[Polynomial], budget: Optional[Budget] = None) -> IdealBasis:
    """Reduced Gröbner basis (lex order of the shared table), primitive, sorted by leading monomial."""
    table = _check_table(gens)
    budget = budget or Budget()
    stats = GroebnerStats()
    ints = [integer_terms(g) for g in gens if not g.is_zero()]
    if not ints:
        return IdealBasis((), True, stats)
    out = _complete(ints, budget, stats)
    return IdealBasis(tuple(from_integer_terms(table, p) for p in out), True, stats)


def is_groebner(polys: Sequence[Polynomial]) -> bool:
    """Check Buchberger's criterion exhaustively on every pair."""
    polys = [p for p in polys if not p.is_zero()]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if not reduce(s_polynomial(polys[i], polys[j]), polys).is_zero():
                return False
    return True


def eliminate(gens: Sequence[Polynomial], keep: Iterable[str], target: Optional[str] = None,
              budget: Optional[Budget] = None, stats_out: Optional[list] = None,
              generic: Optional[str] = None) -> List[Polynomial]:
    """Basis elements of the elimination ideal in the ``keep`` variables.

    The table must list every eliminated variable before every kept one.
    Results are sorted by (degree in ``target``, total degree); ``target``
    defaults to the greatest kept variable.

    With ``generic="t"`` the variable ``t`` is treated as a generic parameter:
    the basis is computed over Q(t), with coefficients kept in Z[t] and every
    element divided by its content there.  Components lying over special
    values of ``t`` are discarded.
    """
    table = _check_table(gens)
    keep = list(keep)
    kept_idx = sorted(table.index(v) for v in keep)
    if kept_idx and kept_idx != list(range(len(table) - len(kept_idx), len(table))):
        raise UsageError("eliminated variables must all precede the kept ones in the table")
    if target is None:
        target = table.names[kept_idx[0]] if kept_idx else None
    elim = sorted(set(range(len(table))) - set(kept_idx))
    ints = presubstitute([integer_terms(g) for g in gens if not g.is_zero()], elim)
    stats = GroebnerStats()
    param = table.index(generic) if generic is not None else None

    def wanted(g):
        # under an elimination order the leading monomial decides membership
        lm = max(g)
        return all(lm[i] == 0 for i in elim)

    if param is None:
        basis = _complete(ints, budget or Budget(), stats, wanted=wanted) if ints else []
    else:
        if param in elim:
            raise UsageError(f"generic parameter {generic!r} must be kept")
        pgens = [h for h in (_param_primitive(_to_param(g, param)) for g in ints) if h]
        basis = _complete(pgens, budget or Budget(), stats, PARAM_KERNEL, wanted) if pgens else []
        basis = [_make_primitive(_from_param(g, param)) for g in basis]
    if stats_out is not None:
        stats_out.append(stats)
    result = [from_integer_terms(table, g) for g in basis
              if all(m[i] == 0 for m in g for i in elim)]
    result.sort(key=lambda g: (g.degree(target) if target else 0, g.total_degree(), g.leading_monomial()))
    return result
