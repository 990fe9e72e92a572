"""Buchberger's algorithm, reduction and ideal membership."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from .errors import BudgetExceeded, VarSetMismatch
from .polycore import DEFAULT_ORDER, ORDERS, Polynomial

DEFAULT_STEP_BUDGET = 10**6


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(self.limit)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _common_varset(polys):
    vs = polys[0].varset
    for p in polys[1:]:
        if p.varset != vs:
            raise VarSetMismatch(f"generators over different variable sets: ({vs}) vs ({p.varset})")
    return vs


def divide(f: Polynomial, basis: Sequence[Polynomial], budget=None):
    """Full multivariate division of ``f`` by ``basis``.

    Returns ``(quotients, remainder)`` with ``f == sum(q*g) + remainder`` and no
    term of the remainder divisible by a leading monomial of ``basis``.
    """
    order = f.order
    key = ORDERS[order]
    basis = [g.with_order(order) for g in basis]
    for g in basis:
        if g.varset != f.varset:
            raise VarSetMismatch("divisor over a different variable set")
    tick = (budget or _Budget(None)).tick
    heads = []
    for g in basis:
        if g.is_zero():
            heads.append(None)
            continue
        lm, lc = g.leading_term()
        heads.append((lm, lc, [(e, c) for e, c in g.as_dict().items() if e != lm]))
    quots = [{} for _ in basis]
    r = f.as_dict()
    rem = {}
    while r:
        e = max(r, key=key)
        c = r[e]
        for i, head in enumerate(heads):
            if head is not None and _divides(head[0], e):
                tick()
                lm, lc, rest = head
                shift = tuple(a - b for a, b in zip(e, lm))
                t = c / lc
                quots[i][shift] = quots[i].get(shift, 0) + t
                del r[e]
                for ge, gc in rest:
                    ne = tuple(a + b for a, b in zip(ge, shift))
                    s = r.get(ne, 0) - t * gc
                    if s:
                        r[ne] = s
                    else:
                        r.pop(ne, None)
                break
        else:
            rem[e] = r.pop(e)
    vs = f.varset
    return (
        [Polynomial._make(vs, {e: c for e, c in q.items() if c}, order) for q in quots],
        Polynomial._make(vs, rem, order),
    )


def reduce(f: Polynomial, basis: Sequence[Polynomial], budget=None) -> Polynomial:
    """Remainder of ``f`` on full division by ``basis``."""
    return divide(f, basis, budget)[1]


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lf, cf = f.leading_term()
    lg, cg = g.leading_term()
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    return f.mul_term(tuple(a - b for a, b in zip(lcm, lf)), 1 / cf) - g.mul_term(
        tuple(a - b for a, b in zip(lcm, lg)), 1 / cg
    )


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Groebner basis: monic elements sorted by leading monomial, smallest first."""

    elements: tuple
    order: str = DEFAULT_ORDER

    def is_unit(self):
        return len(self.elements) == 1 and self.elements[0] == 1

    def reduce(self, f):
        return reduce(f.with_order(self.order), self.elements)

    def contains(self, f):
        return self.reduce(f).is_zero()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def as_strings(self):
        return [str(g) for g in self.elements]

    def __str__(self):
        return "{" + ", ".join(self.as_strings()) + "}"


def _autoreduce(G, order, budget):
    key = ORDERS[order]
    G = sorted((g.monic() for g in G), key=lambda g: key(g.leading_monomial()))
    # drop elements whose leading monomial is divisible by another's
    minimal = []
    for g in G:
        lm = g.leading_monomial()
        if not any(_divides(h.leading_monomial(), lm) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        lm, _ = g.leading_term()
        tail = g - Polynomial._make(g.varset, {lm: g.leading_coefficient()}, order)
        r = reduce(tail, others, budget)
        out.append((Polynomial._make(g.varset, {lm: g.leading_coefficient()}, order) + r).monic())
    return tuple(sorted(out, key=lambda g: key(g.leading_monomial())))


def buchberger(gens: Sequence[Polynomial], order: str = DEFAULT_ORDER, step_budget: Optional[int] = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Pairs are processed lowest-lcm-degree first (normal strategy); pairs whose
    leading monomials are coprime are skipped. ``step_budget`` caps the total
    number of reduction steps and raises :class:`BudgetExceeded` when hit.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    vs = _common_varset(gens)
    key = ORDERS[order]
    budget = _Budget(step_budget)
    G = [g.with_order(order).monic() for g in gens if not g.is_zero()]
    if not G:
        return GroebnerBasis((Polynomial.zero(vs, order),), order)
    # dedupe while keeping input order
    seen, uniq = set(), []
    for g in G:
        if g not in seen:
            seen.add(g)
            uniq.append(g)
    G = uniq
    if any(g.is_constant() for g in G):
        return GroebnerBasis((Polynomial.const(vs, 1, order),), order)

    def pair_key(pair):
        i, j = pair
        lcm = tuple(max(a, b) for a, b in zip(G[i].leading_monomial(), G[j].leading_monomial()))
        return (key(lcm), i, j)

    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    while pairs:
        pair = min(pairs, key=pair_key)
        pairs.discard(pair)
        i, j = pair
        li, lj = G[i].leading_monomial(), G[j].leading_monomial()
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        r = reduce(s_polynomial(G[i], G[j]), G, budget)
        if r.is_zero():
            continue
        r = r.monic()
        if r.is_constant():
            return GroebnerBasis((Polynomial.const(vs, 1, order),), order)
        G.append(r)
        n = len(G) - 1
        pairs.update((k, n) for k in range(n))
    return GroebnerBasis(_autoreduce(G, order, budget), order)


def is_unit_ideal(gens: Sequence[Polynomial], order: str = DEFAULT_ORDER, step_budget: Optional[int] = None):
    """Return ``(True/False, basis)``; the reduced basis is the certificate."""
    gb = buchberger(gens, order, step_budget)
    return gb.is_unit(), gb


@dataclass(frozen=True)
class Ideal:
    generators: tuple
    order: str = DEFAULT_ORDER
    step_budget: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        vs = _common_varset(list(gens))
        nonzero = tuple(g.with_order(self.order) for g in gens if not g.is_zero())
        object.__setattr__(self, "generators", nonzero or (Polynomial.zero(vs, self.order),))

    @property
    def varset(self):
        return self.generators[0].varset

    @cached_property
    def basis(self) -> GroebnerBasis:
        return buchberger(self.generators, self.order, self.step_budget)

    def contains(self, f: Polynomial) -> bool:
        if f.varset != self.varset:
            raise VarSetMismatch("polynomial and ideal use different variable sets")
        return self.basis.contains(f)

    def is_unit(self):
        return self.basis.is_unit()


def contains(ideal: Ideal, f: Polynomial) -> bool:
    return ideal.contains(f)
