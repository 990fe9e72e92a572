"""Lifting a morphism from affine space to projective space into punctured affine space.

A morphism ``A^d -> P^(k-1)`` is given by coordinates ``[c_1 : ... : c_k]``
(polynomials or rational functions). Dividing by the first nonzero
coordinate, clearing denominators and removing the common gcd gives
polynomials ``h_1, ..., h_k`` with no common zero, certified by a reduced
Groebner basis equal to ``{1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ArityError, BasePointDetected, InvalidFraction
from .groebner import GroebnerBasis, is_unit_ideal
from .polycore import (
    Polynomial,
    RationalFunction,
    VarSet,
    exact_quotient,
    gcd,
    gcd_list,
    odd_degree_variables,
    square_root,
)


@dataclass(frozen=True)
class ProjectiveMapRep:
    """``x -> [c_1(x) : ... : c_k(x)]``, defined up to a common nonzero factor."""

    coords: tuple

    def __post_init__(self):
        coords = tuple(RationalFunction.coerce(c) for c in self.coords)
        if len(coords) < 2:
            raise ArityError("a map to P^(k-1) needs k >= 2 coordinates")
        vs = coords[0].varset
        if any(c.varset != vs for c in coords):
            raise ArityError("all coordinates must use the same variables")
        if all(c.is_zero() for c in coords):
            raise ValueError("all coordinates are identically zero")
        object.__setattr__(self, "coords", coords)

    @property
    def varset(self) -> VarSet:
        return self.coords[0].varset

    @property
    def k(self):
        return len(self.coords)


@dataclass(frozen=True)
class LiftResult:
    h: tuple
    certificate: GroebnerBasis
    base_chart: int


def clear_denominators(coords: Sequence) -> list:
    """Multiply a tuple of rational functions by the lcm of its denominators."""
    coords = list(coords)
    if not coords:
        raise ArityError("empty coordinate tuple")
    fracs = []
    for c in coords:
        if isinstance(c, RationalFunction):
            fracs.append(c)
        elif isinstance(c, Polynomial):
            fracs.append(RationalFunction(c))
        elif isinstance(c, tuple) and len(c) == 2:
            num, den = c
            if den.is_zero():
                raise InvalidFraction(f"denominator of ({num})/({den}) is identically zero")
            fracs.append(RationalFunction(num, den))
        else:
            raise TypeError(f"cannot interpret coordinate {c!r}")
    if all(f.is_zero() for f in fracs):
        raise ValueError("all coordinates are identically zero")
    common = fracs[0].den
    for f in fracs[1:]:
        if f.den != 1:
            common = exact_quotient(common * f.den, gcd(common, f.den))
    return [f.num * exact_quotient(common, f.den) for f in fracs]


def coprime_reduce(h: Sequence[Polynomial]) -> list:
    """Divide out the gcd of all entries, then make the first nonzero entry monic."""
    h = list(h)
    nonzero = [p for p in h if not p.is_zero()]
    if not nonzero:
        raise ValueError("all coordinates are identically zero")
    g = gcd_list(nonzero)
    if g != 1:
        h = [exact_quotient(p, g) for p in h]
    lead = next(p for p in h if not p.is_zero()).leading_coefficient()
    if lead != 1:
        h = [p.scale(1 / lead) for p in h]
    return h


def lift_morphism(beta, step_budget: Optional[int] = None) -> LiftResult:
    """Lift ``beta`` to polynomials with no common zero.

    Raises :class:`BasePointDetected` (carrying the proper basis) when the
    reduced tuple still has a common zero, i.e. ``beta`` was only a rational map.
    """
    if not isinstance(beta, ProjectiveMapRep):
        beta = ProjectiveMapRep(tuple(beta))
    chart = next(i for i, c in enumerate(beta.coords) if not c.is_zero())
    base = beta.coords[chart]
    affine = [c / base for c in beta.coords]
    h = coprime_reduce(clear_denominators(affine))
    unit, basis = is_unit_ideal(h, step_budget=step_budget)
    if not unit:
        raise BasePointDetected(basis)
    return LiftResult(tuple(h), basis, chart)


def _as_fraction_tuple(g):
    if any(isinstance(c, (RationalFunction, tuple)) for c in g):
        return clear_denominators(g)
    return list(g)


def verify_projective_equality(h: Sequence, g: Sequence) -> bool:
    """True iff every 2x2 minor ``h_i*g_j - h_j*g_i`` vanishes identically."""
    if len(h) != len(g):
        raise ArityError(f"tuples of different lengths {len(h)} and {len(g)}")
    if len(h) < 2:
        raise ArityError("projective tuples need at least two coordinates")
    h = _as_fraction_tuple(h)
    g = _as_fraction_tuple(g)
    n = len(h)
    return all((h[i] * g[j] - h[j] * g[i]).is_zero() for i in range(n) for j in range(i + 1, n))


@dataclass
class WPSReport:
    """Outcome of the weighted-projective lifting obstruction argument."""

    beta: list
    target: str
    forced_pullback: str
    odd_variables: list
    tried_scalars: list
    square_root: Optional[str]
    contradiction: bool
    reason: str
    steps: list = field(default_factory=list)

    def as_dict(self):
        return {
            "beta": self.beta,
            "target": self.target,
            "forced_pullback": self.forced_pullback,
            "odd_variables": self.odd_variables,
            "tried_scalars": self.tried_scalars,
            "square_root": self.square_root,
            "contradiction": self.contradiction,
            "reason": self.reason,
            "steps": self.steps,
        }


WPS_SCALARS = (Fraction(1), Fraction(2), Fraction(4), Fraction(1, 9), Fraction(-1))


def wps_obstruction_demo(target: Optional[Polynomial] = None) -> WPSReport:
    """Replay why the map ``x -> (x1^2 x3, x1 x2 x3, x2^2 x3)`` into P(1,1,2) has no lift.

    A lift would be ``x -> (h1, h2, lam)`` with ``lam`` a nonzero constant (z3 is
    invertible on the chart), and ``h1^2 / lam`` would have to equal the first
    coordinate. ``target`` replaces that first coordinate for sanity variants.
    """
    vs = VarSet.of("x1", "x2", "x3")
    x1, x2, x3 = Polynomial.gens(vs)
    beta = [x1**2 * x3, x1 * x2 * x3, x2**2 * x3]
    if target is None:
        target = beta[0]
    steps = [
        "z3 is invertible on the chart z3 != 0, so a lift pulls z3 back to a unit of K[x1,x2,x3]",
        "units of a polynomial ring are nonzero constants: the third lifted coordinate is a constant lam",
        f"first coordinate: h1^2 = lam * ({target})",
    ]
    odd = list(odd_degree_variables(target))
    root = None
    tried = []
    for lam in WPS_SCALARS:
        tried.append(str(lam))
        r = square_root(target.scale(lam))
        if r is not None:
            root = r
            break
    if odd:
        contradiction = True
        reason = f"odd degree in {', '.join(odd)}"
        steps.append(f"lam * ({target}) has odd degree in {', '.join(odd)} for every lam != 0, so it is not a square")
    elif root is None:
        contradiction = True
        reason = "not a square for any tried scalar"
        steps.append("no square root found for the tried scalars")
    else:
        contradiction = False
        reason = "square root exists"
        steps.append(f"h1 = {root} solves the first coordinate; no contradiction")
    return WPSReport(
        beta=[str(b) for b in beta],
        target=str(target),
        forced_pullback="lam (nonzero constant)",
        odd_variables=odd,
        tried_scalars=tried,
        square_root=None if root is None else str(root),
        contradiction=contradiction,
        reason=reason,
        steps=steps,
    )
