"""Polynomial maps from A^n taking prescribed values on a finite point set."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Optional, Sequence

from .errors import ArityError, DuplicatePoints
from .polycore import Polynomial, VarSet


def _point(p):
    return tuple(Fraction(a) for a in p)


@dataclass(frozen=True)
class PointSet:
    points: tuple

    def __post_init__(self):
        pts = tuple(_point(p) for p in self.points)
        if not pts:
            raise ValueError("empty point set")
        n = len(pts[0])
        if n < 1 or any(len(p) != n for p in pts):
            raise ArityError("points must share a positive arity")
        if len(set(pts)) != len(pts):
            raise DuplicatePoints("point set contains repeated points")
        object.__setattr__(self, "points", pts)

    @property
    def arity(self):
        return len(self.points[0])

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class TargetAssignment:
    preimages: tuple

    def __post_init__(self):
        pts = tuple(_point(p) for p in self.preimages)
        if not pts:
            raise ValueError("no preimages given")
        m = len(pts[0])
        if m < 1 or any(len(p) != m for p in pts):
            raise ArityError("preimages must share a positive arity")
        object.__setattr__(self, "preimages", pts)

    @property
    def arity(self):
        return len(self.preimages[0])

    def __len__(self):
        return len(self.preimages)


def separating_functional(Z: PointSet, varset: Optional[VarSet] = None) -> Polynomial:
    """Integer linear form ``x1 + t x2 + t^2 x3 + ...`` with distinct values on ``Z``.

    ``t`` runs over 0, 1, 2, ...; two distinct points collide for at most
    ``n - 1`` values of ``t``, so the search ends after at most
    ``C(|Z|, 2) (n - 1) + 1`` candidates.
    """
    if not isinstance(Z, PointSet):
        Z = PointSet(tuple(Z))
    n = Z.arity
    vs = varset or VarSet.indexed("x", n)
    if len(vs) != n:
        raise ArityError(f"{len(vs)} variables for points in A^{n}")
    for t in count():
        coeffs = [t**i for i in range(n)]
        values = {sum(c * a for c, a in zip(coeffs, p)) for p in Z.points}
        if len(values) == len(Z):
            return Polynomial(vs, {tuple(1 if j == i else 0 for j in range(n)): c for i, c in enumerate(coeffs)})


def lagrange_coefficients(nodes: Sequence[Fraction], values: Sequence[Fraction]) -> list:
    """Coefficients (constant first) of the interpolating univariate polynomial."""
    k = len(nodes)
    out = [Fraction(0)] * k
    for i, (u, v) in enumerate(zip(nodes, values)):
        if not v:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, w in enumerate(nodes):
            if j == i:
                continue
            # basis *= (X - w)
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= w * basis[d + 1]
            denom *= u - w
        scale = v / denom
        for d, b in enumerate(basis):
            out[d] += scale * b
    return out


def _horner(coeffs, ell):
    acc = Polynomial.zero(ell.varset, ell.order)
    for c in reversed(coeffs):
        acc = acc * ell + c
    return acc


def interpolate_map(Z: PointSet, A: TargetAssignment, varset: Optional[VarSet] = None) -> tuple:
    """Polynomial map ``A^n -> A^m`` sending ``Z.points[i]`` to ``A.preimages[i]``.

    Each coordinate is a univariate polynomial of degree < |Z| in the
    separating linear form.
    """
    if not isinstance(Z, PointSet):
        Z = PointSet(tuple(Z))
    if not isinstance(A, TargetAssignment):
        A = TargetAssignment(tuple(A))
    if len(Z) != len(A):
        raise ArityError(f"{len(Z)} points but {len(A)} preimages")
    ell = separating_functional(Z, varset)
    nodes = [ell.evaluate(p) for p in Z.points]
    return tuple(
        _horner(lagrange_coefficients(nodes, [a[j] for a in A.preimages]), ell) for j in range(A.arity)
    )


def compose_with_surjection(pi: Sequence[Polynomial], phi_tilde: Sequence[Polynomial]) -> tuple:
    """Coordinatewise ``pi o phi_tilde``."""
    pi = tuple(pi)
    phi_tilde = tuple(phi_tilde)
    for p in pi:
        if len(p.varset) != len(phi_tilde):
            raise ArityError(f"pi takes {len(p.varset)} arguments, phi_tilde has {len(phi_tilde)} coordinates")
    return tuple(p.substitute(phi_tilde) for p in pi)
