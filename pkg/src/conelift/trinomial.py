"""Rationality and the cone condition for trinomial hypersurfaces.

The hypersurface ``x_0^{l_0} + x_1^{l_1} + x_2^{l_2} = 0`` in ``A^k`` is given
by three blocks of positive exponents. With ``g_i`` the gcd of block ``i`` it is
rational (equivalently unirational) iff, for some choice of which block plays
the role of index 2,

* there are pairwise coprime ``c_0, c_1, c_2`` and ``s >= 1`` with
  ``gcd(c_2, s) = 1`` and ``(g_0, g_1, g_2) = (s c_0, s c_1, c_2)``; or
* ``(g_0, g_1, g_2) = (2 c_0, 2 c_1, 2 c_2)`` with pairwise coprime ``c_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from .polycore import Polynomial, VarSet

# Which original block sits in positions (0, 1, 2); index 0 is no renumbering.
RENUMBERINGS = ((0, 1, 2), (0, 2, 1), (1, 2, 0))


@dataclass(frozen=True)
class TrinomialHypersurface:
    l: tuple

    def __post_init__(self):
        blocks = tuple(tuple(int(a) for a in block) for block in self.l)
        if len(blocks) != 3:
            raise ValueError("a trinomial has exactly three exponent blocks")
        for block in blocks:
            if not block:
                raise ValueError("every block needs at least one exponent")
            if any(a < 1 for a in block):
                raise ValueError(f"exponents must be positive, got {block}")
        object.__setattr__(self, "l", blocks)

    @property
    def n(self):
        return tuple(len(b) for b in self.l)

    @property
    def k(self):
        return sum(self.n)

    def variable_names(self):
        return tuple(f"x{i}{j}" for i, block in enumerate(self.l) for j in range(1, len(block) + 1))


@dataclass(frozen=True)
class Case1:
    s: int
    c: tuple
    renumbering: tuple

    def verify(self, lg) -> bool:
        c0, c1, c2 = self.c
        g0, g1, g2 = (lg[i] for i in self.renumbering)
        return (
            min(self.s, c0, c1, c2) >= 1
            and _pairwise_coprime(self.c)
            and gcd(c2, self.s) == 1
            and (g0, g1, g2) == (self.s * c0, self.s * c1, c2)
        )


@dataclass(frozen=True)
class Case2:
    c: tuple

    def verify(self, lg) -> bool:
        return min(self.c) >= 1 and _pairwise_coprime(self.c) and tuple(lg) == tuple(2 * a for a in self.c)


@dataclass(frozen=True)
class NotRational:
    def verify(self, lg) -> bool:
        return True


Witness = Union[Case1, Case2, NotRational]


@dataclass(frozen=True)
class RationalityVerdict:
    rational: bool
    witness: Witness
    l_gcds: tuple

    def as_dict(self):
        w = self.witness
        if isinstance(w, Case1):
            wd = {"case": 1, "s": w.s, "c": list(w.c), "renumbering": list(w.renumbering)}
        elif isinstance(w, Case2):
            wd = {"case": 2, "c": list(w.c)}
        else:
            wd = {"case": None}
        return {"rational": self.rational, "witness": wd, "l_gcds": list(self.l_gcds)}


def _pairwise_coprime(c):
    a, b, d = c
    return gcd(a, b) == 1 and gcd(a, d) == 1 and gcd(b, d) == 1


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def _as_lgcds(t):
    if isinstance(t, TrinomialHypersurface):
        return l_gcds(t)
    return tuple(t)


def l_gcds(t: TrinomialHypersurface) -> tuple:
    out = []
    for block in t.l:
        g = 0
        for a in block:
            g = gcd(g, a)
        out.append(g)
    return tuple(out)


def classify(t) -> RationalityVerdict:
    """Decide rationality; accepts a hypersurface or its gcd triple directly.

    The first witness found is returned: renumberings in ``RENUMBERINGS``
    order, then ``s`` ascending, and the all-even case last.
    """
    lg = _as_lgcds(t)
    for perm in RENUMBERINGS:
        g0, g1, g2 = (lg[i] for i in perm)
        for s in _divisors(gcd(g0, g1)):
            w = Case1(s, (g0 // s, g1 // s, g2), perm)
            if gcd(g2, s) == 1 and _pairwise_coprime(w.c):
                return RationalityVerdict(True, w, lg)
    if all(g % 2 == 0 for g in lg):
        c = tuple(g // 2 for g in lg)
        if _pairwise_coprime(c):
            return RationalityVerdict(True, Case2(c), lg)
    return RationalityVerdict(False, NotRational(), lg)


def is_affine_cone(t: TrinomialHypersurface) -> bool:
    """Equal exponent sums in all three blocks."""
    sums = {sum(block) for block in t.l}
    return len(sums) == 1


@dataclass(frozen=True)
class SurjectionVerdict:
    cone: bool
    rational: bool
    surjection: Optional[bool]
    m: Optional[int]
    explanation: str
    verdict: RationalityVerdict

    def as_dict(self):
        return {
            "cone": self.cone,
            "rational": self.rational,
            "surjection": self.surjection,
            "m": self.m,
            "explanation": self.explanation,
            **{k: v for k, v in self.verdict.as_dict().items() if k != "rational"},
        }


def admits_surjection_from_affine_space(t: TrinomialHypersurface) -> SurjectionVerdict:
    verdict = classify(t)
    if not is_affine_cone(t):
        return SurjectionVerdict(
            cone=False,
            rational=verdict.rational,
            surjection=None,
            m=None,
            explanation="block exponent sums differ: not an affine cone, the cone criterion does not apply",
            verdict=verdict,
        )
    dim_y = t.k - 1
    if verdict.rational:
        return SurjectionVerdict(
            True, True, True, dim_y + 1,
            f"rational affine cone of dimension {dim_y}: surjection from A^{dim_y + 1}",
            verdict,
        )
    return SurjectionVerdict(
        True, False, False, None,
        "affine cone that is not unirational: no surjection from any affine space",
        verdict,
    )


def to_polynomial(t: TrinomialHypersurface) -> Polynomial:
    """The trinomial in variables ``x{i}{j}`` (block ``i``, entry ``j`` from 1)."""
    vs = VarSet(t.variable_names())
    terms = {}
    offset = 0
    for block in t.l:
        exp = [0] * t.k
        for j, a in enumerate(block):
            exp[offset + j] = a
        terms[tuple(exp)] = 1
        offset += len(block)
    return Polynomial(vs, terms)


def parse_block(text: str) -> tuple:
    return tuple(int(a) for a in text.replace(" ", "").split(",") if a)
