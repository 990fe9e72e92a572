"""The surjection gamma(x, z) = z * h(x) onto an affine cone, and its checks."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ArityError, BasePointDetected, NotHomogeneous, NotIntoCone
from .groebner import GroebnerBasis, is_unit_ideal
from .lift import LiftResult
from .polycore import Polynomial, VarSet


@dataclass(frozen=True)
class ConeVariety:
    """Cone in ``A^k`` cut out by homogeneous generators; no generators means all of ``A^k``."""

    ambient_dim: int
    generators: tuple = ()
    dim_y: Optional[int] = None
    varset: Optional[VarSet] = None

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise ValueError("ambient dimension must be positive")
        gens = tuple(self.generators)
        vs = self.varset
        if vs is None:
            vs = gens[0].varset if gens else VarSet.indexed("z", self.ambient_dim)
        if len(vs) != self.ambient_dim:
            raise ArityError(f"cone variables ({vs}) do not match ambient dimension {self.ambient_dim}")
        for g in gens:
            if g.varset != vs:
                raise ArityError(f"generator {g} is not over ({vs})")
            if g.is_homogeneous() is None:
                raise NotHomogeneous(f"cone generator {g} is not homogeneous")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "varset", vs)


@dataclass(frozen=True)
class ConeSurjection:
    h: tuple
    gamma: tuple
    m: int
    certificate: Optional[GroebnerBasis] = None

    @property
    def varset(self) -> VarSet:
        return self.gamma[0].varset

    def __call__(self, *point):
        return tuple(g.evaluate(point) for g in self.gamma)


def _h_tuple(h):
    if isinstance(h, LiftResult):
        return tuple(h.h), h.certificate
    return tuple(h), None


def extend_with_z(h: Sequence[Polynomial]):
    """Embed ``h`` into the ring with one extra variable; returns ``(h', z)``."""
    vs = h[0].varset
    ext = vs.extend(vs.fresh("z"))
    lifted = tuple(
        Polynomial(ext, {e + (0,): c for e, c in p.as_dict().items()}, p.order) for p in h
    )
    return lifted, Polynomial.var(ext, len(ext) - 1)


def verify_maps_into_cone(h: Sequence[Polynomial], cone: ConeVariety) -> bool:
    """True iff every generator of the cone vanishes identically on ``h``."""
    h, _ = _h_tuple(h)
    if len(h) != cone.ambient_dim:
        raise ArityError(f"{len(h)} coordinates for a cone in A^{cone.ambient_dim}")
    return all(F.substitute(h).is_zero() for F in cone.generators)


def build_gamma(h, cone: ConeVariety, step_budget: Optional[int] = None) -> ConeSurjection:
    """Build ``gamma(x, z) = (h_1(x) z, ..., h_k(x) z)``.

    ``h`` may be a :class:`LiftResult` (its certificate is reused) or a plain
    tuple, in which case the unit-ideal property is re-certified.
    """
    h, cert = _h_tuple(h)
    if len(h) != cone.ambient_dim:
        raise ArityError(f"{len(h)} coordinates for a cone in A^{cone.ambient_dim}")
    if cert is None or not cert.is_unit():
        unit, cert = is_unit_ideal(h, step_budget=step_budget)
        if not unit:
            raise BasePointDetected(cert)
    if not verify_maps_into_cone(h, cone):
        bad = [str(F) for F in cone.generators if not F.substitute(h).is_zero()]
        raise NotIntoCone(f"generators not vanishing on h: {', '.join(bad)}")
    hz, z = extend_with_z(h)
    gamma = tuple(p * z for p in hz)
    return ConeSurjection(h=h, gamma=gamma, m=len(z.varset), certificate=cert)


def verify_gamma_scaling(F: Polynomial, h: Sequence[Polynomial]) -> bool:
    """Check ``F(z*h) == z^deg(F) * F(h)`` symbolically for homogeneous ``F``."""
    hom = F.is_homogeneous()
    if hom is None:
        raise NotHomogeneous(f"{F} is not homogeneous")
    if hom.zero:
        return True
    h, _ = _h_tuple(h)
    hz, z = extend_with_z(h)
    lhs = F.substitute([p * z for p in hz])
    rhs = (z**hom.degree) * F.substitute(hz)
    return lhs == rhs


@dataclass
class SampleReport:
    n_samples: int
    seed: int
    coord_bound: int
    passes: list
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return all(p == self.n_samples for p in self.passes)

    def as_dict(self):
        return {
            "n_samples": self.n_samples,
            "seed": self.seed,
            "coord_bound": self.coord_bound,
            "passes": self.passes,
            "failures": self.failures,
            "ok": self.ok,
        }


def random_rational(rng: random.Random, bound: int) -> Fraction:
    num = rng.randint(-bound, bound)
    den = 0
    while den == 0:
        den = rng.randint(-bound, bound)
    return Fraction(num, den)


MAX_WITNESSES = 20


def sample_membership(
    surj: ConeSurjection,
    cone: ConeVariety,
    n_samples: int,
    seed: int,
    coord_bound: int = 10,
) -> SampleReport:
    """Evaluate every generator at ``gamma(a, z)`` for seeded random rational points."""
    if n_samples < 0:
        raise ValueError("n_samples must be nonnegative")
    if len(surj.gamma) != cone.ambient_dim:
        raise ArityError("surjection and cone have different ambient dimensions")
    rng = random.Random(seed)
    dim = len(surj.varset)
    passes = [0] * len(cone.generators)
    failures = []
    for idx in range(n_samples):
        point = [random_rational(rng, coord_bound) for _ in range(dim)]
        image = [g.evaluate(point) for g in surj.gamma]
        for gi, F in enumerate(cone.generators):
            value = F.evaluate(image)
            if value == 0:
                passes[gi] += 1
            elif len(failures) < MAX_WITNESSES:
                failures.append(
                    {
                        "sample": idx,
                        "generator": gi,
                        "point": [str(a) for a in point],
                        "value": str(value),
                    }
                )
    return SampleReport(n_samples, seed, coord_bound, passes, failures)
