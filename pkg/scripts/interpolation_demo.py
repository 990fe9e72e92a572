"""Send random points of A^2 to prescribed points of the conic cone through gamma."""

import argparse
import random
from fractions import Fraction

from conelift import (
    ConeVariety,
    PointSet,
    TargetAssignment,
    build_gamma,
    compose_with_surjection,
    interpolate_map,
    parse_polynomial,
)
from conelift.polycore import VarSet


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show-polys", action="store_true")
    args = ap.parse_args()
    rng = random.Random(args.seed)

    xy = VarSet.of("x", "y")
    cone = ConeVariety(3, (parse_polynomial("z1*z3 - z2^2", VarSet.indexed("z", 3)),))
    surj = build_gamma([parse_polynomial(s, xy) for s in ("x^2", "x*(x*y + 1)", "(x*y + 1)^2")], cone)

    pts = set()
    while len(pts) < args.points:
        pts.add((Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5))))
    pts = sorted(pts)
    pre = [tuple(Fraction(rng.randint(-3, 3)) for _ in range(3)) for _ in pts]
    phi = compose_with_surjection(surj.gamma, interpolate_map(PointSet(tuple(pts)), TargetAssignment(tuple(pre))))
    for i, p in enumerate(phi, 1):
        print(f"phi_{i}: degree {p.degree()}, {len(p)} terms" + (f"\n  {p}" if args.show_polys else ""))
    for z, a in zip(pts, pre):
        image = tuple(p.evaluate(z) for p in phi)
        on = cone.generators[0].evaluate(image) == 0
        print(f"{tuple(map(str, z))} -> {tuple(map(str, image))}  gamma(a) match: {image == surj(*a)}  on cone: {on}")


if __name__ == "__main__":
    main()
