"""Lift [x^2 : x(xy+1) : (xy+1)^2], build gamma onto z1*z3 = z2^2, and sample it."""

import argparse

from conelift import ConeVariety, build_gamma, lift_morphism, parse_polynomial, sample_membership
from conelift.polycore import VarSet


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--bound", type=int, default=10)
    args = ap.parse_args()

    xy = VarSet.of("x", "y")
    coords = [parse_polynomial(s, xy) for s in ("x^2", "x*(x*y + 1)", "(x*y + 1)^2")]
    lifted = lift_morphism(coords)
    print("h           =", ", ".join(map(str, lifted.h)))
    print("certificate =", lifted.certificate)

    cone = ConeVariety(3, (parse_polynomial("z1*z3 - z2^2", VarSet.indexed("z", 3)),), dim_y=2)
    surj = build_gamma(lifted, cone)
    print("gamma       =", ", ".join(map(str, surj.gamma)))
    print(f"m = {surj.m} (dim Y + 1 = {cone.dim_y + 1})")

    report = sample_membership(surj, cone, args.samples, args.seed, args.bound)
    print(f"samples: {report.passes[0]}/{report.n_samples} on the cone (seed {args.seed})")


if __name__ == "__main__":
    main()
