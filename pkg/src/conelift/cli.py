"""Command-line interface: ``conelift <subcommand> ...``.

Exit status: 0 success or verified, 1 a definite negative verdict (base point,
not rational, failed membership), 2 usage or parse errors, 3 when the Groebner
step budget runs out.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cone import (
    ConeVariety,
    build_gamma,
    sample_membership,
    verify_gamma_scaling,
    verify_maps_into_cone,
)
from .errors import (
    ArityError,
    BasePointDetected,
    BudgetExceeded,
    ConeliftError,
    DuplicatePoints,
    InvalidFraction,
    NotHomogeneous,
    NotIntoCone,
    ParseError,
    UnknownVariable,
)
from .groebner import DEFAULT_STEP_BUDGET, is_unit_ideal
from .interpolate import PointSet, TargetAssignment, compose_with_surjection, interpolate_map
from .lift import ProjectiveMapRep, lift_morphism, verify_projective_equality, wps_obstruction_demo
from .parsing import parse_polynomial, read_job
from .polycore import Polynomial, VarSet
from .trinomial import TrinomialHypersurface, admits_surjection_from_affine_space, parse_block, to_polynomial

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def step_budget():
    raw = os.environ.get("CONELIFT_STEP_BUDGET")
    if raw is None:
        return DEFAULT_STEP_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ParseError(f"CONELIFT_STEP_BUDGET must be an integer, got {raw!r}") from None
    return value if value > 0 else None


class UsageError(ConeliftError):
    pass


# -- job helpers ---------------------------------------------------------------


def _source_varset(job):
    vs = job.varset("vars")
    if vs is None:
        raise UsageError(f"{job.path}: missing [vars] section")
    return vs


def _map_from_job(job):
    """The coordinate tuple from ``[map]`` (rational functions allowed) or ``[h]``."""
    vs = _source_varset(job)
    if job.has("map"):
        return vs, job.rational_functions("map", vs), "map"
    if job.has("h"):
        return vs, job.polynomials("h", vs), "h"
    raise UsageError(f"{job.path}: needs a [map] or [h] section")


def _cone_from_job(job, k):
    vs = job.varset("cone_vars") or VarSet.indexed("z", k)
    gens = job.polynomials("ideal", vs) if job.has("ideal") else []
    return ConeVariety(k, tuple(gens), job.integer("dim_y"), vs)


def _lift_from_job(job):
    _, coords, _ = _map_from_job(job)
    return lift_morphism(ProjectiveMapRep(tuple(coords)), step_budget=step_budget()), coords


# -- subcommands -----------------------------------------------------------------


def cmd_lift(args):
    job = read_job(args.job)
    try:
        result, coords = _lift_from_job(job)
    except BasePointDetected as exc:
        return EXIT_NEGATIVE, {
            "command": "lift",
            "lifted": False,
            "base_point": True,
            "basis": exc.basis.as_strings(),
        }
    return EXIT_OK, {
        "command": "lift",
        "lifted": True,
        "base_point": False,
        "vars": list(result.h[0].varset.names),
        "h": [str(p) for p in result.h],
        "certificate": result.certificate.as_strings(),
        "base_chart": result.base_chart,
        "projectively_equal": verify_projective_equality(result.h, coords),
    }


def _gamma_from_job(job):
    vs, coords, kind = _map_from_job(job)
    if kind == "map":
        lifted, _ = _lift_from_job(job)
        h = lifted
    else:
        h = coords
    k = len(coords)
    cone = _cone_from_job(job, k)
    return build_gamma(h, cone, step_budget=step_budget()), cone


def cmd_cone(args):
    job = read_job(args.job)
    try:
        surj, cone = _gamma_from_job(job)
    except BasePointDetected as exc:
        return EXIT_NEGATIVE, {"command": "cone", "built": False, "reason": "base point", "basis": exc.basis.as_strings()}
    except NotIntoCone as exc:
        return EXIT_NEGATIVE, {"command": "cone", "built": False, "reason": "not into cone", "detail": str(exc)}
    report = sample_membership(surj, cone, args.samples, args.seed, args.bound)
    out = {
        "command": "cone",
        "built": True,
        "vars": list(surj.varset.names),
        "h": [str(p) for p in surj.h],
        "gamma": [str(p) for p in surj.gamma],
        "m": surj.m,
        "certificate": surj.certificate.as_strings(),
        "cone_vars": list(cone.varset.names),
        "generators": [str(g) for g in cone.generators],
        "samples": report.as_dict(),
    }
    if cone.dim_y is not None:
        out["dim_y"] = cone.dim_y
        out["m_equals_dim_y_plus_1"] = surj.m == cone.dim_y + 1
    return (EXIT_OK if report.ok else EXIT_NEGATIVE), out


def cmd_verify(args):
    job = read_job(args.job)
    vs, coords, kind = _map_from_job(job)
    if kind == "map":
        try:
            lifted, _ = _lift_from_job(job)
            h = list(lifted.h)
        except BasePointDetected as exc:
            return EXIT_NEGATIVE, {
                "command": "verify",
                "ok": False,
                "unit_ideal": False,
                "basis": exc.basis.as_strings(),
            }
    else:
        h = coords
    cone = _cone_from_job(job, len(h))
    unit, basis = is_unit_ideal(h, step_budget=step_budget())
    into = verify_maps_into_cone(h, cone)
    scaling = [verify_gamma_scaling(F, h) for F in cone.generators]
    out = {
        "command": "verify",
        "h": [str(p) for p in h],
        "unit_ideal": unit,
        "certificate": basis.as_strings(),
        "maps_into_cone": into,
        "scaling": scaling,
    }
    ok = unit and into and all(scaling)
    if unit and into:
        surj = build_gamma(h, cone)
        report = sample_membership(surj, cone, args.samples, args.seed, args.bound)
        out["samples"] = report.as_dict()
        ok = ok and report.ok
    out["ok"] = ok
    return (EXIT_OK if ok else EXIT_NEGATIVE), out


def _trinomial_report(t):
    verdict = admits_surjection_from_affine_space(t)
    out = {"l": [list(b) for b in t.l], "k": t.k, "polynomial": str(to_polynomial(t))}
    out.update(verdict.as_dict())
    return out


def _parse_trinomial_line(text, lineno):
    blocks = [b for b in text.split(";")]
    if len(blocks) != 3:
        raise ParseError("expected three ';'-separated exponent blocks", lineno, 1)
    try:
        return TrinomialHypersurface(tuple(parse_block(b) for b in blocks))
    except ValueError as exc:
        raise ParseError(str(exc), lineno, 1) from None


def cmd_trinomial(args):
    if args.batch:
        results = []
        with open(args.batch, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.split("#", 1)[0].strip()
                if line:
                    results.append(_trinomial_report(_parse_trinomial_line(line, lineno)))
        status = EXIT_OK if all(r["rational"] for r in results) else EXIT_NEGATIVE
        return status, {"command": "trinomial", "results": results}
    if not (args.l0 and args.l1 and args.l2):
        raise UsageError("trinomial needs --l0, --l1 and --l2, or --batch FILE")
    try:
        t = TrinomialHypersurface((parse_block(args.l0), parse_block(args.l1), parse_block(args.l2)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = {"command": "trinomial", **_trinomial_report(t)}
    return (EXIT_OK if out["rational"] else EXIT_NEGATIVE), out


def cmd_interpolate(args):
    job = read_job(args.job)
    points = job.points("points")
    preimages = job.points("preimages")
    if not points or not preimages:
        raise UsageError(f"{job.path}: needs [points] and [preimages] sections")
    Z = PointSet(tuple(points))
    A = TargetAssignment(tuple(preimages))
    xvs = job.varset("point_vars")
    phi_tilde = interpolate_map(Z, A, xvs)
    if job.has("pi"):
        pvs = job.varset("pi_vars")
        if pvs is None:
            raise UsageError(f"{job.path}: [pi] needs a [pi_vars] section")
        pi = job.polynomials("pi", pvs)
        cone = _cone_from_job(job, len(pi)) if job.has("ideal") else None
    elif job.has("map") or job.has("h"):
        surj, cone = _gamma_from_job(job)
        pi = list(surj.gamma)
    else:
        pi = list(Polynomial.gens(VarSet.indexed("a", A.arity)))
        cone = None
    phi = compose_with_surjection(pi, phi_tilde)
    checks = []
    ok = True
    for z, a in zip(Z.points, A.preimages):
        image = [p.evaluate(z) for p in phi]
        expected = [p.evaluate(a) for p in pi]
        on_cone = None
        if cone is not None:
            on_cone = all(F.evaluate(image) == 0 for F in cone.generators)
        good = image == expected and on_cone is not False
        ok = ok and good
        checks.append(
            {
                "point": [str(c) for c in z],
                "preimage": [str(c) for c in a],
                "image": [str(c) for c in image],
                "matches": image == expected,
                "on_cone": on_cone,
            }
        )
    out = {
        "command": "interpolate",
        "phi_tilde": [str(p) for p in phi_tilde],
        "pi": [str(p) for p in pi],
        "phi": [str(p) for p in phi],
        "checks": checks,
        "ok": ok,
    }
    return (EXIT_OK if ok else EXIT_NEGATIVE), out


def cmd_wps_demo(args):
    target = None
    if args.target:
        target = parse_polynomial(args.target, VarSet.of("x1", "x2", "x3"))
    report = wps_obstruction_demo(target)
    return EXIT_OK, {"command": "wps-demo", **report.as_dict()}


# -- output -----------------------------------------------------------------------


def _is_flat(v):
    return not isinstance(v, (dict, list)) or (
        isinstance(v, list) and not any(isinstance(x, (dict, list)) for x in v)
    )


def _format_text(value, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key in sorted(value):
            v = value[key]
            if _is_flat(v):
                lines.append(f"{pad}{key}: {_scalar(v)}")
            else:
                lines.append(f"{pad}{key}:")
                lines.extend(_format_text(v, indent + 1))
    else:
        for item in value:
            if _is_flat(item):
                lines.append(f"{pad}- {_scalar(item)}")
            else:
                lines.append(f"{pad}-")
                lines.extend(_format_text(item, indent + 1))
    return lines


def _scalar(x):
    if x is None:
        return "none"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, list):
        return "[" + ", ".join(_scalar(a) for a in x) + "]"
    return str(x)


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2)
    return "\n".join(_format_text(report))


def build_parser():
    parser = argparse.ArgumentParser(prog="conelift", description="Surjections onto affine cones, with certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)
        return p

    p = add("lift", cmd_lift, "lift a projective morphism to polynomials with no common zero")
    p.add_argument("--job", required=True)

    for name, func, help_ in (
        ("cone", cmd_cone, "build gamma onto a cone and sample membership"),
        ("verify", cmd_verify, "run all certificate checks on a job"),
    ):
        p = add(name, func, help_)
        p.add_argument("--job", required=True)
        p.add_argument("--samples", type=int, default=100)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--bound", type=int, default=10)

    p = add("trinomial", cmd_trinomial, "rationality and cone verdict for a trinomial hypersurface")
    p.add_argument("--l0")
    p.add_argument("--l1")
    p.add_argument("--l2")
    p.add_argument("--batch", help="file with one 'a,b;c;d,e' hypersurface per line")

    p = add("interpolate", cmd_interpolate, "polynomial map through prescribed points")
    p.add_argument("--job", required=True)

    p = add("wps-demo", cmd_wps_demo, "the weighted projective lifting obstruction")
    p.add_argument("--target", help="replace the first coordinate x1^2*x3 (variables x1, x2, x3)")
    return parser


USAGE_ERRORS = (
    ParseError,
    UnknownVariable,
    UsageError,
    ArityError,
    InvalidFraction,
    NotHomogeneous,
    DuplicatePoints,
    OSError,
    ValueError,
)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 0) < 0:
        parser.error("--samples must be nonnegative")
    try:
        status, report = args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(report, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
