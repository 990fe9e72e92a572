from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conelift.cone import ConeVariety, build_gamma
from conelift.errors import ArityError, DuplicatePoints
from conelift.interpolate import (
    PointSet,
    TargetAssignment,
    compose_with_surjection,
    interpolate_map,
    lagrange_coefficients,
    separating_functional,
)
from conelift.parsing import parse_polynomial
from conelift.polycore import Polynomial, VarSet

X1 = VarSet.of("x1")
X2 = VarSet.of("x1", "x2")

coords = st.fractions(-4, 4, max_denominator=3)


def conic_gamma():
    xy = VarSet.of("x", "y")
    h = [parse_polynomial(s, xy) for s in ("x^2", "x*(x*y + 1)", "(x*y + 1)^2")]
    cone = ConeVariety(3, (parse_polynomial("z1*z3 - z2^2", VarSet.indexed("z", 3)),))
    return build_gamma(h, cone).gamma, cone


class TestSeparatingFunctional:
    def test_single_point(self):
        assert separating_functional(PointSet(((3, 4),))) == Polynomial.var(X2, "x1")

    def test_triangle(self):
        ell = separating_functional(PointSet(((0, 0), (1, 0), (0, 1))))
        assert ell == parse_polynomial("x1 + 2*x2", X2)
        assert sorted(ell.evaluate(p) for p in ((0, 0), (1, 0), (0, 1))) == [0, 1, 2]

    def test_line(self):
        assert separating_functional(PointSet(((0,), (1,)))) == Polynomial.var(X1, "x1")

    def test_duplicates(self):
        with pytest.raises(DuplicatePoints):
            PointSet(((1, 2), (1, 2)))

    @given(st.lists(st.tuples(coords, coords, coords), min_size=1, max_size=8, unique=True))
    def test_separates(self, pts):
        ell = separating_functional(PointSet(tuple(pts)))
        assert len({ell.evaluate(p) for p in pts}) == len(pts)
        assert ell == separating_functional(PointSet(tuple(pts)))


class TestLagrange:
    def test_brute_force(self):
        nodes = [Fraction(0), Fraction(1), Fraction(3)]
        coeffs = lagrange_coefficients(nodes, [Fraction(2), Fraction(-1), Fraction(5)])
        for u, v in zip(nodes, [2, -1, 5]):
            assert sum(c * u**i for i, c in enumerate(coeffs)) == v


class TestInterpolateMap:
    def test_constant(self):
        phi = interpolate_map(PointSet(((0, 0),)), TargetAssignment(((5,),)))
        assert phi == (Polynomial.const(X2, 5),)

    def test_linear(self):
        phi = interpolate_map(PointSet(((0,), (1,))), TargetAssignment(((2,), (3,))))
        assert phi == (parse_polynomial("x1 + 2", X1),)

    def test_quadratic_in_ell(self):
        Z = ((0, 0), (1, 0), (0, 1))
        (phi,) = interpolate_map(PointSet(Z), TargetAssignment(((4,), (5,), (6,))))
        ell = parse_polynomial("x1 + 2*x2", X2)
        # values 4, 5, 6 at ell = 0, 1, 2 are linear in ell
        assert phi == ell + 4
        assert [phi.evaluate(z) for z in Z] == [4, 5, 6]

    def test_arity_mismatch(self):
        with pytest.raises(ArityError):
            interpolate_map(PointSet(((0,), (1,))), TargetAssignment(((2,),)))

    @given(
        st.lists(st.tuples(coords, coords), min_size=1, max_size=6, unique=True),
        st.data(),
    )
    def test_exact_and_degree_bound(self, pts, data):
        targets = [data.draw(st.tuples(coords, coords, coords)) for _ in pts]
        phi = interpolate_map(PointSet(tuple(pts)), TargetAssignment(tuple(targets)))
        for z, a in zip(pts, targets):
            assert tuple(p.evaluate(z) for p in phi) == a
        assert all(p.degree() <= len(pts) - 1 for p in phi)


class TestCompose:
    def test_constant(self):
        gamma, _ = conic_gamma()
        phi_t = interpolate_map(PointSet(((0,),)), TargetAssignment(((1, 2, 3),)))
        phi = compose_with_surjection(gamma, phi_t)
        assert all(p.is_constant() for p in phi)
        assert tuple(p.constant_value() for p in phi) == tuple(g.evaluate((1, 2, 3)) for g in gamma)

    def test_identity(self):
        vs = VarSet.indexed("a", 2)
        phi_t = (parse_polynomial("x1^2 - 3", X1), parse_polynomial("2*x1", X1))
        assert compose_with_surjection(Polynomial.gens(vs), phi_t) == phi_t

    def test_conic(self):
        gamma, cone = conic_gamma()
        a1, a2 = (1, 0, 1), (1, 1, 1)
        phi_t = interpolate_map(PointSet(((0,), (1,))), TargetAssignment((a1, a2)))
        phi = compose_with_surjection(gamma, phi_t)
        for z, a in (((0,), a1), ((1,), a2)):
            image = [p.evaluate(z) for p in phi]
            assert image == [g.evaluate(a) for g in gamma]
            assert cone.generators[0].evaluate(image) == 0

    def test_arity(self):
        gamma, _ = conic_gamma()
        with pytest.raises(ArityError):
            compose_with_surjection(gamma, (Polynomial.var(X1, "x1"),))
