import pytest
from hypothesis import assume, given

from conelift.errors import BasePointDetected, InvalidFraction
from conelift.groebner import buchberger, is_unit_ideal
from conelift.lift import (
    ProjectiveMapRep,
    clear_denominators,
    coprime_reduce,
    lift_morphism,
    verify_projective_equality,
    wps_obstruction_demo,
)
from conelift.parsing import parse_polynomial, parse_rational_function
from conelift.polycore import Polynomial, RationalFunction, VarSet, gcd

from strategies import XY, XYZ, polynomials

T = VarSet.of("t")


def P(text, vs=XY):
    return parse_polynomial(text, vs)


def R(text, vs=XY):
    return parse_rational_function(text, vs)


class TestClearDenominators:
    def test_single_denominator(self):
        p, q = P("x + 1"), P("y^2 - x")
        assert clear_denominators([R("1"), RationalFunction(p, q)]) == [q, p]

    def test_two_denominators(self):
        out = clear_denominators([R("1", XYZ), R("x/y", XYZ), R("x/z", XYZ)])
        assert out == [P("y*z", XYZ), P("x*z", XYZ), P("x*y", XYZ)]
        assert verify_projective_equality(out, [R("1", XYZ), R("x/y", XYZ), R("x/z", XYZ)])

    def test_shared_denominator_uses_lcm(self):
        out = clear_denominators([R("1/(x*y)"), R("1/(x*y^2)")])
        assert out == [P("y"), P("1")]

    def test_polynomials_unchanged(self):
        h = [P("x"), P("x*y + 1")]
        assert clear_denominators(h) == h

    def test_zero_denominator(self):
        with pytest.raises(InvalidFraction):
            clear_denominators([(P("x"), Polynomial.zero(XY))])


class TestCoprimeReduce:
    def test_common_factor(self):
        assert coprime_reduce([P("x^2"), P("x*(x*y + 1)")]) == [P("x"), P("x*y + 1")]

    def test_coprime_unchanged(self):
        h = [P("x"), P("x*y + 1")]
        assert coprime_reduce(h) == h

    def test_scalar_normalization(self):
        assert coprime_reduce([P("2*x"), P("4*x^2")]) == [P("1"), P("2*x")]

    @given(polynomials(XY, 3, 2), polynomials(XY, 3, 2), polynomials(XY, 2, 2))
    def test_idempotent_and_coprime(self, a, b, f):
        assume(not (a.is_zero() and b.is_zero()) and not f.is_zero())
        once = coprime_reduce([a * f, b * f])
        assert coprime_reduce(once) == once
        nonzero = [p for p in once if not p.is_zero()]
        g = nonzero[0] if len(nonzero) == 1 else gcd(*nonzero)
        assert g.is_constant()
        assert verify_projective_equality(once, [a, b])


class TestLiftMorphism:
    def test_unit_coordinate(self):
        t = Polynomial.var(T, "t")
        res = lift_morphism([Polynomial.const(T, 1), t])
        assert res.h == (Polynomial.const(T, 1), t)
        assert res.certificate.is_unit()

    def test_surjective_to_p1(self):
        res = lift_morphism([P("x"), P("x*y + 1")])
        assert res.h == (P("x"), P("x*y + 1"))
        assert res.certificate.is_unit() and res.base_chart == 0

    def test_base_point(self):
        with pytest.raises(BasePointDetected) as err:
            lift_morphism([P("x"), P("y")])
        assert set(err.value.basis.elements) == {P("x"), P("y")}

    def test_veronese(self):
        coords = [P("x^2"), P("x*(x*y + 1)"), P("(x*y + 1)^2")]
        res = lift_morphism(coords)
        assert verify_projective_equality(res.h, coords)
        assert res.certificate.is_unit()

    def test_rational_input_removes_spurious_factor(self):
        # [x^2 : x^2 y + x] represents the morphism [x : xy + 1]
        res = lift_morphism([R("x^2/(y^2 + 1)"), R("(x^2*y + x)/(y^2 + 1)")])
        assert res.h == (P("x"), P("x*y + 1"))

    def test_chart_skips_zero_coordinate(self):
        res = lift_morphism([Polynomial.zero(XY), P("x"), P("x*y + 1")])
        assert res.base_chart == 1
        assert res.h == (Polynomial.zero(XY), P("x"), P("x*y + 1"))

    def test_rejects_all_zero(self):
        with pytest.raises(ValueError):
            ProjectiveMapRep((Polynomial.zero(XY), Polynomial.zero(XY)))

    @given(polynomials(XY, 3, 2), polynomials(XY, 3, 2))
    def test_random_pairs(self, p, q):
        assume(not q.is_zero())
        rf = RationalFunction(p, q)
        h = [rf.den, rf.num]
        unit, _ = is_unit_ideal(h)
        if unit:
            res = lift_morphism([Polynomial.const(XY, 1), rf])
            assert verify_projective_equality(res.h, [Polynomial.const(XY, 1), rf])
            assert is_unit_ideal(list(res.h))[0]
        else:
            with pytest.raises(BasePointDetected):
                lift_morphism([Polynomial.const(XY, 1), rf])


class TestProjectiveEquality:
    def test_minors_vanish(self):
        assert verify_projective_equality([P("x"), P("x*y + 1")], [P("x^2"), P("x*(x*y + 1)")])

    def test_common_scalar(self):
        t = Polynomial.var(T, "t")
        one = Polynomial.const(T, 1)
        assert verify_projective_equality([one, t], [2 * one, 2 * t])

    def test_different(self):
        t = Polynomial.var(T, "t")
        one = Polynomial.const(T, 1)
        assert not verify_projective_equality([one, t], [t, one])

    @given(polynomials(XY, 3, 2), polynomials(XY, 3, 2), polynomials(XY, 3, 2), polynomials(XY, 2, 2))
    def test_equivalence_properties(self, a, b, c, f):
        assume(not f.is_zero())
        h = [a, b, c]
        g = [b, c, a]
        assert verify_projective_equality(h, h)
        assert verify_projective_equality(h, g) == verify_projective_equality(g, h)
        assert verify_projective_equality(h, [f * p for p in h])
        assert verify_projective_equality(h, g) == verify_projective_equality([f * p for p in h], g)


class TestWPSDemo:
    def test_default_contradiction(self):
        report = wps_obstruction_demo()
        assert report.contradiction
        assert report.reason == "odd degree in x3"
        assert report.square_root is None

    def test_even_variant_has_root(self):
        vs = VarSet.of("x1", "x2", "x3")
        report = wps_obstruction_demo(parse_polynomial("x1^2*x3^2", vs))
        assert not report.contradiction
        assert report.square_root == "x1*x3"

    def test_cubic_variant(self):
        vs = VarSet.of("x1", "x2", "x3")
        report = wps_obstruction_demo(parse_polynomial("x1^2*x3^3", vs))
        assert report.contradiction and report.odd_variables == ["x3"]

    def test_no_unit_ideal_for_beta(self):
        # the map itself has base points in A^3, independent of the parity argument
        vs = VarSet.of("x1", "x2", "x3")
        beta = [parse_polynomial(s, vs) for s in ("x1^2*x3", "x1*x2*x3", "x2^2*x3")]
        assert not buchberger(beta).is_unit()
