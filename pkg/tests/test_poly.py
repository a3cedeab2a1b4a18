from fractions import Fraction

import pytest
from hypothesis import given, settings

import strategies as gst
from gbx import (
    Monomial,
    Polynomial,
    Term,
    ZeroPolynomialError,
    cmp_lex,
    mono_divide,
    mono_lcm,
    mono_mul,
    parse_polynomial,
    unit_monomial,
)

P = parse_polynomial

X = Monomial((1, 0, 0))
Y = Monomial((0, 1, 0))
Z = Monomial((0, 0, 1))


class TestMonomialOrder:
    def test_x_beats_y(self):
        assert cmp_lex(X, Y) == 1

    def test_yz_beats_y(self):
        assert cmp_lex(Monomial((0, 1, 1)), Y) == 1

    def test_reflexive(self):
        m = Monomial((2, 0, 1))
        assert cmp_lex(m, m) == 0

    def test_arity_mismatch_rejected(self):
        with pytest.raises(ValueError):
            cmp_lex(X, Monomial((1, 0)))

    def test_y_beats_high_z_power(self):
        # pure lex: any positive y power dominates any z power
        assert cmp_lex(Y, Monomial((0, 0, 9))) == 1

    @given(gst.monomials(), gst.monomials(), gst.monomials())
    def test_total_order(self, a, b, c):
        assert cmp_lex(a, b) == -cmp_lex(b, a)
        if cmp_lex(a, b) <= 0 and cmp_lex(b, c) <= 0:
            assert cmp_lex(a, c) <= 0
        assert cmp_lex(a, b) in (-1, 0, 1)

    @given(gst.monomials(), gst.monomials())
    def test_rich_comparison_matches_cmp(self, a, b):
        assert (a < b) == (cmp_lex(a, b) < 0)


class TestMonomialArithmetic:
    def test_divide(self):
        assert mono_divide(Monomial((2, 1, 0)), X) == Monomial((1, 1, 0))

    def test_self_divide_is_unit(self):
        m = Monomial((3, 1, 2))
        assert mono_divide(m, m) == unit_monomial(3)

    def test_not_divisible(self):
        assert mono_divide(X, Y) is None

    def test_lcm(self):
        assert mono_lcm(Monomial((2, 0, 0)), X) == Monomial((2, 0, 0))
        assert mono_lcm(X, Y) == Monomial((1, 1, 0))
        m = Monomial((1, 2, 3))
        assert mono_lcm(m, unit_monomial(3)) == m

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            Monomial((1, -1, 0))

    @given(gst.monomials(), gst.monomials())
    def test_divide_undoes_mul(self, a, b):
        assert mono_divide(mono_mul(a, b), b) == a


class TestPolynomialArithmetic:
    def test_add_cancellation(self):
        assert P("x+1") + P("-x") == P("1")

    def test_add_zero_identity(self):
        p = P("x^2-3yz")
        assert p + Polynomial.zero(3) == p

    def test_add_quadric_pair(self):
        # hand addition of the two quadric generators
        assert P("-4x^2-9y^2+z") + P("4x^2+9y^2-2x-3y") == P("-2x-3y+z")

    def test_mul_one(self):
        p = P("x^2-3yz+1/2")
        assert p * P("1") == p

    def test_mul_zero(self):
        assert P("x+y") * Polynomial.zero(3) == Polynomial.zero(3)

    def test_difference_of_squares(self):
        assert P("x+y") * P("x-y") == P("x^2-y^2")

    def test_canonical_form_independent_of_term_order(self):
        pairs = [(X, Fraction(2)), (Y, Fraction(-1)), (unit_monomial(3), Fraction(5))]
        assert Polynomial.from_pairs(pairs, 3) == Polynomial.from_pairs(pairs[::-1], 3)

    def test_rejects_unsorted_terms(self):
        with pytest.raises(ValueError):
            Polynomial((Term(Fraction(1), Y), Term(Fraction(1), X)), 3)

    @given(gst.polynomials(), gst.polynomials())
    def test_commutative(self, p, q):
        assert p + q == q + p
        assert p * q == q * p

    @settings(max_examples=50)
    @given(gst.polynomials(max_terms=4), gst.polynomials(max_terms=4), gst.polynomials(max_terms=4))
    def test_associative_distributive(self, p, q, r):
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(gst.polynomials())
    def test_additive_inverse(self, p):
        assert p + (-p) == Polynomial.zero(3)


class TestLeadingTermAndMonic:
    def test_leading_term_quadric(self):
        t = P("-4x^2-9y^2+z").leading_term()
        assert t == Term(Fraction(-4), Monomial((2, 0, 0)))

    def test_leading_term_quartic(self):
        assert P("x+yz+y-z^4-4").leading_monomial() == X

    def test_leading_term_constant(self):
        assert P("7").leading_term() == Term(Fraction(7), unit_monomial(3))

    def test_zero_has_no_leading_term(self):
        with pytest.raises(ZeroPolynomialError):
            Polynomial.zero(3).leading_term()

    def test_monic_linear(self):
        assert P("2x+3y-z").monic() == P("x+3/2y-1/2z")

    def test_monic_quadric(self):
        assert P("-18y^2+6yz-z^2+z").monic() == P("y^2-1/3yz+1/18z^2-1/18z")

    @given(gst.nonzero_polynomials())
    def test_monic_idempotent(self, p):
        assert p.monic().monic() == p.monic()
        assert p.monic().leading_coefficient() == 1

    @given(gst.nonzero_polynomials())
    def test_leading_monomial_is_maximal(self, p):
        lead = p.leading_monomial()
        assert all(cmp_lex(lead, m) >= 0 for m in p.monomials())


class TestLinearAndEvaluate:
    def test_plane_is_linear(self):
        assert P("x+y+z-4").is_linear()

    def test_constant_is_not_linear(self):
        assert not P("5").is_linear()
        assert not Polynomial.zero(3).is_linear()

    def test_cubic_tail_is_not_linear(self):
        assert not P("y-z^3-1").is_linear()

    def test_evaluate_plane(self):
        assert P("x+y+z-4").evaluate((1.0, 1.0, 2.0)) == 0.0

    def test_evaluate_square(self):
        assert P("x^2").evaluate((3.0, 0.0, 0.0)) == 9.0

    def test_evaluate_zero(self):
        assert Polynomial.zero(3).evaluate((2.0, 5.0, -1.0)) == 0.0
