"""Unit and property tests for the exact scalar/polynomial/series tower."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acpolys.exact_core import (
    GaussianRational,
    I,
    Polynomial,
    TruncatedSeries,
    TWO_I,
    X,
    format_rational,
    parse_rational,
    poly_from_json,
    poly_to_json,
    scalar_from_json,
    scalar_to_json,
)

HALF = Fraction(1, 2)

fractions_st = st.fractions(min_value=-5, max_value=5, max_denominator=12)
gaussians_st = st.builds(GaussianRational, fractions_st, fractions_st)
polys_st = st.lists(fractions_st, min_size=0, max_size=6).map(Polynomial)


# ---------------------------------------------------------------------------
# GaussianRational


class TestGaussianRational:
    def test_constructor_coerces(self):
        z = GaussianRational(1, HALF)
        assert z.re == 1 and z.im == HALF
        assert isinstance(z.re, Fraction) and isinstance(z.im, Fraction)

    def test_i_squares_to_minus_one(self):
        assert I * I == Fraction(-1)
        assert TWO_I == 2 * I

    def test_is_real_and_real_part(self):
        assert GaussianRational(3, 0).is_real
        assert GaussianRational(3, 0).real_part() == 3
        with pytest.raises(ValueError):
            GaussianRational(3, 1).real_part()

    def test_mixed_arithmetic_with_rationals(self):
        z = GaussianRational(1, 2)
        assert z + HALF == GaussianRational(Fraction(3, 2), 2)
        assert HALF + z == z + HALF
        assert 2 * z == GaussianRational(2, 4)
        assert z - 1 == GaussianRational(0, 2)
        assert 1 - z == GaussianRational(0, -2)

    def test_division(self):
        z = GaussianRational(1, 1)
        assert z / z == GaussianRational(1, 0)
        assert 1 / I == -I
        assert (GaussianRational(5, 0) / GaussianRational(1, 2)) * GaussianRational(1, 2) == 5
        with pytest.raises(ZeroDivisionError):
            z / GaussianRational(0, 0)

    def test_powers(self):
        assert I**2 == -1
        assert I**3 == -I
        assert I**4 == 1
        assert TWO_I**3 == GaussianRational(0, -8)
        assert I**-1 == -I
        assert GaussianRational(1, 1) ** 0 == 1

    def test_equality_and_hash_against_fraction(self):
        assert GaussianRational(3, 0) == Fraction(3)
        assert GaussianRational(3, 0) == 3
        assert hash(GaussianRational(HALF, 0)) == hash(HALF)
        assert GaussianRational(3, 1) != 3

    def test_foreign_types_unsupported(self):
        with pytest.raises(TypeError):
            I + 0.25
        assert I != "i"

    @given(gaussians_st, gaussians_st)
    def test_conjugation_is_multiplicative(self, u, v):
        assert (u * v).conjugate() == u.conjugate() * v.conjugate()

    @given(gaussians_st, gaussians_st)
    def test_norm_is_multiplicative(self, u, v):
        assert (u * v).norm() == u.norm() * v.norm()

    @given(gaussians_st, gaussians_st)
    def test_division_inverts_multiplication(self, u, v):
        if v.norm() == 0:
            return
        assert (u / v) * v == u

    @given(gaussians_st)
    def test_norm_is_conjugate_product(self, u):
        assert u * u.conjugate() == GaussianRational(u.norm(), 0)


# ---------------------------------------------------------------------------
# Polynomial


class TestPolynomial:
    def test_normalization_strips_trailing_zeros(self):
        assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
        assert Polynomial([0, 0]) == Polynomial([])
        assert Polynomial([]).is_zero
        assert Polynomial([]).degree == -1

    def test_monomial(self):
        p = Polynomial.monomial(3, HALF)
        assert p.coeffs == (0, 0, 0, HALF)
        assert p.degree == 3
        assert p.leading() == HALF

    def test_coefficient_beyond_degree_is_zero(self):
        p = Polynomial([1, 2])
        assert p.coefficient(5) == 0
        assert isinstance(p.coefficient(5), Fraction)

    def test_evaluation_horner(self):
        p = Polynomial([1, 2, 3])
        assert p(HALF) == Fraction(11, 4)
        assert p(0) == 1
        assert Polynomial([])(7) == 0

    def test_evaluation_at_gaussian(self):
        # X^2 + 1 vanishes at i
        p = Polynomial([1, 0, 1])
        assert p(I) == GaussianRational(0, 0)

    def test_arithmetic(self):
        p = Polynomial([1, 1])
        q = Polynomial([-1, 1])
        assert p * q == Polynomial([-1, 0, 1])
        assert p + q == Polynomial([0, 2])
        assert p - p == Polynomial([])
        assert -p == Polynomial([-1, -1])
        assert HALF * p == Polynomial([HALF, HALF])
        assert p * HALF == HALF * p

    def test_leading_cancellation(self):
        assert Polynomial([0, 1, 1]) - Polynomial([1, 0, 1]) == Polynomial([-1, 1])

    def test_compose_affine_shift(self):
        # (X+1)^2 = X^2 + 2X + 1
        sq = Polynomial([0, 0, 1])
        assert sq.compose_affine(1, 1) == Polynomial([1, 2, 1])
        # p(2X) scales coefficients by powers of 2
        assert Polynomial([1, 1, 1]).compose_affine(2, 0) == Polynomial([1, 2, 4])

    def test_gaussian_lift_and_downcast(self):
        p = Polynomial([1, 2]).lift_gaussian()
        assert all(isinstance(c, GaussianRational) for c in p.coeffs)
        back = p.rational_coefficients()
        assert all(isinstance(c, Fraction) for c in back.coeffs)
        assert back == Polynomial([1, 2])
        with pytest.raises(ValueError):
            Polynomial([I]).rational_coefficients()

    def test_x_constant(self):
        assert X == Polynomial([0, 1])
        assert X(5) == 5

    @given(polys_st, polys_st, polys_st)
    @settings(max_examples=60)
    def test_ring_axioms(self, p, q, r):
        assert p + q == q + p
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r

    @given(polys_st, fractions_st, fractions_st, fractions_st)
    @settings(max_examples=60)
    def test_compose_affine_matches_evaluation(self, p, a, b, x):
        assert p.compose_affine(a, b)(x) == p(a * x + b)

    @given(polys_st, fractions_st)
    @settings(max_examples=60)
    def test_evaluation_is_ring_homomorphism(self, p, x):
        q = Polynomial([1, -2, 1])
        assert (p * q)(x) == p(x) * q(x)
        assert (p + q)(x) == p(x) + q(x)


# ---------------------------------------------------------------------------
# TruncatedSeries


def series(coeffs, order):
    return TruncatedSeries(coeffs, order)


class TestTruncatedSeries:
    def test_construction_pads_and_coerces(self):
        s = series([1, HALF], 3)
        assert s.order == 3
        assert s.coefficient(2) == Polynomial([])
        assert s.coefficient(0) == Polynomial([1])
        with pytest.raises(IndexError):
            s.coefficient(4)

    def test_too_many_coefficients_rejected(self):
        with pytest.raises(ValueError):
            series([1, 2, 3], 1)

    def test_valuation(self):
        assert series([0, 1], 3).valuation() == 1
        assert series([1], 3).valuation() == 0
        assert series([], 3).valuation() is None

    def test_mixed_orders_rejected(self):
        with pytest.raises(ValueError, match="mixed truncation orders"):
            series([1], 3) + series([1], 4)

    def test_truncate_cannot_extend(self):
        s = series([1, 2, 3], 2)
        assert s.truncate(1) == series([1, 2], 1)
        with pytest.raises(ValueError):
            s.truncate(5)

    def test_geometric_series_division(self):
        one = series([1], 6)
        one_minus_t = series([1, -1], 6)
        geo = one / one_minus_t
        assert geo == series([1] * 7, 6)

    def test_division_cancels_valuation_and_reduces_order(self):
        # t^2 * (1 + t) / t = t * (1 + t) at one lower order
        num = series([0, 0, 1, 1], 5)
        den = series([0, 1], 5)
        q = num / den
        assert q.order == 4
        assert q == series([0, 1, 1], 4)

    def test_division_valuation_violation(self):
        with pytest.raises(ValueError, match="valuation"):
            series([1], 4) / series([0, 1], 4)

    def test_division_by_zero_series(self):
        with pytest.raises(ZeroDivisionError):
            series([1], 4) / series([], 4)

    def test_polynomial_coefficients(self):
        # s(x, t) = x + (x^2) t ; s * s has x^2 at t^0 and 2 x^3 at t^1
        s = series([X, X * X], 2)
        sq = s * s
        assert sq.coefficient(0) == X * X
        assert sq.coefficient(1) == 2 * (X * X * X)

    def test_scalar_and_polynomial_multiplication(self):
        s = series([1, 1], 2)
        assert (HALF * s).coefficient(0) == Polynomial([HALF])
        assert (X * s).coefficient(1) == X

    @given(
        st.lists(fractions_st, min_size=1, max_size=5),
        st.lists(fractions_st, min_size=1, max_size=5),
    )
    @settings(max_examples=60)
    def test_division_round_trip(self, a, b):
        if b[0] == 0:
            b = [Fraction(1)] + b[1:]
        order = 5
        s = series(a, order)
        t = series(b, order)
        assert (s / t) * t == s


# ---------------------------------------------------------------------------
# Serialization


class TestSerialization:
    def test_rational_strings(self):
        assert format_rational(Fraction(3, 4)) == "3/4"
        assert format_rational(Fraction(5)) == "5"
        assert format_rational(Fraction(-1, 2)) == "-1/2"
        assert parse_rational("7/2") == Fraction(7, 2)
        assert parse_rational("-3") == Fraction(-3)

    def test_scalar_json_shapes(self):
        assert scalar_to_json(Fraction(1, 3)) == "1/3"
        assert scalar_to_json(GaussianRational(1, -HALF)) == {"re": "1", "im": "-1/2"}
        assert scalar_from_json("1/3") == Fraction(1, 3)
        assert scalar_from_json({"re": "0", "im": "2"}) == TWO_I

    def test_poly_round_trip(self):
        p = Polynomial([Fraction(1, 4), 0, 1, 0, Fraction(3, 4)])
        assert poly_from_json(poly_to_json(p)) == p

    @given(polys_st)
    @settings(max_examples=60)
    def test_poly_round_trip_property(self, p):
        assert poly_from_json(poly_to_json(p)) == p

    @given(st.lists(gaussians_st, max_size=4).map(Polynomial))
    @settings(max_examples=60)
    def test_gaussian_poly_round_trip(self, p):
        assert poly_from_json(poly_to_json(p)) == p
