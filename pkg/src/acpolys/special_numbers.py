"""Bernoulli numbers and polynomials, Euler polynomials, and the scaled
Taylor coefficients of t/sin(t) and tan(t/2), all exact.

Conventions: beta_n = B_n(0) with beta_1 = -1/2, the convention under
which B_n(X+1) - B_n(X) = n*X**(n-1) and the closed formulas below are
consistent.  The cosecant numbers cs(n) are n! times the t**n Taylor
coefficient of t/sin(t) (zero for odd n); the tangent-half coefficients
d_n are n! times the t**n coefficient of tan(t/2) (zero for even n).
Each closed formula has an independent series-quotient construction in
this module used as a cross-check.

The sine/cosine/exponential reference series are generated from
factorials, not hardcoded, so any truncation order is available.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exact_core import Polynomial, TruncatedSeries


@dataclass(frozen=True)
class BernoulliTable:
    """beta_0 .. beta_n, exact, indexable by n."""

    values: tuple

    def __getitem__(self, n: int) -> Fraction:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_n(self) -> int:
        return len(self.values) - 1


def bernoulli_numbers(n_max: int) -> BernoulliTable:
    """beta_0..beta_{n_max} via sum(binom(n+1,k)*beta_k, k=0..n) = 0."""
    values = [Fraction(1)]
    for n in range(1, n_max + 1):
        acc = Fraction(0)
        for k in range(n):
            acc += comb(n + 1, k) * values[k]
        values.append(-acc / (n + 1))
    return BernoulliTable(tuple(values))


def bernoulli_poly(n: int, table: BernoulliTable | None = None) -> Polynomial:
    """B_n(X) = sum_k binom(n,k) beta_{n-k} X**k."""
    if table is None or table.max_n < n:
        table = bernoulli_numbers(n)
    return Polynomial([comb(n, k) * table[n - k] for k in range(n + 1)])


def euler_poly(n: int, table: BernoulliTable | None = None) -> Polynomial:
    """E_n(X) = 2**(n+1)/(n+1) * [B_{n+1}(X/2 + 1/2) - B_{n+1}(X/2)]."""
    if table is None or table.max_n < n + 1:
        table = bernoulli_numbers(n + 1)
    b = bernoulli_poly(n + 1, table)
    half = Fraction(1, 2)
    diff = b.compose_affine(half, half) - b.compose_affine(half, 0)
    return diff * Fraction(2 ** (n + 1), n + 1)


def cosecant_number(n: int, table: BernoulliTable | None = None) -> Fraction:
    """cs(n) = (-1)**(n/2+1) * (2**n - 2) * beta_n for even n; 0 for odd n.

    The sign exponent is non-integral for odd n, where the series
    coefficient vanishes anyway (t/sin t is even).
    """
    if n % 2:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    if table is None or table.max_n < n:
        table = bernoulli_numbers(n)
    return Fraction((-1) ** (n // 2 + 1) * (2**n - 2)) * table[n]


def tangent_half_coeff(n: int, table: BernoulliTable | None = None) -> Fraction:
    """d_n = 2*(-1)**((n-1)/2)*(2**(n+1) - 1)*beta_{n+1}/(n+1) for odd n; 0 for even n.

    tan(t/2) is odd, so the even coefficients vanish (the sign exponent is
    non-integral there, including the n = 0 case d_0 = 0).
    """
    if n % 2 == 0:
        return Fraction(0)
    if table is None or table.max_n < n + 1:
        table = bernoulli_numbers(n + 1)
    sign = (-1) ** ((n - 1) // 2)
    return 2 * sign * (2 ** (n + 1) - 1) * table[n + 1] / (n + 1)


# ---------------------------------------------------------------------------
# Reference series, generated from factorials.


def exp_xt_series(order: int, scale: Fraction | int = 1) -> TruncatedSeries:
    """exp(scale * t * x): coefficient of t**n is scale**n x**n / n!."""
    scale = Fraction(scale)
    return TruncatedSeries(
        [Polynomial.monomial(n, scale**n / factorial(n)) for n in range(order + 1)],
        order,
    )


def exp_series(order: int, scale: Fraction | int = 1) -> TruncatedSeries:
    """exp(scale * t) as a series with constant polynomial coefficients."""
    scale = Fraction(scale)
    return TruncatedSeries(
        [Polynomial([scale**n / factorial(n)]) for n in range(order + 1)],
        order,
    )


def sin_series(order: int, scale: Fraction | int = 1) -> TruncatedSeries:
    """sin(scale * t), exact modulo t**(order+1)."""
    scale = Fraction(scale)
    coeffs = []
    for n in range(order + 1):
        if n % 2:
            coeffs.append(
                Polynomial([(-1) ** (n // 2) * scale**n / factorial(n)])
            )
        else:
            coeffs.append(Polynomial())
    return TruncatedSeries(coeffs, order)


def cos_series(order: int, scale: Fraction | int = 1) -> TruncatedSeries:
    """cos(scale * t), exact modulo t**(order+1)."""
    scale = Fraction(scale)
    coeffs = []
    for n in range(order + 1):
        if n % 2 == 0:
            coeffs.append(
                Polynomial([(-1) ** (n // 2) * scale**n / factorial(n)])
            )
        else:
            coeffs.append(Polynomial())
    return TruncatedSeries(coeffs, order)


def t_series(order: int) -> TruncatedSeries:
    """The series consisting of the single term t."""
    return TruncatedSeries([Polynomial(), Polynomial([1])], order)


# ---------------------------------------------------------------------------
# Independent series-quotient constructions of cs(n) and d_n.


def cosecant_numbers_series(n_max: int) -> list:
    """cs(0)..cs(n_max) as n! times the coefficients of t / sin(t)."""
    quotient = t_series(n_max + 1) / sin_series(n_max + 1)
    out = []
    for n in range(n_max + 1):
        c = quotient.coefficient(n)
        if c.degree > 0:
            raise ValueError("t/sin t must have constant coefficients")
        out.append(factorial(n) * Fraction(c.coefficient(0)))
    return out


def tangent_half_coeffs_series(n_max: int) -> list:
    """d_0..d_{n_max} as n! times the coefficients of tan(t/2)."""
    half = Fraction(1, 2)
    quotient = sin_series(n_max, half) / cos_series(n_max, half)
    out = []
    for n in range(n_max + 1):
        c = quotient.coefficient(n)
        if c.degree > 0:
            raise ValueError("tan(t/2) must have constant coefficients")
        out.append(factorial(n) * Fraction(c.coefficient(0)))
    return out


def bernoulli_numbers_series(n_max: int) -> list:
    """beta_0..beta_{n_max} as n! times the coefficients of t / (e^t - 1).

    Independent of the defining recurrence; used as a cross-check.
    """
    one = TruncatedSeries([Polynomial([1])], n_max + 1)
    quotient = t_series(n_max + 1) / (exp_series(n_max + 1) - one)
    out = []
    for n in range(n_max + 1):
        c = quotient.coefficient(n)
        if c.degree > 0:
            raise ValueError("t/(e^t - 1) must have constant coefficients")
        out.append(factorial(n) * Fraction(c.coefficient(0)))
    return out
