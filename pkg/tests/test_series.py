from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hooklab import DomainError, RatFun, TruncSeries, var
from hooklab.series import (
    elementary_series,
    finite_product,
    series_compose,
    series_div,
    series_exp,
    series_log,
    series_pow,
)
from strategies import fractions, unit_series

z = var("z")
X4 = TruncSeries.monomial(1, 4)


def coeffs(s):
    return [c.to_fraction() for c in s.coeffs]


def series(values, N=None):
    return TruncSeries([RatFun(Fraction(v)) for v in values], N)


def test_product_and_geometric():
    one = TruncSeries.constant(1, 2)
    x = TruncSeries.monomial(1, 2)
    assert coeffs((one + x) * (one - x)) == [1, 0, -1]
    assert coeffs(series_div(TruncSeries.constant(1, 4), TruncSeries.constant(1, 4) - X4)) == [1] * 5


def test_nonunit_divisor_rejected():
    x = TruncSeries.monomial(1, 4)
    with pytest.raises(DomainError, match="nonunit divisor"):
        series_div(x + x * x, x * (1 + x))


def test_exp_and_log():
    assert coeffs(series_exp(X4)) == [Fraction(1, factorial(k)) for k in range(5)]
    x2 = TruncSeries.monomial(2, 4)
    assert coeffs(series_exp(X4 + x2 / 2)) == [1, 1, 1, Fraction(2, 3), Fraction(5, 12)]
    x3 = TruncSeries.monomial(1, 3)
    assert coeffs(series_log(1 - x3)) == [0, -1, Fraction(-1, 2), Fraction(-1, 3)]


def test_powers():
    x3 = TruncSeries.monomial(1, 3)
    assert coeffs(series_pow(1 - 4 * x3, Fraction(1, 2))) == [1, -2, -2, -4]
    assert coeffs(series_pow(1 + x3, 2)) == [1, 2, 1, 0]
    x2 = TruncSeries.monomial(1, 2)
    s = series_pow(1 - x2, -z)
    assert list(s.coeffs) == [RatFun(1), z, z * (z + 1) / 2]


def test_symbolic_power_needs_unit_constant():
    with pytest.raises(DomainError):
        series_pow(series([2, 1, 0]), z)


def test_compose():
    geo = series_div(TruncSeries.constant(1, 5), TruncSeries.constant(1, 5) - TruncSeries.monomial(1, 5))
    alt = series_compose(geo, TruncSeries.monomial(1, 5, -1))
    assert coeffs(alt) == [1, -1, 1, -1, 1, -1]
    e = series_compose(series_exp(TruncSeries.monomial(1, 3)), TruncSeries.monomial(1, 3, z))
    assert list(e.coeffs) == [RatFun(1), z, z * z / 2, z ** 3 / 6]
    assert series_compose(geo, TruncSeries.monomial(1, 5)) == geo
    with pytest.raises(DomainError):
        series_compose(geo, geo)


def test_elementary_functions():
    ts = elementary_series("tan", 5) + elementary_series("sec", 5)
    euler = [1, 1, 1, 2, 5, 16]
    assert coeffs(ts) == [Fraction(e, factorial(k)) for k, e in enumerate(euler)]
    assert coeffs(elementary_series("cos", 4)) == [1, 0, Fraction(-1, 2), 0, Fraction(1, 24)]
    assert coeffs(elementary_series("sin", 3)) == [0, 1, 0, Fraction(-1, 6)]


def test_finite_products():
    N = 9
    one = TruncSeries.constant(1, N)
    facs = [series_div(one, one - TruncSeries.monomial(k, N)) for k in range(1, 10)]
    assert coeffs(finite_product(facs)) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    one5 = TruncSeries.constant(1, 5)
    distinct = finite_product(one5 + TruncSeries.monomial(k, 5) for k in range(1, 15))
    assert coeffs(distinct) == [1, 1, 1, 2, 2, 3]
    assert coeffs(finite_product([], 3)) == [1, 0, 0, 0]


def test_mixed_orders_truncate_to_minimum():
    a = series([1, 1, 1, 1, 1])
    b = series([1, 2, 3])
    assert (a * b).order == 2 and (a + b).order == 2


def test_rendering():
    s = series_pow(1 - TruncSeries.monomial(1, 2), -z)
    assert str(s) == "1 + z*x + ((z^2+z)/2)*x^2"


@given(unit_series(6), fractions, fractions)
def test_power_law(a, p, q):
    assert series_pow(a, p) * series_pow(a, q) == series_pow(a, p + q)


@given(unit_series(5, symbolic=True))
def test_exp_log_round_trip(a):
    assert series_exp(series_log(a)) == a
    b = a - 1
    assert series_log(series_exp(b)) == b


@given(unit_series(6), st.lists(fractions, min_size=7, max_size=7))
def test_division_check(b, avals):
    a = series(avals)
    assert series_div(a, b) * b == a


@given(unit_series(6), fractions.filter(lambda c: c != 0))
def test_compose_with_inverse_scaling(f, c):
    g = series_compose(f, TruncSeries.monomial(1, 6, c))
    assert series_compose(g, TruncSeries.monomial(1, 6, 1 / c)) == f


@given(fractions)
def test_binomial_oracle(a):
    got = series_pow(1 + TruncSeries.monomial(1, 6), a)
    assert coeffs(got) == oracles.binomial_series(a, 6)
