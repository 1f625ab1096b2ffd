from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hooklab import ParseError, RatFun, eval_scalar, eval_series, parse, render, var
from hooklab.catalog import builtin_catalog
from hooklab.expr import BigOp, Call, free_parameters, weights_from_expr

z = var("z")


def coeffs(s):
    return [c.to_fraction() for c in s.coeffs]


def test_parse_shapes():
    cat = parse("(1-sqrt(1-4*x))/(2*x)")
    assert cat.op == "/"
    assert free_parameters(parse("exp(x+z*x^2/2)")) == ["z"]
    prod = parse("product(1/(1-x^k), k=1..9)")
    assert isinstance(prod, BigOp) and prod.index == "k"
    assert isinstance(parse("sqrt(x)"), Call)


def test_power_is_right_associative():
    assert eval_scalar("2^3^2") == RatFun(512)
    assert eval_scalar("2**-1") == RatFun(Fraction(1, 2))
    assert eval_scalar("-2^2") == RatFun(-4)


def test_classic_series():
    assert coeffs(eval_series("(1-sqrt(1-4*x))/(2*x)", 4)) == [1, 1, 2, 5, 14]
    assert coeffs(eval_series("1/(1-x-x^2)", 5)) == [1, 1, 2, 3, 5, 8]
    assert coeffs(eval_series("tan(x)+sec(x)", 3)) == [1, 1, Fraction(1, 2), Fraction(1, 3)]


def test_product_bound_is_raised():
    # each factor is 1 + O(x^k), so k=1..3 still yields the full partition count
    assert coeffs(eval_series("product(1/(1-x^k), k=1..3)", 8)) == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    # a factor that is not 1 + O(x^k) keeps the literal bound
    assert coeffs(eval_series("product(1+x, k=1..2)", 3)) == [1, 2, 1, 0]


def test_infinite_sum_and_factorial():
    e = eval_series("sum(x^k/factorial(k), k=0..infinity)", 5)
    assert e == eval_series("exp(x)", 5)


def test_karr_convention_for_empty_and_reversed_products():
    assert eval_scalar("product(k, k=1..0)") == RatFun(1)
    assert eval_scalar("product(k, k=3..1)") == RatFun(Fraction(1, 2))


def test_binomial_with_symbolic_top():
    assert eval_scalar("binomial(z, 2)") == z * (z - 1) / 2


def test_weights_from_expression():
    w = weights_from_expr("6/(n*(n+2))", 3)
    assert w == [RatFun(2), RatFun(Fraction(3, 4)), RatFun(Fraction(2, 5))]


@pytest.mark.parametrize("src,pos", [("exp(x", 5), ("1+*x", 2), ("x^x", 2), ("foo(x)", 0)])
def test_parse_errors_carry_positions(src, pos):
    with pytest.raises(ParseError) as info:
        parse(src)
    assert info.value.pos == pos


def test_unknown_parameter_rejected_when_declared():
    with pytest.raises(ParseError):
        eval_series("exp(y*x)", 3, params=["z"])


def test_catalog_sources_round_trip():
    for e in builtin_catalog():
        tree = parse(e.gf)
        assert parse(render(tree)) == tree


def test_constant_expression_gives_constant_series():
    s = eval_series("(z+3)/4", 3)
    assert list(s.coeffs) == [(z + 3) / 4, RatFun(0), RatFun(0), RatFun(0)]


SOURCES = ["exp(x)", "(1-sqrt(1-4*x))/(2*x)", "1/(1-x)^z", "product((1-x^(2*k))/(1-x^k), k=1..4)",
           "tan(x)+z*sec(x)", "log(1+x)*exp(-x)", "(1+x)/(1+x^3)"]


@given(st.sampled_from(SOURCES), st.integers(0, 8), st.integers(0, 8))
def test_order_monotone(src, m, n):
    m, n = min(m, n), max(m, n)
    assert eval_series(src, n).truncate(m) == eval_series(src, m)


@given(st.sampled_from(SOURCES))
def test_render_round_trip(src):
    tree = parse(src)
    assert parse(render(tree)) == tree
