from fractions import Fraction
from math import factorial

from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from hooklab import guess_hypergeometric, guess_rational
from hooklab.guess import holdout_size

BT_SQUARED = [2, Fraction(3, 4), Fraction(2, 5), Fraction(1, 4), Fraction(6, 35), Fraction(1, 8),
              Fraction(2, 21), Fraction(3, 40), Fraction(2, 33)]
FT_CATALAN = [1, 1, Fraction(5, 3), 2, Fraction(42, 19), Fraction(33, 14), Fraction(143, 58),
              Fraction(130, 51), Fraction(34, 13), Fraction(323, 121), Fraction(19, 7),
              Fraction(322, 117), Fraction(1150, 413), Fraction(45, 16)]
BT_EXP = [Fraction(1, n * 2 ** (n - 1)) for n in range(1, 10)]


def sound(form, values, n0=1):
    return all(form.evaluate(n0 + i) == Fraction(v) for i, v in enumerate(values))


def test_rational_examples():
    g = guess_rational(BT_SQUARED)
    assert g.render() == "6/(n*(n+2))" and sound(g, BT_SQUARED)
    assert g.held_out == holdout_size(len(BT_SQUARED)) >= 2
    g = guess_rational(FT_CATALAN)
    assert g.render() == "4*(2*n-1)*(2*n-3)/((n+1)*(5*n-6))"
    assert g.exceptions == (1,) and sound(g, FT_CATALAN)
    assert "initial values 1" in g.describe()
    assert guess_rational([3, 3, 3, 3, 3]).render() == "3"


def test_hypergeometric_examples():
    g = guess_hypergeometric(BT_EXP)
    assert g.render() == "2^(1-n)/n" and sound(g, BT_EXP)
    geo = [3 ** n for n in range(6)]
    assert guess_hypergeometric(geo, n0=0).render() == "3^n"
    fac = [factorial(n) for n in range(7)]
    g = guess_hypergeometric(fac, n0=0)
    assert g.render() == "n!" and sound(g, fac, 0)


def test_failure_returns_none():
    assert guess_rational([1, 5, 2, 7, 1, 8, 2, 8]) is None
    assert guess_hypergeometric([1, 5, 2, 7, 1, 8, 2, 8]) is None


def test_exact_fit_without_held_out_points_is_rejected():
    # a degree-3 polynomial needs 4 fit points plus 2 held out; 5 values are not enough
    values = [n ** 3 - 2 * n for n in range(1, 6)]
    assert guess_rational(values, max_exceptions=0) is None
    assert guess_rational([n ** 3 - 2 * n for n in range(1, 8)], max_exceptions=0) is not None


def degree(form):
    num, den = form.ratfun.integer_parts()
    return max((sum(m) for m, _ in num), default=0) + max((sum(m) for m, _ in den), default=0)


coef = st.integers(-5, 5)


@given(st.lists(coef, min_size=1, max_size=3), st.lists(coef, min_size=1, max_size=3),
       st.integers(0, 3))
def test_random_rational_sequences(pc, qc, shift):
    def P(n):
        return sum(c * n ** i for i, c in enumerate(pc))

    def Q(n):
        return sum(c * n ** i for i, c in enumerate(qc))

    ns = range(1 + shift, 15 + shift)
    assume(all(Q(n) != 0 for n in ns))
    values = [Fraction(P(n), Q(n)) for n in ns]
    g = guess_rational(values, n0=1 + shift, max_exceptions=0)
    assert g is not None
    assert sound(g, values, 1 + shift)
    points = list(zip(ns, values))
    d = degree(g)
    for total in range(d):
        for dp in range(total + 1):
            assert not oracles.rational_fit_exists(points, dp, total - dp)
