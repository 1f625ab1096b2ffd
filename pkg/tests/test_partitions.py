from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hooklab import Partition, RatFun, SingularError, WeightTable, enumerate_partitions, eval_series
from hooklab import hook_lengths, pa_hookexp, pa_hookgen, var
from hooklab.partitions import hook_multiset, pa_hookgen_split
from strategies import positive_fractions, weight_tables

z = var("z")


def coeffs(s):
    return [c.to_fraction() for c in s.coeffs]


def test_counts():
    assert len(enumerate_partitions(4)) == 5
    assert enumerate_partitions(0) == [Partition(())]
    assert len(enumerate_partitions(9)) == 30


def test_hook_lengths_of_example_diagram():
    got = Counter(hook_lengths(Partition((6, 3, 3, 2))))
    assert got == Counter([2, 1, 4, 3, 1, 5, 4, 2, 9, 8, 6, 3, 2, 1])


def test_single_row_and_hook_shapes():
    assert sorted(hook_lengths(Partition((5,)))) == [1, 2, 3, 4, 5]
    for arm in range(4):
        for leg in range(4):
            p = Partition((arm + 1,) + (1,) * leg)
            want = list(range(1, leg + 1)) + list(range(1, arm + 1)) + [arm + leg + 1]
            assert sorted(hook_lengths(p)) == sorted(want)


def test_hooks_match_independent_oracle():
    for n in range(1, 11):
        for p in enumerate_partitions(n):
            assert sorted(hook_lengths(p)) == sorted(oracles.hooks(p.parts))


def test_multiset_total_equals_size():
    for n in range(16):
        for p in enumerate_partitions(n):
            assert hook_multiset(p).total() == n


def test_conjugate_has_same_hooks():
    for p in enumerate_partitions(8):
        assert hook_multiset(p) == hook_multiset(p.conjugate())


def test_hookgen_examples():
    assert coeffs(pa_hookgen([1] * 9, 9)) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    rho = [1 + Fraction(1, n) for n in range(1, 9)]
    assert coeffs(pa_hookgen(rho, 8)) == [1, 2, 6, Fraction(40, 3), 31, 62, Fraction(647, 5),
                                         Fraction(3664, 15), Fraction(98467, 210)]
    f = pa_hookgen([z] + [1] * 4, 5)
    assert list(f.coeffs) == [RatFun(1), z, 2 * z, 2 * z + z * z, 3 * z + 2 * z * z,
                              2 * z + 5 * z * z]


def test_hookexp_examples():
    assert str(pa_hookexp(eval_series("exp(x)", 8), 8)) == "[1, 1/4, 1/9, 1/16, 1/25, 1/36, 1/49, 1/64]"
    t = pa_hookexp(eval_series("1/(1-x)", 8), 8)
    assert t.values[-1] == RatFun(Fraction(105940688107, 124616941064))


def test_singular_partial_table():
    f = eval_series("product((1-x^(3*k))^3/(1-x^k), k=1..8)", 8)
    with pytest.raises(SingularError) as info:
        pa_hookexp(f, 8)
    err = info.value
    assert str(err) == "Denominator is zero, no solution for n=8."
    assert len(err.partial) == 7
    assert err.partial.undetermined == (6, 7)
    assert err.partial.values[5] == var("r6")


def test_fresh_parameters_avoid_existing_names():
    # r6 already occurs in the input, so the free slot at n=6 gets another name
    f = eval_series("product((1-x^(3*k))^3/(1-x^k), k=1..8) + r6*x^7", 7)
    with pytest.raises(SingularError) as info:
        pa_hookexp(f, 7)
    partial = info.value.partial
    assert partial.undetermined == (6,)
    assert partial.values[5] == var("r6_1")


@settings(max_examples=10)
@given(weight_tables(12, positive=False))
def test_enumeration_matches_split(rho):
    assert pa_hookgen(rho, 12) == pa_hookgen_split(rho, 12)


@settings(max_examples=10)
@given(weight_tables(9, positive=False))
def test_hookgen_matches_brute_force(rho):
    assert coeffs(pa_hookgen(rho, 9)) == oracles.pa_hookgen(rho, 9)


@settings(max_examples=15)
@given(weight_tables(10))
def test_round_trip(rho):
    t = pa_hookexp(pa_hookgen(rho, 10), 10)
    assert [v.to_fraction() for v in t.values] == rho


@settings(max_examples=10)
@given(st.lists(positive_fractions, min_size=8, max_size=8))
def test_hookexp_solution_resubstitutes(vals):
    f = eval_series("exp(x)", 8) * pa_hookgen(vals, 8)
    t = pa_hookexp(f, 8)
    assert pa_hookgen(t, 8) == f


def test_weight_table_json_round_trip():
    t = WeightTable((z, (z + 3) / 4, RatFun(Fraction(1, 9))))
    back = WeightTable.from_json(t.to_json(), ["z"])
    assert back == t and str(back) == str(t)
