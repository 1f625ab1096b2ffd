import json
from fractions import Fraction

from hooklab import RatFun, builtin_catalog, get_entry, verify_all, verify_entry, var
from hooklab.catalog import (
    corrupted,
    cross_identities,
    export_catalog,
    leaf_counts,
    tree_cross_identities,
)
from hooklab.structures import hookgen
from oracles import catalan


def test_catalog_shape():
    cat = builtin_catalog()
    ids = [e.id for e in cat]
    assert len(ids) == len(set(ids)) >= 45
    assert sum(e.kind == "PA" for e in cat) >= 15
    assert {e.kind for e in cat} == {"PA", "BT", "CBT", "FT"}
    assert [e.id for e in cat if e.status == "conjecture"] == ["pa-involution-interpolation"]


def test_sign_weight_entry():
    e = get_entry("pa-sign-t-multiples")
    for t in (1, 2, 3, 4):
        w = e.weights(12, {"t": t})
        assert w == [RatFun(-1) if h % t == 0 else RatFun(1) for h in range(1, 13)]


def test_fibonacci_catalan_entry():
    w = get_entry("ft-catalan").weights(8, {})
    assert w[0] == RatFun(1)
    for h in range(2, 9):
        assert w[h - 1] == RatFun(Fraction(4 * (2 * h - 1) * (2 * h - 3), (h + 1) * (5 * h - 6)))


def test_karr_convention_gives_first_weight():
    # at h = 1 the denominator product runs from 1 to -1, which inverts to 1/(2z)
    z = var("z")
    assert get_entry("bt-binomial-z").weights(1, {})[0] == z
    assert get_entry("bt-catalan-power-z").weights(1, {})[0] == z


def test_single_entries():
    assert verify_entry(get_entry("bt-exp"), 12).passed
    r = verify_entry(get_entry("pa-involution-interpolation"))
    assert r.passed and r.N == 10 and "conjecture" in r.line()
    assert not r.counts_as_failure


def test_nekrasov_okounkov_at_two_matches_euler_product():
    no = get_entry("pa-nekrasov-okounkov")
    lhs = hookgen("PA", no.weights(15, {"beta": RatFun(2)}), 15)
    rhs = hookgen("PA", get_entry("pa-two-over-h-squared").weights(15, {}), 15)
    assert lhs == rhs
    assert verify_entry(no, 15).passed


def test_order_zero_is_trivial():
    s = verify_all(0)
    assert s.ok and all(r.passed for r in s.reports)


def test_corrupted_entry_reports_one_failure():
    bad = corrupted(get_entry("bt-catalan"), at=5)
    s = verify_all(10, entries=builtin_catalog()[:3] + [bad])
    failures = [r for r in s.reports if not r.passed]
    assert len(failures) == 1 and not s.ok
    assert failures[0].first_mismatch.mismatch_index == 5


def test_cross_identities():
    for check in cross_identities(12) + tree_cross_identities(12):
        assert check.passed, check


def test_leaf_count_formula():
    counts = leaf_counts(10)
    assert counts[(3, 1)] == 4 and counts[(3, 2)] == 1
    for n in range(1, 11):
        assert sum(c for (m, _), c in counts.items() if m == n) == catalan(n)


def test_export_is_json():
    data = json.loads(json.dumps(export_catalog()))
    keys = {"id", "kind", "weight", "gf", "params", "status", "citation"}
    assert all(keys <= set(d) for d in data)


def test_parallel_matches_serial():
    serial = verify_all(8)
    parallel = verify_all(8, jobs=2)
    assert [r.id for r in serial.reports] == [r.id for r in parallel.reports]
    assert [r.passed for r in serial.reports] == [r.passed for r in parallel.reports]
