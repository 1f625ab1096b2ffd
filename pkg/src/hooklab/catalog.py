"""Registry of hook length formulas and a verifier for them.

Each entry pairs a weight rule with a closed-form generating function.  The
verifier expands the weights with the matching ``hookgen`` and compares the
result with the evaluated closed form, coefficient by coefficient.  Integer
parameters (``t``) are instantiated; all others stay symbolic.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Mapping, Sequence

from .algebra import ONE, ZERO, RatFun, register_variables, var
from .errors import HookError
from .expr import eval_series, parse
from .series import TruncSeries
from .structures import hookgen

Weight = Callable[[int, Mapping[str, object]], object]

DEFAULT_ORDER = {"PA": 18, "BT": 24, "CBT": 24, "FT": 24}
T_VALUES = (1, 2, 3, 4)


@dataclass(frozen=True)
class FormulaEntry:
    id: str
    kind: str
    weight: Weight
    weight_text: str
    gf: str
    citation: str
    params: tuple = ()
    instances: tuple = ({},)
    status: str = "proved"
    default_n: int | None = None

    def order(self, N: int | None = None) -> int:
        if N is not None:
            return N
        return self.default_n if self.default_n is not None else DEFAULT_ORDER[self.kind]

    def weights(self, N: int, bindings: Mapping[str, object]) -> list[RatFun]:
        env = {p: var(p) for p in self.params}
        env.update(bindings)
        return [RatFun.coerce(self.weight(h, env)) for h in range(1, N + 1)]

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "weight": self.weight_text,
            "gf": self.gf,
            "params": list(self.params),
            "instances": [dict(i) for i in self.instances],
            "status": self.status,
            "citation": self.citation,
        }


# -- weight helpers -------------------------------------------------------


def _prod(fn, lo: int, hi: int) -> RatFun:
    """``prod_(i=lo)^hi fn(i)`` with reversed ranges inverted (Karr's convention)."""
    if hi < lo - 1:
        return ONE / _prod(fn, hi + 1, lo - 1)
    acc = ONE
    for i in range(lo, hi + 1):
        acc = acc * fn(i)
    return acc


def _r(a, b=1) -> RatFun:
    return RatFun(Fraction(a, b))


def _conjecture_weight(n, p):
    z = p["z"]
    num = sum((comb(n, 2 * k) * z ** k for k in range(n // 2 + 1)), ZERO)
    den = sum((comb(n, 2 * k + 1) * z ** k for k in range((n - 1) // 2 + 1)), ZERO)
    return num / (n * den)


def _cbt_period_three(n, p):
    if n == 1:
        return ONE
    if n % 3 == 2:
        return ZERO
    if n % 6 in (3, 0):
        return _r(-1, (n + 3) // 6)
    return _r(1, (n + 2) // 6)


def _bt_period_three(n, p):
    k, r = divmod(n + 2, 3)
    return [_r(1, k), ZERO, _r(-1, k)][r]


def _ft_catalan_even(n, p):
    z = p["z"]
    if n == 1:
        return z
    k = n // 2
    if n % 2 == 0:
        return RatFun(2 * k - 1) / ((k + 1) * z)
    return 2 * (2 * k - 1) * z / ((k + 1) * z * z + 2 * (2 * k - 1))


def _unified_za(h, p):
    z, a = p["z"], p["a"]
    top = _prod(lambda i: z * a + z + (2 * h - i) * a + i, 1, h - 1)
    bottom = _prod(lambda i: 2 * z * a + 2 * z + (2 * h - 2 - i) * a + i, 1, h - 2)
    return top / (2 * h * bottom)


def _binomial_z(h, p):
    z = p["z"]
    return _prod(lambda i: z + i, 1, h - 1) / (2 * h * _prod(lambda i: 2 * z + i, 1, h - 2))


def _catalan_power_z(h, p):
    z = p["z"]
    top = _prod(lambda i: z + 2 * h - i, 1, h - 1)
    return top / (2 * h * _prod(lambda i: 2 * z + 2 * h - 2 - i, 1, h - 2))


def _postnikov_z(h, p):
    z = p["z"]
    return (z + h) ** (h - 1) / (h * (2 * z + h - 1) ** (h - 2))


_T = tuple({"t": t} for t in T_VALUES)
_CATALAN = "(1-sqrt(1-4*x))/(2*x)"
_CBT_COUNT = "(1-sqrt(1-4*x^2))/(2*x^2)"


def _entries() -> list[FormulaEntry]:
    E = FormulaEntry
    return [
        # partitions
        E("pa-plancherel", "PA", lambda h, p: _r(1, h * h), "1/h^2", "exp(x)",
          "sum of squared tableau counts is n!", status="classical"),
        E("pa-involutions", "PA", lambda h, p: _r(1, h), "1/h", "exp(x+x^2/2)",
          "tableau counts add up to the number of involutions", status="classical"),
        E("pa-euler", "PA", lambda h, p: ONE, "1", "product(1/(1-x^k), k=1..infinity)",
          "Euler's generating function for partitions", status="classical"),
        E("pa-nekrasov-okounkov", "PA", lambda h, p: 1 - p["beta"] / (h * h), "1 - beta/h^2",
          "product((1-x^k)^(beta-1), k=1..infinity)",
          "Nekrasov-Okounkov formula, beta arbitrary", params=("beta",)),
        E("pa-involution-interpolation", "PA", _conjecture_weight,
          "sum_k C(h,2k) z^k / (h sum_k C(h,2k+1) z^k)", "exp(x+z*x^2/2)",
          "interpolation between permutations (z=0) and involutions (z=1)",
          params=("z",), status="conjecture", default_n=10),
        E("pa-t-cores", "PA", lambda h, p: ZERO if h % p["t"] == 0 else ONE,
          "0 if t | h, else 1", "product((1-x^(t*k))^t/(1-x^k), k=1..infinity)",
          "generating function of t-cores", instances=_T, status="classical"),
        E("pa-t-squared", "PA", lambda h, p: 1 - _r(p["t"] ** 2, h * h), "1 - t^2/h^2",
          "product((1-x^k)^(t^2)/(1-x^k), k=1..infinity)",
          "interpolation between t-cores and the Nekrasov-Okounkov formula", instances=_T),
        E("pa-t-multiples-z", "PA",
          lambda h, p: 1 - p["t"] * p["z"] / (h * h) if h % p["t"] == 0 else ONE,
          "1 - t*z/h^2 if t | h, else 1", "product((1-x^(t*k))^z/(1-x^k), k=1..infinity)",
          "weights change only on multiples of t", params=("z",), instances=_T),
        E("pa-parity-z", "PA",
          lambda h, p: 1 - 2 * p["z"] / (h * h) if h % 2 == 0 else -ONE,
          "-1 if h odd, 1 - 2z/h^2 if h even",
          "product((1-x^k)*(1-x^(4*k))^(3*z-5)/((1-x^(8*k))^(z-2)*(1-x^(2*k))^(z-1)), k=1..infinity)",
          "sign flip on odd hook lengths", params=("z",)),
        E("pa-sign-t-multiples", "PA", lambda h, p: -ONE if h % p["t"] == 0 else ONE,
          "-1 if t | h, else 1",
          "product((1-x^(4*t*k))^t*(1-x^(t*k))^(2*t)/((1-x^(2*t*k))^(3*t)*(1-x^k)), k=1..infinity)",
          "sign counts hook lengths divisible by t", instances=_T),
        E("pa-z-power-t-multiples", "PA", lambda h, p: p["z"] if h % p["t"] == 0 else ONE,
          "z if t | h, else 1",
          "product((1-x^(t*k))^t/((1-(z*x^t)^k)^t*(1-x^k)), k=1..infinity)",
          "z marks hook lengths divisible by t", params=("z",), instances=_T),
        E("pa-unified-yz", "PA",
          lambda h, p: p["y"] * (1 - p["t"] * p["z"] / (h * h)) if h % p["t"] == 0 else ONE,
          "y*(1 - t*z/h^2) if t | h, else 1",
          "product((1-x^(t*k))^t/((1-(y*x^t)^k)^(t-z)*(1-x^k)), k=1..infinity)",
          "common generalization in y and z", params=("y", "z"), instances=_T),
        E("pa-even-hooks", "PA", lambda h, p: 1 - _r(2, h * h) if h % 2 == 0 else ONE,
          "1 - 2/h^2 if h even, else 1", "product(1+x^k, k=1..infinity)",
          "partitions into distinct parts"),
        E("pa-two-over-h-squared", "PA", lambda h, p: 1 - _r(2, h * h), "1 - 2/h^2",
          "product(1-x^k, k=1..infinity)", "the Euler product itself"),
        E("pa-corners-z", "PA", lambda h, p: p["z"] if h == 1 else ONE, "z if h = 1, else 1",
          "product((1+(z-1)*x^k)/(1-x^k), k=1..infinity)", "z counts corners",
          params=("z",)),
        E("pa-hook-t-doubled", "PA", lambda h, p: RatFun(2) if h == p["t"] else ONE,
          "2 if h = t, else 1", "product((1+x^(t*k))^t/(1-x^k), k=1..infinity)",
          "boxes with hook length exactly t count twice", instances=_T),
        E("pa-hook-t-z", "PA", lambda h, p: p["z"] if h == p["t"] else ONE,
          "z if h = t, else 1", "product((1+(z-1)*x^(t*k))^t/(1-x^k), k=1..infinity)",
          "z marks boxes with hook length exactly t", params=("z",), instances=_T),
        # binary trees
        E("bt-inverse-hook", "BT", lambda h, p: _r(1, h), "1/h", "1/(1-x)",
          "binary trees and permutations"),
        E("bt-catalan", "BT", lambda h, p: ONE, "1", _CATALAN, "Catalan numbers",
          status="classical"),
        E("bt-exp", "BT", lambda h, p: _r(1, h * 2 ** (h - 1)), "1/(h*2^(h-1))", "exp(x)",
          "weights guessed from the expansion of exp(x)"),
        E("bt-postnikov", "BT", lambda h, p: 1 + _r(1, h), "1 + 1/h",
          "sum((k+1)^(k-1)*(2*x)^k/factorial(k), k=0..infinity)", "Postnikov's formula"),
        E("bt-postnikov-z", "BT", _postnikov_z, "(z+h)^(h-1)/(h*(2z+h-1)^(h-2))",
          "sum(z*(z+k)^(k-1)*(2*x)^k/factorial(k), k=0..infinity)",
          "one-parameter Postnikov formula", params=("z",)),
        E("bt-binomial-z", "BT", _binomial_z,
          "prod_(i=1)^(h-1) (z+i) / (2h prod_(i=1)^(h-2) (2z+i))", "(1-x)^(-z)",
          "binomial series; z = 2 gives 6/(h(h+2))", params=("z",)),
        E("bt-catalan-power-z", "BT", _catalan_power_z,
          "prod_(i=1)^(h-1) (z+2h-i) / (2h prod_(i=1)^(h-2) (2z+2h-2-i))",
          f"({_CATALAN})^z", "powers of the Catalan series; z = 2 gives (h+3)/(2h)",
          params=("z",)),
        E("bt-unified-za", "BT", _unified_za,
          "prod_(i=1)^(h-1) (za+z+(2h-i)a+i) / (2h prod_(i=1)^(h-2) (2za+2z+(2h-2-i)a+i))",
          "sum(z*(a+1)/factorial(k)*product(z*a+z+(2*k-i)*a+i, i=1..k-1)*x^k, k=0..infinity)",
          "two-parameter family containing the binomial and Postnikov formulas",
          params=("z", "a")),
        E("bt-tan-sec", "BT", lambda h, p: ONE if h == 1 else _r(1, 2 * h),
          "1 if h = 1, else 1/(2h)", "tan(x)+sec(x)", "alternating permutations"),
        E("bt-tan-sec-z", "BT",
          lambda h, p: p["z"] if h == 1 else (1 / (2 * h * p["z"]) if h % 2 == 0
                                               else p["z"] / (h * (1 + p["z"] ** 2))),
          "z if h = 1; 1/(2hz) if h even; z/(h(1+z^2)) if h >= 3 odd", "z*tan(x)+sec(x)",
          "alternating permutations, z marking odd size", params=("z",)),
        E("bt-even-sign", "BT", lambda h, p: -_r(1, h) if h % 2 == 0 else ONE,
          "1 if h odd, -1/h if h even", "(1+x)/(1+x^2)", "periodic coefficients, period 4"),
        E("bt-period-three", "BT", _bt_period_three,
          "1/k at h = 3k-2, 0 at h = 3k-1, -1/k at h = 3k", "(1+x)/(1+x^3)",
          "periodic coefficients, period 6"),
        E("bt-leaves-doubled", "BT", lambda h, p: ONE if h == 1 else RatFun(2),
          "1 if h = 1, else 2", "(1-sqrt(1-8*x*(1-x)))/(4*x)",
          "internal vertices count twice"),
        E("bt-leaves-z", "BT", lambda h, p: p["z"] if h == 1 else ONE, "z if h = 1, else 1",
          "(1-sqrt(1-4*x*(1+(z-1)*x)))/(2*x)", "Prodinger's leaf count", params=("z",)),
        # complete binary trees
        E("cbt-inverse-hook", "CBT", lambda h, p: _r(1, h), "1/h", "tan(x)+sec(x)",
          "complete binary trees and alternating permutations"),
        E("cbt-tan-sec-z", "CBT", lambda h, p: p["z"] if h == 1 else 1 / (h * p["z"]),
          "z if h = 1, else 1/(zh)", "z*tan(x)+sec(x)", "z marks leaves",
          params=("z",)),
        E("cbt-exp", "CBT", lambda h, p: ONE if h == 1 else _r(4, h * 2 ** h),
          "1 if h = 1, else 1/(h*2^(h-2))", "exp(x)", "exponential series"),
        E("cbt-geometric", "CBT", lambda h, p: ONE if h == 1 else _r(1, h // 2),
          "1 if h = 1, 1/k at h = 2k and h = 2k+1", "1/(1-x)", "geometric series"),
        E("cbt-count", "CBT", lambda h, p: ONE, "1", f"{_CBT_COUNT}*(1+x)",
          "counting complete binary trees", status="classical"),
        E("cbt-count-z", "CBT", lambda h, p: p["z"] if h == 1 else 1 / p["z"],
          "z if h = 1, else 1/z", f"{_CBT_COUNT}*(1+z*x)", "z marks leaves",
          params=("z",)),
        E("cbt-sign", "CBT", lambda h, p: ONE if h == 1 else _r(-1, h // 2),
          "1 if h = 1, -1/k at h = 2k and h = 2k+1", "(1+x)/(1+x^2)",
          "periodic coefficients, period 4"),
        E("cbt-period-three", "CBT", _cbt_period_three,
          "1 if h = 1; 0 at 3k-1; -1/k at 6k-3, 6k; 1/k at 6k-2, 6k+1", "(1+x)/(1+x^3)",
          "periodic coefficients, period 6"),
        # Fibonacci trees
        E("ft-fibonacci", "FT", lambda h, p: ONE, "1", "1/(1-x-x^2)", "Fibonacci numbers",
          status="classical"),
        E("ft-exp", "FT", lambda h, p: _r(1, h * h), "1/h^2", "exp(x)", "exponential series"),
        E("ft-involutions", "FT", lambda h, p: _r(1, h), "1/h", "exp(x+x^2/2)",
          "involutions"),
        E("ft-geometric", "FT", lambda h, p: ONE if h == 1 else _r(1, 2),
          "1 if h = 1, else 1/2", "1/(1-x)", "geometric series"),
        E("ft-binomial-z", "FT",
          lambda h, p: (h + p["z"] - 1) * (h + p["z"] - 2) / (h * (h * p["z"] + h - 2)),
          "(h+z-1)(h+z-2)/(h(hz+h-2))", "(1-x)^(-z)", "binomial series",
          params=("z",)),
        E("ft-catalan", "FT",
          lambda h, p: ONE if h == 1 else _r(4 * (2 * h - 1) * (2 * h - 3), (h + 1) * (5 * h - 6)),
          "1 if h = 1, else 4(2h-1)(2h-3)/((h+1)(5h-6))", _CATALAN, "Catalan numbers"),
        E("ft-catalan-power-z", "FT",
          lambda h, p: ((p["z"] + 2 * h - 4) * (p["z"] + 2 * h - 3) * (p["z"] + 2 * h - 2)
                        * (p["z"] + 2 * h - 1)
                        / (h * (p["z"] + h - 2) * (p["z"] + h) * (h * p["z"] + 4 * h - 6))),
          "(z+2h-4)(z+2h-3)(z+2h-2)(z+2h-1)/(h(z+h-2)(z+h)(hz+4h-6))", f"({_CATALAN})^z",
          "powers of the Catalan series", params=("z",)),
        E("ft-catalan-even-z", "FT", _ft_catalan_even,
          "z if h = 1; (2k-1)/((k+1)z) at h = 2k; 2(2k-1)z/((k+1)z^2+2(2k-1)) at h = 2k+1",
          f"{_CBT_COUNT}*(1+z*x)", "Catalan numbers at even indices", params=("z",)),
        E("ft-period-three", "FT", lambda h, p: [-ONE, ONE, ZERO][h % 3],
          "1, 0, -1 for h = 1, 2, 0 mod 3", "(1+x)/(1+x^3)", "periodic coefficients"),
        E("ft-leaves-z", "FT", lambda h, p: p["z"] if h == 1 else ONE, "z if h = 1, else 1",
          "(1+(z-1)*x)/(1-x-z*x^2)", "z marks the vertices of hook length 1",
          params=("z",)),
    ]


_CATALOG: list[FormulaEntry] | None = None


def builtin_catalog() -> list[FormulaEntry]:
    global _CATALOG
    if _CATALOG is None:
        register_variables(["z", "y", "a", "beta", "t"])
        _CATALOG = _entries()
    return list(_CATALOG)


def get_entry(entry_id: str) -> FormulaEntry:
    for e in builtin_catalog():
        if e.id == entry_id:
            return e
    raise KeyError(f"no catalog entry {entry_id!r}")


# -- verification ---------------------------------------------------------


@dataclass
class InstanceResult:
    bindings: dict
    passed: bool
    mismatch_index: int | None = None
    weight_side: str | None = None
    closed_form: str | None = None


@dataclass
class VerifyReport:
    id: str
    kind: str
    status: str
    N: int
    instances: list = field(default_factory=list)
    error: str | None = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.error is None and all(i.passed for i in self.instances)

    @property
    def first_mismatch(self) -> InstanceResult | None:
        for i in self.instances:
            if not i.passed:
                return i
        return None

    @property
    def counts_as_failure(self) -> bool:
        return not self.passed and self.status != "conjecture"

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        text = f"{tag}  {self.id:<30} {self.kind:<3} N={self.N:<3} {self.seconds:6.2f}s"
        if self.status == "conjecture":
            text += "  numerically verified only, conjecture" if self.passed else "  conjecture"
        if self.error:
            text += f"  error: {self.error}"
        bad = self.first_mismatch
        if bad is not None:
            where = ", ".join(f"{k}={v}" for k, v in bad.bindings.items())
            text += f"  first mismatch at x^{bad.mismatch_index}"
            if where:
                text += f" ({where})"
        return text

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "status": self.status,
            "N": self.N,
            "passed": self.passed,
            "error": self.error,
            "seconds": round(self.seconds, 3),
            "instances": [
                {
                    "bindings": i.bindings,
                    "passed": i.passed,
                    "mismatch_index": i.mismatch_index,
                    "weight_side": i.weight_side,
                    "closed_form": i.closed_form,
                }
                for i in self.instances
            ],
        }


def first_mismatch(a: TruncSeries, b: TruncSeries) -> int | None:
    for i, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return i
    return None


def verify_entry(e: FormulaEntry, N: int | None = None) -> VerifyReport:
    """Compare ``hookgen(weights)`` with the closed form to order ``N``."""
    N = e.order(N)
    report = VerifyReport(e.id, e.kind, e.status, N)
    start = time.perf_counter()
    try:
        gf = parse(e.gf)
        for inst in e.instances:
            weights = e.weights(N, inst)
            lhs = hookgen(e.kind, weights, N)
            rhs = eval_series(gf, N, params=list(e.params) + list(inst), bindings=inst)
            idx = first_mismatch(lhs, rhs)
            if idx is None:
                report.instances.append(InstanceResult(dict(inst), True))
            else:
                report.instances.append(InstanceResult(dict(inst), False, idx,
                                                       str(lhs[idx]), str(rhs[idx])))
    except HookError as err:
        report.error = f"{e.id}: {err}"
    report.seconds = time.perf_counter() - start
    return report


def _verify_by_id(args) -> VerifyReport:
    entry_id, N = args
    return verify_entry(get_entry(entry_id), N)


@dataclass
class VerifySummary:
    reports: list

    @property
    def ok(self) -> bool:
        return not any(r.counts_as_failure for r in self.reports)

    def counts(self) -> dict:
        out: dict = {}
        for r in self.reports:
            c = out.setdefault(r.kind, {"pass": 0, "fail": 0, "conjecture": 0})
            if r.status == "conjecture":
                c["conjecture"] += 1
            c["pass" if r.passed else "fail"] += 1
        return out

    def to_json(self) -> dict:
        return {"ok": self.ok, "counts": self.counts(),
                "reports": [r.to_json() for r in self.reports]}


def verify_all(N: int | None = None, jobs: int = 1,
               entries: Sequence[FormulaEntry] | None = None) -> VerifySummary:
    """Verify every entry; with ``jobs > 1`` builtin entries run in worker processes."""
    if entries is None:
        entries = builtin_catalog()
        builtin = True
    else:
        builtin = False
    if jobs > 1 and builtin:
        # heaviest first so the pool stays busy
        ids = sorted((e.id for e in entries), key=lambda i: (get_entry(i).kind != "PA", i))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_by_id, [(i, N) for i in ids]))
    else:
        reports = [verify_entry(e, N) for e in entries]
    reports.sort(key=lambda r: r.id)
    return VerifySummary(reports)


def corrupted(e: FormulaEntry, at: int, value=7) -> FormulaEntry:
    """Copy of ``e`` whose weight at hook length ``at`` is replaced (a negative control)."""
    base = e.weight

    def weight(h, p):
        return RatFun.coerce(value) if h == at else base(h, p)

    return replace(e, id=e.id + "-corrupted", weight=weight)


# -- cross-entry identities -------------------------------------------------


@dataclass
class CrossCheck:
    name: str
    passed: bool
    detail: str = ""


def _same(name, a: TruncSeries, b: TruncSeries) -> CrossCheck:
    idx = first_mismatch(a, b)
    if idx is None:
        return CrossCheck(name, True)
    return CrossCheck(name, False, f"first mismatch at x^{idx}: {a[idx]} vs {b[idx]}")


def cross_identities(N: int = 15) -> list[CrossCheck]:
    """Specializations linking entries, each an exact series equality to order ``N``."""
    unified = get_entry("pa-unified-yz")
    beta = var("beta")
    checks = []

    def pa(entry, bindings):
        return hookgen("PA", entry.weights(N, bindings), N)

    def gf(entry, bindings):
        return eval_series(entry.gf, N, bindings=bindings)

    no = get_entry("pa-nekrasov-okounkov")
    lhs = pa(unified, {"t": 1, "y": ONE, "z": beta})
    checks.append(_same("unified y,z at t=1, y=1, z=beta gives Nekrasov-Okounkov",
                        lhs, gf(no, {})))
    checks.append(_same("unified y,z at t=1, y=1, z=beta: same weights side",
                        lhs, pa(no, {})))
    cores = get_entry("pa-t-cores")
    for t in (2, 3, 4):
        lhs = pa(unified, {"t": t, "y": ONE, "z": RatFun(t)})
        checks.append(_same(f"unified y,z at y=1, z=t={t} gives the t-core series",
                            lhs, gf(cores, {"t": t})))
        checks.append(_same(f"unified y,z at y=1, z=t={t}: t-core weights agree",
                            lhs, pa(cores, {"t": t})))
    lhs = pa(unified, {"t": 2, "y": ONE, "z": ONE})
    checks.append(_same("unified y,z at t=2, y=z=1 gives prod (1+x^k)",
                        lhs, gf(get_entry("pa-even-hooks"), {})))
    lhs = pa(unified, {"t": 1, "y": ONE, "z": RatFun(2)})
    checks.append(_same("unified y,z at t=1, y=1, z=2 gives prod (1-x^k)",
                        lhs, gf(get_entry("pa-two-over-h-squared"), {})))
    lhs = pa(no, {"beta": RatFun(2)})
    checks.append(_same("Nekrasov-Okounkov at beta=2 gives prod (1-x^k)",
                        lhs, pa(get_entry("pa-two-over-h-squared"), {})))
    return checks


def tree_cross_identities(N: int = 15) -> list[CrossCheck]:
    za = get_entry("bt-unified-za")
    checks = []
    for a, other in ((1, "bt-postnikov-z"), (0, "bt-binomial-z")):
        o = get_entry(other)
        b = {"a": RatFun(a)}
        lhs = hookgen("BT", za.weights(N, b), N)
        checks.append(_same(f"two-parameter family at a={a}: weights match {other}",
                            lhs, hookgen("BT", o.weights(N, {}), N)))
        checks.append(_same(f"two-parameter family at a={a}: closed form matches {other}",
                            eval_series(za.gf, N, bindings=b), eval_series(o.gf, N)))
    return checks


def leaf_counts(n_max: int = 10) -> dict[tuple[int, int], int]:
    """``A(n, j)``: binary trees with ``n`` vertices and ``j`` leaves (closed formula)."""
    out = {}
    for n in range(1, n_max + 1):
        for j in range(1, (n + 1) // 2 + 1):
            out[(n, j)] = (2 ** (n + 1 - 2 * j) * factorial(n - 1)
                           // (factorial(j) * factorial(j - 1) * factorial(n + 1 - 2 * j)))
    return out


def export_catalog() -> list[dict]:
    return [e.to_json() for e in builtin_catalog()]
