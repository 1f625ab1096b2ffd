"""Closed forms for numeric weight sequences.

Level 0 fits ``P(n)/Q(n)`` of minimal total degree; level 1 fits the ratio of
consecutive terms and reads the sequence as ``v0 * prod R(k)``.  Part of the
data is always held back and must be matched by the candidate.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, factorial, lcm
from typing import Sequence

import flint

from .algebra import RatFun, var

INDEX = "n"


@dataclass(frozen=True)
class ClosedForm:
    """A guessed term.

    Level 0: ``term(n) = ratfun(n)``.  Level 1:
    ``term(n) = base_value * prod_(k=base_index)^(n-1) ratfun(k)``.
    ``exceptions`` holds leading values the formula does not cover; the
    formula applies from ``valid_from = base_index + len(exceptions)`` on.
    """

    level: int
    ratfun: RatFun
    base_index: int
    base_value: Fraction | None = None
    fit_points: int = 0
    held_out: int = 0
    exceptions: tuple = ()

    @property
    def valid_from(self) -> int:
        return self.base_index + len(self.exceptions)

    def evaluate(self, n: int) -> Fraction:
        if self.base_index <= n < self.valid_from:
            return self.exceptions[n - self.base_index]
        if self.level == 0:
            return _at(self.ratfun, n)
        if n < self.base_index:
            raise ValueError(f"term defined for n >= {self.base_index}")
        acc = Fraction(self.base_value)
        for k in range(self.base_index, n):
            acc *= _at(self.ratfun, k)
        return acc

    def render(self) -> str:
        if self.level == 0:
            return render_rational(self.ratfun)
        return render_hypergeometric(self.ratfun, self.base_index, self.base_value)

    def describe(self) -> str:
        """``render()`` plus the range note when leading values are exceptional."""
        text = self.render()
        if self.exceptions:
            shown = ", ".join(str(v) for v in self.exceptions)
            text += f"  (for n >= {self.valid_from}; initial values {shown})"
        return text

    __str__ = render

    def to_json(self) -> dict:
        out = {
            "level": self.level,
            "ratfun": str(self.ratfun),
            "base_index": self.base_index,
            "text": self.render(),
            "fit_points": self.fit_points,
            "held_out": self.held_out,
            "valid_from": self.valid_from,
            "exceptions": [str(v) for v in self.exceptions],
        }
        if self.level == 1:
            out["base_value"] = str(self.base_value)
        return out


def _at(f: RatFun, n: int) -> Fraction:
    return f.subs({INDEX: n}).to_fraction()


def _poly_value(coeffs, n) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * n + c
    return acc


def _nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    # clear denominators row by row; the integer matrix has the same kernel
    ints = []
    for row in rows:
        m = 1
        for v in row:
            m = lcm(m, v.denominator)
        ints.append([int(v * m) for v in row])
    basis, nullity = flint.fmpz_mat(ints).nullspace()
    cols = basis.ncols()
    out = []
    for j in range(nullity):
        out.append([Fraction(int(basis[i, j])) for i in range(cols)])
    return out


def _fit(points: list[tuple[int, Fraction]], dp: int, dq: int):
    rows = []
    for n, v in points:
        rows.append([Fraction(n) ** i for i in range(dp + 1)] + [-v * Fraction(n) ** j for j in range(dq + 1)])
    for vec in _nullspace(rows):
        p, q = vec[: dp + 1], vec[dp + 1:]
        if all(c == 0 for c in q):
            continue
        yield p, q


def _matches(p, q, points) -> bool:
    for n, v in points:
        d = _poly_value(q, n)
        if d == 0 or _poly_value(p, n) != v * d:
            return False
    return True


def _to_ratfun(p, q) -> RatFun:
    n = var(INDEX)
    num = sum((RatFun(c) * n ** i for i, c in enumerate(p) if c), RatFun(0))
    den = sum((RatFun(c) * n ** i for i, c in enumerate(q) if c), RatFun(0))
    return num / den


def _coerce_values(values) -> list[Fraction]:
    out = []
    for v in values:
        if isinstance(v, RatFun):
            if not v.is_constant():
                raise ValueError("guessing needs numeric values, got a parametric one")
            v = v.to_fraction()
        out.append(Fraction(v))
    return out


def holdout_size(count: int) -> int:
    return max(2, ceil(count / 4))


def _sweep(points):
    hold = holdout_size(len(points))
    fit = points[: len(points) - hold]
    d_max = min(len(points) - 3, len(fit) - 1)
    for d in range(d_max + 1):
        for dp in range(d + 1):
            for p, q in _fit(fit, dp, d - dp):
                if _matches(p, q, points):
                    return _to_ratfun(p, q), len(fit), hold
    return None


def guess_rational(values: Sequence, n0: int = 1, max_exceptions: int = 2) -> ClosedForm | None:
    """Minimal-degree ``P(n)/Q(n)`` through ``(n0 + i, values[i])``, or ``None``.

    When no candidate covers every value, up to ``max_exceptions`` leading
    values are set aside (weights often differ at ``n = 1``), provided at
    least 4 points remain.  Fewer exceptions always win over lower degree.
    """
    vals = _coerce_values(values)
    if len(vals) < 4:
        raise ValueError("guess_rational needs at least 4 values")
    points = [(n0 + i, v) for i, v in enumerate(vals)]
    for skip in range(max_exceptions + 1):
        if len(points) - skip < 4:
            break
        found = _sweep(points[skip:])
        if found is not None:
            f, fit, hold = found
            return ClosedForm(0, f, n0, None, fit, hold, tuple(vals[:skip]))
    return None


def guess_hypergeometric(values: Sequence, n0: int = 1) -> ClosedForm | None:
    """Guess ``v0 * prod_(k=n0)^(n-1) R(k)`` with ``R`` rational, or ``None``."""
    vals = _coerce_values(values)
    if len(vals) < 5:
        raise ValueError("guess_hypergeometric needs at least 5 values")
    if any(v == 0 for v in vals):
        raise ValueError("guess_hypergeometric needs nonzero values")
    ratios = [b / a for a, b in zip(vals, vals[1:])]
    inner = guess_rational(ratios, n0, max_exceptions=0)
    if inner is None:
        return None
    form = ClosedForm(1, inner.ratfun, n0, vals[0], inner.fit_points + 1, inner.held_out)
    if any(form.evaluate(n0 + i) != v for i, v in enumerate(vals)):
        return None
    return form


# -- rendering ------------------------------------------------------------


def _univariate(f: RatFun) -> tuple[flint.fmpz_poly, flint.fmpz_poly]:
    ni, di = f.integer_parts()
    idx = f.names.index(INDEX) if INDEX in f.names else None

    def build(terms):
        deg = max((m[idx] if idx is not None else 0) for m, _ in terms)
        cs = [0] * (deg + 1)
        for m, c in terms:
            cs[m[idx] if idx is not None else 0] += c
        return flint.fmpz_poly(cs)

    if f.is_zero():
        return flint.fmpz_poly([0]), flint.fmpz_poly([1])
    return build(ni), build(di)


def _render_poly(p: flint.fmpz_poly) -> str:
    cs = [int(c) for c in p.coeffs()]
    out = []
    for i in range(len(cs) - 1, -1, -1):
        c = cs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (INDEX if i == 1 else f"{INDEX}^{i}")
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
        sign = "-" if c < 0 else "+"
        out.append((sign if out or c < 0 else "") + body)
    return "".join(out) or "0"


def _factor_key(poly: flint.fmpz_poly):
    cs = [int(c) for c in poly.coeffs()]
    return (poly.degree(), cs[-1], abs(cs[0]), cs[0])


def _factor(p: flint.fmpz_poly) -> tuple[Fraction, list]:
    """Content (with sign) and primitive factors with positive leading coefficients."""
    content, factors = p.factor()
    c = Fraction(int(content))
    out = []
    for g, e in factors:
        if int(g.coeffs()[-1]) < 0:
            g = -g
            if e % 2:
                c = -c
        out.append((g, int(e)))
    return c, sorted(out, key=lambda t: _factor_key(t[0]))


def _product_text(factors: list[str]) -> str:
    return "*".join(factors)


def _paren(poly: flint.fmpz_poly) -> str:
    text = _render_poly(poly)
    cs = [int(c) for c in poly.coeffs()]
    single = sum(1 for c in cs if c) == 1
    return text if single and cs[-1] == 1 else f"({text})"


def _assemble(const: Fraction, num: list[str], den: list[str]) -> str:
    top = list(num)
    if const.numerator != 1 or not top:
        if const.numerator == -1 and top:
            top[0] = "-" + top[0]
        else:
            top.insert(0, str(const.numerator))
    bottom = list(den)
    if const.denominator != 1:
        bottom.insert(0, str(const.denominator))
    text = _product_text(top)
    if not bottom:
        return text
    b = _product_text(bottom)
    if len(bottom) > 1:
        b = f"({b})"
    return f"{text}/{b}"


def _power(base: str, e: int) -> str:
    return base if e == 1 else f"{base}^{e}"


def render_rational(f: RatFun) -> str:
    """Factored text such as ``6/(n*(n+2))``."""
    p, q = _univariate(f)
    cp, fp = _factor(p)
    cq, fq = _factor(q)
    const = cp / cq
    num = [_power(_paren(g), e) for g, e in fp]
    den = [_power(_paren(g), e) for g, e in fq]
    if len(num) == 1 and not den and const == 1:
        return _render_poly(fp[0][0]) if fp[0][1] == 1 else num[0]
    return _assemble(const, num, den)


def _shift_text(n0: int, sign: int) -> str:
    # exponent n - n0 (sign=1) or n0 - n (sign=-1)
    if sign > 0:
        if n0 == 0:
            return INDEX
        return f"({INDEX}-{n0})" if n0 > 0 else f"({INDEX}+{-n0})"
    if n0 == 0:
        return f"(-{INDEX})"
    return f"({n0}-{INDEX})"


def _factorial_text(m: int) -> str:
    # (n + m)!
    if m == 0:
        return f"{INDEX}!"
    return f"({INDEX}+{m})!" if m > 0 else f"({INDEX}{m})!"


def render_hypergeometric(R: RatFun, n0: int, v0: Fraction) -> str:
    """Text for ``v0 * prod_(k=n0)^(n-1) R(k)``, telescoped where possible."""
    p, q = _univariate(R)
    cp, fp = _factor(p)
    cq, fq = _factor(q)
    c = cp / cq
    shifts: dict[Fraction, int] = defaultdict(int)
    for g, e in fp:
        if g.degree() != 1:
            return _generic(R, n0, v0)
        a, b = (int(x) for x in g.coeffs())
        c *= Fraction(b) ** e
        shifts[Fraction(a, b)] += e
    for g, e in fq:
        if g.degree() != 1:
            return _generic(R, n0, v0)
        a, b = (int(x) for x in g.coeffs())
        c /= Fraction(b) ** e
        shifts[Fraction(a, b)] -= e
    # group shifts by residue mod 1
    classes: dict[Fraction, dict[int, int]] = defaultdict(dict)
    for a, e in shifts.items():
        if e:
            alpha = a - (a.numerator // a.denominator)
            classes[alpha][int(a - alpha)] = e
    K = Fraction(v0)
    num_poly = flint.fmpz_poly([1])
    den_poly = flint.fmpz_poly([1])
    facts: list[tuple[int, int]] = []
    for alpha, members in classes.items():
        total = sum(members.values())
        m0 = min(members)
        if total and alpha != 0:
            return _generic(R, n0, v0)
        # prod_k (k+alpha+m)^e = [Gamma(n+alpha+m)/Gamma(n0+alpha+m)]^e, and
        # Gamma(n+alpha+m) = Gamma(n+alpha+m0) * prod_(j=m0)^(m-1) (n+alpha+j)
        for m, e in members.items():
            for j in range(m0, m):
                lin = flint.fmpz_poly([(alpha + j).numerator, (alpha + j).denominator])
                at_n0 = Fraction(n0) + alpha + j
                scale = Fraction((alpha + j).denominator)
                # (n + alpha + j) = lin / denominator
                if e > 0:
                    num_poly *= lin ** e
                    K *= (1 / scale) ** e / at_n0 ** e
                else:
                    den_poly *= lin ** (-e)
                    K *= scale ** (-e) * at_n0 ** (-e)
        if total:
            if n0 + m0 < 1:
                return _generic(R, n0, v0)
            facts.append((m0 - 1, total))
            K /= Fraction(factorial(n0 + m0 - 1)) ** total
    cp2, fp2 = _factor(num_poly)
    cq2, fq2 = _factor(den_poly)
    K *= cp2 / cq2
    num = [_power(_paren(g), e) for g, e in fp2 if g.degree() > 0]
    den = [_power(_paren(g), e) for g, e in fq2 if g.degree() > 0]
    for m, e in facts:
        text = _factorial_text(m)
        (num if e > 0 else den).append(_power(text, abs(e)))
    if c != 1:
        # absorb a constant that is a power of c into the exponent
        offset = n0
        j = _log_exact(K, c)
        if j is not None:
            K, offset = Fraction(1), n0 - j
        num.insert(0, _geometric(c, offset))
    return _assemble(K, num, den)


def _log_exact(K: Fraction, c: Fraction, limit: int = 64) -> int | None:
    # integer j with c^j == K, if any small one exists
    if K == 1:
        return 0
    for j in range(1, limit + 1):
        if c ** j == K:
            return j
        if c ** -j == K:
            return -j
    return None


def _geometric(c: Fraction, n0: int) -> str:
    if c.numerator == 1 and c.denominator > 1:
        return f"{c.denominator}^{_shift_text(n0, -1)}"
    base = str(c.numerator) if c.denominator == 1 else f"({c})"
    if c.numerator < 0:
        base = f"({c})"
    return f"{base}^{_shift_text(n0, 1)}"


def _generic(R: RatFun, n0: int, v0: Fraction) -> str:
    body = str(R.subs({INDEX: var("k")}))
    prod = f"product({body}, k={n0}..{INDEX}-1)"
    return prod if v0 == 1 else f"{v0}*{prod}"
