"""Truncated power series in ``x`` with :class:`RatFun` coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .algebra import ONE, ZERO, RatFun
from .errors import DomainError


class TruncSeries:
    """Coefficients of ``x^0 .. x^order``; everything beyond is unknown.

    Binary operations truncate to the smaller order of the two operands.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [RatFun.coerce(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least its constant term")
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value, order: int) -> "TruncSeries":
        return cls([value], order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff=1) -> "TruncSeries":
        cs = [ZERO] * (order + 1)
        if k <= order:
            cs[k] = RatFun.coerce(coeff)
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> RatFun:
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncSeries(self.coeffs[: order + 1])

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, ``None`` if all known ones vanish."""
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return None

    def is_constant(self) -> bool:
        return all(c.is_zero() for c in self.coeffs[1:])

    def map(self, fn) -> "TruncSeries":
        return TruncSeries([fn(c) for c in self.coeffs])

    def subs(self, bindings) -> "TruncSeries":
        return self.map(lambda c: c.subs(bindings))

    def shift_down(self, k: int) -> "TruncSeries":
        """Divide by ``x^k``; the low coefficients must vanish."""
        if any(not c.is_zero() for c in self.coeffs[:k]):
            raise DomainError(f"series is not divisible by x^{k}")
        return TruncSeries(self.coeffs[k:])

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "TruncSeries":
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            c = RatFun.coerce(other)
            return TruncSeries([c * a for a in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        sa = [i for i in range(n + 1) if not a[i].is_zero()]
        sb = [j for j in range(n + 1) if not b[j].is_zero()]
        out = [ZERO] * (n + 1)
        for i in sa:
            ai = a[i]
            for j in sb:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + ai * b[j]
        return TruncSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TruncSeries):
            c = RatFun.coerce(other)
            inv = c.inverse()
            return TruncSeries([a * inv for a in self.coeffs])
        return series_div(self, other)

    def __rtruediv__(self, other):
        return series_div(self._coerce(other), self)

    def __pow__(self, e):
        return series_pow(self, e)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- rendering --------------------------------------------------------

    def __str__(self):
        return render_series(self)

    def __repr__(self):
        return f"TruncSeries({render_series(self)!r}, order={self.order})"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def render_series(s: TruncSeries) -> str:
    parts = []
    for i, c in enumerate(s.coeffs):
        if c.is_zero():
            continue
        text = str(c)
        if i == 0:
            parts.append(text)
            continue
        mono = "x" if i == 1 else f"x^{i}"
        neg = False
        if c.is_constant():
            q = c.to_fraction()
            neg = q < 0
            a = -q if neg else q
            if a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
        elif _is_product(text):
            body = f"{text}*{mono}"
        else:
            body = f"({text})*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts) if parts else "0"


def _is_product(text: str) -> bool:
    return all(ch.isalnum() or ch in "*^_" for ch in text)


# -- operations ------------------------------------------------------------


def series_arith(a: TruncSeries, b: TruncSeries, op: str) -> TruncSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return series_div(a, b)
    raise ValueError(f"unknown operation {op!r}")


def series_div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    n = min(a.order, b.order)
    b0 = b.coeffs[0]
    if b0.is_zero():
        raise DomainError("nonunit divisor: constant term of the divisor is zero")
    inv0 = b0.inverse()
    bs = [j for j in range(1, n + 1) if not b.coeffs[j].is_zero()]
    q: list[RatFun] = []
    for k in range(n + 1):
        acc = a.coeffs[k]
        for j in bs:
            if j > k:
                break
            acc = acc - b.coeffs[j] * q[k - j]
        q.append(acc * inv0)
    return TruncSeries(q)


def series_exp(a: TruncSeries) -> TruncSeries:
    """``exp(a)`` from ``n e_n = sum_k k a_k e_(n-k)``; requires ``a(0) = 0``."""
    if not a.coeffs[0].is_zero():
        raise DomainError("exp requires a series with zero constant term")
    n = a.order
    ka = [RatFun(k) * a.coeffs[k] for k in range(n + 1)]
    support = [k for k in range(1, n + 1) if not ka[k].is_zero()]
    e = [ONE]
    for m in range(1, n + 1):
        acc = ZERO
        for k in support:
            if k > m:
                break
            acc = acc + ka[k] * e[m - k]
        e.append(acc / m)
    return TruncSeries(e)


def series_log(a: TruncSeries) -> TruncSeries:
    """``log(a)`` from ``a * l' = a'``; requires ``a(0) = 1``."""
    if a.coeffs[0] != ONE:
        raise DomainError("log requires a series with constant term 1")
    n = a.order
    support = [k for k in range(1, n + 1) if not a.coeffs[k].is_zero()]
    kl = [ZERO]  # k * l_k
    for m in range(1, n + 1):
        acc = RatFun(m) * a.coeffs[m]
        for k in support:
            if k >= m:
                break
            acc = acc - a.coeffs[k] * kl[m - k]
        kl.append(acc)
    return TruncSeries([ZERO] + [kl[m] / m for m in range(1, n + 1)])


def _as_exponent(e) -> RatFun:
    if isinstance(e, (int, Fraction)):
        return RatFun(e)
    return RatFun.coerce(e)


def series_pow(a: TruncSeries, e) -> TruncSeries:
    """``a ** e``.

    Integer exponents use repeated squaring (negative ones need an invertible
    constant term).  Any other exponent, symbolic ones included, needs
    ``a(0) = 1`` and goes through the power recurrence
    ``n p_n = sum_k ((e + 1) k - n) a_k p_(n-k)``, which equals
    ``exp(e log a)`` coefficient by coefficient.
    """
    e = _as_exponent(e)
    if e.is_integer():
        k = int(e)
        if k < 0:
            if a.coeffs[0].is_zero():
                raise DomainError("negative power of a series with zero constant term")
            return series_div(TruncSeries.constant(1, a.order), _int_pow(a, -k))
        return _int_pow(a, k)
    if a.coeffs[0] != ONE:
        raise DomainError(f"power {e} of a series requires constant term 1")
    n = a.order
    support = [k for k in range(1, n + 1) if not a.coeffs[k].is_zero()]
    e1 = e + 1
    p = [ONE]
    for m in range(1, n + 1):
        acc = ZERO
        for k in support:
            if k > m:
                break
            acc = acc + (e1 * k - m) * a.coeffs[k] * p[m - k]
        p.append(acc / m)
    return TruncSeries(p)


def _int_pow(a: TruncSeries, k: int) -> TruncSeries:
    result = TruncSeries.constant(1, a.order)
    base = a
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def series_compose(outer: TruncSeries, inner: TruncSeries) -> TruncSeries:
    """``outer(inner(x))``; requires ``inner(0) = 0``."""
    if not inner.coeffs[0].is_zero():
        raise DomainError("composition requires an inner series with zero constant term")
    n = min(outer.order, inner.order)
    if all(c.is_zero() for c in inner.coeffs[2 : n + 1]):
        # inner = c x: scale coefficients
        c = inner.coeffs[1] if n >= 1 else ZERO
        out = [outer.coeffs[0]]
        power = ONE
        for k in range(1, n + 1):
            power = power * c
            out.append(outer.coeffs[k] * power)
        return TruncSeries(out)
    inner = inner.truncate(n)
    result = TruncSeries.constant(outer.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        result = result * inner + outer.coeffs[k]
    return result


def _sin_cos(n: int) -> tuple[TruncSeries, TruncSeries]:
    s = [ZERO] * (n + 1)
    c = [ZERO] * (n + 1)
    for k in range(n + 1):
        sign = -1 if (k // 2) % 2 else 1
        val = RatFun(Fraction(sign, factorial(k)))
        if k % 2:
            s[k] = val
        else:
            c[k] = val
    return TruncSeries(s), TruncSeries(c)


def elementary_series(name: str, n: int) -> TruncSeries:
    """Taylor series at 0 of ``sin``, ``cos``, ``tan``, ``sec`` or ``exp``."""
    if n < 0:
        raise ValueError("order must be non-negative")
    if name == "exp":
        return series_exp(TruncSeries.monomial(1, n))
    sin, cos = _sin_cos(n)
    if name == "sin":
        return sin
    if name == "cos":
        return cos
    if name == "tan":
        return series_div(sin, cos)
    if name == "sec":
        return series_div(TruncSeries.constant(1, n), cos)
    raise ValueError(f"unknown elementary function {name!r}")


def finite_product(factors: Iterable[TruncSeries], order: int | None = None) -> TruncSeries:
    """Product of the given series, truncated to ``order`` (default: the minimum order)."""
    factors = list(factors)
    if order is None:
        order = min((f.order for f in factors), default=0)
    result = TruncSeries.constant(1, order)
    for f in factors:
        result = result * f.truncate(order)
    return result


def series_from(values: Sequence, order: int | None = None) -> TruncSeries:
    """Convenience constructor from a list of ints / Fractions / RatFun."""
    return TruncSeries(values, order)
