"""Exact coefficient field: rational functions in named parameters over Q.

Polynomials are python-flint ``fmpq_mpoly`` objects in graded-lex order.
A :class:`RatFun` keeps a numerator and a monic denominator with no common
factor, over the smallest set of variables that actually occur.  Variables
are ordered by a process-wide registry that only ever grows, so printing is
stable within a run.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

import flint

from .errors import PoleError

Rational = Fraction

_registry: dict[str, int] = {}
_registry_lock = threading.Lock()


def register_variables(names: Iterable[str]) -> None:
    """Append names to the global variable order (no-op for known names)."""
    with _registry_lock:
        for name in names:
            if name not in _registry:
                _registry[name] = len(_registry)


def _order_key(name: str) -> int:
    idx = _registry.get(name)
    if idx is None:
        register_variables([name])
        idx = _registry[name]
    return idx


@lru_cache(maxsize=None)
def _ctx(names: tuple[str, ...]):
    return flint.fmpq_mpoly_ctx.get(names, "deglex")


def _as_fmpq(value) -> flint.fmpq:
    if isinstance(value, flint.fmpq):
        return value
    if isinstance(value, int):
        return flint.fmpq(value)
    if isinstance(value, Fraction):
        return flint.fmpq(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def _to_fraction(q: flint.fmpq) -> Fraction:
    return Fraction(int(q.p), int(q.q))


def _merge_names(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    if a == b or not b:
        return a
    if not a:
        return b
    return tuple(sorted(set(a) | set(b), key=_order_key))


class RatFun:
    """Element of Q(p1, ..., pk) in canonical form.

    Instances are immutable.  Arithmetic accepts ``int``, ``Fraction`` and
    other ``RatFun`` operands.
    """

    __slots__ = ("names", "num", "den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, RatFun):
            self.names, self.num, self.den = value.names, value.num, value.den
        else:
            ctx = _ctx(())
            self.names = ()
            self.num = ctx.constant(_as_fmpq(value))
            self.den = ctx.constant(1)
        self._hash = None

    @classmethod
    def _raw(cls, names, num, den) -> "RatFun":
        obj = object.__new__(cls)
        obj.names = names
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _normalized(cls, names, num, den) -> "RatFun":
        if den.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        if num.is_zero():
            return ZERO
        if not den.is_constant():
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
        lc = den.leading_coefficient()
        if lc != 1:
            num = num / lc
            den = den / lc
        if names:
            unused = set(num.unused_gens()) & set(den.unused_gens())
            if unused:
                keep = tuple(n for n in names if n not in unused)
                ctx = _ctx(keep)
                num = num.project_to_context(ctx)
                den = den.project_to_context(ctx)
                names = keep
        return cls._raw(names, num, den)

    # -- construction helpers -------------------------------------------

    @classmethod
    def variable(cls, name: str) -> "RatFun":
        register_variables([name])
        ctx = _ctx((name,))
        return cls._raw((name,), ctx.gen(0), ctx.constant(1))

    @classmethod
    def coerce(cls, value) -> "RatFun":
        if isinstance(value, RatFun):
            return value
        return cls(value)

    def _lift(self, names: tuple[str, ...]):
        if self.names == names:
            return self.num, self.den
        ctx = _ctx(names)
        return self.num.project_to_context(ctx), self.den.project_to_context(ctx)

    # -- predicates and conversions -------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return not self.names and self.num.is_one()

    def is_constant(self) -> bool:
        return not self.names

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    @property
    def variables(self) -> tuple[str, ...]:
        return self.names

    def to_fraction(self) -> Fraction:
        if self.names:
            raise ValueError(f"{self} is not a constant")
        return _to_fraction(self.num.leading_coefficient()) if not self.num.is_zero() else Fraction(0)

    def is_integer(self) -> bool:
        return not self.names and self.to_fraction().denominator == 1

    def __int__(self) -> int:
        q = self.to_fraction()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            other = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        names = _merge_names(self.names, other.names)
        an, ad = self._lift(names)
        bn, bd = other._lift(names)
        if ad.is_one() and bd.is_one():
            return RatFun._normalized(names, an + bn, ad)
        if ad == bd:
            return RatFun._normalized(names, an + bn, ad)
        return RatFun._normalized(names, an * bd + bn * ad, ad * bd)

    __radd__ = __add__

    def __neg__(self):
        return RatFun._raw(self.names, -self.num, self.den)

    def __sub__(self, other):
        try:
            other = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return RatFun.coerce(other) - self

    def __mul__(self, other):
        try:
            other = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if other.is_one():
            return self
        if self.is_one():
            return other
        names = _merge_names(self.names, other.names)
        an, ad = self._lift(names)
        bn, bd = other._lift(names)
        if ad.is_one() and bd.is_one():
            return RatFun._normalized(names, an * bn, ad)
        return RatFun._normalized(names, an * bn, ad * bd)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = RatFun.coerce(other)
        except TypeError:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFun.coerce(other) / self

    def inverse(self) -> "RatFun":
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun._normalized(self.names, self.den, self.num)

    def __pow__(self, exponent):
        if isinstance(exponent, RatFun):
            exponent = int(exponent)
        if not isinstance(exponent, int):
            raise TypeError("RatFun powers must be integers")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if exponent == 0:
            return ONE
        return RatFun._raw(self.names, self.num ** exponent, self.den ** exponent)

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            try:
                other = RatFun.coerce(other)
            except TypeError:
                return NotImplemented
        if self.names != other.names:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, tuple(self.num.to_dict().items()),
                               tuple(self.den.to_dict().items())))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    # -- substitution -----------------------------------------------------

    def subs(self, bindings: Mapping[str, object]) -> "RatFun":
        """Replace parameters by rationals (or other RatFun values)."""
        return ratfun_subst(self, bindings)

    # -- rendering --------------------------------------------------------

    def integer_parts(self) -> tuple[list, list]:
        """Numerator and denominator as integer term lists ``[(exps, coeff)]``.

        The common content is removed and the denominator's leading
        coefficient is positive, so the pair is unique.
        """
        nt = list(self.num.terms())
        dt = list(self.den.terms())
        scale = 1
        for _, c in nt + dt:
            scale = lcm(scale, int(c.q))
        ni = [(m, int(c.p) * (scale // int(c.q))) for m, c in nt]
        di = [(m, int(c.p) * (scale // int(c.q))) for m, c in dt]
        g = 0
        for _, c in ni + di:
            g = gcd(g, c)
        if g > 1:
            ni = [(m, c // g) for m, c in ni]
            di = [(m, c // g) for m, c in di]
        return ni, di

    def __str__(self):
        if self.num.is_zero():
            return "0"
        ni, di = self.integer_parts()
        num = _render_terms(self.names, ni)
        if len(di) == 1 and di[0][1] == 1 and not any(di[0][0]):
            return num
        den = _render_terms(self.names, di)
        if len(ni) > 1:
            num = f"({num})"
        if len(di) > 1 or not _is_atom(di):
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RatFun({str(self)!r})"


def _is_atom(terms) -> bool:
    # a single factor needing no parentheses after '/': an integer or a bare power
    (mono, c), = terms
    nonzero = [e for e in mono if e]
    if not nonzero:
        return True
    return c == 1 and len(nonzero) == 1


def _render_monomial(names, mono) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _render_terms(names, terms) -> str:
    out = []
    for i, (mono, c) in enumerate(terms):
        m = _render_monomial(names, mono)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not m:
            body = str(a)
        elif a == 1:
            body = m
        else:
            body = f"{a}*{m}"
        if i == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(sign + body)
    return "".join(out)


ZERO = RatFun(0)
ONE = RatFun(1)


def var(name: str) -> RatFun:
    """The rational function consisting of the single parameter ``name``."""
    return RatFun.variable(name)


def ratfun_subst(f: RatFun, bindings: Mapping[str, object]) -> RatFun:
    """Substitute parameters of ``f``.

    Values may be ints, Fractions or RatFun; names not occurring in ``f`` are
    ignored.  Raises :class:`PoleError` if the denominator vanishes.
    """
    f = RatFun.coerce(f)
    active = {k: v for k, v in bindings.items() if k in f.names}
    if not active:
        return f
    if all(not isinstance(v, RatFun) or v.is_constant() for v in active.values()):
        vals = {k: _as_fmpq(v.to_fraction() if isinstance(v, RatFun) else v)
                for k, v in active.items()}
        num = f.num.subs(vals)
        den = f.den.subs(vals)
        if den.is_zero():
            raise PoleError(sorted(active, key=_order_key))
        return RatFun._normalized(f.names, num, den)
    # general case: rebuild by Horner-free evaluation over the term lists
    values = {name: (RatFun.coerce(active[name]) if name in active else var(name))
              for name in f.names}
    num = _eval_poly(f.names, f.num, values)
    den = _eval_poly(f.names, f.den, values)
    if den.is_zero():
        raise PoleError(sorted(active, key=_order_key))
    return num / den


def _eval_poly(names, poly, values) -> RatFun:
    total = ZERO
    for mono, c in poly.terms():
        term = RatFun(_to_fraction(c))
        for name, e in zip(names, mono):
            if e:
                term = term * values[name] ** int(e)
        total = total + term
    return total


def fresh_parameter(hint: str, taken: Iterable[str] = ()) -> str:
    """A parameter name based on ``hint`` that does not collide with ``taken``."""
    taken = set(taken)
    name = hint
    i = 1
    while name in taken:
        name = f"{hint}_{i}"
        i += 1
    register_variables([name])
    return name


def sum_of_power_products(bases: Sequence[RatFun],
                          rows: Iterable[Sequence[tuple[int, int]]]) -> RatFun:
    """Compute ``sum_rows prod_(i, m) bases[i]**m`` with a single normalisation.

    Every product is brought over the common denominator
    ``prod_i den_i**M_i`` (``M_i`` the largest multiplicity of base ``i``), so
    the loop runs on polynomials only.
    """
    rows = [tuple(r) for r in rows]
    if not rows:
        return ZERO
    bases = [RatFun.coerce(b) for b in bases]
    names: tuple[str, ...] = ()
    for b in bases:
        names = _merge_names(names, b.names)
    ctx = _ctx(names)
    lifted = [b._lift(names) for b in bases]
    top: dict[int, int] = {}
    for row in rows:
        for i, m in row:
            if m > top.get(i, 0):
                top[i] = m
    num_pows: dict[tuple[int, int], object] = {}
    den_pows: dict[tuple[int, int], object] = {}

    def npow(i, m):
        key = (i, m)
        if key not in num_pows:
            num_pows[key] = lifted[i][0] ** m
        return num_pows[key]

    def dpow(i, m):
        key = (i, m)
        if key not in den_pows:
            den_pows[key] = lifted[i][1] ** m
        return den_pows[key]

    poly_dens = {i for i in top if not lifted[i][1].is_one()}
    total = ctx.constant(0)
    for row in rows:
        term = ctx.constant(1)
        seen = set()
        for i, m in row:
            if m == 0:
                continue
            term = term * npow(i, m)
            if i in poly_dens:
                seen.add(i)
                if top[i] > m:
                    term = term * dpow(i, top[i] - m)
        for i in poly_dens - seen:
            term = term * dpow(i, top[i])
        total = total + term
    den = ctx.constant(1)
    for i in poly_dens:
        den = den * dpow(i, top[i])
    return RatFun._normalized(names, total, den)


def ratfun_arith(a, b, op: str) -> RatFun:
    """Functional form of the four field operations (``add``/``sub``/``mul``/``div``)."""
    a, b = RatFun.coerce(a), RatFun.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
