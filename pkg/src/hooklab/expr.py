"""Generating-function expressions: tokenizer, parser, renderer, evaluator.

Grammar::

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := "-" unary | power
    power    := atom ("^" exponent)?
    exponent := "-" exponent | power
    atom     := INT | IDENT | IDENT "(" args ")" | "(" expr ")"
    args     := expr ("," expr)*
              | expr "," IDENT "=" expr ".." (expr | "infinity")   (product, sum)

``**`` is accepted as a synonym for ``^``.  The series variable is ``x``;
every other free identifier is a parameter.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, isqrt
from typing import Iterable, Mapping, Sequence

from .algebra import ONE, ZERO, RatFun, register_variables, var
from .errors import DomainError, ParseError
from .series import (
    TruncSeries,
    elementary_series,
    series_compose,
    series_div,
    series_exp,
    series_log,
    series_pow,
)

SERIES_VAR = "x"
INFINITY = "infinity"
MAX_VALUATION_PROBE = 64
FUNCTIONS = {
    "exp": 1, "log": 1, "sqrt": 1, "sin": 1, "cos": 1, "tan": 1, "sec": 1,
    "factorial": 1, "binomial": 2,
}
BIG_OPERATORS = ("product", "sum")


# -- AST ------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Var:
    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BigOp:
    """``product(body, index=lo..hi)`` or ``sum(...)``; ``hi`` may be ``Var('infinity')``."""

    name: str
    body: "Expr"
    index: str
    lo: "Expr"
    hi: "Expr"
    pos: int = field(default=0, compare=False)


Expr = Num | Var | Neg | BinOp | Call | BigOp


# -- tokenizer ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\.\.|\*\*|[-+*/^(),=]))")


def tokenize(src: str) -> list[tuple[str, str, int]]:
    out = []
    i = 0
    n = len(src)
    while i < n:
        if src[i].isspace():
            i += 1
            continue
        m = _TOKEN.match(src, i)
        if not m:
            raise ParseError(f"unexpected character {src[i]!r}", i, src)
        pos = m.start(m.lastindex)
        if m.group(1):
            out.append(("int", m.group(1), pos))
        elif m.group(2):
            out.append(("ident", m.group(2), pos))
        else:
            tok = m.group(3)
            out.append(("op", "^" if tok == "**" else tok, pos))
        i = m.end()
    out.append(("end", "", n))
    return out


# -- parser ---------------------------------------------------------------


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, pos=None):
        if pos is None:
            pos = self.peek()[2]
        return ParseError(msg, pos, self.src)

    def expect(self, value):
        kind, text, pos = self.peek()
        if kind != "op" or text != value:
            found = "end of input" if kind == "end" else repr(text)
            raise self.error(f"expected {value!r}, found {found}")
        return self.take()

    def at_op(self, *values):
        kind, text, _ = self.peek()
        return kind == "op" and text in values

    def parse(self) -> Expr:
        e = self.expr()
        kind, text, pos = self.peek()
        if kind != "end":
            raise self.error(f"unexpected {text!r}")
        return e

    def expr(self):
        left = self.term()
        while self.at_op("+", "-"):
            _, op, pos = self.take()
            left = BinOp(op, left, self.term(), pos)
        return left

    def term(self):
        left = self.unary()
        while self.at_op("*", "/"):
            _, op, pos = self.take()
            left = BinOp(op, left, self.unary(), pos)
        return left

    def unary(self):
        if self.at_op("-"):
            _, _, pos = self.take()
            return Neg(self.unary(), pos)
        if self.at_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at_op("^"):
            _, _, pos = self.take()
            start = self.peek()[2]
            exponent = self.exponent()
            if SERIES_VAR in _identifiers(exponent):
                raise ParseError("the series variable x cannot appear in an exponent", start, self.src)
            return BinOp("^", base, exponent, pos)
        return base

    def exponent(self):
        if self.at_op("-"):
            _, _, pos = self.take()
            return Neg(self.exponent(), pos)
        return self.power()

    def atom(self):
        kind, text, pos = self.take()
        if kind == "int":
            return Num(int(text), pos)
        if kind == "ident":
            if self.at_op("("):
                return self.call(text, pos)
            if text in FUNCTIONS or text in BIG_OPERATORS:
                raise ParseError(f"function {text!r} needs arguments", pos, self.src)
            return Var(text, pos)
        if kind == "op" and text == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind == "end":
            raise ParseError("unexpected end of input", pos, self.src)
        raise ParseError(f"unexpected {text!r}", pos, self.src)

    def call(self, name, pos):
        self.expect("(")
        if name in BIG_OPERATORS:
            body = self.expr()
            self.expect(",")
            kind, index, ipos = self.take()
            if kind != "ident":
                raise ParseError("expected an index variable", ipos, self.src)
            if index == SERIES_VAR:
                raise ParseError("x cannot be used as an index", ipos, self.src)
            self.expect("=")
            lo = self.expr()
            self.expect("..")
            hi = self.expr()
            self.expect(")")
            return BigOp(name, body, index, lo, hi, pos)
        if name not in FUNCTIONS:
            raise ParseError(f"unknown function {name!r}", pos, self.src)
        args = [self.expr()]
        while self.at_op(","):
            self.take()
            args.append(self.expr())
        self.expect(")")
        if len(args) != FUNCTIONS[name]:
            raise ParseError(f"{name} takes {FUNCTIONS[name]} argument(s), got {len(args)}", pos, self.src)
        return Call(name, tuple(args), pos)


def parse(src: str) -> Expr:
    """Parse expression text into an AST (raises :class:`ParseError`)."""
    return _Parser(src).parse()


def _identifiers(e: Expr, bound: frozenset = frozenset()) -> list[str]:
    """Free identifiers in order of first appearance."""
    out: list[str] = []

    def walk(node, bound):
        if isinstance(node, Var):
            if node.name not in bound and node.name not in out:
                out.append(node.name)
        elif isinstance(node, Neg):
            walk(node.operand, bound)
        elif isinstance(node, BinOp):
            walk(node.left, bound)
            walk(node.right, bound)
        elif isinstance(node, Call):
            for a in node.args:
                walk(a, bound)
        elif isinstance(node, BigOp):
            walk(node.lo, bound)
            if not (isinstance(node.hi, Var) and node.hi.name == INFINITY):
                walk(node.hi, bound)
            walk(node.body, bound | {node.index})

    walk(e, bound)
    return out


def free_parameters(e: Expr) -> list[str]:
    """Parameters of ``e``: free identifiers other than ``x``."""
    return [n for n in _identifiers(e) if n not in (SERIES_VAR, INFINITY)]


# -- rendering ------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return 4 if e.op == "^" else _PREC[e.op]
    if isinstance(e, Neg):
        return 3
    return 5


def render(e: Expr) -> str:
    """Source text for ``e`` with the minimal parentheses; ``parse(render(e)) == e``."""

    def wrap(node, min_prec):
        s = render(node)
        return f"({s})" if _prec(node) < min_prec else s

    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Neg):
        return "-" + wrap(e.operand, 3)
    if isinstance(e, BinOp):
        if e.op == "^":
            return f"{wrap(e.left, 5)}^{wrap(e.right, 3)}"
        p = _PREC[e.op]
        return f"{wrap(e.left, p)}{e.op}{wrap(e.right, p + 1)}"
    if isinstance(e, Call):
        return f"{e.name}({', '.join(render(a) for a in e.args)})"
    if isinstance(e, BigOp):
        return f"{e.name}({render(e.body)}, {e.index}={render(e.lo)}..{render(e.hi)})"
    raise TypeError(f"not an expression node: {e!r}")


# -- evaluation -----------------------------------------------------------

Value = RatFun | TruncSeries


def _located(err: DomainError, node: Expr) -> DomainError:
    if getattr(err, "pos", None) is not None:
        return err
    new = DomainError(f"{err} (in {render(node)!r} at position {node.pos})")
    new.pos = node.pos
    return new


class _Evaluator:
    def __init__(self, params: Sequence[str] | None, bindings: Mapping[str, object] | None,
                 allow_series: bool = True):
        self.params = None if params is None else set(params)
        self.bindings = {k: RatFun.coerce(v) for k, v in (bindings or {}).items()}
        self.allow_series = allow_series
        if params:
            register_variables(params)

    # helpers

    def as_series(self, v: Value, n: int) -> TruncSeries:
        if isinstance(v, TruncSeries):
            return v
        return TruncSeries.constant(v, n)

    def as_int(self, v: Value, node: Expr) -> int:
        if isinstance(v, TruncSeries) or not v.is_integer():
            raise _located(DomainError(f"integer expected, got {v}"), node)
        return int(v)

    # dispatch

    def eval(self, node: Expr, n: int, env: dict) -> Value:
        try:
            return self._eval(node, n, env)
        except DomainError as err:
            raise _located(err, node) from None

    def _eval(self, node, n, env):
        if isinstance(node, Num):
            return RatFun(node.value)
        if isinstance(node, Var):
            return self.variable(node, n, env)
        if isinstance(node, Neg):
            v = self.eval(node.operand, n, env)
            return -v
        if isinstance(node, BinOp):
            return self.binop(node, n, env)
        if isinstance(node, Call):
            return self.call(node, n, env)
        if isinstance(node, BigOp):
            return self.bigop(node, n, env)
        raise TypeError(f"not an expression node: {node!r}")

    def variable(self, node: Var, n, env):
        name = node.name
        if name in env:
            return RatFun(env[name])
        if name == SERIES_VAR:
            if not self.allow_series:
                raise DomainError("the series variable x is not allowed here")
            return TruncSeries.monomial(1, n)
        if name in self.bindings:
            return self.bindings[name]
        if name == INFINITY:
            raise DomainError("'infinity' is only allowed as an upper bound")
        if self.params is not None and name not in self.params:
            raise ParseError(f"unknown identifier {name!r}", node.pos)
        return var(name)

    def binop(self, node: BinOp, n, env):
        op = node.op
        if op == "/":
            return self.divide(node, n, env)
        a = self.eval(node.left, n, env)
        if op == "^":
            e = self.eval(node.right, n, env)
            return self.power(a, e, n, node)
        b = self.eval(node.right, n, env)
        if op == "+":
            return a + b if isinstance(a, TruncSeries) or not isinstance(b, TruncSeries) else b + a
        if op == "-":
            if isinstance(b, TruncSeries) and not isinstance(a, TruncSeries):
                return -b + a
            return a - b
        if op == "*":
            return a * b if isinstance(a, TruncSeries) or not isinstance(b, TruncSeries) else b * a
        raise TypeError(op)

    def power(self, base: Value, e: Value, n: int, node):
        if isinstance(e, TruncSeries):
            raise DomainError("the series variable x cannot appear in an exponent")
        if not isinstance(base, TruncSeries):
            if e.is_integer():
                return base ** int(e)
            raise DomainError(f"non-integer power {e} of a scalar")
        if e.is_integer() and int(e) >= 0:
            nz = [i for i, c in enumerate(base.coeffs) if not c.is_zero()]
            if len(nz) == 1:
                # monomial c*x^m
                k = int(e)
                m = nz[0]
                return TruncSeries.monomial(m * k, n, base.coeffs[m] ** k)
        return series_pow(base, e)

    def divide(self, node: BinOp, n, env):
        b = self.eval(node.right, n, env)
        if not isinstance(b, TruncSeries):
            if b.is_zero():
                raise DomainError("division by zero")
            a = self.eval(node.left, n, env)
            return a / b
        a = self.eval(node.left, n, env)
        if not b.coeffs[0].is_zero():
            return series_div(self.as_series(a, n), b)
        d = b.valuation()
        extra = 1
        while d is None and extra <= MAX_VALUATION_PROBE:
            # the divisor vanishes to order n; look further ahead for its valuation
            d = self.eval(node.right, n + extra, env).valuation()
            extra *= 2
        if d is None:
            raise DomainError("nonunit divisor: the divisor vanishes to the requested order")
        # recompute both sides with d extra terms, then cancel x^d
        a = self.as_series(self.eval(node.left, n + d, env), n + d)
        b = self.eval(node.right, n + d, env)
        try:
            a = a.shift_down(d)
        except DomainError:
            raise DomainError(f"nonunit divisor: numerator valuation is below {d}") from None
        return series_div(a, b.shift_down(d))

    def call(self, node: Call, n, env):
        name = node.name
        if name == "factorial":
            k = self.as_int(self.eval(node.args[0], n, env), node)
            if k < 0:
                raise DomainError("factorial of a negative integer")
            return RatFun(factorial(k))
        if name == "binomial":
            top = self.eval(node.args[0], n, env)
            k = self.as_int(self.eval(node.args[1], n, env), node)
            if isinstance(top, TruncSeries):
                raise DomainError("binomial needs scalar arguments")
            if k < 0:
                return ZERO
            acc = ONE
            for i in range(k):
                acc = acc * (top - i)
            return acc / factorial(k)
        a = self.eval(node.args[0], n, env)
        if not isinstance(a, TruncSeries):
            return self.scalar_function(name, a)
        if name == "sqrt":
            return series_pow(a, Fraction(1, 2))
        if name == "log":
            return series_log(a)
        if name == "exp":
            c0 = a.coeffs[0]
            if not c0.is_zero():
                raise DomainError("exp requires a series with zero constant term")
            return series_exp(a)
        if not a.coeffs[0].is_zero():
            raise DomainError(f"{name} requires a series with zero constant term")
        return series_compose(elementary_series(name, n), a)

    def scalar_function(self, name, a: RatFun):
        if name == "exp" and a.is_zero():
            return ONE
        if name == "log" and a.is_one():
            return ZERO
        if name == "sqrt" and a.is_constant():
            q = a.to_fraction()
            if q >= 0:
                rn, rd = _isqrt_exact(q.numerator), _isqrt_exact(q.denominator)
                if rn is not None and rd is not None:
                    return RatFun(Fraction(rn, rd))
        if name in ("sin", "tan") and a.is_zero():
            return ZERO
        if name in ("cos", "sec") and a.is_zero():
            return ONE
        raise DomainError(f"{name}({a}) is not a rational value")

    def bigop(self, node: BigOp, n, env):
        lo = self.as_int(self.eval(node.lo, n, env), node.lo)
        infinite = isinstance(node.hi, Var) and node.hi.name == INFINITY and node.hi.name not in env
        hi = n if infinite else self.as_int(self.eval(node.hi, n, env), node.hi)
        is_product = node.name == "product"

        def term(k):
            inner = dict(env)
            inner[node.index] = k
            return self.eval(node.body, n, inner)

        if hi < lo - 1:
            # Karr's convention: reversed ranges invert the complementary range
            inv = self._accumulate(term, range(hi + 1, lo), is_product, n)
            if is_product:
                if isinstance(inv, TruncSeries):
                    return series_div(TruncSeries.constant(1, n), inv)
                return ONE / inv
            return -inv
        values = [term(k) for k in range(lo, hi + 1)]
        if (isinstance(node.hi, Num) and hi < n and values
                and all(_is_tail_term(v, k, is_product) for v, k in zip(values, range(lo, hi + 1)))):
            values += [term(k) for k in range(hi + 1, n + 1)]
        return self._combine(values, is_product, n)

    def _accumulate(self, term, ks, is_product, n):
        return self._combine([term(k) for k in ks], is_product, n)

    def _combine(self, values, is_product, n):
        if not any(isinstance(v, TruncSeries) for v in values):
            acc = ONE if is_product else ZERO
            for v in values:
                acc = acc * v if is_product else acc + v
            return acc
        acc = TruncSeries.constant(1 if is_product else 0, n)
        for v in values:
            acc = acc * v if is_product else acc + v
        return acc


def _is_tail_term(v: Value, k: int, is_product: bool) -> bool:
    # product factors 1 + O(x^k) and sum terms O(x^k) may be extended to order N
    if k < 1 or not isinstance(v, TruncSeries):
        return False
    head = v.coeffs[:k]
    if is_product:
        return head[0].is_one() and all(c.is_zero() for c in head[1:])
    return all(c.is_zero() for c in head)


def _isqrt_exact(m: int) -> int | None:
    r = isqrt(m)
    return r if r * r == m else None


def eval_series(e: Expr | str, N: int, params: Sequence[str] | None = None,
                bindings: Mapping[str, object] | None = None) -> TruncSeries:
    """Evaluate ``e`` to a :class:`TruncSeries` of order ``N``.

    ``params`` lists the admissible free identifiers (``None`` admits any);
    ``bindings`` substitutes values (integers, rationals or RatFun) for them.
    """
    if isinstance(e, str):
        e = parse(e)
    if N < 0:
        raise ValueError("order must be non-negative")
    ev = _Evaluator(params, bindings)
    v = ev.eval(e, N, {})
    return ev.as_series(v, N)


def eval_scalar(e: Expr | str, bindings: Mapping[str, object] | None = None,
                params: Sequence[str] | None = None) -> RatFun:
    """Evaluate an expression free of ``x`` to a RatFun."""
    if isinstance(e, str):
        e = parse(e)
    ev = _Evaluator(params, bindings, allow_series=False)
    v = ev.eval(e, 0, {})
    if isinstance(v, TruncSeries):
        raise DomainError("expression depends on x")
    return v


def weights_from_expr(e: Expr | str, N: int, index: str = "n",
                      bindings: Mapping[str, object] | None = None,
                      params: Sequence[str] | None = None) -> list[RatFun]:
    """Values of a weight expression in ``index`` at 1..N."""
    if isinstance(e, str):
        e = parse(e)
    ev = _Evaluator(params, bindings, allow_series=False)
    if ev.params is not None:
        ev.params.add(index)
    out = []
    for k in range(1, N + 1):
        v = ev.eval(e, 0, {index: k})
        if isinstance(v, TruncSeries):
            raise DomainError("weight expressions cannot contain x")
        out.append(v)
    return out


def parse_value(text: str, params: Iterable[str] | None = None) -> RatFun:
    """Parse a single coefficient such as ``3/4`` or ``(z+8)/9``."""
    return eval_scalar(parse(text), params=list(params) if params is not None else None)
