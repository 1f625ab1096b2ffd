"""Hook length expansions for binary, complete binary and Fibonacci trees.

The recurrences never build trees.  :func:`enumerate_trees` materializes the
shapes so tests can compare the recurrences against brute force.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .algebra import ONE, ZERO, RatFun
from .errors import DomainError, SingularError
from .series import TruncSeries, series_compose
from .weights import WeightTable, as_weight_table

BINARY = "binary"
COMPLETE_BINARY = "complete-binary"
FIBONACCI = "fibonacci"
TREE_KINDS = (BINARY, COMPLETE_BINARY, FIBONACCI)
_ALIASES = {"BT": BINARY, "CBT": COMPLETE_BINARY, "FT": FIBONACCI}


def tree_kind(name: str) -> str:
    kind = _ALIASES.get(name.upper(), name)
    if kind not in TREE_KINDS:
        raise ValueError(f"unknown tree kind {name!r}")
    return kind


# -- shapes ---------------------------------------------------------------

# A node is a pair (left, right) of subtrees; the empty tree is None.
Node = Optional[tuple]


@dataclass(frozen=True)
class TreeShape:
    kind: str
    root: Node

    @property
    def size(self) -> int:
        return _size(self.root)

    def hooks(self) -> Counter:
        """Multiset of subtree sizes, one per vertex."""
        out: Counter = Counter()
        _collect_hooks(self.root, out)
        return out

    def __str__(self):
        return _render_node(self.root)


def _size(node: Node) -> int:
    if node is None:
        return 0
    return 1 + _size(node[0]) + _size(node[1])


def _collect_hooks(node: Node, out: Counter) -> int:
    # post-order pass: the hook length of a vertex is its subtree size
    if node is None:
        return 0
    h = 1 + _collect_hooks(node[0], out) + _collect_hooks(node[1], out)
    out[h] += 1
    return h


def _render_node(node: Node) -> str:
    if node is None:
        return "."
    if node == (None, None):
        return "o"
    return f"({_render_node(node[0])} {_render_node(node[1])})"


def tree_hooks(shape: TreeShape) -> Counter:
    return shape.hooks()


@lru_cache(maxsize=None)
def _binary(n: int) -> tuple:
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in _binary(k):
            for right in _binary(n - 1 - k):
                out.append((left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def _complete(n: int) -> tuple:
    # left subtree of odd size; an even n leaves the exceptional vertex with a
    # single (left) child on the rightmost branch
    if n == 0:
        return (None,)
    if n == 1:
        return ((None, None),)
    out = []
    for k in range(1, n, 2):
        for left in _complete(k):
            for right in _complete(n - 1 - k):
                out.append((left, right))
    return tuple(out)


@lru_cache(maxsize=None)
def _fibonacci(n: int) -> tuple:
    if n == 0:
        return (None,)
    out = []
    if n >= 2:
        out.extend((left, (None, None)) for left in _fibonacci(n - 2))
    out.extend((left, None) for left in _fibonacci(n - 1))
    return tuple(out)


_ENUMERATORS = {BINARY: _binary, COMPLETE_BINARY: _complete, FIBONACCI: _fibonacci}


def enumerate_trees(kind: str, n: int) -> list[TreeShape]:
    """Every tree of the given kind with ``n`` vertices, in a fixed order."""
    kind = tree_kind(kind)
    if n < 0:
        raise ValueError("n must be non-negative")
    return [TreeShape(kind, root) for root in _ENUMERATORS[kind](n)]


# -- recurrences ----------------------------------------------------------


def _check_table(rho, N) -> list[RatFun]:
    rho = as_weight_table(rho)
    if len(rho) < N:
        raise ValueError(f"weight table has {len(rho)} entries, order {N} needs {N}")
    return list(rho.values)


def bt_hookgen(rho, N: int) -> TruncSeries:
    """``f_n = rho(n) * sum_(k<n) f_k f_(n-1-k)``."""
    r = _check_table(rho, N)
    f = [ONE]
    for n in range(1, N + 1):
        acc = ZERO
        for k in range(n):
            acc = acc + f[k] * f[n - 1 - k]
        f.append(r[n - 1] * acc)
    return TruncSeries(f)


def cbt_hookgen(rho, N: int) -> TruncSeries:
    """``f_1 = rho(1)``; ``f_n = rho(n) * sum_(k odd) f_k f_(n-1-k)`` for ``n >= 2``."""
    r = _check_table(rho, N)
    f = [ONE]
    for n in range(1, N + 1):
        if n == 1:
            f.append(r[0])
            continue
        acc = ZERO
        for k in range(1, n, 2):
            acc = acc + f[k] * f[n - 1 - k]
        f.append(r[n - 1] * acc)
    return TruncSeries(f)


def ft_hookgen(rho, N: int) -> TruncSeries:
    """``f_n = rho(n) * (f_(n-1) + rho(1) f_(n-2))`` with ``f_(-1) = 0``."""
    r = _check_table(rho, N)
    f = [ONE]
    for n in range(1, N + 1):
        acc = f[n - 1]
        if n >= 2:
            acc = acc + r[0] * f[n - 2]
        f.append(r[n - 1] * acc)
    return TruncSeries(f)


def _start(f: TruncSeries, N: int):
    if N > f.order:
        raise ValueError(f"order {N} exceeds the series order {f.order}")
    if not f[0].is_one():
        raise DomainError("hook length expansion requires f(0) = 1")


def _solve(values: list, n: int, numer: RatFun, denom: RatFun) -> RatFun:
    if denom.is_zero():
        raise SingularError(n, WeightTable(tuple(values)))
    return numer / denom


def bt_hookexp(f: TruncSeries, N: int) -> WeightTable:
    """``rho(n) = [x^n] f / [x^(n-1)] f^2``."""
    _start(f, N)
    values: list[RatFun] = []
    for n in range(1, N + 1):
        sq = ZERO
        for k in range(n):
            sq = sq + f[k] * f[n - 1 - k]
        values.append(_solve(values, n, f[n], sq))
    return WeightTable(tuple(values))


def cbt_hookexp(f: TruncSeries, N: int) -> WeightTable:
    """``rho(1) = f_1``; ``rho(n) = [x^n] f / [x^(n-1)] (f(x) - f(-x)) f(x) / 2``."""
    _start(f, N)
    f = f.truncate(N) if N < f.order else f
    if N == 0:
        return WeightTable(())
    odd = (f - series_compose(f, TruncSeries.monomial(1, f.order, -1))) * f / 2
    values = [f[1]]
    for n in range(2, N + 1):
        values.append(_solve(values, n, f[n], odd[n - 1]))
    return WeightTable(tuple(values))


def cbt_hookexp_direct(f: TruncSeries, N: int) -> WeightTable:
    """Same as :func:`cbt_hookexp`, solving the odd-split recurrence term by term."""
    _start(f, N)
    values: list[RatFun] = []
    for n in range(1, N + 1):
        if n == 1:
            values.append(f[1])
            continue
        acc = ZERO
        for k in range(1, n, 2):
            acc = acc + f[k] * f[n - 1 - k]
        values.append(_solve(values, n, f[n], acc))
    return WeightTable(tuple(values))


def ft_hookexp(f: TruncSeries, N: int) -> WeightTable:
    """``rho(n) = f_n / (f_(n-1) + rho(1) f_(n-2))``."""
    _start(f, N)
    values: list[RatFun] = []
    for n in range(1, N + 1):
        bracket = f[n - 1]
        if n >= 2:
            bracket = bracket + values[0] * f[n - 2]
        values.append(_solve(values, n, f[n], bracket))
    return WeightTable(tuple(values))
