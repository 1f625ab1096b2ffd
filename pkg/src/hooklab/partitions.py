"""Partitions, their hook lengths, and the hook length expansion in both directions."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .algebra import ONE, ZERO, RatFun, fresh_parameter, sum_of_power_products, var
from .errors import DomainError, SingularError
from .series import TruncSeries
from .weights import WeightTable, as_weight_table


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


class HookMultiset(Counter):
    """Hook length -> multiplicity."""

    def total(self) -> int:
        return sum(self.values())

    def row(self) -> tuple:
        """``((h, m), ...)`` sorted by hook length, the form used for products."""
        return tuple(sorted(self.items()))


def _partitions(n: int, largest: int) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [Partition(p) for p in _partitions(n, n)]


def hook_lengths(p: Partition) -> list[int]:
    """Hook lengths row by row, top row first."""
    conj = p.conjugate().parts
    return [row - j + conj[j - 1] - i + 1
            for i, row in enumerate(p.parts, start=1) for j in range(1, row + 1)]


def hook_multiset(p: Partition) -> HookMultiset:
    """``h(i,j) = lambda_i - j + lambda'_j - i + 1`` over all boxes."""
    conj = p.conjugate().parts
    hooks = HookMultiset()
    for i, row in enumerate(p.parts, start=1):
        for j in range(1, row + 1):
            hooks[row - j + conj[j - 1] - i + 1] += 1
    return hooks


@lru_cache(maxsize=None)
def _hook_rows(n: int) -> tuple:
    return tuple(hook_multiset(p).row() for p in enumerate_partitions(n))


@lru_cache(maxsize=None)
def _pz_rows(n: int) -> tuple:
    # partitions with at least two parts and second part >= 2: no hook equals n
    return tuple(hook_multiset(p).row() for p in enumerate_partitions(n)
                 if p.length >= 2 and p.parts[1] >= 2)


def _rows_indexed(rows):
    return [[(h - 1, m) for h, m in row] for row in rows]


def pa_hookgen(rho, N: int) -> TruncSeries:
    """Series ``sum_lambda x^|lambda| prod_(h in H(lambda)) rho(h)`` to order ``N``."""
    rho = as_weight_table(rho)
    if len(rho) < N:
        raise ValueError(f"weight table has {len(rho)} entries, order {N} needs {N}")
    bases = list(rho.values)
    coeffs = [ONE]
    for n in range(1, N + 1):
        coeffs.append(sum_of_power_products(bases[:n], _rows_indexed(_hook_rows(n))))
    return TruncSeries(coeffs)


def _prefix_products(values) -> list[RatFun]:
    out = [ONE]
    for v in values:
        out.append(out[-1] * v)
    return out


def _hook_shape_sum(prefix, n: int) -> RatFun:
    # D(n): sum over hooks with l parts of rho(1..l-1) * rho(1..n-l)
    total = ZERO
    for ell in range(1, n + 1):
        total = total + prefix[ell - 1] * prefix[n - ell]
    return total


def pa_hookgen_split(rho, N: int) -> TruncSeries:
    """Same series as :func:`pa_hookgen`, computed by splitting off hook shapes.

    Hook shapes of ``n`` contribute ``rho(n) * D(n)``; every other partition
    lies in ``P_Z(n)`` and never has hook length ``n``.
    """
    rho = as_weight_table(rho)
    bases = list(rho.values)
    prefix = _prefix_products(bases[:N])
    coeffs = [ONE]
    for n in range(1, N + 1):
        hooks = bases[n - 1] * _hook_shape_sum(prefix, n)
        rest = sum_of_power_products(bases[: n - 1], _rows_indexed(_pz_rows(n)))
        coeffs.append(hooks + rest)
    return TruncSeries(coeffs)


def pa_hookexp(f: TruncSeries, N: int) -> WeightTable:
    """Recover ``rho(1..N)`` with ``pa_hookgen(rho, N) == f``.

    A step whose hook-shape sum ``D`` vanishes gets a fresh parameter when the
    remaining equation is ``0 = 0``; otherwise :class:`SingularError` carries
    the table computed so far.
    """
    if N > f.order:
        raise ValueError(f"order {N} exceeds the series order {f.order}")
    if not f[0].is_one():
        raise DomainError("hook length expansion requires f(0) = 1")
    taken = set()
    for c in f.coeffs:
        taken.update(c.variables)
    values: list[RatFun] = []
    undetermined: list[int] = []
    prefix = [ONE]
    for n in range(1, N + 1):
        if n == 1:
            rho_n = f[1]
        else:
            rest = sum_of_power_products(values, _rows_indexed(_pz_rows(n)))
            numer = f[n] - rest
            denom = _hook_shape_sum(prefix, n)
            if denom.is_zero():
                if not numer.is_zero():
                    raise SingularError(n, WeightTable(tuple(values), tuple(undetermined)))
                name = fresh_parameter(f"r{n}", taken)
                taken.add(name)
                rho_n = var(name)
                undetermined.append(n)
            else:
                rho_n = numer / denom
        values.append(rho_n)
        prefix.append(prefix[-1] * rho_n)
    return WeightTable(tuple(values), tuple(undetermined))
