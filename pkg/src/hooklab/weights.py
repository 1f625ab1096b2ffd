"""Weight tables ``rho(1..N)`` shared by the partition and tree modules."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .algebra import RatFun


@dataclass(frozen=True)
class WeightTable:
    """``values[h-1]`` is the weight of hook length ``h``.

    ``undetermined`` lists the (1-based) indices whose value is a fresh
    parameter introduced because the expansion did not fix it.
    """

    values: tuple
    undetermined: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(RatFun.coerce(v) for v in self.values))
        object.__setattr__(self, "undetermined", tuple(sorted(set(self.undetermined))))

    @classmethod
    def from_function(cls, fn: Callable[[int], object], N: int) -> "WeightTable":
        return cls(tuple(fn(h) for h in range(1, N + 1)))

    def rho(self, h: int) -> RatFun:
        if not 1 <= h <= len(self.values):
            raise IndexError(f"weight index {h} outside 1..{len(self.values)}")
        return self.values[h - 1]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def truncate(self, N: int) -> "WeightTable":
        return WeightTable(self.values[:N], tuple(i for i in self.undetermined if i <= N))

    def subs(self, bindings) -> "WeightTable":
        return WeightTable(tuple(v.subs(bindings) for v in self.values), self.undetermined)

    def __str__(self):
        return "[" + ", ".join(str(v) for v in self.values) + "]"

    def to_json(self) -> dict:
        return {"values": [str(v) for v in self.values], "undetermined": list(self.undetermined)}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict, params: Iterable[str] | None = None) -> "WeightTable":
        from .expr import parse_value

        values = tuple(parse_value(s, params) for s in data["values"])
        return cls(values, tuple(data.get("undetermined", ())))


def as_weight_table(rho) -> WeightTable:
    """Accept a WeightTable or a plain sequence of values."""
    if isinstance(rho, WeightTable):
        return rho
    if isinstance(rho, Sequence) and not isinstance(rho, str):
        return WeightTable(tuple(rho))
    raise TypeError(f"cannot use {type(rho).__name__} as a weight table")
