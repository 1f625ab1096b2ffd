"""Dispatch between the four structures by their short codes PA, BT, CBT, FT."""

from __future__ import annotations

from .partitions import pa_hookexp, pa_hookgen
from .series import TruncSeries
from .trees import (
    bt_hookexp,
    bt_hookgen,
    cbt_hookexp,
    cbt_hookgen,
    ft_hookexp,
    ft_hookgen,
)
from .weights import WeightTable

KINDS = ("PA", "BT", "CBT", "FT")

_GEN = {"PA": pa_hookgen, "BT": bt_hookgen, "CBT": cbt_hookgen, "FT": ft_hookgen}
_EXP = {"PA": pa_hookexp, "BT": bt_hookexp, "CBT": cbt_hookexp, "FT": ft_hookexp}


def kind_code(kind: str) -> str:
    code = kind.upper()
    if code not in KINDS:
        raise ValueError(f"unknown structure {kind!r}; expected one of {', '.join(KINDS)}")
    return code


def hookgen(kind: str, rho, N: int) -> TruncSeries:
    return _GEN[kind_code(kind)](rho, N)


def hookexp(kind: str, f: TruncSeries, N: int) -> WeightTable:
    return _EXP[kind_code(kind)](f, N)
