"""Exact hook length expansions for partitions and three families of trees."""

from .algebra import ONE, ZERO, RatFun, var
from .catalog import FormulaEntry, builtin_catalog, get_entry, verify_all, verify_entry
from .errors import DomainError, HookError, ParseError, PoleError, SingularError
from .etamake import EtaQuotient, etamake, euler_exponents, product_exponents
from .expr import eval_scalar, eval_series, parse, render, weights_from_expr
from .guess import ClosedForm, guess_hypergeometric, guess_rational
from .partitions import Partition, enumerate_partitions, hook_lengths, pa_hookexp, pa_hookgen
from .series import TruncSeries
from .structures import KINDS, hookexp, hookgen
from .trees import enumerate_trees
from .weights import WeightTable

__all__ = [
    "ONE", "ZERO", "RatFun", "var",
    "FormulaEntry", "builtin_catalog", "get_entry", "verify_all", "verify_entry",
    "DomainError", "HookError", "ParseError", "PoleError", "SingularError",
    "EtaQuotient", "etamake", "euler_exponents", "product_exponents",
    "eval_scalar", "eval_series", "parse", "render", "weights_from_expr",
    "ClosedForm", "guess_hypergeometric", "guess_rational",
    "Partition", "enumerate_partitions", "hook_lengths", "pa_hookexp", "pa_hookgen",
    "TruncSeries", "KINDS", "hookexp", "hookgen", "enumerate_trees", "WeightTable",
]
