"""Guessing hook formulas for trees, then checking them against the catalog.

Run: python3 demos/tree_formulas.py
"""

from hooklab import eval_series, guess_hypergeometric, guess_rational, hookexp
from hooklab.catalog import get_entry, verify_entry

CASES = [
    ("BT", "1/(1-x)^2", 12, "bt-binomial-z"),
    ("BT", "exp(x)", 12, "bt-exp"),
    ("BT", "((1-sqrt(1-4*x))/(2*x))^2", 12, "bt-catalan-power-z"),
    ("FT", "(1-sqrt(1-4*x))/(2*x)", 16, "ft-catalan"),
    ("CBT", "1/(1-x)", 14, "cbt-geometric"),
]

for kind, src, n, entry_id in CASES:
    table = hookexp(kind, eval_series(src, n), n)
    values = [v.to_fraction() for v in table]
    form = guess_rational(values) or guess_hypergeometric(values)
    guess = form.describe() if form else "no closed form"
    print(f"{kind:<3} {src}\n    weights {table}\n    guess   {guess}")
    print(f"    {verify_entry(get_entry(entry_id)).line()}")
