"""From a generating function to partition hook formulas.

Run: python3 demos/partition_formulas.py
"""

from hooklab import SingularError, etamake, eval_series, hookexp, hookgen


def show(title, value):
    print(f"{title}\n    {value}")


# the exponential series expands with weights 1/h^2
f = eval_series("exp(x)", 8)
show("weights for exp(x):", hookexp("PA", f, 8))

# raising the Euler product to a symbolic power keeps the weights simple
f = eval_series("product(1/(1-x^k)^z, k=1..infinity)", 7)
show("weights for the Euler product to the power z:", hookexp("PA", f, 7))

# the 3-core series is singular at n = 8; the partial table keeps free slots
f = eval_series("product((1-x^(3*k))^3/(1-x^k), k=1..infinity)", 8)
try:
    hookexp("PA", f, 8)
except SingularError as err:
    show(str(err), f"partial table {err.partial}, free slots {err.partial.undetermined}")

# replacing the exponent 3 by z removes the singularity; z = 3 recovers the 3-cores
f = eval_series("product((1-x^(3*k))^z/(1-x^k), k=1..infinity)", 13)
table = hookexp("PA", f, 13)
show("with exponent z:", table)
show("at z = 3:", table.subs({"z": 3}))

# a sign on hook lengths divisible by 3 gives an eta quotient
rho = [-1 if h % 3 == 0 else 1 for h in range(1, 18)]
q = etamake(hookgen("PA", rho, 17), 17)
show("sign on multiples of 3 as an eta quotient:", q)
for w in q.warnings():
    print(f"    note: {w}")
