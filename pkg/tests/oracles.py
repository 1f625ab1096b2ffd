"""Independent brute-force oracles over Fraction, sharing no code with hooklab."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


def mul(a, b, N):
    out = [Fraction(0)] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if x:
            for j, y in enumerate(b[: N + 1 - i]):
                out[i + j] += x * y
    return out


def inverse(a, N):
    out = [Fraction(0)] * (N + 1)
    out[0] = 1 / Fraction(a[0])
    for n in range(1, N + 1):
        out[n] = -sum(a[k] * out[n - k] for k in range(1, min(n, len(a) - 1) + 1)) / a[0]
    return out


def exp_coeffs(N, c=Fraction(1)):
    return [Fraction(c) ** k / factorial(k) for k in range(N + 1)]


def binomial_series(a, N):
    """Coefficients of ``(1+x)^a`` for rational ``a``."""
    out, term = [], Fraction(1)
    for k in range(N + 1):
        out.append(term)
        term = term * (Fraction(a) - k) / (k + 1)
    return out


def euler_product(exps: dict, N: int):
    """``prod_k (1 - x^k)^(b_k)`` by the binomial series of each factor."""
    out = [Fraction(1)] + [Fraction(0)] * N
    for k, b in exps.items():
        if k > N:
            continue
        bs = binomial_series(b, N // k)
        factor = [Fraction(0)] * (N + 1)
        for j, c in enumerate(bs):
            factor[j * k] = c * (-1) ** j
        out = mul(out, factor, N)
    return out


def catalan(n):
    return comb(2 * n, n) // (n + 1)


# -- partitions -----------------------------------------------------------


def partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def hooks(parts):
    """Hook lengths via arm + leg + 1, box by box."""
    conj = [sum(1 for p in parts if p > j) for j in range(parts[0])] if parts else []
    return [parts[i] - j - 1 + conj[j] - i - 1 + 1
            for i in range(len(parts)) for j in range(parts[i])]


def pa_hookgen(rho, N):
    out = []
    for n in range(N + 1):
        total = Fraction(0)
        for p in partitions(n):
            term = Fraction(1)
            for h in hooks(p):
                term *= rho[h - 1]
            total += term
        out.append(total)
    return out


# -- trees ----------------------------------------------------------------


def binary_trees(n):
    """Trees as nested pairs; size via ``tree_size``."""
    if n == 0:
        return [None]
    return [(l, r) for k in range(n) for l in binary_trees(k) for r in binary_trees(n - 1 - k)]


def tree_size(t):
    return 0 if t is None else 1 + tree_size(t[0]) + tree_size(t[1])


def tree_hooks(t, out):
    if t is None:
        return 0
    h = 1 + tree_hooks(t[0], out) + tree_hooks(t[1], out)
    out.append(h)
    return h


def _inorder_degrees(t, out):
    if t is None:
        return
    _inorder_degrees(t[0], out)
    out.append((t[0] is not None) + (t[1] is not None))
    _inorder_degrees(t[1], out)


def is_complete(t):
    """Every vertex has 0 or 2 children except possibly the last one in inorder."""
    degs = []
    _inorder_degrees(t, degs)
    return all(d != 1 for d in degs[:-1])


def is_fibonacci(t):
    if t is None:
        return True
    right = t[1]
    return tree_size(right) <= 1 and is_fibonacci(t[0])


def trees(kind, n):
    all_trees = binary_trees(n)
    if kind == "BT":
        return all_trees
    if kind == "CBT":
        return [t for t in all_trees if is_complete(t)]
    return [t for t in all_trees if is_fibonacci(t)]


def tree_hookgen(kind, rho, N):
    out = []
    for n in range(N + 1):
        total = Fraction(0)
        for t in trees(kind, n):
            hs = []
            tree_hooks(t, hs)
            term = Fraction(1)
            for h in hs:
                term *= rho[h - 1]
            total += term
        out.append(total)
    return out


def hookgen(kind, rho, N):
    return pa_hookgen(rho, N) if kind == "PA" else tree_hookgen(kind, rho, N)


# -- rational interpolation -----------------------------------------------


def nullspace(rows):
    """Basis of the rational nullspace by Gauss-Jordan elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    ncols = len(m[0]) if m else 0
    pivots, r = [], 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [v / m[r][c] for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis


def rational_fit_exists(points, dp, dq):
    """Whether some P/Q with deg P <= dp, deg Q <= dq, Q nonzero at the points, fits."""
    rows = [[Fraction(n) ** i for i in range(dp + 1)] + [-v * Fraction(n) ** j for j in range(dq + 1)]
            for n, v in points]
    for vec in nullspace(rows):
        q = vec[dp + 1:]
        if all(sum(c * Fraction(n) ** j for j, c in enumerate(q)) != 0 for n, _ in points):
            return True
    return False
