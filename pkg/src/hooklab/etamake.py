"""Recognize a series as an Euler product and print it as an eta quotient.

``eta(k tau) = x^(k/24) prod_(m>=1) (1 - x^(k m))``, so a product of eta
factors is an Euler product whose exponents are divisor sums of the eta
exponents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import RatFun
from .errors import DomainError
from .series import TruncSeries, series_log, series_pow


def product_exponents(f: TruncSeries, N: int | None = None) -> dict[int, Fraction]:
    """Exponents ``b_k`` with ``f = prod_(k=1)^N (1 - x^k)^(b_k)`` to order ``N``.

    With ``c_n = [x^n] log f`` we have ``n c_n = -sum_(k | n) k b_k``, which
    is triangular in ``k``.  Only nonzero exponents are returned.
    """
    if N is None:
        N = f.order
    if N > f.order:
        raise ValueError(f"order {N} exceeds the series order {f.order}")
    if any(not c.is_constant() for c in f.coeffs[: N + 1]):
        raise DomainError("numeric input required: the series has parametric coefficients")
    if not f[0].is_one():
        raise DomainError("an Euler product has constant term 1")
    logf = series_log(f.truncate(N))
    c = [logf[n].to_fraction() for n in range(N + 1)]
    kb = [Fraction(0)] * (N + 1)  # k * b_k
    for n in range(1, N + 1):
        acc = -n * c[n]
        for k in range(1, n // 2 + 1):
            if n % k == 0:
                acc -= kb[k]
        kb[n] = acc
    return {k: kb[k] / k for k in range(1, N + 1) if kb[k]}


def euler_exponents(f: TruncSeries, N: int | None = None) -> dict[int, Fraction]:
    """Exponents ``e_k`` with ``f = prod_k prod_(m>=1) (1 - x^(k m))^(e_k)`` to order ``N``.

    These are the exponents of ``eta(k tau)`` in an eta quotient.  They are
    obtained from :func:`product_exponents` by Moebius inversion, since
    ``b_n = sum_(k | n) e_k``.
    """
    if N is None:
        N = f.order
    b = product_exponents(f, N)
    e = [Fraction(0)] * (N + 1)
    for n in range(1, N + 1):
        acc = b.get(n, Fraction(0))
        for k in range(1, n // 2 + 1):
            if n % k == 0:
                acc -= e[k]
        e[n] = acc
    return {k: e[k] for k in range(1, N + 1) if e[k]}


def reconstruct(exponents: dict[int, object], N: int) -> TruncSeries:
    """``prod_k prod_m (1 - x^(k m))^(e_k)`` to order ``N``."""
    b: dict[int, Fraction] = {}
    for k, e in exponents.items():
        if not e:
            continue
        for n in range(k, N + 1, k):
            b[n] = b.get(n, Fraction(0)) + Fraction(e)
    return reconstruct_product(b, N)


def reconstruct_product(exponents: dict[int, object], N: int) -> TruncSeries:
    """``prod_k (1 - x^k)^(b_k)`` to order ``N``."""
    out = TruncSeries.constant(1, N)
    for k, e in sorted(exponents.items()):
        if k > N or not e:
            continue
        base = TruncSeries.constant(1, N) - TruncSeries.monomial(k, N)
        out = out * series_pow(base, RatFun.coerce(Fraction(e)))
    return out


@dataclass(frozen=True)
class EtaQuotient:
    """``f = x^prefactor * prod_k eta(k tau)^(e_k)``."""

    exponents: dict = field(default_factory=dict)
    order: int | None = None

    @property
    def prefactor(self) -> Fraction:
        return -sum((k * Fraction(e) for k, e in self.exponents.items()), Fraction(0)) / 24

    @property
    def is_eta_quotient(self) -> bool:
        return all(Fraction(e).denominator == 1 for e in self.exponents.values())

    def warnings(self) -> list[str]:
        out = []
        if not self.is_eta_quotient:
            out.append("not an eta quotient: some exponents are not integers")
        if self.order is not None:
            late = sorted(k for k in self.exponents if 2 * k > self.order)
            if late:
                ks = ", ".join(map(str, late))
                out.append(f"nonzero exponents at k = {ks} > N/2 may be truncation artifacts; "
                           f"increase N to confirm")
        return out

    def render(self) -> str:
        return render_eta(self)

    __str__ = render

    def to_json(self) -> dict:
        def num(e):
            e = Fraction(e)
            return e.numerator if e.denominator == 1 else str(e)

        return {
            "exponents": {str(k): num(e) for k, e in sorted(self.exponents.items())},
            "prefactor": str(self.prefactor),
            "text": self.render(),
            "eta_quotient": self.is_eta_quotient,
            "warnings": self.warnings(),
        }


def _eta_factor(k: int, e: Fraction) -> str:
    arg = "tau" if k == 1 else f"{k}tau"
    base = f"eta({arg})"
    if e == 1:
        return base
    exp = str(e) if e.denominator == 1 else f"({e})"
    return f"{base}^{exp}"


def render_eta(q: EtaQuotient) -> str:
    """E.g. ``x^(1/24)*eta(12tau)^3*eta(3tau)^6/(eta(6tau)^9*eta(tau))``."""
    exps = {k: Fraction(e) for k, e in q.exponents.items() if e}
    top = [_eta_factor(k, e) for k, e in sorted(exps.items(), reverse=True) if e > 0]
    bottom = [_eta_factor(k, -e) for k, e in sorted(exps.items(), reverse=True) if e < 0]
    c = q.prefactor
    if c:
        top.insert(0, f"x^({c})")
    text = "*".join(top) if top else "1"
    if not bottom:
        return text
    b = "*".join(bottom)
    return f"{text}/({b})" if len(bottom) > 1 else f"{text}/{b}"


def etamake(f: TruncSeries, N: int | None = None) -> EtaQuotient:
    """Euler-product exponents of ``f`` packaged for rendering and reporting."""
    if N is None:
        N = f.order
    return EtaQuotient(euler_exponents(f, N), N)
