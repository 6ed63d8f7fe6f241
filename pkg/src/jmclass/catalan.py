"""Generalized Catalan polynomials and the exponential generating series
phi_rho(t) = sum_k c_rho^(k) t^k / k! of the reduced coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .arith import ONE, Poly, TSeries, Z, binomial, series_exp_linear
from .characters import mn_character
from .expansion import reduced_coeffs
from .fixtures import fixture_series
from .partitions import Partition, partitions_of, z_order
from .symfun import hl_bracket

METHODS = ("defsum", "rec", "alt1", "alt2", "hl_spec")


def _geometric(m: int) -> Poly:
    """(1 - z^m) / (1 - z) = 1 + z + ... + z^(m-1)."""
    return sum((Z ** j for j in range(m)), Poly())


def _defsum(r: int) -> Poly:
    total = Poly()
    for m in range(r + 1):
        cat = Fraction(binomial(2 * m, m), m + 1)
        total = total + Z ** (r - m) * (1 - Z) ** m * (binomial(r + m, r - m) * cat)
    return total


@lru_cache(maxsize=None)
def _rec(r: int) -> Poly:
    if r == 1:
        return ONE
    total = Poly()
    for i in range(1, r - 1):
        total = total + _rec(i) * _rec(r - i - 1)
    return total * (1 - Z) + _rec(r - 1) * (2 - Z)


def _alt1(r: int) -> Poly:
    total = Poly()
    for m in range(r + 1):
        sign = 1 if m % 2 else -1
        total = total + _geometric(m) * (sign * binomial(r + 1, m) * binomial(2 * r - m, r))
    return total * Fraction(1, r + 1)


def _alt2(r: int) -> Poly:
    total = Poly()
    for m in range(r):
        total = total + (-Z) ** m * (binomial(r - 1, m) * binomial(2 * r - m, r))
    return total * Fraction(1, r + 1)


def _hl_spec(r: int) -> Poly:
    # P_r(z) at r+1 letters equal to 1, where p_mu -> (r+1)^l(mu)
    total = Poly()
    for mu in partitions_of(r):
        total = total + hl_bracket(mu) * Fraction((r + 1) ** len(mu), z_order(mu))
    return total * Fraction(1, r + 1)


def gen_catalan(r: int, method: str = "defsum") -> Poly:
    """The generalized Catalan polynomial of index r.

    ``rec``, ``alt1`` and ``alt2`` are only valid for r >= 1; the defining
    sum and the Hall-Littlewood specialization also cover r = 0.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if r == 0 and method in ("rec", "alt1", "alt2"):
        raise ValueError(f"method {method} needs r >= 1")
    return {"defsum": _defsum, "rec": _rec, "alt1": _alt1,
            "alt2": _alt2, "hl_spec": _hl_spec}[method](r)


# --- generating series ---------------------------------------------------------------

def phi_series(family: str, rho: Partition, order: int) -> TSeries:
    """sum_{k < order} c_rho^(k) t^k / k! from the recurrences."""
    if order < 1:
        raise ValueError("order must be positive")
    rho = Partition(rho)
    w = sum(rho)
    vals = [reduced_coeffs(family, k, max_weight=w)[rho] for k in range(order)]
    return TSeries.from_egf(vals, order)


def phi_closed_form_z1(rho: Partition, order: int, convention: bool = False) -> TSeries:
    """|rho|! phi_rho = e^{-t} (1 - e^{-t})^{|rho|-2} prod_i (e^{it} - 1)^{m_i}."""
    rho = Partition(rho)
    w = sum(rho)
    if w <= 1:
        if not convention:
            raise ValueError("closed form needs |rho| >= 2 (pass convention=True for |rho| <= 1)")
        return TSeries.one(order) if w == 1 else TSeries.zero(order)
    one = TSeries.one(order)
    out = series_exp_linear(-1, order) * (one - series_exp_linear(-1, order)) ** (w - 2)
    for part in rho:
        out = out * (series_exp_linear(part, order) - one)
    return out * Fraction(1, factorial(w))


def psi_series(rho: Partition, order: int, family: str = "p") -> TSeries:
    """psi_rho = sum_{sigma |- |rho|} chi^rho_sigma phi_sigma / z_sigma."""
    rho = Partition(rho)
    total = TSeries.zero(order)
    for sigma in partitions_of(sum(rho)):
        chi = mn_character(rho, sigma)
        if chi:
            total = total + phi_series(family, sigma, order) * Fraction(chi, z_order(sigma))
    return total


def psi_hook_closed_form(rho: Partition, order: int) -> TSeries:
    """|rho|! psi_rho at z = 1: (e^t - 1)^(r-1) (e^-t - 1)^s for rho = (r, 1^s), else 0."""
    rho = Partition(rho)
    if not rho.is_hook() or not rho:
        return TSeries.zero(order)
    r, s = rho[0], len(rho) - 1
    one = TSeries.one(order)
    out = (series_exp_linear(1, order) - one) ** (r - 1) * (series_exp_linear(-1, order) - one) ** s
    return out * Fraction(1, factorial(sum(rho)))


def fixture_series_9_3(rho: Partition, order: int) -> TSeries:
    return fixture_series(rho, order)
