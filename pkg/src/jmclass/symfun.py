"""The symmetric functions handled by the oracle and the engine, and their
expansions in the power-sum basis.

A power-sum expansion is a dict ``{mu: coeff}`` meaning ``sum coeff * p_mu``
with ``p_() = 1``.  Coefficients are Polys (they carry z for Hall-Littlewood).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

from .arith import ONE, Poly, Z, binomial
from .characters import mn_character
from .partitions import Partition, partitions_of, z_order

FAMILIES = ("e", "p", "h", "hl", "hook", "he", "pkl", "e1e")


@dataclass(frozen=True)
class SymFunSpec:
    """A member of one of the supported families.

    ``hook`` is s_(a, 1^b) with a = k, b = l; ``he`` is h_k e_l; ``pkl`` is the
    sum of monomial functions of weight k and length l; ``e1e`` is e_1 e_k.
    """

    family: str
    k: int
    l: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.k < 0 or (self.l is not None and self.l < 0):
            raise ValueError("indices must be nonnegative")
        two = self.family in ("hook", "he", "pkl")
        if two and self.l is None:
            raise ValueError(f"family {self.family} needs a second index")
        if self.family == "hook" and self.k < 1:
            raise ValueError("hook(a, b) needs a >= 1")

    @property
    def degree(self) -> int:
        if self.family in ("hook", "he"):
            return self.k + self.l
        if self.family == "e1e":
            return self.k + 1
        return self.k

    def __str__(self):
        if self.l is None:
            return f"{self.family}({self.k})"
        return f"{self.family}({self.k},{self.l})"


def hl_bracket(mu: Partition) -> Poly:
    """prod_i (1 - z^{mu_i}) / (1 - z) as an exact polynomial in z.

    The empty partition gets 1, so that P_0 = 1."""
    if not mu:
        return ONE
    num = prod((ONE - Z ** part for part in mu), start=ONE)
    return num.divide_exact(ONE - Z)


def _add(acc: dict, mu: Partition, c):
    v = acc.get(mu, Poly()) + c
    if v:
        acc[mu] = v
    else:
        acc.pop(mu, None)


def _mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for mu, a in f.items():
        for nu, b in g.items():
            _add(out, mu.union(*nu), a * b)
    return out


@lru_cache(maxsize=None)
def _cached(spec: SymFunSpec) -> tuple:
    return tuple(_build(spec).items())


def p_expansion(spec: SymFunSpec) -> dict[Partition, Poly]:
    return dict(_cached(spec))


def _build(spec: SymFunSpec) -> dict:
    fam, k, l = spec.family, spec.k, spec.l
    if fam == "p":
        return {Partition((k,)) if k else P0: ONE}
    if fam == "h":
        return {mu: Poly.const(Fraction(1, z_order(mu))) for mu in partitions_of(k)}
    if fam == "e":
        return {mu: Poly.const(Fraction(mu.sign, z_order(mu))) for mu in partitions_of(k)}
    if fam == "hl":
        return {mu: hl_bracket(mu) * Fraction(1, z_order(mu)) for mu in partitions_of(k)}
    if fam == "hook":
        shape = Partition((k,) + (1,) * l)
        out = {}
        for mu in partitions_of(k + l):
            c = mn_character(shape, mu)
            if c:
                out[mu] = Poly.const(Fraction(c, z_order(mu)))
        return out
    if fam == "he":
        return _mul(p_expansion(SymFunSpec("h", k)), p_expansion(SymFunSpec("e", l)))
    if fam == "e1e":
        return _mul(p_expansion(SymFunSpec("e", 1)), p_expansion(SymFunSpec("e", k)))
    if fam == "pkl":
        out: dict = {}
        for b in range(l, k + 1):
            a = k - b
            sign = -1 if (b - l) % 2 else 1
            coeff = sign * binomial(b, l)
            term = p_expansion(SymFunSpec("e", b)) if a == 0 else p_expansion(SymFunSpec("he", a, b))
            for mu, c in term.items():
                _add(out, mu, c * coeff)
        return out
    raise ValueError(fam)


# p_0 (the number of letters) has no partition index; it is kept under the
# key (0,), which evaluators read as the size of the alphabet.
P0 = tuple.__new__(Partition, (0,))
