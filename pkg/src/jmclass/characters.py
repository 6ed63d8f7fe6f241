"""Symmetric group characters, central characters, content evaluations and
the transition measure of a Young diagram.

Characters come from the Murnaghan-Nakayama rule on beta-sets: removing a
border strip of length r is moving a bead from position b to b - r, with
sign (-1)^(number of beads jumped over).
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Mapping

from .arith import Poly
from .partitions import (
    Partition,
    add_corner,
    contents,
    hook_product,
    partitions_of,
    z_order,
)


class WeightMismatch(ValueError):
    pass


class PoleError(ZeroDivisionError):
    pass


@lru_cache(maxsize=None)
def _mn(beta: frozenset, mu: tuple) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beta:
            continue
        height = sum(1 for c in beta if target < c < b)
        sub = (beta - {b}) | {target}
        total += (-1) ** height * _mn(frozenset(sub), rest)
    return total


def mn_character(la: Partition, mu: Partition) -> int:
    """The irreducible character chi^la evaluated on cycle type mu."""
    if sum(la) != sum(mu):
        raise WeightMismatch(f"|{la}| != |{mu}|")
    l = len(la)
    beta = frozenset(la[i] + l - 1 - i for i in range(l))
    # larger cycles first keeps the recursion shallow
    return _mn(beta, tuple(sorted(mu, reverse=True)))


def dimension(la: Partition) -> int:
    n = sum(la)
    d = factorial(n) // hook_product(la)
    l = len(la)
    num = factorial(n) * prod(
        la[i] - la[j] + j - i for i in range(l) for j in range(i + 1, l)
    )
    den = prod(factorial(la[i] + l - i - 1) for i in range(l))
    if num != d * den:
        raise AssertionError(f"dimension formulas disagree for {la}")
    return d


class CharTable:
    """Full character table of S_n, keyed by (la, mu)."""

    def __init__(self, n: int):
        self.n = n
        self.partitions = partitions_of(n)
        self.values = {
            (la, mu): mn_character(la, mu)
            for la in self.partitions
            for mu in self.partitions
        }

    def __getitem__(self, key) -> int:
        return self.values[key]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "table": {
                str(la): {str(mu): self.values[la, mu] for mu in self.partitions}
                for la in self.partitions
            },
        }


_table_lock = threading.Lock()
_tables: dict[int, CharTable] = {}


def char_table(n: int) -> CharTable:
    with _table_lock:
        if n not in _tables:
            _tables[n] = CharTable(n)
        return _tables[n]


@lru_cache(maxsize=None)
def central_character(la: Partition, mu: Partition) -> Fraction:
    """theta^la_mu = (n!/z_mu) chi^la_mu / dim la."""
    if sum(la) != sum(mu):
        raise WeightMismatch(f"|{la}| != |{mu}|")
    n = sum(la)
    return Fraction(factorial(n) * mn_character(la, mu), z_order(mu) * dimension(la))


def theta_or_zero(la: Partition, mu: Partition | None) -> Fraction:
    """Central character with the convention theta = 0 when mu does not exist."""
    if mu is None:
        return Fraction(0)
    return central_character(la, mu)


# --- contents --------------------------------------------------------------

def content_power_sum(la: Partition, k: int) -> int:
    """p_k of the content alphabet; p_0 is the number of boxes."""
    return sum(c ** k for c in contents(la))


def content_eval(f: Mapping[Partition, object], la: Partition) -> Poly:
    """Evaluate a symmetric function given in the power-sum basis
    (``{mu: coefficient}``, with p_0 read as |la|) on the contents of la."""
    cs = contents(la)
    cache: dict[int, int] = {}

    def p(k):
        if k not in cache:
            cache[k] = sum(c ** k for c in cs)
        return cache[k]

    total = Poly()
    for mu, coeff in f.items():
        total = total + Poly.coerce(coeff) * prod(p(part) for part in mu)
    return total


# --- transition measure ------------------------------------------------------

class TransitionMeasure:
    """Atoms (u_i, c_i) with u_i = la_i - i + 1 and c_i = H_la / H_{la^(i)}."""

    def __init__(self, la: Partition):
        self.la = la
        h = hook_product(la)
        atoms = []
        for i in range(1, len(la) + 2):
            bigger = add_corner(la, i)
            if bigger is None:
                continue
            u = (la[i - 1] if i <= len(la) else 0) - i + 1
            p = Fraction(h, hook_product(bigger))
            if p != _transition_product(la, i):
                raise AssertionError(f"transition probability mismatch at {la}, row {i}")
            atoms.append((u, p))
        self.atoms: tuple[tuple[int, Fraction], ...] = tuple(atoms)

    def moment(self, k: int) -> Fraction:
        return sum((p * u ** k for u, p in self.atoms), Fraction(0))

    def __iter__(self):
        return iter(self.atoms)

    def __repr__(self):
        return f"TransitionMeasure({self.la}, {list(self.atoms)})"


def _transition_product(la: Partition, i: int) -> Fraction:
    l = len(la)
    ext = list(la) + [0]
    li = ext[i - 1]
    out = Fraction(1, li + l - i + 2)
    for j in range(1, l + 2):
        if j == i:
            continue
        lj = ext[j - 1]
        out *= Fraction(li - lj + j - i + 1, li - lj + j - i)
    return out


@lru_cache(maxsize=None)
def transition_measure(la: Partition) -> TransitionMeasure:
    return TransitionMeasure(la)


def moment(la: Partition, k: int) -> Fraction:
    return transition_measure(la).moment(k)


def content_polynomial_value(la: Partition, x) -> Fraction:
    return prod((Fraction(x) + c for c in contents(la)), start=Fraction(1))


def check_moment_series(la: Partition, z0) -> bool:
    """Compare the Cauchy transform of the transition measure at z0 with its
    expression through the content polynomial."""
    z0 = Fraction(z0)
    if z0 == 0:
        raise PoleError("z0 = 0 is a pole")
    lhs = Fraction(0)
    for u, p in transition_measure(la):
        if z0 - u == 0:
            raise PoleError(f"z0 = {z0} hits the atom at {u}")
        lhs += p / (z0 - u)
    c0 = content_polynomial_value(la, -z0)
    cm = content_polynomial_value(la, -z0 - 1)
    cp = content_polynomial_value(la, -z0 + 1)
    if cm == 0 or cp == 0:
        raise PoleError(f"content polynomial vanishes next to z0 = {z0}")
    rhs = c0 * c0 / (z0 * cm * cp)
    return lhs == rhs


# --- linear relations between central characters ------------------------------

def _mult(mu: Partition, r: int) -> int:
    return mu.count(r)


def theorem4_lhs(la: Partition, mu: Partition, r: int) -> Fraction:
    """sum_i c_i(la) (la_i - i + 1)^r theta^{la^(i)}_mu."""
    n = sum(la)
    if sum(mu) != n + 1:
        raise WeightMismatch(f"|{mu}| must be |{la}| + 1")
    total = Fraction(0)
    for i in range(1, len(la) + 2):
        bigger = add_corner(la, i)
        if bigger is None:
            continue
        u = (la[i - 1] if i <= len(la) else 0) - i + 1
        total += Fraction(hook_product(la), hook_product(bigger)) * u ** r * central_character(bigger, mu)
    return total


def theorem4_rhs(la: Partition, mu: Partition, r: int) -> Fraction:
    n = sum(la)
    if sum(mu) != n + 1:
        raise WeightMismatch(f"|{mu}| must be |{la}| + 1")
    parts = sorted(set(mu))
    if r == 0:
        return theta_or_zero(la, mu.without(1))
    if r == 1:
        return sum(
            (q * (_mult(mu, q) + 1) * theta_or_zero(la, mu.replace([q + 1], [q]))
             for q in range(1, max(mu, default=0))),
            Fraction(0),
        )
    if r == 2:
        total = (2 * n - _mult(mu, 1) + 1) * theta_or_zero(la, mu.without(1))
        # first sum: remove r+s+1, add r and s
        for big in parts:
            for a in range(1, big - 1):
                b = big - 1 - a
                coeff = a * b * (_mult(mu, a) + 1) * (_mult(mu, b) + (a == b) + 1)
                total += coeff * theta_or_zero(la, mu.replace([big], [a, b]))
        # second sum: remove r and s (both >= 2), add r+s-1
        for a in parts:
            if a < 2:
                continue
            for b in parts:
                if b < 2:
                    continue
                t = a + b - 1
                coeff = t * (_mult(mu, t) + 1)
                total += coeff * theta_or_zero(la, mu.replace([a, b], [t]))
        return total
    raise ValueError("only r = 0, 1, 2 are covered")


def check_theorem4(la: Partition, mu: Partition, r: int) -> bool:
    return theorem4_lhs(la, mu, r) == theorem4_rhs(la, mu, r)
