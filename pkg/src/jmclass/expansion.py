"""Reduced (n-independent) class expansion coefficients.

For the families p_k, h_k, the one-row Hall-Littlewood P_k(z) and the Jack
deformation of p_k, the coefficients c_rho^(k) are built level by level in k.
Inside a level, partitions whose lowest part is 1 come straight from level
k-1; a partition rho with lowest part p > 1 is solved for from the relation
written at sigma = rho \\ (p) + (p-1), in which c_rho is the only unknown
once the partitions with lowest part p-1 are known.

The relation at weight w only reads weights <= w, so truncating a level at
any maximal weight W gives exact values below W.  Everything else here
(hooks, h_k e_l, p_{k,l}, moments) is a linear combination of these tables.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from .arith import ALPHA, ONE, Poly, Z, binomial
from .characters import central_character, content_eval
from .groupalg import ClassExpansion
from .partitions import (
    Partition,
    pad,
    partition_sort_key,
    partitions_of,
    partitions_upto,
    reduce,
)
from .symfun import SymFunSpec, p_expansion

BASE_FAMILIES = ("p", "h", "hl", "jack_p")
DERIVED_FAMILIES = ("e", "e1e", "hook", "he", "pkl", "moment")


class ReducedExpansion:
    """Map rho -> c_rho for one symmetric function."""

    def __init__(self, family: str, k: int, coeffs=None, l: int | None = None):
        self.family = family
        self.k = k
        self.l = l
        self.coeffs: dict[Partition, Poly] = {}
        for rho, c in (coeffs or {}).items():
            c = Poly.coerce(c)
            if c:
                self.coeffs[Partition(rho)] = c

    def __getitem__(self, rho) -> Poly:
        return self.coeffs.get(Partition(rho), Poly())

    def __eq__(self, other):
        if not isinstance(other, ReducedExpansion):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __len__(self):
        return len(self.coeffs)

    @property
    def label(self) -> str:
        if self.l is None:
            return f"{self.family}({self.k})"
        return f"{self.family}({self.k},{self.l})"

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: partition_sort_key(kv[0]))

    def subs(self, var: str, value) -> "ReducedExpansion":
        return ReducedExpansion(self.family, self.k,
                                {r: c.subs(var, value) for r, c in self.coeffs.items()}, self.l)

    def combine(self, other: "ReducedExpansion", a=1, b=1) -> dict:
        out = defaultdict(Poly)
        for rho, c in self.coeffs.items():
            out[rho] = out[rho] + c * a
        for rho, c in other.coeffs.items():
            out[rho] = out[rho] + c * b
        return out

    def to_json(self) -> dict:
        d = {"family": self.family, "k": self.k}
        if self.l is not None:
            d["l"] = self.l
        d["coeffs"] = {str(r): c.to_json() for r, c in self.items()}
        return d

    @classmethod
    def from_json(cls, data) -> "ReducedExpansion":
        return cls(data["family"], data["k"],
                   {Partition.parse(r): Poly.from_json(c) for r, c in data["coeffs"].items()},
                   data.get("l"))

    def __repr__(self):
        body = ", ".join(f"{r or '()'}: {c}" for r, c in self.items())
        return f"ReducedExpansion({self.label}, {{{body}}})"


# --- the recurrences ------------------------------------------------------------

def _default_cap(k: int) -> int:
    # a product of k transpositions moves at most 2k points
    return 2 * k + 2


class _Levels:
    """Level tables c^(0), c^(1), ... of one family, truncated at weight W."""

    def __init__(self, family: str, cap: int):
        self.family = family
        self.cap = cap
        self.levels: list[dict] = []
        self.lock = threading.Lock()
        self.beta = ALPHA - 1

    def get(self, k: int) -> dict:
        with self.lock:
            while len(self.levels) <= k:
                self.levels.append(self._next(len(self.levels)))
            return self.levels[k]

    def _seed(self, k: int):
        fam = self.family
        if k == 0:
            if fam in ("p", "jack_p"):
                return {Partition((1,)): ONE}
            return {Partition(): ONE}
        if k == 1 and fam == "hl":
            # the general relation needs k >= 2 for this family
            return {Partition((2,)): ONE}
        return None

    def _next(self, k: int) -> dict:
        seeded = self._seed(k)
        if seeded is not None:
            return {r: c for r, c in seeded.items() if sum(r) <= self.cap}
        prev = self.levels[k - 1]
        cur: dict = {}
        mult = ALPHA if self.family == "jack_p" else ONE

        # lowest part 1
        for rho in partitions_upto(self.cap):
            if not rho or rho[-1] != 1:
                continue
            sigma = rho.without(1)
            total = Poly()
            for r, m in sigma.multiplicities().items():
                c = prev.get(sigma.replace([r], [r + 1]))
                if c:
                    total = total + c * (r * m)
            if total:
                cur[rho] = total * mult

        # lowest part p > 1, by weight, then increasing p
        for w in range(2, self.cap + 1):
            by_low = defaultdict(list)
            for rho in partitions_of(w):
                if rho[-1] > 1:
                    by_low[rho[-1]].append(rho)
            for p in sorted(by_low):
                for rho in by_low[p]:
                    sigma = rho.replace([p], [p - 1])
                    total = self._rhs(sigma, prev)
                    for r, m in sigma.multiplicities().items():
                        if r == p - 1:
                            continue
                        c = cur.get(sigma.replace([r], [r + 1]))
                        if c:
                            total = total - c * (r * m)
                    if total:
                        cur[rho] = total * Fraction(1, p - 1)
        return cur

    def _rhs(self, sigma: Partition, prev: dict) -> Poly:
        fam = self.family
        mults = sigma.multiplicities()
        size = sum(sigma)
        c_sigma = prev.get(sigma, Poly())

        s3 = Poly()
        for r, mr in mults.items():
            for s, ms in mults.items():
                weight = r * s * mr * (ms - (r == s))
                if not weight:
                    continue
                c = prev.get(sigma.replace([r, s], [r + s + 1]))
                if c:
                    s3 = s3 + c * weight
        s4 = Poly()
        for t, mt in mults.items():
            for r in range(1, t + 1):
                s = t + 1 - r
                c = prev.get(sigma.replace([t], [r, s]))
                if c:
                    s4 = s4 + c * (t * mt)

        if fam == "p":
            return c_sigma * size + s3 + s4
        m1 = mults.get(1, 0)
        lower = prev.get(sigma.without(1), Poly()) if m1 else Poly()
        if fam == "h":
            return c_sigma * (2 * size) + lower * m1 + s3 + s4
        if fam == "hl":
            return c_sigma * ((2 - Z) * size) + lower * ((1 - Z) * m1) + s3 + s4
        if fam == "jack_p":
            shift = Poly()
            for r, mr in mults.items():
                c = prev.get(sigma.replace([r], [r + 1]))
                if c:
                    shift = shift + c * (r * r * mr)
            return c_sigma * size + s3 * ALPHA + s4 + shift * self.beta
        raise ValueError(fam)


_tables: dict = {}
_tables_lock = threading.Lock()


def _levels(family: str, cap: int) -> _Levels:
    # a table truncated at a larger weight is just as exact below it, so
    # reuse the smallest existing one that is large enough
    with _tables_lock:
        caps = [c for (f, c) in _tables if f == family and c >= cap]
        if caps:
            return _tables[family, min(caps)]
        _tables[family, cap] = _Levels(family, cap)
        return _tables[family, cap]


def reduced_coeffs(family: str, k: int, max_weight: int | None = None) -> ReducedExpansion:
    """c_rho^(k) for family in p, h, hl, jack_p (all rho of weight <= max_weight)."""
    if family not in BASE_FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {BASE_FAMILIES}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    cap = _default_cap(k) if max_weight is None else max_weight
    level = _levels(family, cap).get(k)
    return ReducedExpansion(family, k, {r: c for r, c in level.items() if sum(r) <= cap})


# --- assembly ------------------------------------------------------------------

def assemble(r: ReducedExpansion, n: int) -> ClassExpansion:
    """a_mu(n) = sum over rho with reduce(rho) = reduce(mu) of
    c_rho * binomial(n - |reduce(rho)|, m_1(rho))."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: dict = defaultdict(Poly)
    for rho, c in r.coeffs.items():
        if sum(rho) > n:
            continue
        bar = reduce(rho)
        free = n - sum(bar)
        b = binomial(free, rho.count(1))
        if b:
            out[pad(bar, n)] = out[pad(bar, n)] + c * b
    return ClassExpansion(n, out, r.label)


# --- closed forms -----------------------------------------------------------------

def elementary_expansion(k: int, n: int) -> ClassExpansion:
    """e_k(J): coefficient 1 on every class with n - k cycles."""
    return ClassExpansion(n, {mu: 1 for mu in partitions_of(n) if len(mu) == n - k}, f"e({k})")


def _pair_count(mu: Partition) -> int:
    return sum(binomial(r, 2) for r in mu if r >= 2)


def e1ek_expansion(k: int, n: int) -> ClassExpansion:
    if k < 1:
        raise ValueError("k must be at least 1")
    out = {}
    for mu in partitions_of(n):
        if len(mu) == n - k - 1:
            out[mu] = _pair_count(mu)
        elif len(mu) == n - k + 1:
            out[mu] = binomial(n, 2) - _pair_count(mu)
    return ClassExpansion(n, out, f"e1e({k})")


# --- derived families ---------------------------------------------------------------

def hook_expansion(a: int, b: int, max_weight: int | None = None) -> ReducedExpansion:
    """s_(a,1^b) from the z^b coefficient of the Hall-Littlewood table."""
    if a < 1 or b < 0:
        raise ValueError("hook(a, b) needs a >= 1 and b >= 0")
    hl = reduced_coeffs("hl", a + b, max_weight)
    sign = -1 if b % 2 else 1
    return ReducedExpansion("hook", a, {r: c.coeff("z", b) * sign for r, c in hl.coeffs.items()}, b)


def _linear(family, k, l, terms) -> ReducedExpansion:
    out: dict = defaultdict(Poly)
    for coeff, r in terms:
        for rho, c in r.coeffs.items():
            out[rho] = out[rho] + c * coeff
    return ReducedExpansion(family, k, out, l)


def elementary_reduced(k: int, max_weight: int | None = None) -> ReducedExpansion:
    if k == 0:
        return ReducedExpansion("e", 0, {Partition(): 1})
    h = hook_expansion(1, k - 1, max_weight)
    return ReducedExpansion("e", k, h.coeffs)


def he_expansion(k: int, l: int, max_weight: int | None = None) -> ReducedExpansion:
    """h_k e_l = s_(k,1^l) + s_(k+1,1^(l-1))."""
    if k < 1 or l < 1:
        raise ValueError("he(k, l) needs k, l >= 1")
    return _linear("he", k, l, [(1, hook_expansion(k, l, max_weight)),
                                (1, hook_expansion(k + 1, l - 1, max_weight))])


def e1e_reduced(k: int, max_weight: int | None = None) -> ReducedExpansion:
    r = he_expansion(1, k, max_weight)
    return ReducedExpansion("e1e", k, r.coeffs)


def pkl_expansion(k: int, l: int, max_weight: int | None = None) -> ReducedExpansion:
    """Sum of the monomial functions of weight k and length l,
    as sum_b (-1)^(b-l) binomial(b, l) h_(k-b) e_b."""
    if not 1 <= l <= k:
        raise ValueError("pkl(k, l) needs 1 <= l <= k")
    terms = []
    for b in range(l, k + 1):
        sign = -1 if (b - l) % 2 else 1
        part = elementary_reduced(b, max_weight) if b == k else he_expansion(k - b, b, max_weight)
        terms.append((sign * binomial(b, l), part))
    return _linear("pkl", k, l, terms)


def moment_expansion(k: int) -> ReducedExpansion:
    """s_rho^(k) = c^(k)_{rho + (1)} of the power sum table."""
    p = reduced_coeffs("p", k)
    out = {}
    for rho, c in p.coeffs.items():
        if rho and rho[-1] == 1:
            out[rho.without(1)] = c
    return ReducedExpansion("moment", k, out)


def engine_expansion(spec: SymFunSpec, max_weight: int | None = None) -> ReducedExpansion:
    """The reduced expansion of any supported symmetric function."""
    fam, k, l = spec.family, spec.k, spec.l
    if fam in ("p", "h", "hl"):
        return reduced_coeffs(fam, k, max_weight)
    if fam == "e":
        return elementary_reduced(k, max_weight)
    if fam == "hook":
        return hook_expansion(k, l, max_weight)
    if fam == "he":
        return he_expansion(k, l, max_weight)
    if fam == "pkl":
        return pkl_expansion(k, l, max_weight)
    if fam == "e1e":
        return e1e_reduced(k, max_weight)
    raise ValueError(fam)


def engine_class_expansion(spec: SymFunSpec, n: int) -> ClassExpansion:
    out = assemble(engine_expansion(spec), n)
    out.label = str(spec)
    return out


# --- leading terms and checks -------------------------------------------------------

@lru_cache(maxsize=None)
def catalan_number(r: int) -> int:
    return binomial(2 * r, r) // (r + 1)


def leading_coefficient(rho: Partition, family: str) -> Poly:
    """c_rho^(k) on the top stratum k = |rho| - l(rho), for rho without parts 1."""
    rho = Partition(rho)
    if 1 in rho:
        raise ValueError(f"{rho} has parts equal to 1")
    if family == "h":
        out = 1
        for part in rho:
            out *= catalan_number(part - 1)
        return Poly.const(out)
    if family == "hl":
        from .catalan import gen_catalan
        out = (ONE - Z) ** max(len(rho) - 1, 0)
        for part in rho:
            out = out * gen_catalan(part - 1)
        return out
    raise ValueError("leading_coefficient is defined for h and hl")


def character_side(expansion: ClassExpansion, la: Partition) -> Poly:
    """sum_mu a_mu theta^la_mu."""
    total = Poly()
    for mu, c in expansion.coeffs.items():
        total = total + c * central_character(la, mu)
    return total


def content_identity_check(spec: SymFunSpec, la: Partition) -> bool:
    """f(contents of la) against the central characters of its class expansion."""
    la = Partition(la)
    lhs = content_eval(p_expansion(spec), la)
    rhs = character_side(engine_class_expansion(spec, sum(la)), la)
    return lhs == rhs


def moment_identity(la: Partition, k: int):
    """Both sides of sigma_k(la) = sum_rho s_rho binom(...) theta^la_pad(rho)."""
    from .characters import moment
    la = Partition(la)
    n = sum(la)
    rhs = Fraction(0)
    for rho, c in moment_expansion(k).coeffs.items():
        if sum(rho) > n:
            continue
        bar = reduce(rho)
        b = binomial(n - sum(bar), rho.count(1))
        if b:
            rhs += c.constant() * b * central_character(la, pad(rho, n))
    return moment(la, k), rhs
