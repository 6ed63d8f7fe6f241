"""Brute-force ground truth in the group algebra of S_n.

Permutations are tuples in one-line notation on 1..n, and composition is
``(s o t)(x) = s(t(x))``.  With this convention right-multiplying ``s`` by
the transposition ``(j i)`` just swaps entries ``j`` and ``i`` of ``s``, which
is how powers of Jucys-Murphy elements are built without a general product.

Coefficients of an :class:`AlgebraElement` may be ints, Fractions or Polys;
:func:`class_expand` always returns Poly coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .arith import Poly, binomial
from .partitions import Partition, partition_sort_key, partitions_of, z_order
from .symfun import P0, SymFunSpec, p_expansion

MAX_N = 8

Permutation = tuple


class NonCentral(ValueError):
    def __init__(self, first, second, a, b):
        super().__init__(
            f"not central: {first} and {second} have the same cycle type "
            f"but coefficients {a} and {b}"
        )
        self.witnesses = (first, second)


class SizeGuard(ValueError):
    pass


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(s: Permutation, t: Permutation) -> Permutation:
    if len(s) != len(t):
        raise ValueError(f"size mismatch: S_{len(s)} vs S_{len(t)}")
    return tuple(s[x - 1] for x in t)


def inverse(s: Permutation) -> Permutation:
    out = [0] * len(s)
    for i, x in enumerate(s, 1):
        out[x - 1] = i
    return tuple(out)


def transposition(j: int, i: int, n: int) -> Permutation:
    p = list(range(1, n + 1))
    p[j - 1], p[i - 1] = p[i - 1], p[j - 1]
    return tuple(p)


def cycle_type(s: Permutation) -> Partition:
    seen = [False] * len(s)
    lengths = []
    for start in range(len(s)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = s[x] - 1
            length += 1
        lengths.append(length)
    return Partition.from_parts(lengths)


@lru_cache(maxsize=None)
def _classes(n: int) -> dict:
    """All permutations of S_n grouped by cycle type (one-line order)."""
    out: dict = {mu: [] for mu in partitions_of(n)}
    for s in permutations(range(1, n + 1)):
        out[cycle_type(s)].append(s)
    return out


def class_representative(mu: Partition) -> Permutation:
    """The lexicographically smallest one-line form of cycle type mu."""
    return _classes(sum(mu))[mu][0]


class AlgebraElement:
    """Sparse element of the group algebra of S_n."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms: dict = {}
        for s, c in (terms or {}).items():
            if len(s) != n:
                raise ValueError(f"{s} is not in S_{n}")
            if c:
                self.terms[s] = c

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls(n, {identity(n): 1})

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"size mismatch: S_{self.n} vs S_{other.n}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for s, c in other.terms.items():
            v = out.get(s, 0) + c
            if v:
                out[s] = v
            else:
                out.pop(s, None)
        return AlgebraElement._wrap(self.n, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "AlgebraElement":
        if not c:
            return AlgebraElement(self.n)
        return AlgebraElement(self.n, {s: v * c for s, v in self.terms.items()})

    @classmethod
    def _wrap(cls, n, terms):
        el = cls.__new__(cls)
        el.n, el.terms = n, terms
        return el

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        if is_central(self) and is_central(other):
            return self._mul_central(other)
        out: dict = {}
        for s, a in self.terms.items():
            for t, b in other.terms.items():
                st = compose(s, t)
                v = out.get(st, 0) + a * b
                if v:
                    out[st] = v
                else:
                    out.pop(st, None)
        return AlgebraElement._wrap(self.n, out)

    def _mul_central(self, other) -> "AlgebraElement":
        # both factors central: (x y)(pi) = sum_s x(s) y(s^-1 pi) is a class
        # function, so it is enough to compute it on one representative per
        # class, and y(s^-1 pi) only depends on a cycle type
        ycls = _class_coeffs(other)
        out = {}
        for mu, perms in _classes(self.n).items():
            pi = perms[0]
            acc = 0
            for s, a in self.terms.items():
                b = ycls.get(cycle_type(compose(inverse(s), pi)))
                if b:
                    acc = acc + a * b
            if acc:
                out.update(dict.fromkeys(perms, acc))
        return AlgebraElement._wrap(self.n, out)

    def mul_transposition(self, j: int, i: int) -> "AlgebraElement":
        """Right multiplication by (j i)."""
        out = {}
        for s, c in self.terms.items():
            t = list(s)
            t[j - 1], t[i - 1] = t[i - 1], t[j - 1]
            out[tuple(t)] = c
        return AlgebraElement._wrap(self.n, out)

    def mul_jm(self, m: int) -> "AlgebraElement":
        """Right multiplication by J_m."""
        out: dict = {}
        for j in range(1, m):
            for s, c in self.terms.items():
                t = list(s)
                t[j - 1], t[m - 1] = t[m - 1], t[j - 1]
                t = tuple(t)
                v = out.get(t, 0) + c
                if v:
                    out[t] = v
                else:
                    out.pop(t, None)
        return AlgebraElement._wrap(self.n, out)

    def mul_power_sum(self, k: int) -> "AlgebraElement":
        """Right multiplication by p_k(J_1, ..., J_n); p_0 acts as n."""
        if k == 0:
            return self.scale(self.n)
        total = AlgebraElement(self.n)
        for m in range(2, self.n + 1):
            x = self
            for _ in range(k):
                x = x.mul_jm(m)
            total = total + x
        return total

    def __repr__(self):
        return f"AlgebraElement(n={self.n}, {len(self.terms)} terms)"


def is_central(x: AlgebraElement) -> bool:
    try:
        _class_coeffs(x)
    except NonCentral:
        return False
    return True


def _class_coeffs(x: AlgebraElement) -> dict:
    classes = _classes(x.n)
    out = {}
    for mu, perms in classes.items():
        first = perms[0]
        c = x.terms.get(first, 0)
        for s in perms[1:]:
            d = x.terms.get(s, 0)
            if d != c:
                raise NonCentral(first, s, c, d)
        if c:
            out[mu] = c
    return out


def jm_element(i: int, n: int) -> AlgebraElement:
    """J_i = sum_{j<i} (j i); J_1 is zero."""
    if not 1 <= i <= n:
        raise IndexError(f"J_{i} does not exist in S_{n}")
    return AlgebraElement(n, {transposition(j, i, n): 1 for j in range(1, i)})


# --- evaluation of symmetric functions ------------------------------------------

def _guard(n: int, force: bool):
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_N and not force:
        raise SizeGuard(f"n = {n} exceeds the oracle limit {MAX_N}; pass force=True")


@lru_cache(maxsize=None)
def _power_sum_product(mu: tuple, n: int) -> AlgebraElement:
    if not mu:
        return AlgebraElement.one(n)
    return _power_sum_product(mu[:-1], n).mul_power_sum(mu[-1])


@lru_cache(maxsize=None)
def _newton(kind: str, k: int, n: int) -> AlgebraElement:
    # k e_k = sum_i (-1)^(i-1) e_{k-i} p_i ; k h_k = sum_i h_{k-i} p_i
    if k == 0:
        return AlgebraElement.one(n)
    total = AlgebraElement(n)
    for i in range(1, k + 1):
        sign = -1 if (kind == "e" and i % 2 == 0) else 1
        total = total + _newton(kind, k - i, n).mul_power_sum(i).scale(sign)
    return total.scale(Fraction(1, k))


def _from_p_expansion(f: dict, n: int) -> AlgebraElement:
    total = AlgebraElement(n)
    for mu, c in f.items():
        parts = (0,) if mu == P0 else tuple(mu)
        total = total + _power_sum_product(parts, n).scale(c)
    return total


@lru_cache(maxsize=None)
def _evaluate(spec: SymFunSpec, n: int) -> AlgebraElement:
    fam, k, l = spec.family, spec.k, spec.l
    if fam == "p":
        return _power_sum_product((k,), n)
    if fam in ("e", "h"):
        return _newton(fam, k, n)
    if fam in ("hl", "hook"):
        return _from_p_expansion(p_expansion(spec), n)
    if fam == "he":
        return _evaluate(SymFunSpec("h", k), n) * _evaluate(SymFunSpec("e", l), n)
    if fam == "e1e":
        return _evaluate(SymFunSpec("e", 1), n) * _evaluate(SymFunSpec("e", k), n)
    if fam == "pkl":
        total = AlgebraElement(n)
        for b in range(l, k + 1):
            a = k - b
            term = _evaluate(SymFunSpec("e", b), n) if a == 0 else _evaluate(SymFunSpec("he", a, b), n)
            sign = -1 if (b - l) % 2 else 1
            total = total + term.scale(sign * binomial(b, l))
        return total
    raise ValueError(fam)


def evaluate(spec: SymFunSpec, n: int, force: bool = False) -> AlgebraElement:
    """f(J_1, ..., J_n) as an explicit group algebra element."""
    _guard(n, force)
    return _evaluate(spec, n)


# --- class expansions ----------------------------------------------------------

class ClassExpansion:
    """Coefficients a_mu(n) of sum_mu a_mu C_mu, over all mu |- n."""

    def __init__(self, n: int, coeffs=None, label: str = ""):
        self.n = n
        self.label = label
        self.coeffs: dict[Partition, Poly] = {}
        for mu, c in (coeffs or {}).items():
            mu = Partition(mu)
            if sum(mu) != n:
                raise ValueError(f"{mu} is not a partition of {n}")
            c = Poly.coerce(c)
            if c:
                self.coeffs[mu] = c

    def __getitem__(self, mu) -> Poly:
        return self.coeffs.get(Partition(mu), Poly())

    def __eq__(self, other):
        if not isinstance(other, ClassExpansion):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self):
        body = ", ".join(f"{mu}: {c}" for mu, c in self.items())
        return f"ClassExpansion(n={self.n}, {{{body}}})"

    def items(self):
        """Nonzero coefficients in reverse-lexicographic order."""
        return sorted(self.coeffs.items(), key=lambda kv: partition_sort_key(kv[0]))

    def difference(self, other: "ClassExpansion") -> list:
        keys = set(self.coeffs) | set(other.coeffs)
        return sorted((mu for mu in keys if self[mu] != other[mu]), key=partition_sort_key)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "label": self.label,
            "coeffs": {str(mu): c.to_json() for mu, c in self.items()},
        }

    @classmethod
    def from_json(cls, data) -> "ClassExpansion":
        return cls(
            data["n"],
            {Partition.parse(k): Poly.from_json(v) for k, v in data["coeffs"].items()},
            data.get("label", ""),
        )


def class_expand(x: AlgebraElement, label: str = "") -> ClassExpansion:
    return ClassExpansion(x.n, _class_coeffs(x), label)


def class_sum(mu: Partition) -> AlgebraElement:
    return AlgebraElement(sum(mu), {s: 1 for s in _classes(sum(mu))[mu]})


def oracle_expansion(spec: SymFunSpec, n: int, force: bool = False) -> ClassExpansion:
    return class_expand(evaluate(spec, n, force), str(spec))


def class_size(mu: Partition) -> int:
    return factorial(sum(mu)) // z_order(mu)
