"""Exact coefficient arithmetic.

Rationals are :class:`fractions.Fraction`.  :class:`Poly` is a sparse
polynomial in the two indeterminates ``z`` and ``alpha`` with rational
coefficients; :class:`TSeries` is a power series in ``t`` with Poly
coefficients, truncated at an explicit order.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

VARS = ("z", "alpha")
_VAR_INDEX = {"z": 0, "alpha": 1}


def binomial(n: int, k: int) -> int:
    """Binomial coefficient; 0 when 0 <= n < k.  Negative ``n`` is rejected."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if n < 0:
        raise ValueError("binomial with negative n is not supported")
    return math.comb(n, k)


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


class Poly:
    """Sparse polynomial in z and alpha over the rationals.

    Terms are stored as ``{(deg_z, deg_alpha): Fraction}`` with no zero
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                c = _as_fraction(c)
                if c:
                    ez, ea = exp
                    if ez < 0 or ea < 0:
                        raise ValueError(f"negative exponent {exp}")
                    clean[(int(ez), int(ea))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # --- constructors ------------------------------------------------
    @classmethod
    def const(cls, c) -> "Poly":
        c = _as_fraction(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Poly":
        exp = [0, 0]
        exp[_VAR_INDEX[name]] = power
        return cls._raw({tuple(exp): Fraction(1)})

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return cls.const(x)

    # --- inspection ----------------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._terms)

    def constant(self) -> Fraction:
        """The value of a constant polynomial (error otherwise)."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0, 0), Fraction(0))

    def degree(self, var: str = "z") -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        i = _VAR_INDEX[var]
        return max((e[i] for e in self._terms), default=-1)

    def coeff(self, var: str, power: int) -> "Poly":
        """Coefficient of ``var**power`` as a polynomial in the other variable."""
        i = _VAR_INDEX[var]
        out = {}
        for e, c in self._terms.items():
            if e[i] == power:
                ne = list(e)
                ne[i] = 0
                out[tuple(ne)] = c
        return Poly._raw(out)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    # --- arithmetic ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            try:
                other = Poly.const(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = _as_fraction(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Poly._raw({})
            return Poly._raw({e: v * c for e, v in self._terms.items()})
        out: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, 0) + c1 * c2
        return Poly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if other.is_constant() and other:
                other = other.constant()
            else:
                return self.divide_exact(other)
        c = _as_fraction(other)
        if not c:
            raise ZeroDivisionError("division of a Poly by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divide_exact(self, divisor: "Poly") -> "Poly":
        """Exact division by a polynomial in a single indeterminate.

        Raises ValueError if the division leaves a remainder.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        used = {i for e in divisor._terms for i in (0, 1) if e[i]}
        if len(used) > 1:
            raise ValueError("divisor must involve a single indeterminate")
        if not used:
            return self / divisor.constant()
        i = used.pop()
        var = VARS[i]
        dd = divisor.degree(var)
        lead = divisor._terms[tuple(dd if j == i else 0 for j in (0, 1))]
        rem = self
        quot = Poly()
        while not rem.is_zero() and rem.degree(var) >= dd:
            top = rem.degree(var)
            head = rem.coeff(var, top) * (1 / lead)
            shift = Poly.var(var, top - dd) * head
            quot = quot + shift
            rem = rem - shift * divisor
        if not rem.is_zero():
            raise ValueError(f"{self} is not divisible by {divisor}")
        return quot

    # --- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        try:
            return self._terms == Poly.const(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # --- evaluation ---------------------------------------------------------
    def eval(self, at: Mapping[str, object]) -> Fraction:
        """Evaluate at rational values; every indeterminate that occurs must be bound."""
        vals = [None, None]
        for name, v in at.items():
            vals[_VAR_INDEX[name]] = _as_fraction(v)
        total = Fraction(0)
        for (ez, ea), c in self._terms.items():
            if (ez and vals[0] is None) or (ea and vals[1] is None):
                missing = "z" if ez and vals[0] is None else "alpha"
                raise KeyError(f"no value bound for {missing}")
            term = c
            if ez:
                term *= vals[0] ** ez
            if ea:
                term *= vals[1] ** ea
            total += term
        return total

    def subs(self, var: str, value) -> "Poly":
        """Substitute a rational or a Poly for one indeterminate."""
        i = _VAR_INDEX[var]
        value = Poly.coerce(value)
        out = Poly()
        powers = {}
        for e, c in self._terms.items():
            k = e[i]
            if k not in powers:
                powers[k] = value ** k
            rest = list(e)
            rest[i] = 0
            out = out + Poly._raw({tuple(rest): c}) * powers[k]
        return out

    def in_beta(self) -> dict[tuple[int, int], Fraction]:
        """Re-expand in powers of beta = alpha - 1.

        Returns ``{(deg_z, deg_beta): coeff}``.
        """
        shifted = self.subs("alpha", Poly.var("alpha") + 1)
        return dict(shifted._terms)

    # --- display ------------------------------------------------------------
    def sorted_terms(self):
        """Terms in canonical order: z-degree descending, then alpha-degree descending."""
        return sorted(self._terms.items(), key=lambda ec: (-ec[0][0], -ec[0][1]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (ez, ea), c in self.sorted_terms():
            mono = []
            if ea:
                mono.append("alpha" if ea == 1 else f"alpha^{ea}")
            if ez:
                mono.append("z" if ez == 1 else f"z^{ez}")
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = "*".join(mono)
                if a != 1:
                    body = f"{a}*{body}"
            else:
                body = str(a)
            pieces.append(("-" if neg else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    # --- serialization ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "terms": [
                {"z": ez, "alpha": ea, "num": str(c.numerator), "den": str(c.denominator)}
                for (ez, ea), c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        terms = {}
        for t in data["terms"]:
            terms[(int(t["z"]), int(t["alpha"]))] = Fraction(int(t["num"]), int(t["den"]))
        return cls(terms)


def rational_to_json(q) -> dict:
    q = _as_fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(data: Mapping) -> Fraction:
    return Fraction(int(data["num"]), int(data["den"]))


Z = Poly.var("z")
ALPHA = Poly.var("alpha")
ONE = Poly.const(1)
ZERO = Poly()


class TSeries:
    """Power series in t with Poly coefficients, known modulo t**order.

    Combining series of different orders keeps the smaller order and sets
    ``mixed_orders`` on the result so the loss of precision is visible.
    """

    __slots__ = ("coeffs", "mixed_orders")

    def __init__(self, coeffs: Iterable, order: int | None = None, mixed_orders: bool = False):
        cs = [Poly.coerce(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = (cs + [ZERO] * order)[:order]
        self.coeffs: tuple[Poly, ...] = tuple(cs)
        self.mixed_orders = mixed_orders

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def zero(cls, order: int) -> "TSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TSeries":
        return cls([ONE], order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff=1) -> "TSeries":
        return cls([ZERO] * power + [Poly.coerce(coeff)], order)

    def __getitem__(self, j: int) -> Poly:
        if j >= self.order:
            raise IndexError(f"coefficient t^{j} beyond truncation order {self.order}")
        return self.coeffs[j]

    def _align(self, other: "TSeries"):
        n = min(self.order, other.order)
        return n, self.mixed_orders or other.mixed_orders or self.order != other.order

    def __add__(self, other):
        if not isinstance(other, TSeries):
            other = TSeries([other], self.order)
        n, mixed = self._align(other)
        return TSeries([self.coeffs[j] + other.coeffs[j] for j in range(n)], n, mixed)

    __radd__ = __add__

    def __neg__(self):
        return TSeries([-c for c in self.coeffs], self.order, self.mixed_orders)

    def __sub__(self, other):
        if not isinstance(other, TSeries):
            other = TSeries([other], self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TSeries):
            c = Poly.coerce(other)
            return TSeries([a * c for a in self.coeffs], self.order, self.mixed_orders)
        n, mixed = self._align(other)
        out = [ZERO] * n
        for i in range(n):
            a = self.coeffs[i]
            if a.is_zero():
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TSeries(out, n, mixed)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a series")
        result = TSeries.one(self.order)
        for _ in range(k):
            result = result * self
        result.mixed_orders = self.mixed_orders
        return result

    def scale(self, c) -> "TSeries":
        return self * c

    def divide_exact(self, divisor: Poly) -> "TSeries":
        return TSeries([c.divide_exact(divisor) if c else c for c in self.coeffs],
                       self.order, self.mixed_orders)

    def negate_t(self) -> "TSeries":
        """The series f(-t)."""
        return TSeries([c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)],
                       self.order, self.mixed_orders)

    def mul_t(self, power: int = 1) -> "TSeries":
        """Multiply by t**power (keeping the order)."""
        return TSeries([ZERO] * power + list(self.coeffs), self.order, self.mixed_orders)

    def div_t(self, power: int = 1) -> "TSeries":
        """Divide by t**power; the order drops by ``power``."""
        for j in range(min(power, self.order)):
            if not self.coeffs[j].is_zero():
                raise ValueError(f"series has a nonzero t^{j} term")
        return TSeries(self.coeffs[power:], max(self.order - power, 0), self.mixed_orders)

    def egf_coeffs(self) -> list[Poly]:
        """The values k! * [t^k], i.e. coefficients with respect to t^k/k!."""
        return [c * math.factorial(j) for j, c in enumerate(self.coeffs)]

    @classmethod
    def from_egf(cls, values: Iterable, order: int | None = None) -> "TSeries":
        vals = list(values)
        return cls([Poly.coerce(v) * Fraction(1, math.factorial(j)) for j, v in enumerate(vals)],
                   order if order is not None else len(vals))

    def valuation(self) -> int | None:
        for j, c in enumerate(self.coeffs):
            if not c.is_zero():
                return j
        return None

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*t^{j}" for j, c in enumerate(self.coeffs) if c)
        return f"TSeries({body or '0'}, order={self.order})"

    def to_json(self) -> list:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: list) -> "TSeries":
        return cls([Poly.from_json(d) for d in data])


def series_exp_linear(c, order: int) -> TSeries:
    """exp(c*t) truncated at ``order`` for a Poly (or rational) ``c``."""
    c = Poly.coerce(c)
    out = []
    power = ONE
    for j in range(order):
        out.append(power * Fraction(1, math.factorial(j)))
        power = power * c
    return TSeries(out, order)
