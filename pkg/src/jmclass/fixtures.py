"""Published values kept as static data: the explicit generating series for
|rho| <= 7, the table of Hall-Littlewood / Jack coefficients for k <= 4 and
the first Jack generating series.

These are transcriptions, not computations; the test suite compares them
with the recurrences so that a typo fails loudly.
"""

from __future__ import annotations

from fractions import Fraction as F
from math import factorial

from .arith import ALPHA, ONE, Poly, TSeries, Z, binomial, series_exp_linear
from .partitions import Partition

BETA = ALPHA - 1


# --- explicit generating series, |rho| = 2..7 ------------------------------------

# rows (i0, i1, ..., ir) -> (a, b, c); rows printed as a pair share a line
TABLE_6 = {
    (4, 0, 0, 0, 0): (F(-7, 2), F(7, 4), F(0)),
    (3, 1, 0, 0, 0): (F(-7, 2), F(7, 4), F(0)),
    (0, 4, 0, 0, 0): (F(-245, 12), F(2035, 24), F(5, 4)),
    (1, 3, 0, 0, 0): (F(-91, 16), F(591, 32), F(-5, 8)),
    (2, 2, 0, 0, 0): (F(-47, 6), F(37, 12), F(5, 24)),
    (2, 0, 1, 0, 0): (F(0), F(0), F(-5, 24)),
    (0, 2, 1, 0, 0): (F(-33, 4), F(-77, 8), F(-5, 4)),
    (0, 0, 0, 0, 1): (F(-33, 4), F(-77, 8), F(-5, 4)),
    (1, 1, 1, 0, 0): (F(-263, 48), F(-197, 96), F(5, 8)),
    (0, 0, 2, 0, 0): (F(115, 12), F(235, 24), F(5, 4)),
    (0, 1, 0, 1, 0): (F(-5, 12), F(115, 24), F(5, 4)),
    (1, 0, 0, 1, 0): (F(-11, 16), F(-49, 32), F(-5, 8)),
}

TABLE_7_UPPER = {
    (4, 0, 0, 0, 0): (F(-47, 10), F(22, 5)),
    (3, 1, 0, 0, 0): (F(-47, 10), F(22, 5)),
    (0, 4, 0, 0, 0): (F(-47, 3), F(212, 3)),
    (1, 3, 0, 0, 0): (F(-172, 15), F(304, 15)),
    (2, 2, 0, 0, 0): (F(-88, 15), F(136, 15)),
    (2, 0, 1, 0, 0): (F(-71, 30), F(-74, 15)),
    (0, 2, 1, 0, 0): (F(-26, 3), F(-40, 3)),
    (0, 0, 0, 0, 1): (F(-26, 3), F(-40, 3)),
    (1, 1, 1, 0, 0): (F(-4, 15), F(-32, 15)),
    (0, 0, 2, 0, 0): (F(37, 3), F(44, 3)),
    (0, 1, 0, 1, 0): (F(11, 6), F(2, 3)),
    (1, 0, 0, 1, 0): (F(-67, 15), F(-116, 15)),
}

TABLE_7_LOWER = {
    (5, 0, 0, 0, 0, 0): (F(-19, 10), F(11, 20), F(0)),
    (4, 1, 0, 0, 0, 0): (F(-19, 10), F(11, 20), F(0)),
    (0, 5, 0, 0, 0, 0): (F(4371, 10), F(6271, 20), F(77, 4)),
    (1, 4, 0, 0, 0, 0): (F(-4167, 50), F(3573, 100), F(-119, 20)),
    (3, 2, 0, 0, 0, 0): (F(0), F(0), F(7, 40)),
    (2, 3, 0, 0, 0, 0): (F(0), F(0), F(7, 8)),
    (3, 0, 1, 0, 0, 0): (F(-9, 2), F(3, 4), F(-7, 40)),
    (0, 3, 1, 0, 0, 0): (F(-1281, 20), F(-3521, 40), F(-49, 4)),
    (2, 1, 1, 0, 0, 0): (F(0), F(0), F(-7, 40)),
    (1, 2, 1, 0, 0, 0): (F(0), F(0), F(63, 20)),
    (1, 0, 2, 0, 0, 0): (F(0), F(0), F(-7, 20)),
    (0, 1, 2, 0, 0, 0): (F(-163, 10), F(717, 20), F(21, 4)),
    (0, 0, 1, 1, 0, 0): (F(-257, 40), F(-1137, 80), F(-7, 4)),
    (2, 0, 0, 1, 0, 0): (F(-163, 20), F(17, 40), F(-7, 40)),
    (0, 2, 0, 1, 0, 0): (F(-3623, 40), F(5417, 80), F(35, 4)),
    (1, 1, 0, 1, 0, 0): (F(1249, 100), F(-1331, 200), F(-7, 4)),
    (1, 0, 0, 0, 1, 0): (F(-1363, 100), F(697, 200), F(7, 20)),
    (0, 1, 0, 0, 1, 0): (F(1849, 20), F(-2091, 40), F(-21, 4)),
    (0, 0, 0, 0, 0, 1): (F(-593, 20), F(907, 40), F(7, 4)),
}


def index_set(r: int) -> list[tuple]:
    """All I = (i0, ..., ir) of nonnegative integers with i0 + sum u*i_u = r."""
    out = []

    def rec(u, left, acc):
        if u > r:
            out.append((left,) + tuple(acc))
            return
        for i in range(left // u + 1):
            rec(u + 1, left - u * i, acc + [i])

    rec(1, r, [])
    return out


def weight_m(index: tuple, w: int, mult: dict) -> int:
    """M_I(w, m) = (-1)^(i0+i1+...) binomial(w-2, i0) prod_u binomial(m_u, i_u)."""
    sign = -1 if sum(index) % 2 else 1
    out = sign * binomial(w - 2, index[0])
    for u, i in enumerate(index[1:], 1):
        out *= binomial(mult.get(u, 0), i)
    return out


def r_poly(k: int) -> Poly:
    """R_k(z) = prod_{j<k} (k - j z) / (k-1)!."""
    out = ONE
    for j in range(1, k):
        out = out * (Poly.const(k) - Z * j)
    return out * F(1, factorial(k - 1))


def _quad(a) -> Poly:
    # z^2 + a (z - 1)
    return Z * Z + (Z - 1) * a


def _quart(a, b) -> Poly:
    # z^4 + a z^2 (z - 1) + b (z - 1)^2
    return Z ** 4 + Z * Z * (Z - 1) * a + (Z - 1) ** 2 * b


def fixture_series(rho: Partition, order: int) -> TSeries:
    """phi_rho(t) from the transcribed closed forms, 2 <= |rho| <= 7."""
    rho = Partition(rho)
    w = sum(rho)
    if not 2 <= w <= 7:
        raise ValueError(f"closed forms are transcribed for 2 <= |rho| <= 7, got {w}")
    eps = rho.sign
    m = rho.multiplicities()
    m1, m2, m3 = m.get(1, 0), m.get(2, 0), m.get(3, 0)
    c2 = binomial(m1, 2)
    c3 = binomial(m1, 3)
    one = TSeries.one(order)

    def B(k):
        return (series_exp_linear(k, order) - one) + (series_exp_linear(-k, order) - one) * eps

    def T(k):
        return (series_exp_linear(k, order) - series_exp_linear(-k, order) * eps).mul_t()

    two_z = 2 - Z
    if w == 2:
        total = B(1)
    elif w == 3:
        total = (B(2) - B(1) * (m1 + 1)) * r_poly(2)
    elif w == 4:
        inner = (_quad(F(-5, 2)) * (2 * m1 + 1) + _quad(F(-11, 2)) * c2
                 - _quad(F(1, 2)) * m2)
        total = (B(3) * r_poly(3) - B(2) * (r_poly(2) * two_z * (m1 + 2)) + B(1) * inner)
    elif w == 5:
        inner2 = (_quad(F(-28, 9)) * (3 * m1 + 3) + _quad(F(-16, 3)) * c2
                  - _quad(F(4, 3)) * m2)
        inner1 = (_quad(F(-7, 6)) * (3 * m1 + 1) + _quad(F(-17, 6)) * (3 * c2)
                  + _quad(F(-19, 2)) * c3 - _quad(F(1, 2)) * (m1 * m2 + 3 * m2 - m3))
        total = (B(4) * r_poly(4) - B(3) * (r_poly(3) * two_z * (m1 + 3))
                 + B(2) * (r_poly(2) * inner2) - B(1) * (two_z * inner1))
    elif w == 6:
        inner3 = (_quad(F(-27, 8)) * (4 * m1 + 6) + _quad(F(-21, 4)) * c2
                  - _quad(F(9, 4)) * m2)
        inner2 = ((Z * Z - 2 * Z + 2) * (6 * m1 + 4) + _quad(F(-11, 3)) * (4 * c2)
                  + _quad(F(-26, 3)) * c3 - _quad(F(4, 3)) * (m1 * m2 + 4 * m2 - m3))
        quart = Poly()
        lin = Poly()
        for index, (a, b, c) in TABLE_6.items():
            mi = weight_m(index, 6, m)
            quart = quart + _quart(a, b) * mi
            lin = lin + Poly.const(c * mi)
        total = (B(5) * r_poly(5) - B(4) * (r_poly(4) * two_z * (m1 + 4))
                 + B(3) * (r_poly(3) * inner3) - B(2) * (r_poly(2) * two_z * inner2)
                 + B(1) * quart + T(1) * ((Z * Z - 1) * (2 * Z - 1) * lin))
    else:
        inner4 = (_quad(F(-88, 25)) * (5 * (m1 + 2)) + _quad(F(-26, 5)) * c2
                  - _quad(F(16, 5)) * m2)
        inner3 = (_quad(F(-99, 40)) * (10 * (m1 + 1)) + _quad(F(-81, 20)) * (5 * c2)
                  + _quad(F(-33, 4)) * c3 - _quad(F(9, 4)) * (m1 * m2 + 5 * m2 - m3))
        upper = Poly()
        for index, (a, b) in TABLE_7_UPPER.items():
            upper = upper + _quart(a, b) * weight_m(index, 7, m)
        lower = Poly()
        lin = Poly()
        for index, (a, b, c) in TABLE_7_LOWER.items():
            mi = weight_m(index, 7, m)
            lower = lower + _quart(a, b) * mi
            lin = lin + Poly.const(c * mi)
        total = (B(6) * r_poly(6) - B(5) * (r_poly(5) * two_z * (m1 + 5))
                 + B(4) * (r_poly(4) * inner4) - B(3) * (r_poly(3) * two_z * inner3)
                 + B(2) * (r_poly(2) * upper) + B(1) * (two_z * lower)
                 + T(1) * (two_z * (Z * Z - 1) * (2 * Z - 1) * lin))
    return total * F(1, factorial(w))


# --- Hall-Littlewood / Jack table, k <= 4 -----------------------------------------

def _table() -> dict:
    a, b, z = ALPHA, BETA, Z
    one_z, two_z = 1 - z, 2 - z
    c3 = z * z - 5 * z + 5
    P = Partition
    return {
        1: {P((2,)): ONE},
        2: {P((3,)): two_z, P((2, 2)): one_z, P((2,)): b, P((1, 1)): a},
        3: {
            P((4,)): c3,
            P((3, 2)): one_z * two_z,
            P((2, 2, 2)): one_z ** 2,
            P((2, 2)): b * one_z * 2,
            P((3,)): b * two_z * 3,
            P((2, 1, 1)): a * one_z,
            P((2, 1)): a * two_z * 2,
            P((2,)): a + b * b,
            P((1, 1)): a * b,
        },
        4: {
            P((5,)): two_z * (z * z - 7 * z + 7),
            P((4, 2)): one_z * c3,
            P((3, 3)): one_z * two_z ** 2,
            P((3, 2, 2)): one_z ** 2 * two_z,
            P((2, 2, 2, 2)): one_z ** 3,
            P((4,)): b * (6 * z * z - 29 * z + 29),
            P((3, 2)): b * one_z * two_z * 4,
            P((2, 2, 2)): b * one_z ** 2 * 3,
            P((3, 1, 1)): a * one_z * two_z,
            P((3, 1)): a * c3 * 3,
            P((3,)): (a * 5 + b * b * 7) * two_z,
            P((2, 2, 1, 1)): a * one_z ** 2,
            P((2, 2, 1)): a * one_z * two_z * 4,
            P((2, 2)): a * c3 * 4 + b * b * one_z * 3,
            P((2, 1, 1)): a * b * one_z * 2,
            P((2, 1)): a * b * two_z * 6,
            P((2,)): a * b * 2 + b ** 3,
            P((1, 1, 1, 1)): a * a * one_z * 3,
            P((1, 1, 1)): a * a * two_z * 4,
            P((1, 1)): a * a + a * b * b,
        },
    }


HL_JACK_TABLE: dict[int, dict[Partition, Poly]] = _table()


# --- Jack generating series -------------------------------------------------------

def _exp(c, order):
    return series_exp_linear(c, order)


def jack_phi_display(rho: Partition, order: int) -> TSeries:
    """The first published Jack generating series (rho of weight 2 or 3)."""
    rho = Partition(rho)
    a = ALPHA
    d1 = a + 1
    d2 = 2 * a + 1
    d3 = a + 2
    e = _exp
    one = TSeries.one(order)
    if rho == (2,):
        num, dens = e(a, order) - e(-1, order), [d1]
    elif rho == (1, 1):
        num, dens = e(a, order) + e(-1, order) * a - one * d1, [d1]
    elif rho in ((3,), (2, 1), (1, 1, 1)):
        if rho == (3,):
            first = e(2 * a, order) - e(-1, order)
            second = e(a, order) - e(-2, order)
            extra = None
        elif rho == (2, 1):
            first = e(2 * a, order) + e(-1, order) * (2 * a)
            second = e(a, order) * 2 + e(-2, order) * a
            extra = None
        else:
            first = e(2 * a, order) - e(-1, order) * (4 * a * a)
            second = e(a, order) * 4 - e(-2, order) * (a * a)
            extra = one
        num = first * d3 - second * d2
        if extra is not None:
            num = num + extra * (d1 * d2 * d3)
        dens = [d1, d2, d3]
    else:
        raise ValueError(f"no published series for {rho}")
    # the series coefficients are polynomials, so each division is exact
    for factor in dens:
        num = num.divide_exact(factor)
    return num


JACK_DISPLAYS = tuple(Partition(p) for p in ((2,), (1, 1), (3,), (2, 1), (1, 1, 1)))
