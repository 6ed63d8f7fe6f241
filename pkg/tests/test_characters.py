from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from jmclass.arith import Poly
from jmclass.characters import (
    PoleError,
    WeightMismatch,
    central_character,
    char_table,
    check_moment_series,
    check_theorem4,
    content_eval,
    content_power_sum,
    dimension,
    mn_character,
    moment,
    transition_measure,
)
from jmclass.groupalg import cycle_type
from jmclass.partitions import Partition, partitions_of, z_order
from itertools import permutations

from conftest import partitions

P = Partition


def test_small_characters():
    assert mn_character(P((2, 1)), P((3,))) == -1
    assert mn_character(P((2, 1)), P((2, 1))) == 0
    assert all(mn_character(P((5,)), mu) == 1 for mu in partitions_of(5))
    with pytest.raises(WeightMismatch):
        mn_character(P((2,)), P((1,)))


@pytest.mark.parametrize("n", range(2, 7))
def test_standard_representation(n):
    # chi^(n-1,1) = (number of fixed points) - 1, checked on every permutation
    la = P((n - 1, 1))
    for s in permutations(range(1, n + 1)):
        fixed = sum(1 for i, x in enumerate(s, 1) if i == x)
        assert mn_character(la, cycle_type(s)) == fixed - 1


@pytest.mark.parametrize("n", range(1, 10))
def test_table_invariants(n):
    tab = char_table(n)
    ps = tab.partitions
    ident = P((1,) * n)
    for la in ps:
        assert tab[la, ident] == dimension(la) > 0
    assert sum(dimension(la) ** 2 for la in ps) == factorial(n)
    for mu in ps:
        for nu in ps:
            s = sum(tab[la, mu] * tab[la, nu] for la in ps)
            assert s == (z_order(mu) if mu == nu else 0)


def test_dimensions_and_central_characters():
    assert dimension(P((2, 1))) == 2
    assert dimension(P((3, 2))) == 5
    assert dimension(P((1,) * 6)) == 1
    assert central_character(P((2, 1)), P((3,))) == -1
    assert central_character(P((2,)), P((2,))) == 1
    for la in partitions_of(5):
        assert central_character(la, P((1,) * 5)) == 1


def test_content_power_sums():
    assert content_power_sum(P((2, 1)), 1) == 0
    assert content_power_sum(P((2, 2)), 2) == 2
    assert content_power_sum(P((3, 1)), 0) == 4
    # e_2 = (p_1^2 - p_2) / 2
    e2 = {P((1, 1)): Fraction(1, 2), P((2,)): Fraction(-1, 2)}
    assert content_eval(e2, P((2, 1))) == -1


def test_transition_measure_examples():
    assert transition_measure(P()).atoms == ((0, 1),)
    assert transition_measure(P((1,))).atoms == ((1, Fraction(1, 2)), (-1, Fraction(1, 2)))
    assert transition_measure(P((2, 1))).atoms == (
        (2, Fraction(3, 8)), (0, Fraction(1, 4)), (-2, Fraction(3, 8)))
    for la in (P((2, 1)), P((3, 2, 1)), P((4,))):
        assert moment(la, 2) == sum(la)
    assert moment(P((2, 1)), 3) == 0 == 2 * content_power_sum(P((2, 1)), 1)
    assert moment(P(), 0) == 1 and moment(P(), 1) == 0


@given(partitions(max_n=10))
def test_low_moments(la):
    n = sum(la)
    assert moment(la, 0) == 1
    assert moment(la, 1) == 0
    assert moment(la, 2) == n
    atoms = [u for u, _ in transition_measure(la)]
    assert atoms == sorted(atoms, reverse=True)


@given(partitions(max_n=9))
def test_higher_moments(la):
    n = sum(la)
    p = {j: content_power_sum(la, j) for j in range(1, 5)}
    assert moment(la, 4) == 3 * p[2] + comb(n + 1, 2)
    assert moment(la, 5) == 4 * p[3] + 2 * (n + 1) * p[1]
    assert moment(la, 6) == 5 * p[4] + 3 * (n + 1) * p[2] + 2 * p[2] + 2 * p[1] ** 2 + comb(n + 2, 3)


def test_moment_series_examples():
    assert check_moment_series(P((1,)), 3)
    assert check_moment_series(P(), 5)
    assert check_moment_series(P((3, 2, 1)), Fraction(7, 2))
    with pytest.raises(PoleError):
        check_moment_series(P((1,)), 1)


@settings(max_examples=60)
@given(partitions(max_n=8), st.fractions(max_denominator=9))
def test_moment_series_random(la, z0):
    try:
        assert check_moment_series(la, z0)
    except PoleError:
        pass


def test_theta_relation_examples():
    assert check_theorem4(P((1,)), P((2,)), 0)
    assert check_theorem4(P((1,)), P((1, 1)), 0)
    assert check_theorem4(P((2, 1)), P((2, 2)), 2)
    with pytest.raises(WeightMismatch):
        check_theorem4(P((1,)), P((1,)), 0)


@pytest.mark.parametrize("n", range(0, 6))
def test_theta_relations_all(n):
    for la in partitions_of(n):
        for mu in partitions_of(n + 1):
            for r in (0, 1, 2):
                assert check_theorem4(la, mu, r), (la, mu, r)


def test_chartable_json():
    data = char_table(3).to_json()
    assert data["table"]["2,1"] == {"3": -1, "2,1": 0, "1,1,1": 2}
