import pytest
from hypothesis import given, settings, strategies as st

from jmclass.arith import Poly, Z
from jmclass.groupalg import (
    AlgebraElement,
    ClassExpansion,
    NonCentral,
    SizeGuard,
    class_expand,
    class_sum,
    compose,
    cycle_type,
    evaluate,
    identity,
    jm_element,
    oracle_expansion,
    transposition,
)
from jmclass.partitions import Partition, partitions_of
from jmclass.symfun import SymFunSpec as S, hl_bracket, p_expansion

P = Partition


def as_poly(x):
    return {k: Poly.coerce(v) for k, v in x.terms.items()}


def test_permutations():
    t = transposition(1, 2, 3)
    assert compose(t, t) == identity(3)
    assert cycle_type(identity(4)) == (1, 1, 1, 1)
    assert cycle_type((2, 3, 1, 4)) == (3, 1)
    with pytest.raises(ValueError):
        compose((1, 2), (1, 2, 3))
    # (s o t)(x) = s(t(x))
    s, t = (2, 3, 1), (2, 1, 3)
    assert compose(s, t) == (3, 2, 1)


def test_jm_elements():
    assert not jm_element(1, 3)
    assert jm_element(2, 3).terms == {(2, 1, 3): 1}
    assert len(jm_element(3, 3)) == 2
    with pytest.raises(IndexError):
        jm_element(4, 3)


@pytest.mark.parametrize("n", range(2, 6))
def test_jm_commute(n):
    js = [jm_element(i, n) for i in range(1, n + 1)]
    for a in js:
        for b in js:
            assert a * b == b * a


def test_right_multiplication_matches_product():
    x = jm_element(3, 4) * jm_element(4, 4)
    assert x == jm_element(3, 4).mul_jm(4)


def test_class_expand():
    assert class_expand(evaluate(S("p", 1), 4)).coeffs == {P((2, 1, 1)): 1}
    got = class_expand(evaluate(S("p", 2), 4))
    assert got.coeffs == {P((3, 1)): 1, P((1, 1, 1, 1)): 6}
    assert class_expand(AlgebraElement(3)).coeffs == {}
    with pytest.raises(NonCentral):
        class_expand(jm_element(2, 3))


def test_oracle_examples():
    assert oracle_expansion(S("h", 2), 3).coeffs == {P((3,)): 2, P((1, 1, 1)): 3}
    assert oracle_expansion(S("h", 3), 3).coeffs == {P((2, 1)): 5}
    assert oracle_expansion(S("e", 3), 5).coeffs == {mu: 1 for mu in partitions_of(5) if len(mu) == 2}
    assert oracle_expansion(S("e", 2), 4).coeffs == {P((3, 1)): 1, P((2, 2)): 1}
    assert oracle_expansion(S("hl", 1), 4).coeffs == {P((2, 1, 1)): 1}
    with pytest.raises(SizeGuard):
        evaluate(S("p", 1), 9)


def test_hl_bracket_specializations():
    # P_k(z) interpolates h_k (z = 0) and p_k (z = 1)
    for k in range(1, 7):
        hl = p_expansion(S("hl", k))
        h = p_expansion(S("h", k))
        assert {m: c.subs("z", 0) for m, c in hl.items()} == h
        at1 = {m: c.subs("z", 1) for m, c in hl.items()}
        assert {m: c for m, c in at1.items() if c} == {P((k,)): 1}
    assert hl_bracket(P((2, 1))) == 1 - Z ** 2
    assert hl_bracket(P((3,))) == 1 + Z + Z ** 2


@pytest.mark.parametrize("n", range(1, 7))
def test_evaluation_identities(n):
    for k in range(1, 6):
        hl = as_poly(evaluate(S("hl", k), n))
        assert {s: c.subs("z", 0) for s, c in hl.items()} == as_poly(evaluate(S("h", k), n))
        at1 = {s: c.subs("z", 1) for s, c in hl.items()}
        assert {s: c for s, c in at1.items() if c} == as_poly(evaluate(S("p", k), n))
        assert evaluate(S("hook", k, 0), n) == evaluate(S("h", k), n)
        assert evaluate(S("hook", 1, k - 1), n) == evaluate(S("e", k), n)
        assert evaluate(S("pkl", k, 1), n) == evaluate(S("p", k), n)
        assert evaluate(S("pkl", k, k), n) == evaluate(S("e", k), n)
        total = AlgebraElement(n)
        for l in range(1, k + 1):
            total = total + evaluate(S("pkl", k, l), n)
        assert total == evaluate(S("h", k), n)


@pytest.mark.parametrize("n", range(2, 7))
def test_pieri(n):
    for k in range(1, 5):
        for l in range(1, 6 - k):
            lhs = evaluate(S("he", k, l), n)
            rhs = evaluate(S("hook", k, l), n) + evaluate(S("hook", k + 1, l - 1), n)
            assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 5), st.data())
def test_class_sums_commute(n, data):
    mus = partitions_of(n)
    a = class_sum(data.draw(st.sampled_from(mus)))
    b = class_sum(data.draw(st.sampled_from(mus)))
    prod = a * b
    assert prod == b * a
    class_expand(prod)


def test_expansion_json():
    e = oracle_expansion(S("hl", 3), 4)
    assert ClassExpansion.from_json(e.to_json()) == e
