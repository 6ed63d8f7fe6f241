import pytest
from hypothesis import given, settings, strategies as st

from jmclass import expansion as ex
from jmclass.arith import ALPHA, Poly, Z
from jmclass.groupalg import ClassExpansion, oracle_expansion
from jmclass.partitions import Partition, partitions_of
from jmclass.symfun import SymFunSpec as S

P = Partition


def coeffs(family, k):
    return ex.reduced_coeffs(family, k).coeffs


def test_reduced_examples():
    assert coeffs("p", 2) == {P((3,)): 1, P((1, 1)): 1}
    assert coeffs("hl", 2) == {P((3,)): 2 - Z, P((2, 2)): 1 - Z, P((1, 1)): 1}
    assert coeffs("hl", 3) == {
        P((4,)): Z ** 2 - 5 * Z + 5,
        P((3, 2)): (1 - Z) * (2 - Z),
        P((2, 2, 2)): (1 - Z) ** 2,
        P((2, 1, 1)): 1 - Z,
        P((2, 1)): 2 * (2 - Z),
        P((2,)): Poly.const(1),
    }
    assert coeffs("jack_p", 2) == {P((3,)): 1, P((2,)): ALPHA - 1, P((1, 1)): ALPHA}
    assert coeffs("p", 0) == {P((1,)): 1}
    assert coeffs("h", 0) == {P(): 1}
    assert coeffs("hl", 1) == {P((2,)): 1}
    with pytest.raises(ValueError):
        ex.reduced_coeffs("q", 2)


def test_weight_cap_is_consistent():
    full = coeffs("hl", 5)
    low = ex.reduced_coeffs("hl", 5, max_weight=6).coeffs
    assert low == {r: c for r, c in full.items() if sum(r) <= 6}


@pytest.mark.parametrize("k", range(0, 9))
def test_weights_beyond_two_k_vanish(k):
    for fam in ("p", "h", "hl", "jack_p"):
        big = ex.reduced_coeffs(fam, k, max_weight=2 * k + 4).coeffs
        assert all(sum(r) <= 2 * k + 2 for r in big)


@pytest.mark.parametrize("k", range(1, 11))
def test_hl_specializations(k):
    hl = ex.reduced_coeffs("hl", k)
    at0 = {r: c for r, c in hl.subs("z", 0).coeffs.items() if c}
    at1 = {r: c for r, c in hl.subs("z", 1).coeffs.items() if c}
    assert at0 == coeffs("h", k)
    assert at1 == coeffs("p", k)


def test_assemble_examples():
    got = ex.assemble(ex.reduced_coeffs("p", 2), 4)
    assert got.coeffs == {P((3, 1)): 1, P((1, 1, 1, 1)): 6}
    assert ex.assemble(ex.reduced_coeffs("h", 3), 3).coeffs == {P((2, 1)): 5}
    assert ex.assemble(ex.ReducedExpansion("p", 1), 5).coeffs == {}


def test_closed_forms():
    assert ex.elementary_expansion(2, 4).coeffs == {P((3, 1)): 1, P((2, 2)): 1}
    assert ex.elementary_expansion(0, 3).coeffs == {P((1, 1, 1)): 1}
    assert ex.elementary_expansion(3, 5).coeffs == {P((4, 1)): 1, P((3, 2)): 1}
    assert ex.elementary_expansion(5, 4).coeffs == {}
    e = ex.e1ek_expansion(2, 5)
    assert e[P((4, 1))] == 6 and e[P((3, 2))] == 4 and e[P((2, 1, 1, 1))] == 9
    assert e[P((5,))] == 0


def test_hooks_and_products():
    h21 = ex.hook_expansion(2, 1).coeffs
    assert h21 == {P((4,)): 5, P((3, 2)): 3, P((2, 2, 2)): 2, P((2, 1, 1)): 1, P((2, 1)): 2}
    for k in range(1, 6):
        assert ex.hook_expansion(k, 0).coeffs == coeffs("h", k)
        assert ex.pkl_expansion(k, 1).coeffs == coeffs("p", k)
        assert ex.pkl_expansion(k, k).coeffs == ex.hook_expansion(1, k - 1).coeffs
        total = {}
        for l in range(1, k + 1):
            for r, c in ex.pkl_expansion(k, l).coeffs.items():
                total[r] = total.get(r, Poly()) + c
        assert {r: c for r, c in total.items() if c} == coeffs("h", k)
        for n in range(k + 1, 8):
            assert ex.assemble(ex.hook_expansion(1, k - 1), n) == ex.elementary_expansion(k, n)


@pytest.mark.parametrize("n", range(1, 7))
def test_engine_matches_oracle(n):
    for spec in (S("p", 3), S("h", 4), S("hl", 4), S("hook", 2, 2), S("he", 2, 1),
                 S("pkl", 4, 2), S("e1e", 3), S("e", 3)):
        assert ex.engine_class_expansion(spec, n) == oracle_expansion(spec, n)


def test_leading_coefficients():
    assert ex.leading_coefficient(P((5,)), "h") == 14
    assert ex.leading_coefficient(P((3, 2)), "hl") == (1 - Z) * (2 - Z)
    assert ex.leading_coefficient(P((5,)), "hl") == (2 - Z) * (Z ** 2 - 7 * Z + 7)
    with pytest.raises(ValueError):
        ex.leading_coefficient(P((2, 1)), "h")


def test_moment_expansion():
    m2 = ex.moment_expansion(2)
    assert m2[P((1,))] == 1 and m2[P()] == 0 and m2[P((2,))] == 0
    assert ex.moment_expansion(0).coeffs == {P(): 1}
    assert ex.moment_expansion(3)[P((2,))] == coeffs("p", 3).get(P((2, 1)), 0)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(0, 7))
def test_moment_identity(k, n):
    for la in partitions_of(n):
        lhs, rhs = ex.moment_identity(la, k)
        assert lhs == rhs


def test_content_identity_examples():
    assert ex.content_identity_check(S("p", 2), P((2, 1)))
    assert ex.content_identity_check(S("h", 0), P((3, 1)))
    assert ex.content_identity_check(S("hl", 3), P((3, 1)))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["p", "h", "hl", "e"]), st.integers(0, 5), st.integers(1, 7), st.data())
def test_content_identity_random(family, k, n, data):
    if family == "hl" and k == 0:
        k = 1
    la = data.draw(st.sampled_from(partitions_of(n)))
    assert ex.content_identity_check(S(family, k), la)


def test_json_round_trip():
    r = ex.reduced_coeffs("hl", 4)
    assert ex.ReducedExpansion.from_json(r.to_json()) == r
    j = ex.reduced_coeffs("jack_p", 3)
    assert ex.ReducedExpansion.from_json(j.to_json()) == j
    c = ex.engine_class_expansion(S("hl", 3), 5)
    assert ClassExpansion.from_json(c.to_json()) == c
    keys = list(r.to_json()["coeffs"])
    assert keys == sorted(keys, key=lambda s: ex.partition_sort_key(Partition.parse(s)))
