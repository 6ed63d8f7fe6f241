from jmclass.verify import GuardError, Report, jack_suite, leading_terms, oracle_suite, run_suite

import pytest


def test_report_counts():
    rep = Report("x")
    rep.add("a", True)
    rep.add("b", False, "why")
    assert (rep.passed, rep.failed, rep.ok) == (1, 1, False)
    assert rep.failures()[0]["id"] == "b"
    assert rep.to_json()["suite"] == "x"


def test_small_suites_pass():
    assert oracle_suite(4, 3).ok
    assert leading_terms(6).ok
    assert run_suite("identities", max_n=4).ok


def test_guards():
    with pytest.raises(GuardError):
        oracle_suite(9, 2)
    with pytest.raises(ValueError):
        run_suite("bogus")


def test_jack_suite():
    rep = jack_suite(max_k=5, order=8)
    assert rep.ok, rep.failures()[:3]
