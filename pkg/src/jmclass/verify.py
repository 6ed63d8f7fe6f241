"""Verification suites shared by the CLI and the test-suite.

Each suite returns a :class:`Report`; checks are appended in a fixed order
so the JSON report is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from . import catalan, expansion as ex
from .arith import Poly
from .characters import (
    PoleError,
    char_table,
    check_moment_series,
    check_theorem4,
    content_power_sum,
    dimension,
    moment,
)
from .fixtures import HL_JACK_TABLE, JACK_DISPLAYS, fixture_series, jack_phi_display
from .groupalg import MAX_N, oracle_expansion
from .partitions import partitions_of, partitions_upto, z_order
from .symfun import SymFunSpec

DEFAULT_SEED = 20240601
MAX_CHAR_N = 10
SUITES = ("oracle", "characters", "identities", "fixtures", "jack")


class GuardError(ValueError):
    pass


@dataclass
class Report:
    suite: str
    checks: list = field(default_factory=list)

    def add(self, ident: str, ok: bool, detail: str = ""):
        self.checks.append({"id": ident, "status": "pass" if ok else "fail", "detail": detail})

    def extend(self, other: "Report"):
        self.checks.extend(other.checks)

    @property
    def passed(self) -> int:
        return sum(c["status"] == "pass" for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list:
        return [c for c in self.checks if c["status"] != "pass"]

    def to_json(self) -> dict:
        return {"suite": self.suite, "checks": self.checks,
                "passed": self.passed, "failed": self.failed}


def family_specs(max_k: int, with_hl: bool = True):
    """Every spec of the supported families with total degree <= max_k."""
    for k in range(0, max_k + 1):
        yield SymFunSpec("p", k)
        yield SymFunSpec("h", k)
        yield SymFunSpec("e", k)
        if with_hl and k >= 1:
            yield SymFunSpec("hl", k)
    for k in range(1, max_k):
        yield SymFunSpec("e1e", k)
    for a in range(1, max_k + 1):
        for b in range(0, max_k - a + 1):
            yield SymFunSpec("hook", a, b)
    for k in range(1, max_k + 1):
        for l in range(1, max_k - k + 1):
            yield SymFunSpec("he", k, l)
    for k in range(1, max_k + 1):
        for l in range(1, k + 1):
            yield SymFunSpec("pkl", k, l)


def _diff_detail(a, b) -> str:
    bad = a.difference(b)
    return "; ".join(f"{mu}: engine {a[mu]} oracle {b[mu]}" for mu in bad[:3])


# --- suites -----------------------------------------------------------------------

def oracle_suite(max_n: int = 6, max_k: int = 6, force: bool = False) -> Report:
    """Engine expansions against brute force in the group algebra."""
    if max_n > MAX_N and not force:
        raise GuardError(f"oracle suite refuses n > {MAX_N} without --force")
    rep = Report("oracle")
    for n in range(1, max_n + 1):
        for k in range(1, n):
            got = ex.elementary_expansion(k, n)
            want = oracle_expansion(SymFunSpec("e", k), n, force)
            rep.add(f"elementary/e({k})/n={n}", got == want, _diff_detail(got, want))
        for k in range(1, max_k):
            got = ex.e1ek_expansion(k, n)
            want = oracle_expansion(SymFunSpec("e1e", k), n, force)
            rep.add(f"e1e-closed/e1e({k})/n={n}", got == want, _diff_detail(got, want))
    for spec in family_specs(max_k):
        for n in range(1, max_n + 1):
            got = ex.engine_class_expansion(spec, n)
            want = oracle_expansion(spec, n, force)
            rep.add(f"engine/{spec}/n={n}", got.coeffs == want.coeffs, _diff_detail(got, want))
    return rep


def characters_suite(max_n: int = 7, max_k: int = 5, force: bool = False) -> Report:
    """Content evaluation against central characters of the expansion."""
    if max_n > MAX_CHAR_N and not force:
        raise GuardError(f"character suite refuses n > {MAX_CHAR_N} without --force")
    rep = Report("characters")
    for n in range(1, min(max_n, 9) + 1):
        tab = char_table(n)
        parts = tab.partitions
        orth = all(
            sum(tab[la, mu] * tab[la, nu] for la in parts) == (z_order(mu) if mu == nu else 0)
            for mu in parts for nu in parts
        )
        dims = sum(dimension(la) ** 2 for la in parts) == factorial(n)
        rep.add(f"char-table/n={n}", orth and dims)
    for spec in family_specs(max_k):
        for n in range(1, max_n + 1):
            bad = [la for la in partitions_of(n) if not ex.content_identity_check(spec, la)]
            rep.add(f"content/{spec}/n={n}", not bad, f"failing shapes {[str(b) for b in bad[:3]]}")
    return rep


def identities_suite(max_n: int = 7, seed: int = DEFAULT_SEED) -> Report:
    """Linear relations between central characters and transition measure moments."""
    rep = Report("identities")
    rng = random.Random(seed)
    for n in range(0, max_n + 1):
        bad = [(str(la), str(mu), r) for la in partitions_of(n) for mu in partitions_of(n + 1)
               for r in (0, 1, 2) if not check_theorem4(la, mu, r)]
        rep.add(f"theta-relations/n={n}", not bad, f"failing {bad[:3]}")
    for n in range(0, max_n + 1):
        bad = []
        for la in partitions_of(n):
            p1, p2, p3, p4 = (content_power_sum(la, j) for j in (1, 2, 3, 4))
            want = {0: 1, 1: 0, 2: n, 3: 2 * p1,
                    4: 3 * p2 + comb(n + 1, 2),
                    5: 4 * p3 + 2 * (n + 1) * p1,
                    6: 5 * p4 + 3 * (n + 1) * p2 + 2 * p2 + 2 * p1 ** 2 + comb(n + 2, 3)}
            bad += [(str(la), k) for k, v in want.items() if moment(la, k) != v]
        rep.add(f"moments-closed/n={n}", not bad, f"failing {bad[:3]}")
    for n in range(0, max_n + 1):
        bad = []
        for la in partitions_of(n):
            hits = 0
            while hits < 5:
                z0 = Fraction(rng.randint(-60, 60), rng.randint(1, 12))
                try:
                    ok = check_moment_series(la, z0)
                except PoleError:
                    continue
                hits += 1
                if not ok:
                    bad.append((str(la), str(z0)))
        rep.add(f"moment-series/n={n}", not bad, f"failing {bad[:3]}")
    for k in range(0, 9):
        bad = []
        for n in range(0, max_n + 1):
            for la in partitions_of(n):
                lhs, rhs = ex.moment_identity(la, k)
                if lhs != rhs:
                    bad.append(str(la))
        rep.add(f"moment-expansion/k={k}", not bad, f"failing {bad[:3]}")
    return rep


def fixtures_suite(max_w: int = 5, order: int = 13, max_r: int = 20, max_k: int = 10) -> Report:
    """Published values and structural properties of the reduced coefficients."""
    rep = Report("fixtures")
    for r in range(0, max_r + 1):
        methods = [m for m in catalan.METHODS if r >= 1 or m in ("defsum", "hl_spec")]
        vals = [catalan.gen_catalan(r, m) for m in methods]
        same = all(v == vals[0] for v in vals)
        ends = vals[0].subs("z", 0) == ex.catalan_number(r) and vals[0].subs("z", 1) == 1
        rep.add(f"catalan/r={r}", same and ends, str(vals[0]))
    printed = {2: 2 - Poly.var("z"), 3: Poly.var("z") ** 2 - 5 * Poly.var("z") + 5,
               4: (2 - Poly.var("z")) * (Poly.var("z") ** 2 - 7 * Poly.var("z") + 7)}
    for r, v in printed.items():
        rep.add(f"catalan-printed/r={r}", catalan.gen_catalan(r) == v)
    for w in range(2, max_w + 1):
        for rho in partitions_of(w):
            got = catalan.phi_series("hl", rho, order)
            rep.add(f"explicit-series/{rho}", got == fixture_series(rho, order))
    for w in range(2, 9):
        for rho in partitions_of(w):
            ok = catalan.phi_series("p", rho, order) == catalan.phi_closed_form_z1(rho, order)
            rep.add(f"phi-z1/{rho}", ok)
    for w in range(1, 7):
        for rho in partitions_of(w):
            ok = catalan.psi_series(rho, order) == catalan.psi_hook_closed_form(rho, order)
            rep.add(f"psi-z1/{rho}", ok)
    rep.extend(leading_terms(9))
    rep.extend(support_parity(max_k))
    return rep


def leading_terms(max_w: int = 9) -> Report:
    rep = Report("leading")
    for rho in partitions_upto(max_w):
        if not rho or 1 in rho:
            continue
        k = sum(rho) - len(rho)
        for fam in ("h", "hl"):
            got = ex.reduced_coeffs(fam, k, max_weight=sum(rho))[rho]
            want = ex.leading_coefficient(rho, fam)
            rep.add(f"leading/{fam}/{rho}", got == want, f"{got} vs {want}")
    return rep


def support_parity(max_k: int = 10) -> Report:
    rep = Report("support")
    for fam in ("p", "h", "hl", "jack_p"):
        # largest k first so the smaller levels reuse its table
        for k in range(max_k, -1, -1):
            bad = []
            for rho, c in ex.reduced_coeffs(fam, k).coeffs.items():
                d = sum(rho) - len(rho)
                if d > k:
                    bad.append(str(rho))
                # the Jack deformation mixes parities (c_(2)^(2) = alpha - 1)
                elif fam != "jack_p" and (k - d) % 2:
                    bad.append(str(rho))
                elif d == k and 1 in rho and k >= 1:
                    bad.append(str(rho))
                if fam in ("p", "jack_p") and sum(rho) + len(rho) > k + 2:
                    bad.append(str(rho))
                if fam == "hl" and k >= 1 and c.degree("z") > k - 1:
                    bad.append(str(rho))
            rep.add(f"support/{fam}/k={k}", not bad, f"offending {bad[:3]}")
    return rep


def jack_suite(max_k: int = 8, order: int = 10) -> Report:
    rep = Report("jack")
    for k, table in HL_JACK_TABLE.items():
        a1 = {r: c.subs("alpha", 1) for r, c in table.items()}
        a1 = {r: c for r, c in a1.items() if c}
        rep.add(f"table-alpha1/k={k}", a1 == ex.reduced_coeffs("hl", k).coeffs)
        z1 = {r: c.subs("z", 1) for r, c in table.items()}
        z1 = {r: c for r, c in z1.items() if c}
        rep.add(f"table-z1/k={k}", z1 == ex.reduced_coeffs("jack_p", k).coeffs)
    for k in range(0, max_k + 1):
        jp = ex.reduced_coeffs("jack_p", k)
        at1 = {r: c for r, c in ((r, c.subs("alpha", 1)) for r, c in jp.coeffs.items()) if c}
        rep.add(f"jack-alpha1/k={k}", at1 == ex.reduced_coeffs("p", k).coeffs)
        bad = [str(r) for r, c in jp.coeffs.items()
               if any(v < 0 or v.denominator != 1 for v in c.in_beta().values())]
        rep.add(f"jack-nonnegative/k={k}", not bad, f"offending {bad[:3]}")
    for rho in JACK_DISPLAYS:
        ok = catalan.phi_series("jack_p", rho, order) == jack_phi_display(rho, order)
        rep.add(f"jack-series/{rho}", ok)
    return rep


def run_suite(name: str, **bounds) -> Report:
    if name == "all":
        rep = Report("all")
        for s in SUITES:
            rep.extend(run_suite(s, **bounds))
        return rep
    max_n, max_k = bounds.get("max_n"), bounds.get("max_k")
    force = bounds.get("force", False)
    if name == "oracle":
        return oracle_suite(max_n or 6, max_k or 6, force)
    if name == "characters":
        return characters_suite(max_n or 7, max_k or 5, force)
    if name == "identities":
        return identities_suite(max_n or 7, bounds.get("seed", DEFAULT_SEED))
    if name == "fixtures":
        return fixtures_suite()
    if name == "jack":
        return jack_suite()
    raise ValueError(f"unknown suite {name!r}")
