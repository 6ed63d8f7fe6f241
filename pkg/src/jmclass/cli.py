"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalan, expansion as ex
from .characters import char_table, moment
from .fixtures import JACK_DISPLAYS, jack_phi_display
from .groupalg import SizeGuard, oracle_expansion
from .partitions import Partition, partitions_of
from .symfun import SymFunSpec
from .verify import DEFAULT_SEED, SUITES, GuardError, run_suite

EXPAND_FAMILIES = ("e", "p", "h", "hl", "hook", "he", "pkl", "e1e")
REDUCED_FAMILIES = ("p", "h", "hl", "jack_p", "e", "hook", "he", "pkl", "e1e", "moment")
TWO_INDEX = ("hook", "he", "pkl")


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, rows=None):
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        for row in rows or []:
            print("\t".join(str(x) for x in row))


def _spec(args) -> SymFunSpec:
    if args.family in TWO_INDEX and args.l is None:
        raise UsageError(f"family {args.family} needs --l")
    try:
        return SymFunSpec(args.family, args.k, args.l if args.family in TWO_INDEX else None)
    except ValueError as err:
        raise UsageError(str(err))


def _check_nonneg(**vals):
    for name, v in vals.items():
        if v is not None and v < 0:
            raise UsageError(f"--{name} must be nonnegative")


def cmd_expand(args) -> int:
    _check_nonneg(k=args.k, l=args.l)
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    spec = _spec(args)
    if args.method == "closed":
        if spec.family == "e":
            res = ex.elementary_expansion(spec.k, args.n)
        elif spec.family == "e1e":
            res = ex.e1ek_expansion(spec.k, args.n)
        else:
            raise UsageError("closed forms exist for e and e1e only")
    else:
        res = ex.engine_class_expansion(spec, args.n)
    _emit(res.to_json(), args.format, [(mu, c) for mu, c in res.items()])
    return 0


def _reduced(args):
    fam, k, l = args.family, args.k, args.l
    if fam in ("p", "h", "hl", "jack_p"):
        return ex.reduced_coeffs(fam, k)
    if fam == "moment":
        return ex.moment_expansion(k)
    return ex.engine_expansion(_spec(args))


def cmd_reduced(args) -> int:
    _check_nonneg(k=args.k, l=args.l)
    try:
        res = _reduced(args)
    except ValueError as err:
        raise UsageError(str(err))
    _emit(res.to_json(), args.format, [(rho or "()", c) for rho, c in res.items()])
    return 0


def cmd_oracle(args) -> int:
    _check_nonneg(k=args.k, l=args.l)
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    try:
        res = oracle_expansion(_spec(args), args.n, force=args.force)
    except SizeGuard as err:
        raise UsageError(str(err))
    _emit(res.to_json(), args.format, [(mu, c) for mu, c in res.items()])
    return 0


def cmd_verify(args) -> int:
    bounds = {"max_n": args.max_n, "max_k": args.max_k, "force": args.force, "seed": args.seed}
    try:
        rep = run_suite(args.suite, **bounds)
    except GuardError as err:
        raise UsageError(str(err))
    if args.format == "json":
        print(json.dumps(rep.to_json(), indent=2))
    else:
        for c in rep.checks:
            print(f"{c['status']}\t{c['id']}\t{c['detail'] if c['status'] != 'pass' else ''}".rstrip())
        print(f"# {rep.suite}: {rep.passed} passed, {rep.failed} failed")
    return 0 if rep.ok else 1


def cmd_catalan(args) -> int:
    _check_nonneg(**{"max-r": args.max_r})
    rows = [(r, catalan.gen_catalan(r, args.method)) for r in range(args.max_r + 1)]
    failed = []
    if args.check:
        for r, v in rows:
            methods = [m for m in catalan.METHODS if r >= 1 or m in ("defsum", "hl_spec")]
            if any(catalan.gen_catalan(r, m) != v for m in methods):
                failed.append(r)
    data = {"catalan": [{"r": r, "value": v.to_json()} for r, v in rows]}
    if args.check:
        data["check"] = {"failed": failed}
    _emit(data, args.format, rows)
    if args.check and args.format != "json":
        print(f"# methods agree: {'yes' if not failed else 'no, at r = ' + str(failed)}")
    return 1 if failed else 0


def _parse_rho(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as err:
        raise UsageError(f"bad partition {text!r}: {err}")


def cmd_genfun(args) -> int:
    if args.order < 1:
        raise UsageError("--order must be positive")
    rho = _parse_rho(args.rho)
    series = catalan.phi_series(args.family, rho, args.order)
    status = None
    if args.check_fixtures:
        if args.family == "hl" and 2 <= sum(rho) <= 7:
            ref = catalan.fixture_series_9_3(rho, args.order)
        elif args.family == "p" and sum(rho) >= 2:
            ref = catalan.phi_closed_form_z1(rho, args.order)
        elif args.family == "jack_p" and rho in JACK_DISPLAYS:
            ref = jack_phi_display(rho, args.order)
        else:
            raise UsageError(f"no reference series for family {args.family} and rho {rho}")
        status = series == ref
    data = {"family": args.family, "rho": str(rho), "order": args.order, "series": series.to_json()}
    if status is not None:
        data["fixture_match"] = status
    rows = [(f"t^{j}", c) for j, c in enumerate(series.coeffs) if c]
    if status is not None:
        rows.append(("# fixture match", status))
    _emit(data, args.format, rows)
    return 0 if status in (None, True) else 1


def cmd_moments(args) -> int:
    _check_nonneg(k=args.k)
    if args.n is None:
        res = ex.moment_expansion(args.k)
        _emit(res.to_json(), args.format, [(rho or "()", c) for rho, c in res.items()])
        return 0
    _check_nonneg(n=args.n)
    rows, data, ok = [], [], True
    for la in partitions_of(args.n):
        lhs, rhs = ex.moment_identity(la, args.k)
        ok &= lhs == rhs
        rows.append((la or "()", moment(la, args.k), "ok" if lhs == rhs else f"expansion gives {rhs}"))
        data.append({"lambda": str(la), "moment": {"num": str(lhs.numerator), "den": str(lhs.denominator)},
                     "matches_expansion": lhs == rhs})
    _emit({"k": args.k, "n": args.n, "moments": data}, args.format, rows)
    return 0 if ok else 1


def cmd_chartable(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    tab = char_table(args.n)
    rows = [("", *tab.partitions)]
    rows += [(la, *(tab[la, mu] for mu in tab.partitions)) for la in tab.partitions]
    _emit(tab.to_json(), args.format, rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jmclass",
        description="Class expansions of symmetric functions of Jucys-Murphy elements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("expand", help="class expansion sum_mu a_mu(n) C_mu")
    p.add_argument("--family", choices=EXPAND_FAMILIES, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("engine", "closed"), default="engine")
    fmt(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("reduced", help="n-independent coefficients c_rho")
    p.add_argument("--family", choices=REDUCED_FAMILIES, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int)
    fmt(p)
    p.set_defaults(func=cmd_reduced)

    p = sub.add_parser("oracle", help="brute-force expansion in the group algebra")
    p.add_argument("--family", choices=EXPAND_FAMILIES, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--force", action="store_true", help="allow n > 8")
    fmt(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help=f"seed for random evaluation points (default {DEFAULT_SEED})")
    p.add_argument("--force", action="store_true", help="lift the size guards")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalan", help="generalized Catalan polynomials")
    p.add_argument("--max-r", type=int, default=10)
    p.add_argument("--method", choices=catalan.METHODS, default="defsum")
    p.add_argument("--check", action="store_true", help="compare all computation methods")
    fmt(p)
    p.set_defaults(func=cmd_catalan)

    p = sub.add_parser("genfun", help="generating series phi_rho(t)")
    p.add_argument("--family", choices=("p", "h", "hl", "jack_p"), required=True)
    p.add_argument("--rho", required=True, help='partition such as "2,2"')
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--check-fixtures", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("moments", help="moments of the transition measure")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, help="evaluate on every partition of n")
    fmt(p)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("chartable", help="character table of S_n")
    p.add_argument("--n", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_chartable)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code or 0)
    try:
        return args.func(args)
    except UsageError as err:
        print(f"jmclass {args.command}: error: {err}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
