"""Command line front end.

Three query verbs and a batch verb:

* ``superds algebra info`` prints dimensions of one family member.
* ``superds ds compute`` applies the kernel-mod-image construction to a
  named module at an odd element given on the command line.
* ``superds verify <topic>`` runs one verification suite, optionally
  narrowed by the usual family flags.
* ``superds suite all`` runs every suite and, with ``--out``, writes the
  report files, the summary CSV, and the check chart.

Exit status is 0 when every executed check passes, 1 when some check
fails, and 2 for unusable arguments.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .algebras import LieSA, make_family
from .catalog import ber_power, kac_module
from .ds import ds
from .errors import InvalidParams, SuperDSError
from .normalforms import rank_of
from .reports import (
    SUITE_NAMES,
    build_manifest,
    run_cases,
    suite_cases,
    write_outputs,
)
from .reps import adjoint, natural, trivial

_VERB_TO_SUITE = {
    "thm3": "thm3",
    "q-prop": "q-prop",
    "p-prop": "p-prop",
    "kac-freeness": "kac-freeness",
    "p-kac": "p-kac",
    "tensor-les": "properties",
    "dualpair": "dualpair",
    "split": "split",
    "spherical": "spherical",
}

_U_ALIASES = {"E": "E[1,2]", "F": "E[2,1]"}


def _build_algebra(args) -> LieSA:
    if args.family is None:
        raise InvalidParams("--family is required")
    if args.family == "gl":
        if args.m is None or args.n is None:
            raise InvalidParams("gl needs --m and --n")
        return make_family("gl", args.m, args.n)
    if args.n is None:
        raise InvalidParams(f"{args.family} needs --n")
    return make_family(args.family, args.n)


def _parse_u(g: LieSA, text: str):
    u = {}
    for term in text.replace("+", ",").split(","):
        term = term.strip()
        if not term:
            continue
        label, _, coeff = term.partition("=")
        label = _U_ALIASES.get(label.strip(), label.strip())
        try:
            value = Fraction(coeff.strip()) if coeff else Fraction(1)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidParams(f"bad coefficient in {term!r}: {exc}") from exc
        try:
            i = g.space.index(label)
        except KeyError as exc:
            raise InvalidParams(f"unknown basis label {label!r}") from exc
        u[i] = u.get(i, Fraction(0)) + value
    u = {i: x for i, x in u.items() if x}
    if not u:
        raise InvalidParams("the odd element must be nonzero")
    return u


def _named_module(g: LieSA, name: str):
    if name == "trivial":
        return trivial(g)
    if name == "natural":
        return natural(g)
    if name == "adjoint":
        return adjoint(g)
    if name == "kac-trivial":
        return kac_module(g, (0, 0))
    if name.startswith("ber^"):
        return ber_power(g, int(name[4:]))
    raise InvalidParams(f"unknown module {name!r}")


def _info(args) -> int:
    g = _build_algebra(args)
    params = ", ".join(f"{k}={v}" for k, v in sorted(g.params.items()))
    print(f"family {g.family} ({params})")
    print(f"graded dimension {g.graded_dim()}")
    even, odd = g.graded_dim()
    print(f"superdimension {even - odd}")
    print(f"cartan size {len(g.cartan)}")
    return 0


def _compute(args) -> int:
    g = _build_algebra(args)
    if args.module is None or args.u is None:
        raise InvalidParams("ds compute needs --module and --u")
    mod = _named_module(g, args.module)
    u = _parse_u(g, args.u)
    d = ds(mod, u)
    print(f"module graded dimension {mod.space.graded_dim()}")
    try:
        data = rank_of(g, u)
        print(f"odd element rank data r={data.r} k={data.k} s={data.s} d={data.d}")
    except SuperDSError:
        print("odd element is not in standard form, rank data skipped")
    print(f"cohomology graded dimension {d.graded_dim()}")
    print(f"superdimension {d.sdim}")
    return 0


def _narrow(cases: list[dict], args) -> list[dict]:
    for attr, key in (("m", "m"), ("n", "n"), ("rank", "r"), ("module", "module")):
        want = getattr(args, attr, None)
        if want is None:
            continue
        if attr == "module" and any(c.get("direction") for c in cases):
            key = "direction"
        kept = [c for c in cases if c.get(key) == want]
        if not kept:
            raise InvalidParams(f"no case in this suite has {key}={want!r}")
        cases = kept
    return cases


def _custom_thm3(args) -> list[dict]:
    if args.m is None or args.n is None or args.rank is None:
        raise InvalidParams("--coeffs needs --m, --n, and --rank")
    coeffs = [str(Fraction(c)) for c in args.coeffs.split(",") if c.strip()]
    return [
        {
            "id": "thm3-cli",
            "op": "thm3",
            "m": args.m,
            "n": args.n,
            "r": args.rank,
            "coeffs": coeffs,
        }
    ]


def _run_and_report(cases: list[dict], manifest: dict, args) -> int:
    outcomes = run_cases(cases, jobs=args.jobs)
    for case, rep in outcomes:
        print(rep.summary())
        for name, dims in rep.graded_dims.items():
            print(f"    {name}: ({dims[0]}, {dims[1]})")
    if args.out is not None:
        write_outputs(args.out, manifest, outcomes)
        print(f"wrote {len(outcomes) + 3} files to {args.out}")
    failed = sum(1 for _, rep in outcomes if not rep.passed)
    print(f"{len(outcomes) - failed}/{len(outcomes)} cases passed")
    return 1 if failed else 0


def _verify(args) -> int:
    suite = _VERB_TO_SUITE[args.topic]
    if args.coeffs is not None and args.topic == "thm3":
        cases = _custom_thm3(args)
    else:
        cases = _narrow(suite_cases(suite, seed=args.seed), args)
    manifest = {**build_manifest(suite, args.seed), "cases": cases}
    return _run_and_report(cases, manifest, args)


def _suite(args) -> int:
    manifest = build_manifest(args.name, seed=args.seed)
    return _run_and_report(manifest["cases"], manifest, args)


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=("gl", "q", "p"))
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="directory for report files")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superds", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    algebra = sub.add_parser("algebra", help="family member queries")
    asub = algebra.add_subparsers(dest="action", required=True)
    info = asub.add_parser("info", help="print dimensions")
    _add_family_flags(info)
    info.set_defaults(func=_info)

    dsp = sub.add_parser("ds", help="kernel-mod-image computations")
    dsub = dsp.add_subparsers(dest="action", required=True)
    compute = dsub.add_parser("compute", help="cohomology of a named module")
    _add_family_flags(compute)
    compute.add_argument("--module", help="trivial, natural, adjoint, kac-trivial, ber^n")
    compute.add_argument("--u", help="odd element, e.g. 'E[1,3]' or 'E[1,3]=1,E[2,4]=1/2'")
    compute.set_defaults(func=_compute)

    verify = sub.add_parser("verify", help="run one verification suite")
    verify.add_argument("topic", choices=sorted(_VERB_TO_SUITE))
    _add_family_flags(verify)
    verify.add_argument("--rank", type=int)
    verify.add_argument("--coeffs", help="comma separated tail coefficients")
    verify.add_argument("--module", help="narrow to one degree-0 module or direction")
    _add_run_flags(verify)
    verify.set_defaults(func=_verify)

    suite = sub.add_parser("suite", help="run suites in bulk")
    suite.add_argument("name", choices=SUITE_NAMES)
    _add_run_flags(suite)
    suite.set_defaults(func=_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except SuperDSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
