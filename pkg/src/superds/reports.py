"""Reproducible verification suites: case catalogs, runners, artifacts.

A case is a plain JSON-ready dict with an ``id`` and an ``op``; ``run_case``
maps it to a structured Report.  A manifest freezes a suite's case list
together with the seed that generated the randomized ones, so re-running the
manifest reproduces every report file byte for byte.  ``run_manifest`` writes
one JSON report per case, a summary CSV ordered by case id, a PNG chart of
check outcomes, and the manifest itself with content digests of the reports.
"""

from __future__ import annotations

import csv
import hashlib
import json
import random
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from matplotlib.figure import Figure

from .algebras import LieSA, SubalgebraSpec, as_algebra, make_family
from .catalog import (
    ber_power,
    dominant_weights,
    gl_simple,
    kac_module,
    so_subalgebra,
    sp2_subalgebra,
    spherical_expected,
)
from .checks import Report
from .ds import ds, gu_algebra, les_check, multiplicity_pairing_check, tensor_iso_check
from .errors import InvalidParams
from .homology import duality_pairing_check, invariant_exterior
from .linalg import Matrix, column_span
from .normalforms import RankData, standard_u, u_minus, u_plus
from .reps import (
    KacData,
    Rep,
    character,
    dual,
    invariants,
    kac_induce,
    kac_zero_part,
    parity_shift,
    rep_build,
    tensor,
    trivial,
)
from .serialize import serialize
from .spaces import build_space
from .symmetry import (
    family_toral,
    g_u_k,
    kac_differential_compare,
    product_structure_check,
    r_freeness,
    split_examples,
    split_tilde,
)

Vec = dict[int, Fraction]
ONE = Fraction(1)

SCHEMA = 1
ARTIFACT_VERSION = "0.1.0"


def short_grading(g: LieSA) -> tuple[int, ...]:
    """The compatible Z-grading with the upper odd block in degree +1."""
    if g.family == "gl":
        m, n = g.params["m"], g.params["n"]
        return (0,) * (m * m + n * n) + (1,) * (m * n) + (-1,) * (m * n)
    if g.family == "p":
        n = g.params["n"]
        return (0,) * (n * n) + (1,) * (n * (n + 1) // 2) + (-1,) * (n * (n - 1) // 2)
    raise InvalidParams(f"no compatible short grading for family {g.family!r}")


def _sig(n: int) -> str:
    return str(n).replace("-", "m")


def _case(op: str, cid: str, **params) -> dict:
    return {"id": cid, "op": op, **params}


def _family_of(case: dict) -> LieSA:
    fam = case["family"]
    if fam == "gl":
        return make_family("gl", case["m"], case["n"])
    return make_family(fam, case["n"])


def _standard_odd(g: LieSA) -> Vec:
    if g.family == "q":
        return standard_u(g, RankData("q", r=1))
    return standard_u(g, RankData("gl", r=1))


# ---------------------------------------------------------------------------
# case catalogs, one builder per suite


def _catalog_cases() -> list[dict]:
    cases = []
    for n in range(-3, 4):
        cases.append(_case("catalog", f"catalog-ber-{_sig(n)}", module="ber", power=n))
        cases.append(
            _case("catalog", f"catalog-ber-shift-{_sig(n)}", module="ber-shift", power=n)
        )
        cases.append(
            _case("catalog", f"catalog-kac-ber-{_sig(n)}", module="kac-ber", power=n)
        )
    for lam in ((1, 0), (2, 1), (3, -1)):
        cid = f"catalog-typical-{_sig(lam[0])}-{_sig(lam[1])}"
        cases.append(_case("catalog", cid, module="typical", weight=list(lam)))
    return cases


_GL_GRID = ((1, 1), (2, 1), (2, 2), (3, 2))


def _thm3_cases() -> list[dict]:
    cases = []
    for m, n in _GL_GRID:
        for r in range(1, min(m, n) + 1):
            tail = [str(Fraction(j, 2)) for j in range(1, r + 1)]
            for tag, coeffs in (("zero", []), ("tail", tail)):
                cid = f"thm3-gl{m}x{n}-r{r}-{tag}"
                cases.append(_case("thm3", cid, m=m, n=n, r=r, coeffs=coeffs))
    return cases


def _qprop_cases() -> list[dict]:
    cases = []
    for n in (2, 3, 4):
        for r in range(0, n // 2 + 1):
            for k in range(0, n - 2 * r + 1):
                if r + k == 0:
                    continue
                cid = f"qprop-q{n}-r{r}-k{k}"
                cases.append(_case("qprop", cid, n=n, r=r, k=k, coeffs=["1"] * k))
    return cases


def _pprop_cases() -> list[dict]:
    cases = []
    for n in (3, 4):
        for r in range(0, n // 2 + 1):
            for s in range(0, n // 2 + 1):
                for d in (0, 1):
                    if r + s + d == 0:
                        continue
                    if d and (2 * r >= n or 2 * s >= n):
                        continue
                    cid = f"pprop-p{n}-r{r}-s{s}-d{d}"
                    cases.append(_case("pprop", cid, n=n, r=r, s=s, d=d))
    return cases


_KAC_MODULES = ("trivial", "nat-dualnat", "det-detinv")


def _kac_freeness_cases() -> list[dict]:
    return [
        _case("kac-freeness", f"kacfree-gl{m}x{m}-{which}", m=m, module=which)
        for m in (1, 2)
        for which in _KAC_MODULES
    ]


def _pkac_cases() -> list[dict]:
    return [
        _case("p-kac", f"pkac-p{n}-{direction}", n=n, direction=direction)
        for n, direction in ((2, "thin"), (3, "thin"), (2, "thick"))
    ]


def _derham_cases() -> list[dict]:
    return [_case("derham", f"derham-gl{r}", r=r) for r in (1, 2, 3)]


_PROP_FAMILIES = (
    {"family": "gl", "m": 1, "n": 1},
    {"family": "gl", "m": 2, "n": 1},
    {"family": "q", "n": 2},
)


def _expr_dim(g: LieSA, expr) -> int:
    head = expr[0]
    if head == "trivial":
        return 1
    if head == "natural":
        return len(g.ambient.labels)
    if head == "adjoint":
        return g.dim
    if head == "tensor":
        return _expr_dim(g, expr[1]) * _expr_dim(g, expr[2])
    return _expr_dim(g, expr[1])


def _draw_expr(rng: random.Random, depth: int) -> list:
    if depth == 0 or rng.random() < 0.45:
        return [rng.choice(("trivial", "natural", "adjoint"))]
    op = rng.choice(("dual", "shift", "tensor"))
    if op == "tensor":
        return ["tensor", _draw_expr(rng, depth - 1), _draw_expr(rng, depth - 1)]
    return [op, _draw_expr(rng, depth - 1)]


def _draw_pair(rng: random.Random, g: LieSA) -> tuple[list, list]:
    while True:
        left = _draw_expr(rng, 2)
        right = _draw_expr(rng, 2)
        dl, dr = _expr_dim(g, left), _expr_dim(g, right)
        if dl <= 32 and dr <= 32 and dl * dr <= 64:
            return left, right


def _fam_id(fam: dict) -> str:
    if fam["family"] == "gl":
        return f"gl{fam['m']}x{fam['n']}"
    return f"{fam['family']}{fam['n']}"


def _properties_cases(seed: int) -> list[dict]:
    rng = random.Random(seed)
    cases = []
    for fam in _PROP_FAMILIES:
        g = _family_of(fam)
        for t in range(8):
            left, right = _draw_pair(rng, g)
            cid = f"prop-{_fam_id(fam)}-{t:02d}"
            cases.append(_case("ds-properties", cid, left=left, right=right, **fam))
    for fam, count in zip(_PROP_FAMILIES, (2, 2, 1)):
        g = _family_of(fam)
        for t in range(count):
            left, right = _draw_pair(rng, g)
            cid = f"prop-les-{_fam_id(fam)}-{t:02d}"
            cases.append(_case("ds-les", cid, left=left, right=right, **fam))
    return cases


def _split_cases() -> list[dict]:
    return [_case("split", f"split-{i}", index=i) for i in range(3)]


def _spherical_cases() -> list[dict]:
    return [
        _case("spherical", "spherical-so2", kind="so", n=2),
        _case("spherical", "spherical-so3", kind="so", n=3),
        _case("spherical", "spherical-sp2", kind="sp2", n=2),
    ]


def _pairing_cases() -> list[dict]:
    cases = [
        _case("pairing", f"pairing-gl{m}x{m}-{which}", source="gl-kac", m=m, module=which)
        for m in (1, 2)
        for which in _KAC_MODULES
    ]
    cases += [
        _case("pairing", f"pairing-p{n}-{direction}", source="p-kac", n=n, direction=direction)
        for n, direction in ((2, "thin"), (3, "thin"), (2, "thick"))
    ]
    return cases


def _dualpair_cases() -> list[dict]:
    return [_case("dualpair", f"dualpair-{k}", k=k) for k in ("gl1", "gl2", "sp2")]


_SUITES = {
    "catalog": lambda seed: _catalog_cases(),
    "thm3": lambda seed: _thm3_cases(),
    "q-prop": lambda seed: _qprop_cases(),
    "p-prop": lambda seed: _pprop_cases(),
    "kac-freeness": lambda seed: _kac_freeness_cases(),
    "p-kac": lambda seed: _pkac_cases(),
    "de-rham": lambda seed: _derham_cases(),
    "properties": _properties_cases,
    "split": lambda seed: _split_cases(),
    "spherical": lambda seed: _spherical_cases(),
    "pairing": lambda seed: _pairing_cases(),
    "dualpair": lambda seed: _dualpair_cases(),
}

SUITE_NAMES = tuple(_SUITES) + ("all",)


def suite_cases(suite: str, seed: int = 0) -> list[dict]:
    if suite == "all":
        cases = []
        for name in _SUITES:
            cases.extend(_SUITES[name](seed))
        return cases
    if suite not in _SUITES:
        raise InvalidParams(f"unknown suite {suite!r}")
    return _SUITES[suite](seed)


def build_manifest(suite: str, seed: int = 0) -> dict:
    return {
        "schema": SCHEMA,
        "version": ARTIFACT_VERSION,
        "suite": suite,
        "seed": seed,
        "cases": suite_cases(suite, seed),
    }


# ---------------------------------------------------------------------------
# runners


def _run_catalog(case: dict) -> Report:
    g = make_family("gl", 1, 1)
    u = {g.space.index("E[1,2]"): ONE}
    which, n = case["module"], case.get("power", 0)
    if which == "ber":
        mod, expect_nonzero = ber_power(g, n), True
    elif which == "ber-shift":
        mod, expect_nonzero = parity_shift(ber_power(g, n)), True
    elif which == "kac-ber":
        mod, expect_nonzero = tensor(kac_module(g, (0, 0)), ber_power(g, n)), True
    else:
        mod, expect_nonzero = kac_module(g, tuple(case["weight"])), False
    d = ds(mod, u)
    report = Report(case=case["id"])
    report.record_dims("module", mod.space.graded_dim())
    report.record_dims("cohomology", d.graded_dim())
    verb = "does not vanish" if expect_nonzero else "vanishes"
    report.add(f"cohomology {verb}", (d.dim > 0) == expect_nonzero, witness=f"dim {d.dim}")
    return report


def _run_thm3(case: dict) -> Report:
    g = make_family("gl", case["m"], case["n"])
    r = case["r"]
    coeffs = tuple(Fraction(c) for c in case["coeffs"])
    u = standard_u(g, RankData("gl", r=r, coeffs=coeffs))
    s = g_u_k(g, u, family_toral(g, u))
    report = product_structure_check(s, s.gu, r, case=case["id"])
    ds_dim, gu_dim = sum(s.graded_dim()), s.gu.algebra.dim
    report.add(
        "dimension excess equals the rank",
        ds_dim == gu_dim + r,
        witness=f"{ds_dim} vs {gu_dim}+{r}",
    )
    return report


def _run_qprop(case: dict) -> Report:
    n, r, k = case["n"], case["r"], case["k"]
    g = make_family("q", n)
    coeffs = tuple(Fraction(c) for c in case["coeffs"])
    u = standard_u(g, RankData("q", r=r, k=k, coeffs=coeffs))
    s = g_u_k(g, u, family_toral(g, u))
    report = product_structure_check(s, s.gu, r + k, case=case["id"])
    m = n - 2 * r - k
    expected = (m * m, m * m + r + k)
    report.add(
        f"graded dimension matches q({m}) x C^(0|{r + k})",
        s.graded_dim() == expected,
        witness=f"computed {s.graded_dim()}",
    )
    return report


def _run_pprop(case: dict) -> Report:
    n, r, sk, d = case["n"], case["r"], case["s"], case["d"]
    g = make_family("p", n)
    u = standard_u(g, RankData("p", r=r, s=sk, d=d))
    s = g_u_k(g, u, family_toral(g, u))
    t = max(r, sk)
    report = product_structure_check(s, s.gu, t, case=case["id"])
    m1, m2 = n - t - d, n - 2 * t - d
    claimed = (m1 * m1, m1 * m1 + t)
    two_slot = (m2 * m2, m2 * m2 + t)
    report.add(
        f"graded dimension matches p({m1}) x C^(0|{t})",
        s.graded_dim() == claimed,
        witness=f"computed {s.graded_dim()}",
    )
    report.add(
        f"graded dimension matches p({m2}) x C^(0|{t})",
        s.graded_dim() == two_slot,
        witness=f"computed {s.graded_dim()}",
    )
    return report


def _block_rep(zero: LieSA, m: int, corner: int) -> Rep:
    off = corner * m
    space = build_space(tuple(f"x{i + 1}" for i in range(m)), (0,) * m)
    acts = [
        Matrix.from_entries(
            m,
            m,
            {
                (i, j): zero.matrix_basis[t].entry(off + i, off + j)
                for i in range(m)
                for j in range(m)
            },
        )
        for t in range(zero.dim)
    ]
    return Rep(zero, space, acts)


def _gl_l0(zero: LieSA, m: int, which: str) -> Rep:
    if which == "trivial":
        return trivial(zero)
    if m == 1:
        return character(zero, [1, -1])
    if which == "nat-dualnat":
        return tensor(_block_rep(zero, m, 0), dual(_block_rep(zero, m, 1)))
    values = [0] * zero.dim
    for i in range(m):
        values[zero.space.index(f"E[{i + 1},{i + 1}]")] = 1
        values[zero.space.index(f"E[{m + i + 1},{m + i + 1}]")] = -1
    return character(zero, values)


def _gl_freeness_k(g: LieSA, m: int) -> SubalgebraSpec:
    cols, toral = [], []
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            c = {
                g.space.index(f"E[{i},{j}]"): ONE,
                g.space.index(f"E[{m + i},{m + j}]"): ONE,
            }
            cols.append(c)
            if i == j:
                toral.append(c)
    return SubalgebraSpec(
        basis=Matrix.from_cols(cols, g.dim), toral=Matrix.from_cols(toral, g.dim)
    )


def _gl_kac_setup(m: int, which: str):
    g = make_family("gl", m, m)
    grading = short_grading(g)
    zero = kac_zero_part(g, grading)
    data = KacData(grading=grading, l0=_gl_l0(zero, m, which))
    u = standard_u(g, RankData("gl", r=m))
    return g, grading, zero, data, u, _gl_freeness_k(g, m)


def _p_kac_setup(n: int, direction: str):
    g = make_family("p", n)
    grading = short_grading(g)
    zero = kac_zero_part(g, grading)
    data = KacData(grading=grading, l0=trivial(zero), direction=direction)
    u = u_plus(g) if direction == "thin" else u_minus(g)
    side_deg = -1 if direction == "thin" else 1
    side = [i for i, dg in enumerate(grading) if dg == side_deg]
    image = column_span(
        Matrix.from_cols([g.bracket_coords(u, {i: ONE}) for i in side], g.dim)
    )
    return g, grading, zero, data, u, SubalgebraSpec(basis=image)


def _invariant_rank(zero: LieSA, grading, l0: Rep, k: SubalgebraSpec) -> int:
    zidx = [i for i, dg in enumerate(grading) if dg == 0]
    pos = {i: t for t, i in enumerate(zidx)}
    cols = [{pos[i]: x for i, x in c.items()} for c in k.basis.cols()]
    return invariants(l0, Matrix.from_cols(cols, zero.dim)).ncols


def _run_kac_freeness(case: dict) -> Report:
    m, which = case["m"], case["module"]
    g, grading, zero, data, u, k = _gl_kac_setup(m, which)
    report = r_freeness(g, data, u, k, case=case["id"])
    re, ro = report.graded_dims["invariant ring"]
    report.add(
        f"invariant ring has dimension {2 ** m}",
        re + ro == 2**m,
        witness=f"dim {re + ro}",
    )
    fe, fo = report.graded_dims["fixed vectors"]
    rank = _invariant_rank(zero, grading, data.l0, k)
    report.add(
        "rank equals the invariant dimension of the degree-0 module",
        fe + fo == rank,
        witness=f"{fe + fo} vs {rank}",
    )
    return report


def _run_pkac(case: dict) -> Report:
    n, direction = case["n"], case["direction"]
    g, grading, zero, data, u, k = _p_kac_setup(n, direction)
    report = kac_differential_compare(g, data, u, k, case=case["id"])
    free = r_freeness(g, data, u, k, case=case["id"])
    report.checks.extend(free.checks)
    report.graded_dims.update(free.graded_dims)
    re, ro = report.graded_dims["invariant ring"]
    expected = 2 ** (n // 2)
    report.add(
        f"invariant ring has dimension {expected}",
        re + ro == expected,
        witness=f"dim {re + ro}",
    )
    ce, co = report.graded_dims["cohomology"]
    report.add(
        "cohomology is free of rank one over the invariant ring",
        ce + co == re + ro,
        witness=f"{ce + co} vs {re + ro}",
    )
    return report


def _run_derham(case: dict) -> Report:
    r = case["r"]
    inv = invariant_exterior(make_family("gl", r, 0))
    expected = [1]
    for i in range(1, r + 1):
        d = 2 * i - 1
        expected = [
            (expected[p] if p < len(expected) else 0)
            + (expected[p - d] if 0 <= p - d < len(expected) else 0)
            for p in range(len(expected) + d)
        ]
    report = Report(case=case["id"])
    report.add(
        f"dimension is 2^{r}", inv.dimension == 2**r, witness=f"dim {inv.dimension}"
    )
    report.add(
        "Poincare polynomial is prod(1 + t^(2i-1))",
        inv.poincare == expected,
        witness=str(inv.poincare),
    )
    return report


def _run_ds_properties(case: dict) -> Report:
    g = _family_of(case)
    u = _standard_odd(g)
    v = rep_build(g, case["left"])
    w = rep_build(g, case["right"])
    report = Report(case=case["id"])
    dv, dw = ds(v, u), ds(w, u)
    report.record_dims("left cohomology", dv.graded_dim())
    report.record_dims("right cohomology", dw.graded_dim())
    report.add(
        "superdimension preserved (left)",
        dv.sdim == v.space.sdim(),
        witness=f"{dv.sdim} vs {v.space.sdim()}",
    )
    report.add(
        "superdimension preserved (right)",
        dw.sdim == w.space.sdim(),
        witness=f"{dw.sdim} vs {w.space.sdim()}",
    )
    for check in tensor_iso_check(v, w, u, case=case["id"]).checks:
        report.checks.append(check)
    se, so = ds(parity_shift(v), u).graded_dim()
    report.add(
        "parity shift swaps the grading", (se, so) == (dv.graded_dim()[1], dv.graded_dim()[0])
    )
    report.add(
        "dual preserves the graded dimension", ds(dual(v), u).graded_dim() == dv.graded_dim()
    )
    return report


def _direct_sum(a: Rep, b: Rep) -> Rep:
    labels = tuple(f"l.{s}" for s in a.space.labels) + tuple(
        f"r.{s}" for s in b.space.labels
    )
    space = build_space(
        labels, a.space.parities + b.space.parities, a.space.weights + b.space.weights
    )
    acts = []
    for i in range(a.algebra.dim):
        rows = [dict(row) for row in a.actions[i].rows]
        rows += [{j + a.dim: x for j, x in row.items()} for row in b.actions[i].rows]
        acts.append(Matrix._raw(a.dim + b.dim, a.dim + b.dim, rows))
    return Rep(a.algebra, space, acts)


def _run_ds_les(case: dict) -> Report:
    g = _family_of(case)
    u = _standard_odd(g)
    v = rep_build(g, case["left"])
    w = rep_build(g, case["right"])
    big = _direct_sum(v, w)
    sub = Matrix.from_cols([{i: ONE} for i in range(v.dim)], big.dim)
    report = les_check(big, sub, u, case=case["id"])
    report.record_dims("total module", big.space.graded_dim())
    return report


def _run_split(case: dict) -> Report:
    g, u, cert = split_examples()[case["index"]]
    st = split_tilde(g, u, certificate=cert)
    expected = ((0, 0), (1, 1), (2, 0))[case["index"]]
    report = Report(case=case["id"])
    report.record_dims("tilde", st.tilde.space.graded_dim())
    report.record_dims("plain invariants", st.gu.algebra.space.graded_dim())
    report.add(
        f"tilde graded dimension is {expected}",
        st.tilde.space.graded_dim() == expected,
        witness=str(st.tilde.space.graded_dim()),
    )
    report.add(
        "equivariant complement certificate checked" if cert else "no certificate supplied",
        True if cert is None else st.certified,
    )
    return report


def _run_spherical(case: dict) -> Report:
    kind, n = case["kind"], case["n"]
    report = Report(case=case["id"])
    for lam in dominant_weights(n, 4):
        simple = gl_simple(n, lam)
        sub = so_subalgebra(simple.algebra) if kind == "so" else sp2_subalgebra(simple.algebra)
        dim = invariants(simple, sub).ncols
        ok = dim <= 1 and (dim == 1) == spherical_expected(kind, lam)
        report.add(f"lambda {lam}", ok, witness=f"invariants {dim}")
    return report


def _run_pairing(case: dict) -> Report:
    if case["source"] == "gl-kac":
        g, grading, zero, data, u, k = _gl_kac_setup(case["m"], case["module"])
    else:
        g, grading, zero, data, u, k = _p_kac_setup(case["n"], case["direction"])
    d = ds(kac_induce(g, data), u)
    return multiplicity_pairing_check(d, gu_algebra(g, u), case=case["id"])


def _run_dualpair(case: dict) -> Report:
    which = case["k"]
    if which == "sp2":
        ambient = make_family("gl", 2, 0)
        alg = as_algebra(ambient, SubalgebraSpec(basis=sp2_subalgebra(ambient)))
    else:
        alg = make_family("gl", int(which[2:]), 0)
    report = duality_pairing_check(alg, case=case["id"])
    expected = {"gl1": 2, "gl2": 4, "sp2": 2}[which]
    report.add(
        f"invariant dimension is {expected}",
        invariant_exterior(alg).dimension == expected,
    )
    return report


_RUNNERS = {
    "catalog": _run_catalog,
    "thm3": _run_thm3,
    "qprop": _run_qprop,
    "pprop": _run_pprop,
    "kac-freeness": _run_kac_freeness,
    "p-kac": _run_pkac,
    "derham": _run_derham,
    "ds-properties": _run_ds_properties,
    "ds-les": _run_ds_les,
    "split": _run_split,
    "spherical": _run_spherical,
    "pairing": _run_pairing,
    "dualpair": _run_dualpair,
}


def run_case(case: dict) -> Report:
    op = case.get("op")
    runner = _RUNNERS.get(op)
    if runner is None:
        raise InvalidParams(f"unknown case op {op!r}")
    return runner(case)


def run_cases(cases: list[dict], jobs: int = 1) -> list[tuple[dict, Report]]:
    ordered = sorted(cases, key=lambda c: c["id"])
    ids = [c["id"] for c in ordered]
    if len(set(ids)) != len(ids):
        raise InvalidParams("case ids must be unique")
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_case, ordered))
    else:
        reports = [run_case(c) for c in ordered]
    return list(zip(ordered, reports))


# ---------------------------------------------------------------------------
# artifacts


def _figure(path: Path, title: str, outcomes: list[tuple[dict, Report]]) -> None:
    fig = Figure(figsize=(8, max(2.0, 0.28 * len(outcomes) + 1.2)), dpi=100)
    ax = fig.add_subplot()
    ids = [case["id"] for case, _ in outcomes]
    passed = [sum(1 for c in rep.checks if c.passed) for _, rep in outcomes]
    failed = [len(rep.checks) - p for (_, rep), p in zip(outcomes, passed)]
    ypos = range(len(ids))
    ax.barh(ypos, passed, color="#3a7d44", label="passed checks")
    ax.barh(ypos, failed, left=passed, color="#b3343a", label="failed checks")
    ax.set_yticks(list(ypos), ids, fontsize=6)
    ax.invert_yaxis()
    ax.set_xlabel("checks")
    ax.set_title(title)
    ax.legend(loc="lower right", fontsize=7)
    fig.tight_layout()
    fig.savefig(path, format="png", metadata={"Software": "superds"})


def write_outputs(
    out_dir, manifest: dict, outcomes: list[tuple[dict, Report]]
) -> dict[str, str]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    digests = {}
    for case, rep in outcomes:
        text = serialize(rep)
        (out / f"{case['id']}.json").write_text(text)
        digests[case["id"]] = hashlib.sha256(text.encode()).hexdigest()
    with open(out / "summary.csv", "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["case", "status", "checks", "failed", "failing"])
        for case, rep in outcomes:
            fails = rep.failures()
            writer.writerow(
                [
                    case["id"],
                    "pass" if rep.passed else "fail",
                    len(rep.checks),
                    len(fails),
                    "; ".join(fails),
                ]
            )
    _figure(out / f"{manifest['suite']}.png", f"suite {manifest['suite']}", outcomes)
    frozen = dict(manifest)
    frozen["digests"] = digests
    (out / "manifest.json").write_text(json.dumps(frozen, sort_keys=True, indent=2) + "\n")
    return digests


def run_manifest(manifest: dict, out_dir=None, jobs: int = 1):
    outcomes = run_cases(manifest["cases"], jobs=jobs)
    digests = write_outputs(out_dir, manifest, outcomes) if out_dir is not None else None
    return outcomes, digests
