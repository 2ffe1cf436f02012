"""Cohomology of a homogeneous odd element acting on a module.

For odd u with c = [u,u] acting semisimply, the operator of u on the
c-invariants M^c squares to zero and ds computes ker/im together with
canonical representatives.  The same construction applied to the adjoint
module gives the algebra g_u acting on every cohomology, and the remaining
operations verify what the functor must satisfy: tensor compatibility, the
six-term exact sequence of a short exact sequence, and the even/odd
multiplicity pairing on Kac-module cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebras import LieSA, verify_lie
from .checks import Report
from .errors import (
    AlgebraMismatch,
    InvalidParams,
    NotHomogeneous,
    RepresentativeInconsistency,
)
from .linalg import (
    Matrix,
    column_span,
    homology,
    invert,
    kernel,
    left_inverse,
    solve,
    span_contains,
    span_intersect,
)
from .normalforms import is_homogeneous, square
from .reps import CInvariants, Rep, adjoint, c_invariants, invariants, quotient_rep, sub_rep, tensor, verify_rep
from .spaces import (
    SuperSpace,
    build_space,
    matrix_parity,
    tensor_vector,
    vector_parity,
    vector_weight,
)

Vec = dict[int, Fraction]


@dataclass(eq=False)
class DSResult:
    source: Rep
    u: Vec
    cohomology: SuperSpace
    representatives: Matrix
    project: Matrix
    kernel_basis: Matrix
    image_basis: Matrix
    cinv: CInvariants

    @property
    def dim(self) -> int:
        return self.cohomology.dim

    def graded_dim(self) -> tuple[int, int]:
        return self.cohomology.graded_dim()

    @property
    def sdim(self) -> int:
        return self.cohomology.sdim()

    def source_representatives(self) -> Matrix:
        """Representative columns in the coordinates of the source module."""
        return self.cinv.include @ self.representatives

    def class_of(self, v: Vec, what: str = "vector") -> Vec:
        """Class coordinates of a kernel vector given in source coordinates."""
        coords = solve(self.cinv.include, v)
        if coords is None:
            raise InvalidParams(f"{what} does not lie in the c-invariants")
        if solve(self.kernel_basis, coords) is None:
            raise InvalidParams(f"{what} is not annihilated by u")
        return self.project.apply(coords)


def square_zero_cohomology(op: Matrix) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """(kernel, image, representatives, project) for an operator with op² = 0."""
    return homology(op, op)


def _space_of_classes(ambient: SuperSpace, reps: Matrix, prefix: str) -> SuperSpace:
    parities = []
    weights: list | None = []
    for col in reps.cols():
        p = vector_parity(ambient, col)
        assert p is not None, "cohomology representative is not parity homogeneous"
        parities.append(p)
        if weights is not None:
            w = vector_weight(ambient, col)
            weights = None if w is None else weights + [w]
    labels = [f"{prefix}{i + 1}" for i in range(reps.ncols)]
    return build_space(labels, parities, weights)


def _coords_in_centralizer(ci: CInvariants, v: Vec, what: str) -> Vec:
    if ci.embed.ncols == ci.embed.nrows:
        return dict(v)
    coords = solve(ci.embed, v)
    if coords is None:
        raise InvalidParams(f"{what} does not lie in the centralizer of c")
    return coords


def ds(r: Rep, u: Vec) -> DSResult:
    g = r.algebra
    if not u or vector_parity(g.space, u) != 1 or not is_homogeneous(g, u):
        raise NotHomogeneous("u must be a nonzero odd element with [u,u] acting semisimply")
    c = square(g, u)
    ci = c_invariants(r, c)
    op = ci.rep.action_of(_coords_in_centralizer(ci, u, "u"))
    ker, im, reps, project = square_zero_cohomology(op)
    space = _space_of_classes(ci.rep.space, reps, "h")
    # c acts by a scalar on each source summand; on the 0-eigenspace sdim is preserved
    assert space.sdim() == ci.rep.space.sdim(), "superdimension not preserved on the c-invariants"
    if not c:
        assert space.sdim() == r.space.sdim()
    return DSResult(
        source=r,
        u=dict(u),
        cohomology=space,
        representatives=reps,
        project=project,
        kernel_basis=ker,
        image_basis=im,
        cinv=ci,
    )


# ---------------------------------------------------------------------------
# the algebra g_u


@dataclass(eq=False)
class GuAlgebra:
    algebra: LieSA
    result: DSResult
    witnesses: Matrix
    parent: LieSA
    u: Vec


def _gu_structure(g: LieSA, d: DSResult, witness_cols: list[Vec]) -> dict[tuple[int, int], Vec]:
    brackets: dict[tuple[int, int], Vec] = {}
    for i, x in enumerate(witness_cols):
        for j, y in enumerate(witness_cols):
            br = g.bracket_coords(x, y)
            if not br:
                continue
            coords = d.class_of(br, "bracket of centralizer classes")
            if coords:
                brackets[(i, j)] = coords
    return brackets


def gu_algebra(g: LieSA, u: Vec) -> GuAlgebra:
    d = ds(adjoint(g), u)
    witnesses = d.source_representatives()
    cols = witnesses.cols()
    brackets = _gu_structure(g, d, cols)
    space = _space_of_classes(d.cinv.rep.space, d.representatives, "g")
    algebra = LieSA(space=space, brackets=brackets)
    assert verify_lie(algebra)
    shifts = (d.cinv.include @ d.image_basis).cols()
    if shifts:
        shifted = [dict(c) for c in cols]
        for i, c in enumerate(shifted):
            extra = shifts[i % len(shifts)]
            for k, x in extra.items():
                c[k] = c.get(k, Fraction(0)) + x
                if not c[k]:
                    del c[k]
        if _gu_structure(g, d, shifted) != brackets:
            raise RepresentativeInconsistency("bracket depends on the chosen representatives")
    return GuAlgebra(algebra=algebra, result=d, witnesses=witnesses, parent=g, u=dict(u))


def _restricted_operator(d: DSResult, x: Vec) -> Matrix:
    """Action of x (parent coordinates) on the c-invariants of d's source."""
    inc = d.cinv.include
    full = d.source.action_of(x)
    moved = full @ inc
    rest = left_inverse(inc) @ moved
    assert inc @ rest == moved, "operator does not preserve the c-invariants"
    return rest


def _induced_matrices(d: DSResult, witness_cols: list[Vec]) -> list[Matrix]:
    mats = []
    ker_span = d.kernel_basis
    im_span = d.image_basis
    for x in witness_cols:
        op = _restricted_operator(d, x)
        moved_ker = column_span(op @ ker_span)
        moved_im = column_span(op @ im_span)
        if not (span_contains(ker_span, moved_ker) and span_contains(im_span, moved_im)):
            raise RepresentativeInconsistency("class operator does not preserve ker/im of u")
        mats.append(d.project @ (op @ d.representatives))
    return mats


def induced_action(d: DSResult, gu: GuAlgebra) -> Rep:
    if d.source.algebra is not gu.parent or d.u != gu.u:
        raise AlgebraMismatch("cohomology and symmetry algebra come from different (g, u)")
    cols = gu.witnesses.cols()
    mats = _induced_matrices(d, cols)
    rep = Rep(gu.algebra, d.cohomology, mats)
    defects = verify_rep(rep)
    assert not defects, defects
    shifts = (gu.result.cinv.include @ gu.result.image_basis).cols()
    if shifts:
        shifted = []
        for i, c in enumerate(cols):
            c2 = dict(c)
            for k, x in shifts[i % len(shifts)].items():
                c2[k] = c2.get(k, Fraction(0)) + x
                if not c2[k]:
                    del c2[k]
            shifted.append(c2)
        if _induced_matrices(d, shifted) != mats:
            raise RepresentativeInconsistency("induced action depends on the representatives")
    return rep


# ---------------------------------------------------------------------------
# verification suites


def tensor_iso_check(v: Rep, w: Rep, u: Vec, case: str = "tensor-iso") -> Report:
    t = tensor(v, w)
    dv, dw, dt = ds(v, u), ds(w, u), ds(t, u)
    report = Report(case=case)
    report.record_dims("left", dv.graded_dim())
    report.record_dims("right", dw.graded_dim())
    report.record_dims("tensor", dt.graded_dim())
    vin = dv.source_representatives()
    win = dw.source_representatives()

    def tensor_class(mvec: Vec, nvec: Vec) -> Vec:
        return dt.class_of(tensor_vector(v.space, w.space, mvec, nvec), "tensor of classes")

    cols = [tensor_class(mc, nc) for mc in vin.cols() for nc in win.cols()]
    phi = Matrix.from_cols(cols, dt.dim)
    square_shape = dv.dim * dw.dim == dt.dim
    report.add("dimensions multiply", square_shape)
    report.add("bijective", square_shape and (phi.ncols == 0 or invert(phi) is not None))
    well = True
    vshift = (dv.cinv.include @ dv.image_basis).cols()
    if vshift and vin.ncols:
        shifted = dict(vin.col(0))
        for k, x in vshift[0].items():
            shifted[k] = shifted.get(k, Fraction(0)) + x
        for j, nc in enumerate(win.cols()):
            if tensor_class(shifted, nc) != cols[j]:
                well = False
    wshift = (dw.cinv.include @ dw.image_basis).cols()
    if wshift and win.ncols:
        shifted = dict(win.col(0))
        for k, x in wshift[0].items():
            shifted[k] = shifted.get(k, Fraction(0)) + x
        for i, mc in enumerate(vin.cols()):
            if tensor_class(mc, shifted) != cols[i * win.ncols]:
                well = False
    report.add("well-defined under representative shifts", well)
    return report


def _parity_split(space: SuperSpace, span: Matrix) -> tuple[Matrix, Matrix]:
    even = Matrix.from_cols([{i: Fraction(1)} for i in space.even_indices()], space.dim)
    odd = Matrix.from_cols([{i: Fraction(1)} for i in space.odd_indices()], space.dim)
    return span_intersect(span, even), span_intersect(span, odd)


def les_check(v: Rep, sub: Matrix, u: Vec, case: str = "les") -> Report:
    g = v.algebra
    c = square(g, u)
    if c and not v.action_of(c).is_zero():
        raise InvalidParams("connecting map implemented for modules on which c acts by zero")
    vsub = sub_rep(v, sub)
    vquot, proj, incl = quotient_rep(v, sub)
    d1, d, d2 = ds(vsub, u), ds(v, u), ds(vquot, u)
    report = Report(case=case)
    report.record_dims("sub", d1.graded_dim())
    report.record_dims("middle", d.graded_dim())
    report.record_dims("quotient", d2.graded_dim())

    sub_cols = column_span(sub)
    alpha = d.project @ (sub_cols @ d1.representatives)
    beta = d2.project @ (proj @ d.representatives)
    lifted = v.action_of(u) @ (incl @ d2.representatives)
    pulled = left_inverse(sub_cols) @ lifted
    assert sub_cols @ pulled == lifted, "connecting image escapes the submodule"
    delta = d1.project @ pulled

    def homogeneous(m, target, source, expected):
        return m.is_zero() or matrix_parity(m, target, source) == expected

    report.add("inclusion map even", homogeneous(alpha, d.cohomology, d1.cohomology, 0))
    report.add("projection map even", homogeneous(beta, d2.cohomology, d.cohomology, 0))
    report.add("connecting map odd", homogeneous(delta, d1.cohomology, d2.cohomology, 1))

    junctions = [
        ("middle", d.cohomology, column_span(alpha), kernel(beta)),
        ("quotient", d2.cohomology, column_span(beta), kernel(delta)),
        ("sub", d1.cohomology, column_span(delta), kernel(alpha)),
    ]
    for name, space, image, ker in junctions:
        im_even, im_odd = _parity_split(space, image)
        ker_even, ker_odd = _parity_split(space, ker)
        report.add(f"exact at {name} (even)", im_even == ker_even)
        report.add(f"exact at {name} (odd)", im_odd == ker_odd)
    return report


def multiplicity_pairing_check(d: DSResult, gu: GuAlgebra, case: str = "pairing") -> Report:
    act = induced_action(d, gu)
    report = Report(case=case)
    report.record_dims("cohomology", d.graded_dim())
    diag = [
        m
        for i, m in enumerate(act.actions)
        if gu.algebra.space.parities[i] == 0
        and all(r == c for r in range(m.nrows) for c in m.rows[r])
    ]
    by_weight: dict[tuple, list[int]] = {}
    for k in range(d.dim):
        mu = tuple(m.entry(k, k) for m in diag)
        by_weight.setdefault(mu, []).append(k)
    parities = d.cohomology.parities
    for mu, idxs in sorted(by_weight.items(), key=lambda kv: tuple(map(str, kv[0]))):
        evens = sum(1 for k in idxs if parities[k] == 0)
        odds = len(idxs) - evens
        label = "(" + ", ".join(str(x) for x in mu) + ")"
        report.add(f"weight {label} even=odd", evens == odds, witness=f"{evens}|{odds}")
    report.add("total sdim zero", d.sdim == 0)
    return report


def invariance_check(r: Rep, u: Vec, k: Matrix, case: str = "invariance") -> Report:
    """ds of the k-invariants maps isomorphically onto ds of the module."""
    g = r.algebra
    c = square(g, u)
    if c and not r.action_of(c).is_zero():
        raise InvalidParams("invariance comparison implemented for modules on which c acts by zero")
    w = invariants(r, k)
    op = r.action_of(u)
    moved = op @ w
    restricted = left_inverse(w) @ moved if w.ncols else Matrix.zero(0, 0)
    report = Report(case=case)
    stable = w.ncols == 0 or w @ restricted == moved
    report.add("invariants stable under u", stable)
    if not stable:
        return report
    _, _, reps_w, _ = square_zero_cohomology(restricted)
    d = ds(r, u)
    lifted = w @ reps_w
    cols = [d.class_of(lifted.col(j), "invariant class") for j in range(reps_w.ncols)]
    comp = Matrix.from_cols(cols, d.dim)
    evens = sum(1 for col in lifted.cols() if vector_parity(r.space, col) == 0)
    report.record_dims("invariant side", (evens, lifted.ncols - evens))
    report.record_dims("module side", d.graded_dim())
    bij = comp.ncols == d.dim and (comp.ncols == 0 or invert(comp) is not None)
    report.add("bijective", bij)
    return report
