"""Enlarged symmetry algebras attached to an odd element.

For odd u with c = [u, u] acting semisimply, any subalgebra k of [u, g^c]
commutes with u, so u descends to the quotient c(k)/Z(k) of its centralizer
and the kernel-mod-image construction applies there.  The result g(u, k)
receives the plain g_u through a canonical injection; for the distinguished
toral subalgebras t' spanned by coordinate root pairs it decomposes as g_u
times a purely odd abelian factor.  The same circle of ideas identifies the
action of u on an induced module with a homological boundary operator and
makes its cohomology a free module over an exterior invariant ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations

from .algebras import (
    LieSA,
    SubalgebraSpec,
    _flatten,
    as_algebra,
    center,
    centralizer,
    is_ideal,
    make_family,
    quotient_algebra,
    split_algebra,
    super_commutator,
)
from .checks import Report
from .ds import GuAlgebra, ds, gu_algebra
from .errors import (
    ImageMismatch,
    InvalidParams,
    NotAnIdeal,
    NotInBracketImage,
    NotOdd,
    NotSemisimpleAction,
    NotSplit,
    NotStandardForm,
    NotToral,
    QuotientFailure,
    RepresentativeInconsistency,
)
from .homology import ce_boundaries, exterior_invariants, monomials_by_degree
from .linalg import (
    Matrix,
    column_span,
    hstack,
    invert,
    is_squarefree,
    joint_kernel,
    left_inverse,
    minimal_polynomial,
    rank,
    solve,
    span_contains,
    vec_add,
)
from .normalforms import is_standard, square
from .reps import KacData, Rep, kac_induce, verify_rep
from .spaces import build_space, matrix_parity, vector_parity

Vec = dict[int, Fraction]
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# the algebra g(u, k)


@dataclass(eq=False)
class SymmetryAlgebra:
    """g(u, k) = (c(k)/Z(k))_u together with the data locating it.

    ``centralizer_basis`` holds c(k) as columns in parent coordinates;
    ``quotient_project``/``quotient_include`` pass between c(k) and its
    quotient by the center of k; ``inner`` is the kernel-mod-image data on
    that quotient and ``base`` its algebra.  ``gu_injection`` sends the basis
    of the plain g_u (held in ``gu``) into ``base``.
    """

    base: LieSA
    gu_injection: Matrix
    toral: SubalgebraSpec
    inner: GuAlgebra
    gu: GuAlgebra
    centralizer_basis: Matrix
    quotient_project: Matrix
    quotient_include: Matrix
    parent: LieSA
    u: Vec

    @property
    def dim(self) -> int:
        return self.base.dim

    def graded_dim(self) -> tuple[int, int]:
        return self.base.space.graded_dim()

    @property
    def sdim(self) -> int:
        return self.base.space.sdim()


def _c_fixed(g: LieSA, u: Vec) -> Matrix:
    c = square(g, u)
    if not c:
        return Matrix.identity(g.dim)
    return centralizer(g, [c])


def _bracket_image(g: LieSA, u: Vec) -> Matrix:
    """Canonical basis of [u, g^c]."""
    return column_span(g.ad_vector(u) @ _c_fixed(g, u))


def _toral_columns(k: SubalgebraSpec) -> list[Vec]:
    return (k.basis if k.toral is None else k.toral).cols()


def _require_toral(g: LieSA, cols: list[Vec]) -> None:
    for v in cols:
        if not is_squarefree(minimal_polynomial(g.ad_vector(v))):
            raise NotToral("designated toral element does not act semisimply")


def _fixed_component_projection(g: LieSA, k: SubalgebraSpec, ck: Matrix, ck_left: Matrix) -> Matrix:
    """Projection of g onto c(k), in c(k) coordinates, killing the span of
    all [k_i, g]; needs g = c(k) + sum im(ad k_i) to be a direct sum."""
    admats = [g.ad_vector(col) for col in k.basis.cols()]
    if not admats:
        return ck_left
    moved = column_span(hstack(*admats))
    combined = hstack(ck, moved)
    full = invert(combined) if combined.ncols == g.dim else None
    if full is None:
        raise NotSemisimpleAction("fixed vectors and k g do not decompose the algebra")
    return full.take_rows(range(ck.ncols))


def _assert_homomorphism(source: LieSA, target: LieSA, phi: Matrix) -> None:
    for i in range(source.dim):
        for j in range(source.dim):
            lhs = phi.apply(source.bracket_coords({i: ONE}, {j: ONE}))
            rhs = target.bracket_coords(phi.col(i), phi.col(j))
            assert lhs == rhs, "injection fails to respect the bracket"


def g_u_k(g: LieSA, u: Vec, k: SubalgebraSpec) -> SymmetryAlgebra:
    """Build g(u, k) and the canonical injection of g_u into it.

    k must sit inside [u, g^c] (which forces [u, k] = 0) and its designated
    toral part must act semisimply on g.
    """
    gu = gu_algebra(g, u)
    if k.basis.nrows != g.dim:
        raise InvalidParams("k lives in a different ambient algebra")
    if not span_contains(_bracket_image(g, u), k.basis):
        raise NotInBracketImage("k does not sit inside [u, g^c]")
    _require_toral(g, _toral_columns(k))
    for col in k.basis.cols():
        assert not g.bracket_coords(u, col), "element of [u, g^c] fails to commute with u"

    ck = centralizer(g, k.basis)
    ck_left = left_inverse(ck)
    assert ck_left is not None
    calg = g if ck.ncols == g.dim else as_algebra(g, SubalgebraSpec(basis=ck))

    if k.basis.ncols:
        zk = k.basis @ center(as_algebra(g, k))
    else:
        zk = Matrix.zero(g.dim, 0)
    zc = ck_left @ zk
    if ck @ zc != zk:
        raise QuotientFailure("center of k escapes the centralizer of k")
    try:
        qalg, project, include = quotient_algebra(calg, zc)
    except NotAnIdeal as exc:
        raise QuotientFailure(str(exc)) from exc

    uc = ck_left.apply(u)
    assert ck.apply(uc) == dict(u)
    inner = gu_algebra(qalg, project.apply(uc))

    fixed = _fixed_component_projection(g, k, ck, ck_left)

    def inject(w: Vec) -> Vec:
        wc = fixed.apply(w)
        assert not g.bracket_coords(u, ck.apply(wc)), "c(k) component of a g_u witness moved off the kernel"
        return inner.result.class_of(project.apply(wc), "centralizer component of a g_u witness")

    cols = [inject(gu.witnesses.col(j)) for j in range(gu.algebra.dim)]
    injection = Matrix.from_cols(cols, inner.algebra.dim)
    if injection.ncols:
        assert left_inverse(injection) is not None, "g_u fails to inject"
        _assert_homomorphism(gu.algebra, inner.algebra, injection)
        shifts = (gu.result.cinv.include @ gu.result.image_basis).cols()
        if shifts and inject(vec_add(gu.witnesses.col(0), shifts[0])) != cols[0]:
            raise RepresentativeInconsistency("injection depends on the chosen g_u representatives")

    return SymmetryAlgebra(
        base=inner.algebra,
        gu_injection=injection,
        toral=k,
        inner=inner,
        gu=gu,
        centralizer_basis=ck,
        quotient_project=project,
        quotient_include=include,
        parent=g,
        u=dict(u),
    )


# ---------------------------------------------------------------------------
# the family toral subalgebras t'


def family_toral(g: LieSA, u: Vec) -> SubalgebraSpec:
    """The toral subalgebra spanned by [g_a, g_-a] over the root pairs a
    carried by a standard-position u; the defect slot of the p family
    contributes nothing."""
    data = is_standard(g, u)
    if data is None:
        raise NotStandardForm("u is not in standard position")
    idx = g.space.index
    cols: list[Vec] = []
    if g.family == "gl":
        m = g.params["m"]
        for i in range(1, data.r + 1):
            cols.append(
                g.bracket_coords({idx(f"E[{i},{m + i}]"): ONE}, {idx(f"E[{m + i},{i}]"): ONE})
            )
    elif g.family == "q":
        for i in range(1, data.r + 1):
            cols.append({idx(f"T^E[{2*i-1},{2*i-1}]"): ONE, idx(f"T^E[{2*i},{2*i}]"): ONE})
        for j in range(1, data.k + 1):
            cols.append({idx(f"T^E[{2*data.r+j},{2*data.r+j}]"): ONE})
    elif g.family == "p":
        for i in range(1, max(data.r, data.s) + 1):
            cols.append(
                g.bracket_coords({idx(f"B[{2*i-1},{2*i}]"): ONE}, {idx(f"C[{2*i-1},{2*i}]"): ONE})
            )
    else:
        raise InvalidParams(f"no distinguished toral family for {g.family!r}")
    basis = Matrix.from_cols(cols, g.dim)
    assert span_contains(_bracket_image(g, u), basis), "family toral escapes [u, g^c]"
    _require_toral(g, cols)
    return SubalgebraSpec(basis=basis, toral=basis)


def product_structure_check(
    s: SymmetryAlgebra, gu: GuAlgebra, r: int, case: str = "product structure"
) -> Report:
    """Certify the decomposition of g(u, t') as g_u times an odd abelian
    factor of dimension r: the injected g_u is an ideal, the quotient is odd
    abelian of dimension r, and the centralizer of the image contains an odd
    complement squaring to zero."""
    report = Report(case=case)
    base = s.base
    report.record_dims("symmetry algebra", base.space.graded_dim())
    report.record_dims("plain invariants", gu.algebra.space.graded_dim())
    image = column_span(s.gu_injection)

    ideal_ok = is_ideal(base, image)
    report.add("(i) injected g_u is an ideal", ideal_ok)
    if not ideal_ok:
        report.add("(ii) quotient is odd abelian of dimension r", False)
        report.add("(iii) odd central complement", False)
        return report

    qalg, qproject, _ = quotient_algebra(base, image)
    quotient_ok = (
        qalg.dim == r
        and all(p == 1 for p in qalg.space.parities)
        and all(not v for v in qalg.brackets.values())
    )
    report.add("(ii) quotient is odd abelian of dimension r", quotient_ok, witness=f"dim {qalg.dim}")

    cent = centralizer(base, image)
    odd_cols = [c for c in cent.cols() if vector_parity(base.space, c) == 1]
    mapped = qproject @ Matrix.from_cols(odd_cols, base.dim)
    complement = [odd_cols[j] for j in mapped.rref()[1]]
    self_zero = all(not base.bracket_coords(x, y) for x in complement for y in complement)
    report.add(
        "(iii) odd central complement",
        len(complement) == r and self_zero,
        witness=f"rank {len(complement)}",
    )
    return report


def compare_toral(
    g: LieSA, u: Vec, k: SubalgebraSpec, t: SubalgebraSpec, case: str = "toral comparison"
) -> Report:
    """The functorial map g(u, k) -> g(u, t) for a toral t inside k; it is
    injective because c(k) meets the kernel of the k-quotient only in Z(k)."""
    _require_toral(g, t.basis.cols())
    if not span_contains(column_span(k.basis), t.basis):
        raise InvalidParams("t must sit inside k")
    sk = g_u_k(g, u, k)
    st = g_u_k(g, u, t)
    ct_left = left_inverse(st.centralizer_basis)

    cols = []
    for j in range(sk.base.dim):
        w = sk.centralizer_basis.apply(sk.quotient_include.apply(sk.inner.witnesses.col(j)))
        wt = ct_left.apply(w)
        assert st.centralizer_basis.apply(wt) == w, "c(k) escapes c(t)"
        cols.append(st.inner.result.class_of(st.quotient_project.apply(wt), "transported class"))
    phi = Matrix.from_cols(cols, st.base.dim)

    report = Report(case=case)
    report.record_dims("coarse algebra", sk.base.space.graded_dim())
    report.record_dims("fine algebra", st.base.space.graded_dim())
    report.add("injective", phi.ncols == 0 or left_inverse(phi) is not None)
    hom = all(
        phi.apply(sk.base.bracket_coords({i: ONE}, {j: ONE}))
        == st.base.bracket_coords(phi.col(i), phi.col(j))
        for i in range(sk.base.dim)
        for j in range(sk.base.dim)
    )
    report.add("bracket homomorphism", hom)
    report.add(
        "dimension difference nonnegative",
        st.base.dim >= sk.base.dim,
        witness=str(st.base.dim - sk.base.dim),
    )
    return report


# ---------------------------------------------------------------------------
# the induced differential as a homological boundary


def _all_monomials(m: int) -> list[tuple[int, ...]]:
    # prefix-first order, matching the induced-module basis
    return sorted(chain.from_iterable(combinations(range(m), p) for p in range(m + 1)))


def _side_transport(g: LieSA, data: KacData, u: Vec, k: SubalgebraSpec):
    """Identify the monomial side with k through y -> [u, y] and transport the
    degree-0 module and the adjoint action along it."""
    side_deg = -1 if data.direction == "thin" else 1
    side = [i for i, d in enumerate(data.grading) if d == side_deg]
    zero_pos = {gi: j for j, gi in enumerate(i for i, d in enumerate(data.grading) if d == 0)}
    if not side:
        raise InvalidParams("the monomial side is empty")
    if any(data.grading[i] != -side_deg for i in u):
        raise InvalidParams("u must be concentrated opposite the monomial side")
    if square(g, u):
        raise InvalidParams("u must square to zero")

    psi_cols = [g.bracket_coords(u, {i: ONE}) for i in side]
    psi = Matrix.from_cols(psi_cols, g.dim)
    if rank(psi) != len(side):
        raise ImageMismatch("bracketing with u is not injective on the monomial side")
    if k.basis.nrows != g.dim or column_span(psi) != column_span(k.basis):
        raise ImageMismatch("[u, monomial side] differs from the supplied k")
    for col in _toral_columns(k):
        act = data.l0.action_of({zero_pos[i]: x for i, x in col.items()})
        if not is_squarefree(minimal_polynomial(act)):
            raise NotSemisimpleAction("degree-0 module is not semisimple over k")

    kalg = as_algebra(g, SubalgebraSpec(basis=psi))
    acts = [data.l0.action_of({zero_pos[i]: x for i, x in col.items()}) for col in psi_cols]
    module = Rep(kalg, data.l0.space, acts)
    assert not verify_rep(module)

    side_pos = {gi: j for j, gi in enumerate(side)}
    ad_side = []
    for col in psi_cols:
        cols2 = []
        for i2 in side:
            br = g.bracket_coords(col, {i2: ONE})
            cols2.append({side_pos[i]: x for i, x in br.items()})
        ad_side.append(Matrix.from_cols(cols2, len(side)))
    return side, kalg, module, ad_side


def _assemble_boundary(kalg: LieSA, module: Rep, m: int) -> Matrix:
    """All exterior boundary maps written on the induced-module basis."""
    dl = module.dim
    pos = {mon: i for i, mon in enumerate(_all_monomials(m))}
    degrees = monomials_by_degree(m)
    entries: dict[tuple[int, int], Fraction] = {}
    for p, mat in enumerate(ce_boundaries(kalg, module), start=1):
        for i, row in enumerate(mat.rows):
            gi = pos[degrees[p - 1][i // dl]] * dl + i % dl
            for j, x in row.items():
                gj = pos[degrees[p][j // dl]] * dl + j % dl
                entries[(gi, gj)] = x
    total = len(pos) * dl
    return Matrix.from_entries(total, total, entries)


def _first_difference(a: Matrix, b: Matrix):
    for i in range(a.nrows):
        ra, rb = a.rows[i], b.rows[i]
        for j in set(ra) | set(rb):
            if ra.get(j, 0) != rb.get(j, 0):
                return i, j
    return None


def kac_differential_compare(
    g: LieSA, data: KacData, u: Vec, k: SubalgebraSpec, case: str = "induced differential"
) -> Report:
    """Entrywise comparison of the induced action of u with the boundary
    operator of k acting on the transported degree-0 module."""
    induced = kac_induce(g, data)
    side, kalg, module, _ = _side_transport(g, data, u, k)
    boundary = _assemble_boundary(kalg, module, len(side))
    action = induced.action_of(u)

    report = Report(case=case)
    report.record_dims("induced module", induced.space.graded_dim())
    report.add("side transport is an isomorphism onto k", True)
    spot = _first_difference(action, boundary)
    report.add(
        "action of u equals the homological boundary",
        spot is None,
        witness=None if spot is None else f"first mismatch at entry {spot}",
    )
    return report


def r_freeness(
    g: LieSA, data: KacData, u: Vec, k: SubalgebraSpec, case: str = "freeness"
) -> Report:
    """Stagewise certificate that the cohomology of the induced module is the
    free module R tensor L0^k, with R the k-invariant exterior forms on the
    monomial side; the evaluation sends an invariant form times a fixed
    vector to its class."""
    induced = kac_induce(g, data)
    side, kalg, module, ad_side = _side_transport(g, data, u, k)
    m, dl = len(side), module.dim

    report = Report(case=case)
    report.add("stage 1: side transport is an isomorphism onto k", True)
    report.add("stage 2: degree-0 module semisimple over k", True)

    inv = exterior_invariants(ad_side, m)
    rdims = [mat.ncols for mat in inv]
    report.record_dims(
        "invariant ring",
        (sum(d for p, d in enumerate(rdims) if p % 2 == 0),
         sum(d for p, d in enumerate(rdims) if p % 2 == 1)),
    )
    fixed = joint_kernel(module.actions)
    fixed_par = [vector_parity(module.space, c) for c in fixed.cols()]
    report.record_dims(
        "fixed vectors", (fixed_par.count(0), len(fixed_par) - fixed_par.count(0))
    )

    pos = {mon: i for i, mon in enumerate(_all_monomials(m))}
    degrees = monomials_by_degree(m)
    cols: list[Vec] = []
    for p, mat in enumerate(inv):
        for w in mat.cols():
            for v in fixed.cols():
                vec: Vec = {}
                for mi, wx in w.items():
                    base = pos[degrees[p][mi]] * dl
                    for b, vx in v.items():
                        vec[base + b] = wx * vx
                cols.append(vec)
    sections = Matrix.from_cols(cols, induced.dim)

    d = ds(induced, u)
    report.record_dims("cohomology", d.cohomology.graded_dim())
    in_kernel = span_contains(d.cinv.include @ d.kernel_basis, sections)
    report.add("stage 3: invariant sections are annihilated by u", in_kernel)
    if in_kernel:
        ev = Matrix.from_cols(
            [d.class_of(c, "invariant section") for c in cols], d.cohomology.dim
        )
        bijective = ev.ncols == d.cohomology.dim and invert(ev) is not None
    else:
        bijective = False
    report.add(
        "stage 4: evaluation is a bijection onto the cohomology",
        bijective,
        witness=f"{sections.ncols} sections, cohomology dimension {d.cohomology.dim}",
    )
    return report


# ---------------------------------------------------------------------------
# split algebras


@dataclass(frozen=True)
class SplitCertificate:
    """A faithful module together with an equivariant complement to the image
    of the algebra inside the endomorphisms of that module; the complement
    columns are operators flattened row-major."""

    module: Rep
    complement: Matrix


@dataclass(eq=False)
class SplitTilde:
    """c(u)/[u, g_0] for a split algebra, with the map from g_u into it."""

    tilde: LieSA
    injection: Matrix
    gu: GuAlgebra
    certified: bool


def _validate_split_certificate(g: LieSA, cert: SplitCertificate) -> None:
    mod = cert.module
    if mod.algebra is not g and (mod.algebra.dim != g.dim or mod.algebra.brackets != g.brackets):
        raise InvalidParams("certificate module is over a different algebra")
    defects = verify_rep(mod)
    if defects:
        raise InvalidParams(f"certificate module is not a representation: {defects[0]}")
    dv = mod.dim
    rho = Matrix.from_cols([_flatten(a) for a in mod.actions], dv * dv)
    if rank(rho) != g.dim:
        raise InvalidParams("certificate module is not faithful")
    w = cert.complement
    if w.nrows != dv * dv:
        raise InvalidParams("complement operators have the wrong size")
    combined = hstack(rho, w)
    if combined.ncols != dv * dv or invert(combined) is None:
        raise InvalidParams("algebra image plus complement must fill the endomorphisms")
    par = g.space.parities
    for col in w.cols():
        rows: list[dict] = [{} for _ in range(dv)]
        for flat, x in col.items():
            rows[flat // dv][flat % dv] = x
        op = Matrix._raw(dv, dv, rows)
        pw = matrix_parity(op, mod.space, mod.space)
        if pw is None:
            raise InvalidParams("complement columns must be parity homogeneous")
        for i in range(g.dim):
            comm = super_commutator(mod.actions[i], op, par[i], pw)
            if solve(w, _flatten(comm)) is None:
                raise InvalidParams("complement is not equivariant")


def split_tilde(g: LieSA, u: Vec, certificate: SplitCertificate | None = None) -> SplitTilde:
    """The avatar c(u)/[u, g_0] of g_u for algebras whose odd part brackets to
    zero.  A valid certificate lets the injectivity of g_u -> tilde be
    asserted rather than taken on faith."""
    odd = g.space.odd_indices()
    for i in odd:
        for j in odd:
            if g.bracket_coords({i: ONE}, {j: ONE}):
                raise NotSplit("odd part must bracket to zero")
    if not u or vector_parity(g.space, u) != 1:
        raise NotOdd("u must be a nonzero odd vector")
    gu = gu_algebra(g, u)

    cu = centralizer(g, [u])
    cu_left = left_inverse(cu)
    even_moves = [g.bracket_coords(u, {i: ONE}) for i in g.space.even_indices()]
    image = column_span(Matrix.from_cols([c for c in even_moves if c], g.dim))
    im_c = cu_left @ image
    assert cu @ im_c == image
    calg = g if cu.ncols == g.dim else as_algebra(g, SubalgebraSpec(basis=cu))
    tilde, project, _ = quotient_algebra(calg, im_c)

    cols = []
    for j in range(gu.algebra.dim):
        w = gu.witnesses.col(j)
        wc = cu_left.apply(w)
        assert cu.apply(wc) == w
        cols.append(project.apply(wc))
    injection = Matrix.from_cols(cols, tilde.dim)
    if injection.ncols:
        _assert_homomorphism(gu.algebra, tilde, injection)

    certified = False
    if certificate is not None:
        _validate_split_certificate(g, certificate)
        assert injection.ncols == 0 or left_inverse(injection) is not None
        certified = True
    return SplitTilde(tilde=tilde, injection=injection, gu=gu, certified=certified)


def split_examples() -> list[tuple[LieSA, Vec, SplitCertificate | None]]:
    """Three small split algebras with an odd element.

    The first acts on its odd line with weight one and carries a certificate
    on the (1|1)-dimensional module spanned by w and u w.  The second is abelian (1|1); the
    third is gl(2) on its natural odd module.  For those two no equivariant
    complement exists, so they ship without certificates.
    """
    k1 = make_family("gl", 1, 0)
    g1 = split_algebra(k1, [Matrix.from_cols([{0: ONE}], 1)])
    space1 = build_space(("uw", "w"), (0, 1))
    mod1 = Rep(
        g1,
        space1,
        [Matrix.from_entries(2, 2, {(0, 0): 1}), Matrix.from_entries(2, 2, {(0, 1): 1})],
    )
    comp1 = Matrix.from_cols(
        [_flatten(Matrix.identity(2)), _flatten(Matrix.from_entries(2, 2, {(1, 0): 1}))], 4
    )
    cert1 = SplitCertificate(module=mod1, complement=comp1)

    k2 = make_family("gl", 1, 0)
    g2 = split_algebra(k2, [Matrix.zero(1, 1)])

    k3 = make_family("gl", 2, 0)
    g3 = split_algebra(k3, list(k3.matrix_basis))

    return [(g1, {1: ONE}, cert1), (g2, {1: ONE}, None), (g3, {4: ONE}, None)]
