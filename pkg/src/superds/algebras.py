"""Finite dimensional Lie superalgebras with a distinguished basis.

Structure constants are always computed, never typed in: each built-in family
is realized by explicit supermatrices on its natural module and the brackets
are solved for exactly, then the graded Jacobi identity can be checked with
``verify_lie``.  Families:

* ``gl(m|n)`` and ``sl(m|n)`` on C^{m|n},
* ``q(n)``, matrices commuting with an odd involution, on C^{n|n},
* ``p(n)``, the stabilizer of an odd symmetric form, on C^{n|n},
* split algebras, an even algebra acting on an abelian odd part.

Basis labels follow the matrix units: ``E[i,j]`` (1-based) for gl, ``D[i]``
for the sl Cartan, ``T^E[i,j]`` / ``T_E[i,j]`` for the even / odd part of q,
and ``A[i,j]``, ``B[i,j]``, ``C[i,j]`` for the three blocks of p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    AlgebraMismatch,
    DimensionMismatch,
    GradingViolation,
    InvalidParams,
    NotAnIdeal,
    NotDiagonal,
)
from .linalg import (
    Matrix,
    ZERO,
    column_span,
    in_span,
    joint_kernel,
    left_inverse,
    quotient_basis,
    span_sum,
    vec_axpy,
)
from .spaces import SuperSpace, build_space, vector_parity, vector_weight

Vec = dict[int, Fraction]


def super_commutator(x: Matrix, y: Matrix, px: int, py: int) -> Matrix:
    """[x, y] = xy - (-1)^{|x||y|} yx on homogeneous supermatrices."""
    if px and py:
        return x @ y + y @ x
    return x @ y - y @ x


def _flatten(m: Matrix) -> Vec:
    out = {}
    for i, row in enumerate(m.rows):
        for j, x in row.items():
            out[i * m.ncols + j] = x
    return out


class LieSA:
    """A Lie superalgebra with fixed basis, bracket table, and optional
    matrix realization."""

    def __init__(
        self,
        space: SuperSpace,
        brackets: dict[tuple[int, int], Vec],
        family: str | None = None,
        params: dict | None = None,
        cartan: list[int] | None = None,
        matrix_basis: list[Matrix] | None = None,
        ambient: SuperSpace | None = None,
    ):
        self.space = space
        self.brackets = brackets
        self.family = family
        self.params = params or {}
        self.cartan = cartan
        self.matrix_basis = matrix_basis
        self.ambient = ambient
        self._flat_left = None

    @property
    def dim(self) -> int:
        return self.space.dim

    def graded_dim(self) -> tuple[int, int]:
        return self.space.graded_dim()

    def sdim(self) -> int:
        return self.space.sdim()

    def bracket(self, i: int, j: int) -> Vec:
        return dict(self.brackets.get((i, j), {}))

    def bracket_coords(self, v: Vec, w: Vec) -> Vec:
        out: Vec = {}
        for i, x in v.items():
            for j, y in w.items():
                b = self.brackets.get((i, j))
                if b:
                    vec_axpy(out, x * y, b)
        return out

    def ad_basis(self, i: int) -> Matrix:
        cols = [self.brackets.get((i, j), {}) for j in range(self.dim)]
        return Matrix.from_cols(cols, self.dim)

    def ad_vector(self, v: Vec) -> Matrix:
        cols = [self.bracket_coords(v, {j: Fraction(1)}) for j in range(self.dim)]
        return Matrix.from_cols(cols, self.dim)

    # -- matrix realization

    def coords_to_matrix(self, v: Vec) -> Matrix:
        if self.matrix_basis is None:
            raise AlgebraMismatch("algebra has no matrix realization")
        d = self.ambient.dim
        out = Matrix.zero(d, d)
        for i, x in v.items():
            out = out + self.matrix_basis[i].scale(x)
        return out

    def matrix_to_coords(self, m: Matrix) -> Vec | None:
        if self.matrix_basis is None:
            raise AlgebraMismatch("algebra has no matrix realization")
        if self._flat_left is None:
            d = self.ambient.dim
            cols = Matrix.from_cols([_flatten(b) for b in self.matrix_basis], d * d)
            self._flat_left = (cols, left_inverse(cols))
        cols, left = self._flat_left
        target = _flatten(m)
        coords = left.apply(target)
        if cols.apply(coords) != target:
            return None
        return coords

    def __repr__(self):
        tag = self.family or "LieSA"
        even, odd = self.graded_dim()
        return f"<{tag} dim=({even}|{odd})>"

    @classmethod
    def from_structure(
        cls,
        labels,
        parities,
        brackets: dict[tuple[int, int], dict],
        weights=None,
        check: bool = True,
    ) -> "LieSA":
        """Build from an explicit bracket table.

        Missing transposed pairs are filled in by graded antisymmetry; with
        ``check`` the Jacobi identity is verified on all basis triples.
        """
        space = build_space(labels, parities, weights)
        table: dict[tuple[int, int], Vec] = {}
        for (i, j), v in brackets.items():
            clean = {k: Fraction(x) for k, x in v.items() if x}
            if clean:
                table[(i, j)] = clean
        for (i, j), v in list(table.items()):
            sign = -1 if (space.parities[i] and space.parities[j]) else 1
            flipped = {k: sign * -x for k, x in v.items()}
            if (j, i) in table:
                if table[(j, i)] != flipped and not (i == j and not flipped):
                    raise AlgebraMismatch(f"bracket table breaks antisymmetry at ({i},{j})")
            elif i != j:
                table[(j, i)] = flipped
        g = cls(space=space, brackets=table)
        if check:
            verify_lie(g)
        return g


# ---------------------------------------------------------------------------
# construction from matrices


def _algebra_from_matrices(entries, ambient: SuperSpace, family, params, cartan_labels) -> LieSA:
    labels = [e[0] for e in entries]
    parities = [e[1] for e in entries]
    mats = [e[2] for e in entries]
    d = ambient.dim
    n = len(mats)
    basis_cols = Matrix.from_cols([_flatten(m) for m in mats], d * d)
    left = left_inverse(basis_cols)
    if left is None:
        raise InvalidParams("basis matrices are linearly dependent")
    pairs, bracket_cols = [], []
    for i in range(n):
        for j in range(n):
            b = super_commutator(mats[i], mats[j], parities[i], parities[j])
            if not b.is_zero():
                pairs.append((i, j))
                bracket_cols.append(_flatten(b))
    brackets: dict[tuple[int, int], Vec] = {}
    if pairs:
        rhs = Matrix.from_cols(bracket_cols, d * d)
        coeffs = left @ rhs
        if basis_cols @ coeffs != rhs:
            raise AlgebraMismatch("matrices do not close under the bracket")
        for idx, (i, j) in enumerate(pairs):
            col = coeffs.col(idx)
            if col:
                brackets[(i, j)] = col
    cartan = [labels.index(l) for l in cartan_labels]
    weights = []
    for j in range(n):
        wt = []
        for ci in cartan:
            br = brackets.get((ci, j), {})
            if any(k != j for k in br):
                raise NotDiagonal(f"{labels[j]} is not a weight vector for {labels[ci]}")
            wt.append(br.get(j, ZERO))
        weights.append(tuple(wt))
    space = SuperSpace(tuple(labels), tuple(parities), tuple(weights))
    return LieSA(
        space=space,
        brackets=brackets,
        family=family,
        params=params,
        cartan=cartan,
        matrix_basis=mats,
        ambient=ambient,
    )


def _unit(d: int, i: int, j: int) -> Matrix:
    return Matrix.from_entries(d, d, {(i, j): 1})


def _natural_space(m: int, n: int, cartan_mats: list[Matrix]) -> SuperSpace:
    labels = [f"v{i+1}" for i in range(m)] + [f"w{i+1}" for i in range(n)]
    parities = [0] * m + [1] * n
    weights = [tuple(h.entry(k, k) for h in cartan_mats) for k in range(m + n)]
    return build_space(labels, parities, weights)


def _make_gl(m: int, n: int) -> LieSA:
    d = m + n
    entries = []
    for i in range(m):
        for j in range(m):
            entries.append((f"E[{i+1},{j+1}]", 0, _unit(d, i, j)))
    for i in range(m, d):
        for j in range(m, d):
            entries.append((f"E[{i+1},{j+1}]", 0, _unit(d, i, j)))
    for i in range(d):
        for j in range(d):
            if (i < m) != (j < m):
                entries.append((f"E[{i+1},{j+1}]", 1, _unit(d, i, j)))
    cartan_labels = [f"E[{i+1},{i+1}]" for i in range(d)]
    cartan_mats = [_unit(d, i, i) for i in range(d)]
    ambient = _natural_space(m, n, cartan_mats)
    return _algebra_from_matrices(entries, ambient, "gl", {"m": m, "n": n}, cartan_labels)


def _make_sl(m: int, n: int) -> LieSA:
    if m == n:
        raise InvalidParams("sl(n|n) has a degenerate form; use gl(n|n) and quotient by hand")
    d = m + n
    entries = []
    for i in range(d):
        for j in range(d):
            if i != j and (i < m) == (j < m):
                entries.append((f"E[{i+1},{j+1}]", 0, _unit(d, i, j)))
    diag = []
    for i in range(d - 1):
        # supertraceless: crossing the block boundary flips the second sign
        sign = 1 if i + 1 == m else -1
        h = _unit(d, i, i) + _unit(d, i + 1, i + 1).scale(sign)
        entries.append((f"D[{i+1}]", 0, h))
        diag.append(h)
    for i in range(d):
        for j in range(d):
            if (i < m) != (j < m):
                entries.append((f"E[{i+1},{j+1}]", 1, _unit(d, i, j)))
    cartan_labels = [f"D[{i+1}]" for i in range(d - 1)]
    ambient = _natural_space(m, n, diag)
    return _algebra_from_matrices(entries, ambient, "sl", {"m": m, "n": n}, cartan_labels)


def _make_q(n: int) -> LieSA:
    d = 2 * n
    entries = []
    for i in range(n):
        for j in range(n):
            mat = _unit(d, i, j) + _unit(d, n + i, n + j)
            entries.append((f"T^E[{i+1},{j+1}]", 0, mat))
    for i in range(n):
        for j in range(n):
            mat = _unit(d, i, n + j) + _unit(d, n + i, j)
            entries.append((f"T_E[{i+1},{j+1}]", 1, mat))
    cartan_labels = [f"T^E[{i+1},{i+1}]" for i in range(n)]
    cartan_mats = [_unit(d, i, i) + _unit(d, n + i, n + i) for i in range(n)]
    ambient = _natural_space(n, n, cartan_mats)
    return _algebra_from_matrices(entries, ambient, "q", {"n": n}, cartan_labels)


def p_block(n: int, kind: str, i: int, j: int) -> Matrix:
    """Basis supermatrices of p(n): [[A, B], [C, -A^T]], B symmetric, C skew.

    Indices are 0-based here; kind 'A' takes any (i, j), 'B' needs i <= j,
    'C' needs i < j.
    """
    d = 2 * n
    if kind == "A":
        return _unit(d, i, j) - _unit(d, n + j, n + i)
    if kind == "B":
        if i == j:
            return _unit(d, i, n + j)
        return _unit(d, i, n + j) + _unit(d, j, n + i)
    if kind == "C":
        return _unit(d, n + i, j) - _unit(d, n + j, i)
    raise InvalidParams(f"unknown p(n) block {kind!r}")


def _make_p(n: int) -> LieSA:
    entries = []
    for i in range(n):
        for j in range(n):
            entries.append((f"A[{i+1},{j+1}]", 0, p_block(n, "A", i, j)))
    for i in range(n):
        for j in range(i, n):
            entries.append((f"B[{i+1},{j+1}]", 1, p_block(n, "B", i, j)))
    for i in range(n):
        for j in range(i + 1, n):
            entries.append((f"C[{i+1},{j+1}]", 1, p_block(n, "C", i, j)))
    cartan_labels = [f"A[{i+1},{i+1}]" for i in range(n)]
    cartan_mats = [p_block(n, "A", i, i) for i in range(n)]
    ambient = _natural_space(n, n, cartan_mats)
    return _algebra_from_matrices(entries, ambient, "p", {"n": n}, cartan_labels)


def make_family(family: str, *sizes: int) -> LieSA:
    if family in ("gl", "sl"):
        if len(sizes) != 2 or min(sizes) < 0 or max(sizes) == 0:
            raise InvalidParams(f"{family} needs sizes (m, n)")
        return _make_gl(*sizes) if family == "gl" else _make_sl(*sizes)
    if family in ("q", "p"):
        if len(sizes) != 1 or sizes[0] < 1:
            raise InvalidParams(f"{family} needs one positive size")
        return _make_q(sizes[0]) if family == "q" else _make_p(sizes[0])
    raise InvalidParams(f"unknown family {family!r}")


def split_algebra(even: LieSA, action: list[Matrix], odd_labels=None) -> LieSA:
    """Even algebra extended by an abelian odd part it acts on.

    ``action[i]`` is the operator of the i-th even basis element on the odd
    module; it must be a representation, which is exactly what the Jacobi
    identity needs when the odd bracket vanishes.
    """
    if len(action) != even.dim:
        raise DimensionMismatch("one action matrix per even basis element")
    ne = even.dim
    d = action[0].nrows if action else 0
    if any(a.nrows != d or a.ncols != d for a in action):
        raise DimensionMismatch("action matrices must share one square shape")
    for i in range(ne):
        for j in range(ne):
            lhs = action[i] @ action[j] - action[j] @ action[i]
            rhs = Matrix.zero(d, d)
            for k, c in even.brackets.get((i, j), {}).items():
                rhs = rhs + action[k].scale(c)
            if lhs != rhs:
                raise AlgebraMismatch(f"action is not a representation at pair ({i},{j})")
    if odd_labels is None:
        odd_labels = [f"u{a+1}" for a in range(d)]
    labels = list(even.space.labels) + list(odd_labels)
    parities = [0] * ne + [1] * d
    brackets: dict[tuple[int, int], Vec] = {
        (i, j): dict(v) for (i, j), v in even.brackets.items()
    }
    for i in range(ne):
        for a in range(d):
            col = {ne + b: x for b, x in action[i].col(a).items()}
            if col:
                brackets[(i, ne + a)] = col
                brackets[(ne + a, i)] = {k: -x for k, x in col.items()}
    weights = None
    if even.cartan is not None and all(
        not any(k != l for k in action[h].col(l)) for h in even.cartan for l in range(d)
    ):
        # adjoint weights recomputed against the even Cartan so both parts
        # share one lattice arity
        weights = []
        for i in range(ne):
            wt = []
            for h in even.cartan:
                br = even.brackets.get((h, i), {})
                if any(k != i for k in br):
                    weights = None
                    break
                wt.append(br.get(i, ZERO))
            if weights is None:
                break
            weights.append(tuple(wt))
        if weights is not None:
            weights += [tuple(action[h].entry(a, a) for h in even.cartan) for a in range(d)]
    space = build_space(labels, parities, weights)
    return LieSA(
        space=space,
        brackets=brackets,
        family="split",
        params={"even_dim": ne, "odd_dim": d},
        cartan=even.cartan,
    )


# ---------------------------------------------------------------------------
# verification and derived algebras


def verify_lie(g: LieSA) -> bool:
    """Graded antisymmetry plus the Jacobi identity on every basis triple."""
    n = g.dim
    par = g.space.parities
    for (i, j), v in g.brackets.items():
        sign = -1 if (par[i] and par[j]) else 1
        flipped = {k: sign * -x for k, x in v.items()}
        if g.brackets.get((j, i), {}) != flipped:
            raise AlgebraMismatch(f"antisymmetry fails at ({i},{j})")
        got = (par[i] + par[j]) % 2
        if any(par[k] != got for k in v):
            raise GradingViolation(f"bracket ({i},{j}) is not parity homogeneous")
    e = [{k: Fraction(1)} for k in range(n)]
    for i in range(n):
        for j in range(n):
            sign = -1 if (par[i] and par[j]) else 1
            for k in range(n):
                lhs = g.bracket_coords(e[i], g.brackets.get((j, k), {}))
                rhs = g.bracket_coords(g.brackets.get((i, j), {}), e[k])
                vec_axpy(rhs, Fraction(sign), g.bracket_coords(e[j], g.brackets.get((i, k), {})))
                if lhs != rhs:
                    raise AlgebraMismatch(f"Jacobi fails on basis triple ({i},{j},{k})")
    return True


def centralizer(g: LieSA, elements) -> Matrix:
    """Canonical basis of the common centralizer of the given elements
    (columns of a matrix or a list of coordinate vectors)."""
    if isinstance(elements, Matrix):
        elements = elements.cols()
    mats = [g.ad_vector(v) for v in elements]
    if not mats:
        return column_span(Matrix.identity(g.dim))
    return joint_kernel(mats)


def center(g: LieSA) -> Matrix:
    return centralizer(g, [{i: Fraction(1)} for i in range(g.dim)])


def is_ideal(g: LieSA, sub: Matrix) -> bool:
    cols = sub.cols()
    for i in range(g.dim):
        for c in cols:
            br = g.bracket_coords({i: Fraction(1)}, c)
            if br and not in_span(sub, br):
                return False
    return True


def subalgebra_closure(g: LieSA, seed: Matrix) -> Matrix:
    span = column_span(seed)
    while True:
        cols = span.cols()
        fresh = []
        for a in cols:
            for b in cols:
                br = g.bracket_coords(a, b)
                if br and not in_span(span, br):
                    fresh.append(br)
        if not fresh:
            return span
        span = span_sum(span, Matrix.from_cols(fresh, g.dim))


@dataclass(frozen=True)
class SubalgebraSpec:
    """A subspace expected to close under the bracket; columns in the
    coordinates of the enclosing algebra.

    ``toral`` optionally singles out the columns whose semisimplicity
    certifies the whole action; by default every basis column must qualify.
    """

    basis: Matrix
    labels: tuple[str, ...] | None = None
    toral: Matrix | None = None


def as_algebra(g: LieSA, spec) -> LieSA:
    """Restrict the bracket to a subalgebra given by a SubalgebraSpec or a
    column matrix; raises AlgebraMismatch if the span does not close."""
    if isinstance(spec, Matrix):
        spec = SubalgebraSpec(basis=spec)
    basis = spec.basis
    k = basis.ncols
    cols = basis.cols()
    left = left_inverse(basis)
    if left is None:
        raise InvalidParams("subalgebra basis is linearly dependent")
    parities, weights = [], []
    for c in cols:
        p = vector_parity(g.space, c)
        if p is None:
            raise GradingViolation("subalgebra basis vector is not parity homogeneous")
        parities.append(p)
        weights.append(vector_weight(g.space, c))
    if any(w is None for w in weights):
        weights = None
    labels = list(spec.labels) if spec.labels else [f"x{i+1}" for i in range(k)]
    brackets: dict[tuple[int, int], Vec] = {}
    for i in range(k):
        for j in range(k):
            br = g.bracket_coords(cols[i], cols[j])
            if not br:
                continue
            coords = left.apply(br)
            if basis.apply(coords) != br:
                raise AlgebraMismatch("span does not close under the bracket")
            brackets[(i, j)] = coords
    space = build_space(labels, parities, weights)
    sub = LieSA(space=space, brackets=brackets)
    if g.matrix_basis is not None:
        sub.matrix_basis = [g.coords_to_matrix(c) for c in cols]
        sub.ambient = g.ambient
    return sub


def quotient_algebra(g: LieSA, ideal: Matrix) -> tuple[LieSA, Matrix, Matrix]:
    """Quotient by an ideal; returns (algebra, project, include).

    The representatives are standard basis vectors, so labels, parities and
    weights carry over verbatim; ``project @ include`` is the identity.
    """
    ideal = column_span(ideal)
    if not is_ideal(g, ideal):
        raise NotAnIdeal("subspace is not stable under the adjoint action")
    reps, project, rep_indices = quotient_basis(g.dim, ideal)
    labels = [g.space.labels[i] for i in rep_indices]
    parities = [g.space.parities[i] for i in rep_indices]
    weights = [g.space.weights[i] for i in rep_indices]
    brackets: dict[tuple[int, int], Vec] = {}
    for a, ia in enumerate(rep_indices):
        for b, ib in enumerate(rep_indices):
            br = g.brackets.get((ia, ib))
            if br:
                down = project.apply(br)
                if down:
                    brackets[(a, b)] = down
    space = build_space(labels, parities, weights)
    return LieSA(space=space, brackets=brackets), project, reps
