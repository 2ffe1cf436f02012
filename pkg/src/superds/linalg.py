"""Exact linear algebra over the rationals.

Everything here is built on `fractions.Fraction`; there is no floating point
anywhere in the package.  Matrices are stored as sparse rows (dict column ->
value), which keeps the large, mostly-zero operators that show up in adjoint
and exterior-power constructions cheap.

Subspaces are always handed around as matrices whose *columns* span the
subspace, normalized to a canonical form (reduced row echelon of the
transpose).  Two subspaces are equal iff their canonical matrices compare
equal, so higher layers can use ``==`` on spans directly.

Vectors are plain ``dict[int, Fraction]`` with zero entries omitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch, IrrationalSpectrum

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# sparse vectors


def vec_scale(v: dict[int, Fraction], c: Fraction) -> dict[int, Fraction]:
    if not c:
        return {}
    return {i: c * x for i, x in v.items()}


def vec_axpy(target: dict[int, Fraction], c: Fraction, source: dict[int, Fraction]) -> None:
    """target += c * source, in place, dropping zeros."""
    if not c:
        return
    for i, x in source.items():
        val = target.get(i, ZERO) + c * x
        if val:
            target[i] = val
        else:
            target.pop(i, None)


def vec_add(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    out = dict(a)
    vec_axpy(out, ONE, b)
    return out


def vec_dot(a: dict[int, Fraction], b: dict[int, Fraction]) -> Fraction:
    if len(b) < len(a):
        a, b = b, a
    return sum((x * b[i] for i, x in a.items() if i in b), ZERO)


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Sparse exact matrix; ``rows[i]`` maps column index to a nonzero Fraction."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[dict] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = [{} for _ in range(nrows)]
        else:
            if len(rows) != nrows:
                raise DimensionMismatch(f"expected {nrows} rows, got {len(rows)}")
            clean = []
            for r in rows:
                row = {}
                for j, x in r.items():
                    if not 0 <= j < ncols:
                        raise DimensionMismatch(f"column index {j} out of range for ncols={ncols}")
                    x = _frac(x)
                    if x:
                        row[j] = x
                clean.append(row)
            self.rows = clean

    @classmethod
    def _raw(cls, nrows: int, ncols: int, rows: list[dict]) -> "Matrix":
        m = cls.__new__(cls)
        m.nrows = nrows
        m.ncols = ncols
        m.rows = rows
        return m

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "Matrix":
        return cls._raw(nrows, ncols, [{} for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(n, n, [{i: ONE} for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        """Build from dense row lists (or from sparse dict rows if ncols is given)."""
        rows = list(rows)
        if rows and isinstance(rows[0], dict):
            if ncols is None:
                raise DimensionMismatch("ncols is required for dict rows")
            return cls(len(rows), ncols, rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
            data.append({j: _frac(x) for j, x in enumerate(r) if x})
        return cls._raw(len(rows), ncols, data)

    @classmethod
    def from_cols(cls, cols: Sequence[dict], nrows: int) -> "Matrix":
        rows: list[dict] = [{} for _ in range(nrows)]
        for j, col in enumerate(cols):
            for i, x in col.items():
                x = _frac(x)
                if x:
                    rows[i][j] = x
        return cls._raw(nrows, len(cols), rows)

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: dict) -> "Matrix":
        rows: list[dict] = [{} for _ in range(nrows)]
        for (i, j), x in entries.items():
            x = _frac(x)
            if x:
                rows[i][j] = x
        return cls._raw(nrows, ncols, rows)

    @classmethod
    def from_diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls._raw(n, n, [{i: _frac(v)} if v else {} for i, v in enumerate(values)])

    # -- accessors

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows[i].get(j, ZERO)

    def col(self, j: int) -> dict[int, Fraction]:
        return {i: row[j] for i, row in enumerate(self.rows) if j in row}

    def cols(self) -> list[dict[int, Fraction]]:
        out: list[dict] = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, x in row.items():
                out[j][i] = x
        return out

    def to_lists(self) -> list[list[Fraction]]:
        return [[row.get(j, ZERO) for j in range(self.ncols)] for row in self.rows]

    def is_zero(self) -> bool:
        return all(not row for row in self.rows)

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows)

    def copy(self) -> "Matrix":
        return Matrix._raw(self.nrows, self.ncols, [dict(r) for r in self.rows])

    def take_rows(self, indices: Sequence[int]) -> "Matrix":
        return Matrix._raw(len(indices), self.ncols, [dict(self.rows[i]) for i in indices])

    def take_cols(self, indices: Sequence[int]) -> "Matrix":
        pos = {j: k for k, j in enumerate(indices)}
        rows = [{pos[j]: x for j, x in row.items() if j in pos} for row in self.rows]
        return Matrix._raw(self.nrows, len(indices), rows)

    # -- arithmetic

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(sorted(r.items())) for r in self.rows)))

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("matrix shapes differ")
        rows = []
        for a, b in zip(self.rows, other.rows):
            row = dict(a)
            vec_axpy(row, ONE, b)
            rows.append(row)
        return Matrix._raw(self.nrows, self.ncols, rows)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("matrix shapes differ")
        rows = []
        for a, b in zip(self.rows, other.rows):
            row = dict(a)
            vec_axpy(row, -ONE, b)
            rows.append(row)
        return Matrix._raw(self.nrows, self.ncols, rows)

    def __neg__(self) -> "Matrix":
        return self.scale(-ONE)

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        if not c:
            return Matrix.zero(self.nrows, self.ncols)
        return Matrix._raw(self.nrows, self.ncols, [{j: c * x for j, x in r.items()} for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        rows = []
        for a in self.rows:
            row: dict[int, Fraction] = {}
            for k, x in a.items():
                vec_axpy(row, x, other.rows[k])
            rows.append(row)
        return Matrix._raw(self.nrows, other.ncols, rows)

    def apply(self, v: dict[int, Fraction]) -> dict[int, Fraction]:
        """Matrix times sparse column vector."""
        out: dict[int, Fraction] = {}
        for i, row in enumerate(self.rows):
            val = vec_dot(row, v)
            if val:
                out[i] = val
        return out

    def transpose(self) -> "Matrix":
        rows: list[dict] = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, x in row.items():
                rows[j][i] = x
        return Matrix._raw(self.ncols, self.nrows, rows)

    def pow(self, k: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise DimensionMismatch("pow needs a square matrix")
        out = Matrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # -- echelon form

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and the tuple of pivot columns.

        Pivoting is deterministic: leftmost available column, smallest row.
        """
        rows = [dict(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            pivot_row = None
            for i in range(r, self.nrows):
                if c in rows[i]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            prow = rows[r]
            f = prow[c]
            if f != 1:
                for j in list(prow):
                    prow[j] /= f
            for i in range(self.nrows):
                if i != r and c in rows[i]:
                    vec_axpy(rows[i], -rows[i][c], prow)
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return Matrix._raw(self.nrows, self.ncols, rows), tuple(pivots)


def hstack(*mats: Matrix) -> Matrix:
    nrows = mats[0].nrows
    if any(m.nrows != nrows for m in mats):
        raise DimensionMismatch("hstack needs equal row counts")
    rows: list[dict] = [{} for _ in range(nrows)]
    off = 0
    for m in mats:
        for i, row in enumerate(m.rows):
            for j, x in row.items():
                rows[i][j + off] = x
        off += m.ncols
    return Matrix._raw(nrows, off, rows)


def vstack(*mats: Matrix) -> Matrix:
    ncols = mats[0].ncols
    if any(m.ncols != ncols for m in mats):
        raise DimensionMismatch("vstack needs equal column counts")
    rows: list[dict] = []
    for m in mats:
        rows.extend(dict(r) for r in m.rows)
    return Matrix._raw(len(rows), ncols, rows)


# ---------------------------------------------------------------------------
# rank, kernel, image


@dataclass(frozen=True)
class ReduceResult:
    rank: int
    pivots: tuple[int, ...]
    kernel: Matrix
    image: Matrix


def rank(m: Matrix) -> int:
    return len(m.rref()[1])


def _kernel_from_rref(rr: Matrix, pivots: tuple[int, ...], ncols: int) -> Matrix:
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    cols = []
    for j in free:
        col = {j: ONE}
        for i, p in enumerate(pivots):
            x = rr.rows[i].get(j, ZERO)
            if x:
                col[p] = -x
        cols.append(col)
    return Matrix.from_cols(cols, ncols)


def kernel(m: Matrix) -> Matrix:
    """Canonical basis of the null space, as columns."""
    rr, pivots = m.rref()
    return column_span(_kernel_from_rref(rr, pivots, m.ncols))


def column_span(m: Matrix) -> Matrix:
    """Canonical matrix with the same column span (columns form the canonical basis)."""
    rr, pivots = m.transpose().rref()
    return Matrix._raw(len(pivots), m.nrows, [dict(rr.rows[i]) for i in range(len(pivots))]).transpose()


def reduce(m: Matrix) -> ReduceResult:
    rr, pivots = m.rref()
    ker = column_span(_kernel_from_rref(rr, pivots, m.ncols))
    return ReduceResult(rank=len(pivots), pivots=pivots, kernel=ker, image=column_span(m))


def joint_kernel(mats: Sequence[Matrix]) -> Matrix:
    mats = list(mats)
    if not mats:
        raise DimensionMismatch("joint_kernel needs at least one matrix")
    return kernel(vstack(*mats))


# ---------------------------------------------------------------------------
# solving


def solve(m: Matrix, b: dict[int, Fraction]) -> dict[int, Fraction] | None:
    """One solution of m x = b (free coordinates set to zero), or None."""
    aug = hstack(m, Matrix.from_cols([b], m.nrows))
    rr, pivots = aug.rref()
    if pivots and pivots[-1] == m.ncols:
        return None
    x: dict[int, Fraction] = {}
    for i, p in enumerate(pivots):
        val = rr.rows[i].get(m.ncols, ZERO)
        if val:
            x[p] = val
    return x


def solve_matrix(m: Matrix, b: Matrix) -> Matrix | None:
    """X with m @ X == b, or None.  Solves all columns off one echelon pass."""
    if b.nrows != m.nrows:
        raise DimensionMismatch("right-hand side has wrong height")
    aug = hstack(m, b)
    rr, pivots = aug.rref()
    pivots = tuple(p for p in pivots if p < m.ncols)
    # consistency: below the pivot rows, every augmented row must vanish
    for i in range(len(pivots), m.nrows):
        if rr.rows[i]:
            return None
    cols = []
    for j in range(b.ncols):
        col = {}
        for i, p in enumerate(pivots):
            val = rr.rows[i].get(m.ncols + j, ZERO)
            if val:
                col[p] = val
        cols.append(col)
    return Matrix.from_cols(cols, m.ncols)


def invert(m: Matrix) -> Matrix | None:
    if m.nrows != m.ncols:
        raise DimensionMismatch("only square matrices invert")
    aug = hstack(m, Matrix.identity(m.nrows))
    rr, pivots = aug.rref()
    if len(pivots) < m.nrows or any(p >= m.ncols for p in pivots):
        return None
    rows = [{j - m.ncols: x for j, x in rr.rows[i].items() if j >= m.ncols} for i in range(m.nrows)]
    return Matrix._raw(m.nrows, m.ncols, rows)


def left_inverse(m: Matrix) -> Matrix | None:
    """L with L @ m == identity, for injective m; None if columns are dependent."""
    gram = invert(m.transpose() @ m)
    if gram is None:
        return None
    return gram @ m.transpose()


# ---------------------------------------------------------------------------
# span algebra


def span_sum(a: Matrix, b: Matrix) -> Matrix:
    if a.nrows != b.nrows:
        raise DimensionMismatch("spans live in different ambient spaces")
    return column_span(hstack(a, b))


def span_intersect(a: Matrix, b: Matrix) -> Matrix:
    if a.nrows != b.nrows:
        raise DimensionMismatch("spans live in different ambient spaces")
    if a.ncols == 0 or b.ncols == 0:
        return Matrix.zero(a.nrows, 0)
    k = kernel(hstack(a, b.scale(-1)))
    coeffs = k.take_rows(range(a.ncols))
    return column_span(a @ coeffs)


def span_contains(big: Matrix, small: Matrix) -> bool:
    if big.nrows != small.nrows:
        raise DimensionMismatch("spans live in different ambient spaces")
    return rank(hstack(big, small)) == rank(big)


def in_span(m: Matrix, v: dict[int, Fraction]) -> bool:
    return span_contains(m, Matrix.from_cols([v], m.nrows))


def homology(down: Matrix, up: Matrix) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """(kernel, image, representatives, project) of ker(down)/im(up).

    Requires down @ up = 0.  Representatives are the canonical kernel columns
    surviving modulo the image; project sends any kernel vector to its class
    coordinates (project @ representatives is the identity).
    """
    assert (down @ up).is_zero(), "not a chain complex"
    ker = kernel(down)
    im = column_span(up)
    ker_left = left_inverse(ker)
    im_in_ker = ker_left @ im
    assert ker @ im_in_ker == im, "image not inside kernel"
    _, proj, idx = quotient_basis(ker.ncols, im_in_ker)
    reps = ker.take_cols(idx)
    project = proj @ ker_left
    return ker, im, reps, project


def quotient_basis(ambient_dim: int, sub: Matrix) -> tuple[Matrix, Matrix, list[int]]:
    """Canonical complement data for ambient / span(sub).

    Returns ``(representatives, project, rep_indices)`` where the
    representatives are standard basis vectors (as columns), ``project`` is the
    quotient map in those coordinates (``project @ representatives`` is the
    identity and ``project @ sub`` is zero), and ``rep_indices`` lists which
    standard coordinates were kept.
    """
    if sub.nrows != ambient_dim:
        raise DimensionMismatch("subspace has wrong ambient dimension")
    rr, pivots = sub.transpose().rref()
    pivot_set = set(pivots)
    rep_indices = [j for j in range(ambient_dim) if j not in pivot_set]
    reps = Matrix.from_cols([{j: ONE} for j in rep_indices], ambient_dim)
    proj_rows = []
    for j in rep_indices:
        row = {j: ONE}
        for i, p in enumerate(pivots):
            x = rr.rows[i].get(j, ZERO)
            if x:
                row[p] = -x
        proj_rows.append(row)
    project = Matrix._raw(len(rep_indices), ambient_dim, proj_rows)
    return reps, project, rep_indices


# ---------------------------------------------------------------------------
# polynomials (coefficient lists, ascending degree, exact)


def poly_normalize(p: Sequence) -> list[Fraction]:
    out = [_frac(x) for x in p]
    while out and not out[-1]:
        out.pop()
    return out


def poly_degree(p: Sequence[Fraction]) -> int:
    return len(poly_normalize(p)) - 1


def poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = ZERO
    for c in reversed(poly_normalize(p)):
        acc = acc * x + c
    return acc


def poly_mul(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    p, q = poly_normalize(p), poly_normalize(q)
    if not p or not q:
        return []
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_normalize(out)


def poly_derivative(p: Sequence[Fraction]) -> list[Fraction]:
    p = poly_normalize(p)
    return poly_normalize([i * c for i, c in enumerate(p)][1:])


def poly_divmod(p: Sequence[Fraction], q: Sequence[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    p, q = poly_normalize(p), poly_normalize(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [ZERO] * max(0, len(p) - len(q) + 1)
    while len(rem) >= len(q):
        c = rem[-1] / q[-1]
        d = len(rem) - len(q)
        quot[d] = c
        for i, b in enumerate(q):
            rem[d + i] -= c * b
        rem = poly_normalize(rem)
        if not rem:
            break
    return poly_normalize(quot), rem


def poly_gcd(p: Sequence[Fraction], q: Sequence[Fraction]) -> list[Fraction]:
    a, b = poly_normalize(p), poly_normalize(q)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def is_squarefree(p: Sequence[Fraction]) -> bool:
    return poly_degree(poly_gcd(p, poly_derivative(p))) <= 0


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def rational_roots(p: Sequence[Fraction]) -> tuple[list[tuple[Fraction, int]], list[Fraction]]:
    """All rational roots with multiplicity, plus the rootless remaining factor.

    Uses the rational root theorem on the integer-cleared polynomial and
    deflates each root fully; roots come back sorted.
    """
    p = poly_normalize(p)
    if not p:
        raise ZeroDivisionError("zero polynomial has every root")
    roots: list[tuple[Fraction, int]] = []
    # factor out x^k
    k = 0
    while not p[0]:
        p = p[1:]
        k += 1
    if k:
        roots.append((ZERO, k))
    if len(p) > 1:
        denom_lcm = 1
        for c in p:
            denom_lcm = denom_lcm * c.denominator // _gcd_int(denom_lcm, c.denominator)
        ints = [int(c * denom_lcm) for c in p]
        candidates = set()
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                candidates.add(Fraction(num, den))
                candidates.add(Fraction(-num, den))
        for cand in sorted(candidates):
            mult = 0
            while len(p) > 1 and not poly_eval(p, cand):
                p, rem = poly_divmod(p, [-cand, ONE])
                assert not rem
                mult += 1
            if mult:
                roots.append((cand, mult))
    roots.sort()
    return roots, p


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# minimal polynomial and spectral splitting


def minimal_polynomial(m: Matrix) -> list[Fraction]:
    """Monic minimal polynomial, ascending coefficients.

    Powers of ``m`` are flattened and fed into an incrementally maintained
    echelon basis with coefficient tracking; the first linear dependence is the
    minimal relation, so this terminates at the true degree without ever
    forming a full Krylov matrix.
    """
    if m.nrows != m.ncols:
        raise DimensionMismatch("minimal polynomial needs a square matrix")
    n = m.nrows
    if n == 0:
        return [ONE]
    echelon: list[tuple[int, dict, dict]] = []  # (pivot, reduced row, combination by degree)
    power = Matrix.identity(n)
    k = 0
    while True:
        vec: dict[int, Fraction] = {}
        for i, row in enumerate(power.rows):
            for j, x in row.items():
                vec[i * n + j] = x
        combo: dict[int, Fraction] = {k: ONE}
        for piv, erow, ecombo in echelon:
            if piv in vec:
                f = vec[piv]
                vec_axpy(vec, -f, erow)
                vec_axpy(combo, -f, ecombo)
        if not vec:
            coeffs = [ZERO] * (k + 1)
            for deg, c in combo.items():
                coeffs[deg] = c
            return coeffs
        piv = min(vec)
        f = vec[piv]
        if f != 1:
            vec = {j: x / f for j, x in vec.items()}
            combo = {d: c / f for d, c in combo.items()}
        for _, erow, ecombo in echelon:
            if piv in erow:
                g = erow[piv]
                vec_axpy(erow, -g, vec)
                vec_axpy(ecombo, -g, combo)
        echelon.append((piv, vec, combo))
        power = power @ m
        k += 1


@dataclass(frozen=True)
class EigenBlock:
    value: Fraction
    multiplicity: int  # multiplicity in the minimal polynomial
    basis: Matrix  # canonical columns spanning ker (m - value)^multiplicity


def eigen_split(m: Matrix) -> list[EigenBlock]:
    """Primary decomposition over the rationals, sorted by eigenvalue.

    Raises IrrationalSpectrum when the minimal polynomial has a factor with no
    rational root, since the decomposition then leaves the base field.
    """
    p = minimal_polynomial(m)
    roots, remainder = rational_roots(p)
    if poly_degree(remainder) > 0:
        raise IrrationalSpectrum(
            f"minimal polynomial has a degree-{poly_degree(remainder)} factor with no rational root"
        )
    blocks = []
    ident = Matrix.identity(m.nrows)
    for value, mult in roots:
        basis = kernel((m - ident.scale(value)).pow(mult))
        blocks.append(EigenBlock(value=value, multiplicity=mult, basis=basis))
    total = sum(b.basis.ncols for b in blocks)
    assert total == m.nrows, "primary decomposition must fill the space"
    return blocks
