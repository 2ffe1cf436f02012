"""Normal forms of homogeneous odd elements in the matrix families.

An odd element u is homogeneous when c = [u, u] acts semisimply in the
adjoint representation; those are the elements the functor machinery accepts.
Every computation stays over the rationals, so normal forms that genuinely
need an irrational base change (a square root of an eigenvalue, or a
quadratic form anisotropic over Q) raise IrrationalSpectrum instead of
silently approximating.

Conjugators are returned as even invertible matrices P on the natural module
with ``transport(g, P, u) == standard_u(g, data)`` checked exactly before
anything is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebras import LieSA
from .errors import (
    AlgebraMismatch,
    InvalidParams,
    IrrationalSpectrum,
    NotHomogeneous,
    NotOdd,
    NotStandardForm,
    RankOutOfRange,
)
from .linalg import (
    Matrix,
    eigen_split,
    invert,
    is_squarefree,
    kernel,
    minimal_polynomial,
    rank,
    vec_dot,
)
from .spaces import check_operator_parity, vector_parity

Vec = dict[int, Fraction]


@dataclass(frozen=True)
class RankData:
    """Classification data of a homogeneous odd element.

    ``r`` counts pair slots (gl, q) or symmetric pairs (p); ``k`` the diagonal
    tail slots of q; ``s`` the one-sided slots of gl or the skew pairs of p;
    ``d`` the defect slot of p.  ``coeffs`` lists the nonzero eigenvalue
    parameters in sorted order, or None when they exist but are irrational.
    """

    family: str
    r: int = 0
    k: int = 0
    s: int = 0
    d: int = 0
    coeffs: tuple[Fraction, ...] | None = ()

    @property
    def rank(self) -> Fraction:
        if self.family == "q":
            return Fraction(self.r) + Fraction(self.k, 2)
        if self.family == "p":
            return Fraction(max(self.r, self.s))
        return Fraction(self.r)


def _require_odd(g: LieSA, u: Vec) -> None:
    if u and vector_parity(g.space, u) != 1:
        raise NotOdd("element is not an odd homogeneous vector")


def square(g: LieSA, u: Vec) -> Vec:
    """c = [u, u]."""
    _require_odd(g, u)
    return g.bracket_coords(u, u)


def is_homogeneous(g: LieSA, u: Vec) -> bool:
    """Whether [u, u] acts semisimply in the adjoint representation."""
    _require_odd(g, u)
    c = g.bracket_coords(u, u)
    if not c:
        return True
    return is_squarefree(minimal_polynomial(g.ad_vector(c)))


def _require_family(g: LieSA, *families: str) -> None:
    if g.family not in families:
        raise InvalidParams(
            f"operation needs a {'/'.join(families)} realization, got {g.family!r}"
        )


def _gl_blocks(g: LieSA, mat: Matrix) -> tuple[Matrix, Matrix]:
    m, n = g.params["m"], g.params["n"]
    top = mat.take_rows(range(m)).take_cols(range(m, m + n))
    bottom = mat.take_rows(range(m, m + n)).take_cols(range(m))
    return top, bottom


def _qp_blocks(g: LieSA, mat: Matrix) -> tuple[Matrix, Matrix]:
    n = g.params["n"]
    top = mat.take_rows(range(n)).take_cols(range(n, 2 * n))
    bottom = mat.take_rows(range(n, 2 * n)).take_cols(range(n))
    return top, bottom


# ---------------------------------------------------------------------------
# rank classification


def rank_of(g: LieSA, u: Vec) -> RankData:
    _require_family(g, "gl", "q", "p")
    if not is_homogeneous(g, u):
        raise NotHomogeneous("[u, u] does not act semisimply")
    if g.family == "gl":
        return _rank_gl(g, u)
    if g.family == "q":
        return _rank_q(g, u)
    return _rank_p(g, u)


def _rank_gl(g: LieSA, u: Vec) -> RankData:
    mat = g.coords_to_matrix(u)
    blocks = eigen_split(mat @ mat)
    coeffs: list[Fraction] = []
    r = s = 0
    for blk in blocks:
        if blk.value == 0:
            cols = blk.basis.cols()
            evens = [c for c in cols if vector_parity(g.ambient, c) == 0]
            odds = [c for c in cols if vector_parity(g.ambient, c) == 1]
            b = rank(Matrix.from_cols([mat.apply(o) for o in odds], g.ambient.dim))
            s = rank(Matrix.from_cols([mat.apply(e) for e in evens], g.ambient.dim))
            r += b + s
        else:
            assert blk.multiplicity == 1, "homogeneous element must square semisimply"
            even = sum(1 for c in blk.basis.cols() if vector_parity(g.ambient, c) == 0)
            odd = blk.basis.ncols - even
            assert even == odd, "nonzero eigenblocks pair the parities"
            r += odd
            coeffs += [blk.value] * odd
    if (mat @ mat).is_zero():
        top, bottom = _gl_blocks(g, mat)
        assert r == rank(top) + rank(bottom)
    return RankData(family="gl", r=r, s=s, coeffs=tuple(sorted(coeffs)))


def _rank_q(g: LieSA, u: Vec) -> RankData:
    mat = g.coords_to_matrix(u)
    b, _ = _qp_blocks(g, mat)
    n = g.params["n"]
    ker2 = kernel(b @ b)
    r = rank(Matrix.from_cols([b.apply(c) for c in ker2.cols()], n))
    k = n - ker2.ncols
    try:
        coeffs: tuple[Fraction, ...] | None = tuple(
            sorted(
                val
                for blk in eigen_split(b)
                if blk.value != 0
                for val in [blk.value] * blk.basis.ncols
            )
        )
    except IrrationalSpectrum:
        coeffs = None
    return RankData(family="q", r=r, k=k, coeffs=coeffs)


def _rank_p(g: LieSA, u: Vec) -> RankData:
    mat = g.coords_to_matrix(u)
    b, c = _qp_blocks(g, mat)
    rb, rc = rank(b), rank(c)
    assert rc % 2 == 0, "a skew form has even rank"
    return RankData(family="p", r=rb // 2, s=rc // 2, d=rb % 2, coeffs=())


# ---------------------------------------------------------------------------
# standard elements


def standard_u(g: LieSA, data: RankData) -> Vec:
    _require_family(g, "gl", "q", "p")
    if data.family != g.family:
        raise AlgebraMismatch(f"rank data is for {data.family!r}, algebra is {g.family!r}")
    if data.coeffs is None:
        raise IrrationalSpectrum("rank data has no rational coefficient list")
    if any(not c for c in data.coeffs):
        raise InvalidParams("coefficients must be nonzero")
    if tuple(sorted(data.coeffs)) != data.coeffs:
        raise InvalidParams("coefficients must be sorted")
    idx = g.space.index
    u: Vec = {}
    if g.family == "gl":
        m, n = g.params["m"], g.params["n"]
        t = len(data.coeffs)
        if data.k or data.d:
            raise InvalidParams("gl rank data uses only r, s, coeffs")
        if not (0 <= data.s <= data.r and t <= data.r - data.s):
            raise RankOutOfRange("need s <= r and len(coeffs) <= r - s")
        if data.r > min(m, n):
            raise RankOutOfRange(f"rank {data.r} exceeds min(m, n) = {min(m, n)}")
        for j in range(1, data.r + 1):
            if j <= data.r - data.s:
                u[idx(f"E[{j},{m + j}]")] = Fraction(1)
            if j <= t:
                u[idx(f"E[{m + j},{j}]")] = data.coeffs[j - 1]
            elif j > data.r - data.s:
                u[idx(f"E[{m + j},{j}]")] = Fraction(1)
        return u
    if g.family == "q":
        n = g.params["n"]
        if data.s or data.d:
            raise InvalidParams("q rank data uses only r, k, coeffs")
        if len(data.coeffs) != data.k:
            raise InvalidParams("q needs one coefficient per tail slot")
        if 2 * data.r + data.k > n:
            raise RankOutOfRange(f"2r + k = {2 * data.r + data.k} exceeds n = {n}")
        for i in range(1, data.r + 1):
            u[idx(f"T_E[{2 * i - 1},{2 * i}]")] = Fraction(1)
        for j, c in enumerate(data.coeffs, start=1):
            u[idx(f"T_E[{2 * data.r + j},{2 * data.r + j}]")] = c
        return u
    n = g.params["n"]
    if data.k or data.coeffs:
        raise InvalidParams("p rank data uses only r, s, d")
    if data.d not in (0, 1):
        raise InvalidParams("defect must be 0 or 1")
    if 2 * data.r > n or 2 * data.s > n:
        raise RankOutOfRange("2r and 2s must not exceed n")
    if data.d and (2 * data.r >= n or 2 * data.s >= n):
        raise RankOutOfRange("the defect slot needs a coordinate free of all pairs")
    for i in range(1, data.r + 1):
        u[idx(f"B[{2 * i - 1},{2 * i}]")] = Fraction(1)
    if data.d:
        u[idx(f"B[{n},{n}]")] = Fraction(1)
    for j in range(1, data.s + 1):
        u[idx(f"C[{2 * j - 1},{2 * j}]")] = Fraction(1)
    return u


def u_plus(g: LieSA) -> Vec:
    """The thin element of p(n): B the identity form, C = 0."""
    _require_family(g, "p")
    n = g.params["n"]
    return {g.space.index(f"B[{i},{i}]"): Fraction(1) for i in range(1, n + 1)}


def u_minus(g: LieSA) -> Vec:
    """The thick element of p(n), n even: C a full-rank skew form in pairs."""
    _require_family(g, "p")
    n = g.params["n"]
    if n % 2:
        raise InvalidParams("u_minus needs even n")
    return {
        g.space.index(f"C[{2 * i - 1},{2 * i}]"): Fraction(1)
        for i in range(1, n // 2 + 1)
    }


def t_full(g: LieSA) -> Vec:
    """The odd involution of q(n): all diagonal tails with coefficient one."""
    _require_family(g, "q")
    n = g.params["n"]
    return {g.space.index(f"T_E[{i},{i}]"): Fraction(1) for i in range(1, n + 1)}


# ---------------------------------------------------------------------------
# transport and normalization


def transport(g: LieSA, conjugator: Matrix, u: Vec) -> Vec:
    """Coordinates of P u P^{-1}; P must be even, invertible, and must keep
    the element inside the realized algebra."""
    check_operator_parity(conjugator, g.ambient, 0)
    inv = invert(conjugator)
    if inv is None:
        raise InvalidParams("conjugator is singular")
    moved = conjugator @ g.coords_to_matrix(u) @ inv
    coords = g.matrix_to_coords(moved)
    if coords is None:
        raise AlgebraMismatch("conjugation moved the element out of the algebra")
    return coords


def is_standard(g: LieSA, u: Vec) -> RankData | None:
    data = rank_of(g, u)
    if data.coeffs is None:
        return None
    try:
        std = standard_u(g, data)
    except RankOutOfRange:
        return None
    return data if std == u else None


def _complete(existing: list[Vec], candidates: list[Vec], dim: int) -> list[Vec]:
    """Extend an independent list by a subset of candidates spanning the rest."""
    m = Matrix.from_cols(existing + candidates, dim)
    _, pivots = m.rref()
    assert all(p in pivots for p in range(len(existing)))
    return [candidates[p - len(existing)] for p in pivots if p >= len(existing)]


def normalize(g: LieSA, u: Vec) -> tuple[RankData, Matrix]:
    """Rank data plus an even rational conjugator onto the standard element.

    The returned pair satisfies ``transport(g, P, u) == standard_u(g, data)``
    exactly; IrrationalSpectrum signals that no such conjugator exists over
    the rationals (and NotStandardForm that the element mixes both odd
    blocks of p, which this routine does not separate).
    """
    _require_family(g, "gl", "q", "p")
    if not is_homogeneous(g, u):
        raise NotHomogeneous("[u, u] does not act semisimply")
    if g.family == "gl":
        data, conj = _normalize_gl(g, u)
    elif g.family == "q":
        data, conj = _normalize_q(g, u)
    else:
        data, conj = _normalize_p(g, u)
    assert transport(g, conj, u) == standard_u(g, data)
    return data, conj


def _normalize_gl(g: LieSA, u: Vec) -> tuple[RankData, Matrix]:
    m, n = g.params["m"], g.params["n"]
    mat = g.coords_to_matrix(u)
    data = _rank_gl(g, u)
    blocks = eigen_split(mat @ mat)
    evens: list[Vec] = []
    odds: list[Vec] = []
    # slot order must match the standard element: nonzero eigenvalues
    # ascending, then one-sided slots from the zero block
    for blk in blocks:
        if blk.value == 0:
            continue
        for w in blk.basis.cols():
            if vector_parity(g.ambient, w) == 1:
                evens.append(mat.apply(w))
                odds.append(w)
    tail_evens: list[Vec] = []
    tail_odds: list[Vec] = []
    zero = next((blk for blk in blocks if blk.value == 0), None)
    if zero is not None:
        e_cols = [c for c in zero.basis.cols() if vector_parity(g.ambient, c) == 0]
        o_cols = [c for c in zero.basis.cols() if vector_parity(g.ambient, c) == 1]
        mb = Matrix.from_cols([mat.apply(o) for o in o_cols], g.ambient.dim)
        _, piv_b = mb.rref()
        evens += [mat.apply(o_cols[j]) for j in piv_b]
        odds += [o_cols[j] for j in piv_b]
        mc = Matrix.from_cols([mat.apply(e) for e in e_cols], g.ambient.dim)
        _, piv_c = mc.rref()
        evens += [e_cols[j] for j in piv_c]
        odds += [mat.apply(e_cols[j]) for j in piv_c]
        if e_cols:
            killed_e = Matrix.from_cols(e_cols, g.ambient.dim) @ kernel(mc)
            tail_evens = _complete(evens, killed_e.cols(), g.ambient.dim)
        if o_cols:
            killed_o = Matrix.from_cols(o_cols, g.ambient.dim) @ kernel(mb)
            tail_odds = _complete(odds, killed_o.cols(), g.ambient.dim)
    new_basis = evens + tail_evens + odds + tail_odds
    assert len(evens) + len(tail_evens) == m and len(odds) + len(tail_odds) == n
    q = Matrix.from_cols(new_basis, g.ambient.dim)
    return data, invert(q)


def _normalize_q(g: LieSA, u: Vec) -> tuple[RankData, Matrix]:
    n = g.params["n"]
    mat = g.coords_to_matrix(u)
    b, _ = _qp_blocks(g, mat)
    data = _rank_q(g, u)
    if data.coeffs is None:
        raise IrrationalSpectrum("q tails have irrational eigenvalues")
    blocks = eigen_split(b)
    paired: list[Vec] = []
    tails: list[Vec] = []
    leftovers: list[Vec] = []
    for blk in blocks:
        if blk.value != 0:
            tails += blk.basis.cols()
    zero = next((blk for blk in blocks if blk.value == 0), None)
    if zero is not None:
        z_cols = zero.basis.cols()
        mb = Matrix.from_cols([b.apply(z) for z in z_cols], n)
        _, piv = mb.rref()
        for j in piv:
            paired.append(b.apply(z_cols[j]))
            paired.append(z_cols[j])
        killed = Matrix.from_cols(z_cols, n) @ kernel(mb)
        leftovers = _complete(paired, killed.cols(), n)
    new_basis = paired + tails + leftovers
    assert len(new_basis) == n
    h = invert(Matrix.from_cols(new_basis, n))
    conj = Matrix.from_entries(2 * n, 2 * n, {})
    for i, row in enumerate(h.rows):
        for j, x in row.items():
            conj.rows[i][j] = x
            conj.rows[n + i][n + j] = x
    return data, conj


def _squarefree_part(x: Fraction) -> int:
    n = x.numerator * x.denominator
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        exp = 0
        while n % d == 0:
            n //= d
            exp += 1
        if exp % 2:
            out *= d
        d += 1
    return sign * out * n


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    a, b = math.isqrt(x.numerator), math.isqrt(x.denominator)
    root = Fraction(a, b)
    return root if root * root == x else None


def _sym_diagonalize(b: Matrix) -> tuple[Matrix, list[Fraction]]:
    """g with g b g^T diagonal, by symmetric elimination (completing squares)."""
    n = b.nrows
    work = [dict(r) for r in b.rows]
    g = Matrix.identity(n)

    def swap(i, j):
        work[i], work[j] = work[j], work[i]
        for row in work:
            vi, vj = row.pop(i, None), row.pop(j, None)
            if vj is not None:
                row[i] = vj
            if vi is not None:
                row[j] = vi
        g.rows[i], g.rows[j] = g.rows[j], g.rows[i]

    def add_row(i, j, factor):
        # row_i += factor * row_j, mirrored on columns
        for k, x in list(work[j].items()):
            val = work[i].get(k, Fraction(0)) + factor * x
            if val:
                work[i][k] = val
            else:
                work[i].pop(k, None)
        for row in work:
            x = row.get(j)
            if x:
                val = row.get(i, Fraction(0)) + factor * x
                if val:
                    row[i] = val
                else:
                    row.pop(i, None)
        for k, x in list(g.rows[j].items()):
            val = g.rows[i].get(k, Fraction(0)) + factor * x
            if val:
                g.rows[i][k] = val
            else:
                g.rows[i].pop(k, None)

    for k in range(n):
        if not work[k].get(k):
            pivot = next((l for l in range(k + 1, n) if work[l].get(l)), None)
            if pivot is not None:
                swap(k, pivot)
            else:
                off = next((l for l in range(k + 1, n) if work[k].get(l)), None)
                if off is None:
                    continue
                add_row(k, off, Fraction(1))
        pv = work[k][k]
        for l in range(k + 1, n):
            x = work[l].get(k)
            if x:
                add_row(l, k, -x / pv)
    diag = [work[i].get(i, Fraction(0)) for i in range(n)]
    return g, diag


def _skew_reduce(c: Matrix) -> tuple[Matrix, int]:
    """h with h c h^T in unit skew pairs followed by zeros; returns (h, pairs)."""
    n = c.nrows

    def form(x: Vec, y: Vec) -> Fraction:
        return vec_dot(x, c.apply(y))

    remaining: list[Vec] = [{i: Fraction(1)} for i in range(n)]
    pairs: list[Vec] = []
    while True:
        hit = None
        for a in range(len(remaining)):
            for bb in range(a + 1, len(remaining)):
                if form(remaining[a], remaining[bb]):
                    hit = (a, bb)
                    break
            if hit:
                break
        if hit is None:
            break
        a, bb = hit
        x = remaining[a]
        y = remaining[bb]
        val = form(x, y)
        y = {i: v / val for i, v in y.items()}
        rest = []
        for idx2, z in enumerate(remaining):
            if idx2 in (a, bb):
                continue
            znew = dict(z)
            zy = form(z, y)
            zx = form(z, x)
            for i, v in x.items():
                val2 = znew.get(i, Fraction(0)) - zy * v
                if val2:
                    znew[i] = val2
                else:
                    znew.pop(i, None)
            for i, v in y.items():
                val2 = znew.get(i, Fraction(0)) + zx * v
                if val2:
                    znew[i] = val2
                else:
                    znew.pop(i, None)
            rest.append(znew)
        pairs += [x, y]
        remaining = rest
    rows = pairs + remaining
    return Matrix.from_cols(rows, n).transpose(), len(pairs) // 2


def _isotropic_search(values: list[Fraction], bound: int = 12) -> list[Fraction] | None:
    """A nonzero rational zero of sum(values[i] x_i^2), by bounded enumeration.

    The last coordinate is solved for exactly, so the search is over integer
    tuples of height at most ``bound`` in the remaining coordinates.
    """
    k = len(values)
    if k < 2:
        return None

    def walk(prefix: list[int], height: int):
        if len(prefix) == k - 1:
            s = sum(v * x * x for v, x in zip(values, prefix))
            root = _rational_sqrt(-s / values[-1]) if s else Fraction(0)
            if root is None:
                return None
            cand = [Fraction(x) for x in prefix] + [root]
            if any(cand):
                return cand
            return None
        for x in range(-height, height + 1):
            got = walk(prefix + [x], height)
            if got is not None:
                return got
        return None

    for height in range(1, bound + 1):
        got = walk([], height)
        if got is not None:
            return got
    return None


def _split_symmetric(b: Matrix, n: int) -> tuple[Matrix, int, int]:
    """Rows h with h b h^T in standard shape (hyperbolic pairs, zeros, an
    optional unit slot at the end); returns (h, pairs, defect).

    Pairs are split off by square-class matching on a diagonalization, with a
    bounded isotropic-vector search as fallback for planes that straddle
    several diagonal entries; a leftover the search cannot break is reported
    as IrrationalSpectrum.
    """

    def form(x: Vec, y: Vec) -> Fraction:
        return vec_dot(x, b.apply(y))

    remaining: list[Vec] = [{i: Fraction(1)} for i in range(n)]
    pairs: list[Vec] = []
    zeros: list[Vec] = []
    tail: list[Vec] = []
    defect = 0
    while remaining:
        gram = Matrix.from_rows(
            [[form(x, y) for y in remaining] for x in remaining]
        )
        g1, diag = _sym_diagonalize(gram)
        vecs: list[Vec] = []
        for grow in g1.rows:
            v: Vec = {}
            for j, cv in grow.items():
                for i, x in remaining[j].items():
                    val = v.get(i, Fraction(0)) + cv * x
                    if val:
                        v[i] = val
                    else:
                        v.pop(i, None)
            vecs.append(v)
        zeros += [v for v, d in zip(vecs, diag) if not d]
        live = [(v, d) for v, d in zip(vecs, diag) if d]
        by_class: dict[int, list[int]] = {}
        for i, (_, d) in enumerate(live):
            by_class.setdefault(_squarefree_part(d), []).append(i)
        used = set()
        # entries whose square classes are negatives of each other span a
        # hyperbolic plane
        for cls in sorted(c for c in by_class if c > 0):
            mine, dual = by_class.get(cls, []), by_class.get(-cls, [])
            while mine and dual:
                a, bb = mine.pop(0), dual.pop(0)
                used |= {a, bb}
                va, da = live[a]
                vb, db = live[bb]
                e = _rational_sqrt(-da * db)
                assert e is not None
                x: Vec = dict(va)
                _vec_add_scaled(x, e / db, vb)
                y: Vec = {i: v / (2 * da) for i, v in va.items()}
                _vec_add_scaled(y, -e / (2 * da * db), vb)
                pairs += [x, y]
        leftover = [live[i] for i in range(len(live)) if i not in used]
        if not leftover:
            break
        if len(leftover) == 1:
            v, d = leftover[0]
            root = _rational_sqrt(d)
            if root is None:
                raise IrrationalSpectrum("unpaired diagonal entry is not a square")
            tail = [{i: x / root for i, x in v.items()}]
            defect = 1
            break
        if all(d > 0 for _, d in leftover) or all(d < 0 for _, d in leftover):
            raise IrrationalSpectrum(
                "symmetric part has a definite subform, anisotropic over Q"
            )
        coeffs = _isotropic_search([d for _, d in leftover])
        if coeffs is None:
            raise IrrationalSpectrum(
                "no rational hyperbolic splitting found within the search bound"
            )
        x = {}
        for cv, (v, _) in zip(coeffs, leftover):
            _vec_add_scaled(x, cv, v)
        partner = next(v for v, _ in leftover if form(x, v))
        scale = form(x, partner)
        y0 = {i: v / scale for i, v in partner.items()}
        y = dict(y0)
        _vec_add_scaled(y, -form(y0, y0) / 2, x)
        pairs += [x, y]
        corrected = []
        for v, _ in leftover:
            z = dict(v)
            _vec_add_scaled(z, -form(v, y), x)
            _vec_add_scaled(z, -form(v, x), y)
            if z:
                corrected.append(z)
        m = Matrix.from_cols(corrected, n)
        _, piv = m.rref()
        remaining = [corrected[j] for j in piv]
    h = Matrix.from_cols(pairs + zeros + tail, n).transpose()
    return h, len(pairs) // 2, defect


def _vec_add_scaled(target: Vec, c: Fraction, source: Vec) -> None:
    if not c:
        return
    for i, x in source.items():
        val = target.get(i, Fraction(0)) + c * x
        if val:
            target[i] = val
        else:
            target.pop(i, None)


def _normalize_p(g: LieSA, u: Vec) -> tuple[RankData, Matrix]:
    n = g.params["n"]
    mat = g.coords_to_matrix(u)
    b, c = _qp_blocks(g, mat)
    if not b.is_zero() and not c.is_zero():
        raise NotStandardForm(
            "element mixes symmetric and skew parts; only pure ones are normalized here"
        )
    if c.is_zero():
        g2, r_pairs, defect = _split_symmetric(b, n)
        data = RankData(family="p", r=r_pairs, s=0, d=defect, coeffs=())
    else:
        h, s_pairs = _skew_reduce(c)
        # the action sends C to (g^T)^{-1} C g^{-1}, so pick g from h directly
        g2 = invert(h.transpose())
        data = RankData(family="p", r=0, s=s_pairs, d=0, coeffs=())
    ginv_t = invert(g2).transpose()
    conj = Matrix.from_entries(2 * n, 2 * n, {})
    for i, row in enumerate(g2.rows):
        for j, x in row.items():
            conj.rows[i][j] = x
    for i, row in enumerate(ginv_t.rows):
        for j, x in row.items():
            conj.rows[n + i][n + j] = x
    return data, conj
