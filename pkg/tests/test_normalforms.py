"""Rank classification and rational normal forms of odd elements."""

import random
from fractions import Fraction

import pytest

from superds import normalforms as nf
from superds.algebras import make_family
from superds.errors import (
    AlgebraMismatch,
    GradingViolation,
    InvalidParams,
    IrrationalSpectrum,
    NotHomogeneous,
    NotOdd,
    NotStandardForm,
    RankOutOfRange,
)
from superds.linalg import Matrix, invert
from superds.normalforms import RankData


def rand_invertible(rng, n):
    while True:
        m = Matrix.from_rows(
            [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        )
        if invert(m) is not None:
            return m


def block_diag(a, b):
    n = a.nrows + b.nrows
    out = Matrix.zero(n, n)
    for i, row in enumerate(a.rows):
        for j, x in row.items():
            out.rows[i][j] = x
    for i, row in enumerate(b.rows):
        for j, x in row.items():
            out.rows[a.nrows + i][a.ncols + j] = x
    return out


def family_conjugator(g, rng):
    if g.family == "gl":
        m, n = g.params["m"], g.params["n"]
        return block_diag(rand_invertible(rng, m), rand_invertible(rng, n))
    n = g.params["n"]
    h = rand_invertible(rng, n)
    if g.family == "q":
        return block_diag(h, h)
    return block_diag(h, invert(h).transpose())


# ---------------------------------------------------------------------------
# squares and homogeneity


def test_square_and_homogeneous_basics():
    g = make_family("gl", 1, 1)
    e = {g.space.index("E[1,2]"): Fraction(1)}
    f = {g.space.index("E[2,1]"): Fraction(1)}
    assert nf.square(g, e) == {}
    assert nf.is_homogeneous(g, e)
    both = {**e, **f}
    c = nf.square(g, both)
    assert c == {g.space.index("E[1,1]"): Fraction(2), g.space.index("E[2,2]"): Fraction(2)}
    assert nf.is_homogeneous(g, both)


def test_not_odd():
    g = make_family("gl", 1, 1)
    with pytest.raises(NotOdd):
        nf.square(g, {g.space.index("E[1,1]"): Fraction(1)})
    with pytest.raises(NotOdd):
        nf.is_homogeneous(
            g, {g.space.index("E[1,1]"): Fraction(1), g.space.index("E[1,2]"): Fraction(1)}
        )


def test_inhomogeneous_element_detected():
    g = make_family("gl", 2, 2)
    u = {g.space.index("E[1,4]"): Fraction(1), g.space.index("E[4,2]"): Fraction(1)}
    assert not nf.is_homogeneous(g, u)
    with pytest.raises(NotHomogeneous):
        nf.rank_of(g, u)
    with pytest.raises(NotHomogeneous):
        nf.normalize(g, u)


# ---------------------------------------------------------------------------
# standard elements and rank round trips


GL_GRID = [
    RankData("gl", r=0),
    RankData("gl", r=1),
    RankData("gl", r=1, s=1),
    RankData("gl", r=2, coeffs=(Fraction(1),)),
    RankData("gl", r=2, coeffs=(Fraction(-1), Fraction(2))),
    RankData("gl", r=2, s=1, coeffs=(Fraction(3),)),
    RankData("gl", r=2, s=2),
]

Q_GRID = [
    RankData("q", r=1),
    RankData("q", k=1, coeffs=(Fraction(2),)),
    RankData("q", r=1, k=1, coeffs=(Fraction(-1),)),
    RankData("q", k=2, coeffs=(Fraction(1), Fraction(1))),
    RankData("q", k=2, coeffs=(Fraction(1), Fraction(4))),
]

P_GRID = [
    RankData("p", r=1),
    RankData("p", s=1),
    RankData("p", r=1, d=1),
    RankData("p", r=2),
    RankData("p", s=2),
]


@pytest.mark.parametrize("data", GL_GRID)
def test_gl_round_trip(data):
    g = make_family("gl", 2, 3)
    u = nf.standard_u(g, data)
    assert nf.rank_of(g, u) == data
    assert nf.is_standard(g, u) == data


@pytest.mark.parametrize("data", Q_GRID)
def test_q_round_trip(data):
    g = make_family("q", 3)
    u = nf.standard_u(g, data)
    assert nf.rank_of(g, u) == data
    assert nf.is_standard(g, u) == data


@pytest.mark.parametrize("data", P_GRID)
def test_p_round_trip(data):
    g = make_family("p", 4)
    u = nf.standard_u(g, data)
    assert nf.rank_of(g, u) == data
    assert nf.is_standard(g, u) == data


def test_rank_values():
    assert RankData("gl", r=3).rank == 3
    assert RankData("q", r=1, k=1, coeffs=(Fraction(1),)).rank == Fraction(3, 2)
    assert RankData("p", r=1, s=2).rank == 2


def test_rank_out_of_range():
    gl = make_family("gl", 1, 1)
    with pytest.raises(RankOutOfRange):
        nf.standard_u(gl, RankData("gl", r=2))
    q = make_family("q", 2)
    with pytest.raises(RankOutOfRange):
        nf.standard_u(q, RankData("q", r=1, k=1, coeffs=(Fraction(1),)))
    p = make_family("p", 2)
    with pytest.raises(RankOutOfRange):
        nf.standard_u(p, RankData("p", r=1, d=1))
    with pytest.raises(InvalidParams):
        nf.standard_u(gl, RankData("gl", r=1, coeffs=(Fraction(0),)))
    with pytest.raises(InvalidParams):
        nf.standard_u(gl, RankData("gl", r=2, coeffs=(Fraction(2), Fraction(1))))


def test_fourfold_rank_example():
    """A rank-4 element of gl(4|4) whose square has spectrum {-1, 0, 1}."""
    g = make_family("gl", 4, 4)
    data = RankData("gl", r=4, coeffs=(Fraction(-1), Fraction(1), Fraction(1)))
    u = nf.standard_u(g, data)
    assert nf.is_homogeneous(g, u)
    assert nf.rank_of(g, u) == data
    assert data.rank == 4


# ---------------------------------------------------------------------------
# special elements


def test_u_plus_ranks():
    p3 = make_family("p", 3)
    assert nf.rank_of(p3, nf.u_plus(p3)) == RankData("p", r=1, s=0, d=1)
    p2 = make_family("p", 2)
    assert nf.rank_of(p2, nf.u_plus(p2)) == RankData("p", r=1, s=0, d=0)


def test_u_plus_is_not_rationally_standard():
    """The identity form is anisotropic over Q, so no rational conjugator
    reaches the hyperbolic standard form even though the rank data matches."""
    for n in (2, 3):
        g = make_family("p", n)
        with pytest.raises(IrrationalSpectrum):
            nf.normalize(g, nf.u_plus(g))


def test_u_minus():
    g = make_family("p", 4)
    u = nf.u_minus(g)
    assert nf.rank_of(g, u) == RankData("p", r=0, s=2, d=0)
    data, conj = nf.normalize(g, u)
    assert data == RankData("p", r=0, s=2, d=0)
    with pytest.raises(InvalidParams):
        nf.u_minus(make_family("p", 3))


def test_t_full():
    g = make_family("q", 2)
    u = nf.t_full(g)
    assert nf.rank_of(g, u) == RankData("q", r=0, k=2, coeffs=(Fraction(1), Fraction(1)))
    assert nf.rank_of(g, u).rank == 1
    data, conj = nf.normalize(g, u)
    assert data.k == 2


# ---------------------------------------------------------------------------
# normalize round trips under random conjugation


@pytest.mark.parametrize("data", [d for d in GL_GRID if d.r])
def test_normalize_gl_conjugation_invariant(data):
    rng = random.Random(hash((data.r, data.s, data.coeffs)) & 0xFFFF)
    g = make_family("gl", 2, 3)
    std = nf.standard_u(g, data)
    for _ in range(3):
        moved = nf.transport(g, family_conjugator(g, rng), std)
        got, conj = nf.normalize(g, moved)
        assert got == data
        assert nf.transport(g, conj, moved) == std


@pytest.mark.parametrize("data", Q_GRID)
def test_normalize_q_conjugation_invariant(data):
    rng = random.Random(hash((data.r, data.k, data.coeffs)) & 0xFFFF)
    g = make_family("q", 3)
    std = nf.standard_u(g, data)
    for _ in range(3):
        moved = nf.transport(g, family_conjugator(g, rng), std)
        got, conj = nf.normalize(g, moved)
        assert got == data
        assert nf.transport(g, conj, moved) == std


@pytest.mark.parametrize("data", [d for d in P_GRID if d.r == 0 or d.s == 0])
def test_normalize_p_conjugation_invariant(data):
    rng = random.Random(hash((data.r, data.s, data.d)) & 0xFFFF)
    g = make_family("p", 4)
    std = nf.standard_u(g, data)
    for _ in range(3):
        moved = nf.transport(g, family_conjugator(g, rng), std)
        got, conj = nf.normalize(g, moved)
        assert got == data
        assert nf.transport(g, conj, moved) == std


def test_normalize_p_mixed_unsupported():
    g = make_family("p", 2)
    u = nf.standard_u(g, RankData("p", r=1, s=1))
    with pytest.raises(NotStandardForm):
        nf.normalize(g, u)


def test_normalize_zero():
    g = make_family("gl", 2, 2)
    data, conj = nf.normalize(g, {})
    assert data == RankData("gl")
    assert conj == Matrix.identity(4)


# ---------------------------------------------------------------------------
# transport validation


def test_transport_checks():
    g = make_family("q", 2)
    u = nf.standard_u(g, RankData("q", r=1))
    with pytest.raises(GradingViolation):
        odd_p = Matrix.identity(4) + Matrix.from_entries(4, 4, {(0, 2): 1})
        nf.transport(g, odd_p, u)
    with pytest.raises(InvalidParams):
        nf.transport(g, Matrix.zero(4, 4), u)
    with pytest.raises(AlgebraMismatch):
        bad = block_diag(Matrix.from_diag([1, 2]), Matrix.identity(2))
        nf.transport(g, bad, u)


def test_is_standard_rejects_non_canonical():
    g = make_family("gl", 2, 1)
    u = {g.space.index("E[1,3]"): Fraction(1), g.space.index("E[2,3]"): Fraction(1)}
    assert nf.is_standard(g, u) is None
    data, conj = nf.normalize(g, u)
    assert data == RankData("gl", r=1)
