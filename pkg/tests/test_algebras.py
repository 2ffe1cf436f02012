"""Family constructions, bracket axioms, and derived algebras."""

import random
from fractions import Fraction

import pytest

from superds import algebras as al
from superds.errors import (
    AlgebraMismatch,
    GradingViolation,
    InvalidParams,
    NotAnIdeal,
)
from superds.linalg import Matrix, column_span, rank
from superds.spaces import supertrace, vector_parity


def basis_vec(g, label):
    return {g.space.index(label): Fraction(1)}


def graded_count(g, sub: Matrix):
    even = odd = 0
    for c in sub.cols():
        p = vector_parity(g.space, c)
        assert p is not None, "canonical basis of a graded subspace must be homogeneous"
        even, odd = even + (p == 0), odd + (p == 1)
    return even, odd


# ---------------------------------------------------------------------------
# families


@pytest.mark.parametrize(
    "family,sizes,expected",
    [
        ("gl", (1, 1), (2, 2)),
        ("gl", (2, 1), (5, 4)),
        ("gl", (2, 2), (8, 8)),
        ("sl", (2, 1), (4, 4)),
        ("sl", (2, 0), (3, 0)),
        ("q", (1), (1, 1)),
        ("q", (2), (4, 4)),
        ("p", (2), (4, 4)),
        ("p", (3), (9, 9)),
    ],
)
def test_family_dims_and_axioms(family, sizes, expected):
    sizes = sizes if isinstance(sizes, tuple) else (sizes,)
    g = al.make_family(family, *sizes)
    assert g.graded_dim() == expected
    assert al.verify_lie(g)


def test_make_family_validation():
    with pytest.raises(InvalidParams):
        al.make_family("gl", 0, 0)
    with pytest.raises(InvalidParams):
        al.make_family("q", 0)
    with pytest.raises(InvalidParams):
        al.make_family("so", 3)
    with pytest.raises(InvalidParams):
        al.make_family("sl", 2, 2)


def test_gl11_brackets():
    g = al.make_family("gl", 1, 1)
    e, f = basis_vec(g, "E[1,2]"), basis_vec(g, "E[2,1]")
    ef = g.bracket_coords(e, f)
    # odd with odd: anticommutator, so [E, F] = E11 + E22
    assert ef == {g.space.index("E[1,1]"): Fraction(1), g.space.index("E[2,2]"): Fraction(1)}
    assert g.bracket_coords(e, e) == {}


def test_sl2_inside_sl_family():
    g = al.make_family("sl", 2, 0)
    h, e, f = basis_vec(g, "D[1]"), basis_vec(g, "E[1,2]"), basis_vec(g, "E[2,1]")
    assert g.bracket_coords(h, e) == {g.space.index("E[1,2]"): Fraction(2)}
    assert g.bracket_coords(h, f) == {g.space.index("E[2,1]"): Fraction(-2)}
    assert g.bracket_coords(e, f) == {g.space.index("D[1]"): Fraction(1)}


def test_sl_supertraceless():
    g = al.make_family("sl", 2, 1)
    for m in g.matrix_basis:
        assert supertrace(m, g.ambient) == 0


def test_q_realization():
    g = al.make_family("q", 2)
    # odd squared lands in the even copy: [T_x, T_x] = 2 T^{x^2}
    t = basis_vec(g, "T_E[1,2]")
    sq = g.bracket_coords(t, t)
    assert sq == {}
    t11 = basis_vec(g, "T_E[1,1]")
    assert g.bracket_coords(t11, t11) == {g.space.index("T^E[1,1]"): Fraction(2)}


def test_p_realization_closes():
    g = al.make_family("p", 2)
    # [B, C] has both diagonal blocks filled
    b = basis_vec(g, "B[1,2]")
    c = basis_vec(g, "C[1,2]")
    br = g.bracket_coords(b, c)
    assert br, "p(2) bracket of B and C must be nonzero"
    for k in br:
        assert g.space.parities[k] == 0


def test_weights():
    g = al.make_family("gl", 2, 1)
    i = g.space.index("E[1,2]")
    assert g.space.weights[i] == (Fraction(1), Fraction(-1), Fraction(0))
    j = g.space.index("E[1,3]")
    assert g.space.weights[j] == (Fraction(1), Fraction(0), Fraction(-1))
    assert g.ambient.weights[0] == (Fraction(1), Fraction(0), Fraction(0))
    assert g.cartan == [g.space.index("E[1,1]"), g.space.index("E[2,2]"), g.space.index("E[3,3]")]


def test_ad_leibniz_randomized():
    rng = random.Random(7)
    g = al.make_family("gl", 2, 1)
    evens = g.space.even_indices()
    odds = g.space.odd_indices()
    for _ in range(10):
        px, py = rng.choice([0, 1]), rng.choice([0, 1])
        pool_x = evens if px == 0 else odds
        pool_y = evens if py == 0 else odds
        x = {i: Fraction(rng.randint(-3, 3)) for i in rng.sample(pool_x, 2)}
        y = {i: Fraction(rng.randint(-3, 3)) for i in rng.sample(pool_y, 2)}
        adx, ady = g.ad_vector(x), g.ad_vector(y)
        lhs = g.ad_vector(g.bracket_coords(x, y))
        sign = -1 if (px and py) else 1
        assert lhs == adx @ ady - (ady @ adx).scale(sign)


def test_matrix_coords_round_trip():
    g = al.make_family("sl", 2, 1)
    v = {0: Fraction(2), 3: Fraction(-1, 2)}
    m = g.coords_to_matrix(v)
    assert g.matrix_to_coords(m) == v
    # E11 alone has nonzero supertrace, so it is outside sl(2|1)
    outside = Matrix.from_entries(3, 3, {(0, 0): 1})
    assert g.matrix_to_coords(outside) is None


def test_bracket_matches_matrix_commutator():
    g = al.make_family("p", 2)
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = g.coords_to_matrix(g.brackets.get((i, j), {}))
            rhs = al.super_commutator(
                g.matrix_basis[i], g.matrix_basis[j], g.space.parities[i], g.space.parities[j]
            )
            assert lhs == rhs


# ---------------------------------------------------------------------------
# centralizers, centers, quotients


def test_centralizer_semisimple_even_element():
    g = al.make_family("gl", 4, 4)
    # diag(1,1,-1,0 | 1,1,-1,0)
    coeffs = {"E[1,1]": 1, "E[2,2]": 1, "E[3,3]": -1, "E[5,5]": 1, "E[6,6]": 1, "E[7,7]": -1}
    c = {g.space.index(l): Fraction(v) for l, v in coeffs.items()}
    z = al.centralizer(g, [c])
    assert graded_count(g, z) == (12, 12)


def test_center_of_q2():
    g = al.make_family("q", 2)
    z = al.center(g)
    assert graded_count(g, z) == (1, 0)
    expected = Matrix.from_cols(
        [{g.space.index("T^E[1,1]"): 1, g.space.index("T^E[2,2]"): 1}], g.dim
    )
    assert z == column_span(expected)


def test_center_of_gl():
    g = al.make_family("gl", 2, 2)
    z = al.center(g)
    assert graded_count(g, z) == (1, 0)


def test_quotient_pgl11():
    g = al.make_family("gl", 1, 1)
    q, project, include = al.quotient_algebra(g, al.center(g))
    assert q.graded_dim() == (1, 2)
    assert al.verify_lie(q)
    assert project @ include == Matrix.identity(3)
    # [E, F] = E11 + E22 spans the center, so the odd classes now commute
    e, f = basis_vec(q, "E[1,2]"), basis_vec(q, "E[2,1]")
    assert q.bracket_coords(e, f) == {}
    h = basis_vec(q, "E[2,2]")
    assert q.bracket_coords(h, e) == {q.space.index("E[1,2]"): Fraction(-1)}


def test_quotient_requires_ideal():
    g = al.make_family("sl", 2, 0)
    line = Matrix.from_cols([basis_vec(g, "E[1,2]")], g.dim)
    with pytest.raises(NotAnIdeal):
        al.quotient_algebra(g, line)
    assert not al.is_ideal(g, line)
    assert al.is_ideal(g, column_span(Matrix.identity(g.dim)))


def test_subalgebra_closure_generates_sl2():
    g = al.make_family("gl", 2, 0)
    seed = Matrix.from_cols([basis_vec(g, "E[1,2]"), basis_vec(g, "E[2,1]")], g.dim)
    closed = al.subalgebra_closure(g, seed)
    assert closed.ncols == 3
    sub = al.as_algebra(g, closed)
    assert al.verify_lie(sub)
    assert sub.graded_dim() == (3, 0)


def test_as_algebra_rejects_open_span():
    g = al.make_family("gl", 2, 0)
    seed = Matrix.from_cols([basis_vec(g, "E[1,2]"), basis_vec(g, "E[2,1]")], g.dim)
    with pytest.raises(AlgebraMismatch):
        al.as_algebra(g, seed)


def test_as_algebra_keeps_realization():
    g = al.make_family("q", 2)
    idx = [g.space.index("T^E[1,1]"), g.space.index("T^E[2,2]"), g.space.index("T_E[1,1]")]
    basis = Matrix.from_cols([{i: Fraction(1)} for i in idx], g.dim)
    sub = al.as_algebra(g, al.SubalgebraSpec(basis=basis, labels=("h1", "h2", "t1")))
    assert sub.space.labels == ("h1", "h2", "t1")
    assert sub.graded_dim() == (2, 1)
    assert sub.matrix_basis is not None
    assert sub.bracket_coords({2: Fraction(1)}, {2: Fraction(1)}) == {0: Fraction(2)}


# ---------------------------------------------------------------------------
# structure tables and split algebras


def test_from_structure_antisymmetry_fill():
    # sl(2) given only the upper triangle of the table
    g = al.LieSA.from_structure(
        ["h", "e", "f"],
        [0, 0, 0],
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
    )
    assert g.bracket_coords({1: Fraction(1)}, {0: Fraction(1)}) == {1: Fraction(-2)}
    assert al.verify_lie(g)


def test_from_structure_rejects_bad_jacobi():
    with pytest.raises(AlgebraMismatch):
        al.LieSA.from_structure(
            ["h", "e", "f"],
            [0, 0, 0],
            {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {1: 1}},
        )


def test_split_algebra():
    t = al.LieSA.from_structure(["t"], [0], {})
    t.cartan = [0]
    g = al.split_algebra(t, [Matrix.from_rows([[1]])], odd_labels=["u"])
    assert g.graded_dim() == (1, 1)
    assert al.verify_lie(g)
    assert g.bracket_coords({0: Fraction(1)}, {1: Fraction(1)}) == {1: Fraction(1)}
    assert g.bracket_coords({1: Fraction(1)}, {1: Fraction(1)}) == {}
    assert g.space.weights == ((Fraction(0),), (Fraction(1),))


def test_split_algebra_rejects_non_representation():
    two = al.LieSA.from_structure(["a", "b"], [0, 0], {(0, 1): {0: 1}})
    bad = [Matrix.from_rows([[0, 1], [0, 0]]), Matrix.from_rows([[0, 0], [1, 0]])]
    with pytest.raises(AlgebraMismatch):
        al.split_algebra(two, bad)


def test_as_algebra_rejects_mixed_parity_basis():
    g = al.make_family("gl", 1, 1)
    mixed = Matrix.from_cols(
        [{g.space.index("E[1,1]"): Fraction(1), g.space.index("E[1,2]"): Fraction(1)}], g.dim
    )
    with pytest.raises(GradingViolation):
        al.as_algebra(g, mixed)
