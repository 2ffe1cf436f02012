"""Graded spaces: dimensions, derived spaces, and the sign conventions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superds import spaces as sp
from superds.errors import DuplicateLabel, GradingViolation, WeightArityMismatch
from superds.linalg import Matrix


def space_strategy(max_dim=4, arity=2):
    def build(parities):
        n = len(parities)
        return st.lists(
            st.tuples(*[st.integers(-2, 2) for _ in range(arity)]),
            min_size=n,
            max_size=n,
        ).map(
            lambda ws: sp.build_space([f"v{i}" for i in range(n)], parities, ws)
        )

    return st.lists(st.integers(0, 1), min_size=1, max_size=max_dim).flatmap(build)


def operators_on(space, parity):
    """All-entries strategy for a homogeneous operator of the given parity."""
    pairs = [
        (i, j)
        for i in range(space.dim)
        for j in range(space.dim)
        if (space.parities[i] + space.parities[j]) % 2 == parity
    ]
    return st.lists(
        st.fractions(min_value=-3, max_value=3, max_denominator=2),
        min_size=len(pairs),
        max_size=len(pairs),
    ).map(lambda vals: Matrix.from_entries(space.dim, space.dim, dict(zip(pairs, vals))))


def test_build_and_dims():
    v = sp.build_space(["a", "b", "c"], [0, 0, 1], [(1, 0), (0, 1), (1, 1)])
    assert v.dim == 3
    assert v.graded_dim() == (2, 1)
    assert v.sdim() == 1
    assert v.index("b") == 1
    assert v.even_indices() == [0, 1] and v.odd_indices() == [2]
    assert v.weights[2] == (Fraction(1), Fraction(1))


def test_validation():
    with pytest.raises(DuplicateLabel):
        sp.build_space(["a", "a"], [0, 0])
    with pytest.raises(WeightArityMismatch):
        sp.build_space(["a", "b"], [0, 0], [(1,), (1, 2)])
    with pytest.raises(GradingViolation):
        sp.build_space(["a"], [2])


def test_derived_spaces():
    v = sp.build_space(["x", "y"], [0, 1], [(1,), (-1,)])
    d = sp.dual_space(v)
    assert d.labels == ("x*", "y*")
    assert d.parities == (0, 1)
    assert d.weights == ((Fraction(-1),), (Fraction(1),))
    s = sp.shift_space(v)
    assert s.parities == (1, 0) and s.weights == v.weights
    t = sp.tensor_space(v, v)
    assert t.dim == 4
    assert t.labels[1] == "x(x)y"
    assert t.parities == (0, 1, 1, 0)
    assert t.weights[1] == (Fraction(0),)
    assert t.weights[0] == (Fraction(2),)
    ds = sp.direct_sum_space(v, v)
    assert ds.dim == 4 and ds.graded_dim() == (2, 2)


@given(space_strategy(), space_strategy())
@settings(max_examples=40, deadline=None)
def test_sdim_multiplicative(a, b):
    t = sp.tensor_space(a, b)
    assert t.sdim() == a.sdim() * b.sdim()
    assert t.dim == a.dim * b.dim


@given(space_strategy())
@settings(max_examples=40, deadline=None)
def test_double_dual_identity(a):
    dd = sp.dual_space(sp.dual_space(a))
    assert dd.parities == a.parities
    assert dd.weights == a.weights


def test_tensor_operator_koszul_sign():
    # one even and one odd basis vector; g odd swapping them
    v = sp.build_space(["e", "o"], [0, 1])
    g = Matrix.from_entries(2, 2, {(1, 0): 1, (0, 1): 1})
    ident = Matrix.identity(2)
    op = sp.tensor_operator(ident, 0, g, 1, v, v)
    # (1 (x) g)(e (x) e) = e (x) o : no sign
    assert op.apply({0: Fraction(1)}) == {1: Fraction(1)}
    # (1 (x) g)(o (x) e) = -o (x) o : g crossed the odd o
    assert op.apply({2: Fraction(1)}) == {3: Fraction(-1)}


def test_tensor_operator_composition_rule():
    """(f (x) 1)(1 (x) g) = (-1)^{|f||g|} (1 (x) g)(f (x) 1) for odd f, g."""
    v = sp.build_space(["e", "o"], [0, 1])
    f = Matrix.from_entries(2, 2, {(1, 0): 2, (0, 1): 3})
    g = Matrix.from_entries(2, 2, {(1, 0): 5, (0, 1): 7})
    ident = Matrix.identity(2)
    left = sp.tensor_operator(f, 1, ident, 0, v, v) @ sp.tensor_operator(ident, 0, g, 1, v, v)
    right = sp.tensor_operator(ident, 0, g, 1, v, v) @ sp.tensor_operator(f, 1, ident, 0, v, v)
    assert left == right.scale(-1)


def test_dual_operator_pairing_invariance():
    """The evaluation pairing kills the diagonal action.

    For every x, <x.f, v> + (-1)^{|x||f|}<f, x.v> must vanish; in matrix terms
    dual(m)^T = -m twisted by the sign, checked entrywise here.
    """
    v = sp.build_space(["e", "o"], [0, 1], [(1,), (0,)])
    for px, entries in [(0, {(0, 0): 2, (1, 1): -1}), (1, {(0, 1): 3, (1, 0): 4})]:
        m = Matrix.from_entries(2, 2, entries)
        md = sp.dual_operator(m, px, v)
        for j in range(2):
            for k in range(2):
                sign = -1 if (px and v.parities[k]) else 1
                assert md.entry(j, k) == -sign * m.entry(k, j)
        sp.check_operator_parity(md, sp.dual_space(v), px)


def test_shift_operator_sign():
    m = Matrix.from_entries(2, 2, {(0, 1): 1, (1, 0): 1})
    assert sp.shift_operator(m, 0) == m
    assert sp.shift_operator(m, 1) == m.scale(-1)


def test_matrix_kron():
    a = Matrix.from_rows([[1, 2]])
    b = Matrix.from_rows([[3], [4]])
    k = sp.matrix_kron(a, b)
    assert k.nrows == 2 and k.ncols == 2
    assert k.to_lists() == [[3, 6], [4, 8]]


def test_tensor_vector_and_index():
    a = sp.build_space(["a0", "a1"], [0, 1])
    b = sp.build_space(["b0", "b1", "b2"], [0, 0, 1])
    v = {1: Fraction(2)}
    w = {0: Fraction(3), 2: Fraction(-1)}
    tv = sp.tensor_vector(a, b, v, w)
    assert tv == {sp.tensor_index(a, b, 1, 0): Fraction(6), sp.tensor_index(a, b, 1, 2): Fraction(-2)}


def test_weight_decompose_and_vector_grades():
    v = sp.build_space(["a", "b", "c"], [0, 1, 0], [(1,), (1,), (0,)])
    dec = sp.weight_decompose(v)
    assert dec == {(Fraction(1),): [0, 1], (Fraction(0),): [2]}
    assert sp.vector_parity(v, {0: Fraction(1), 2: Fraction(2)}) == 0
    assert sp.vector_parity(v, {0: Fraction(1), 1: Fraction(2)}) is None
    assert sp.vector_weight(v, {0: Fraction(1), 1: Fraction(5)}) == (Fraction(1),)
    assert sp.vector_weight(v, {0: Fraction(1), 2: Fraction(1)}) is None


def test_matrix_parity_and_check():
    v = sp.build_space(["e", "o"], [0, 1])
    odd = Matrix.from_entries(2, 2, {(0, 1): 1})
    even = Matrix.from_entries(2, 2, {(0, 0): 1, (1, 1): 2})
    mixed = odd + even
    assert sp.matrix_parity(odd, v, v) == 1
    assert sp.matrix_parity(even, v, v) == 0
    assert sp.matrix_parity(mixed, v, v) is None
    sp.check_operator_parity(odd, v, 1)
    with pytest.raises(GradingViolation):
        sp.check_operator_parity(odd, v, 0)


@given(space_strategy(max_dim=3, arity=1).flatmap(
    lambda s: st.tuples(st.just(s), operators_on(s, 1), operators_on(s, 1))
))
@settings(max_examples=30, deadline=None)
def test_tensor_operator_bilinear_and_graded(data):
    space, f, g = data
    t = sp.tensor_space(space, space)
    op = sp.tensor_operator(f, 1, g, 1, space, space)
    sp.check_operator_parity(op, t, 0)
    doubled = sp.tensor_operator(f.scale(2), 1, g, 1, space, space)
    assert doubled == op.scale(2)
