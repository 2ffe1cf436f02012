"""Concrete modules used throughout the verification suites.

Simple gl(n)-modules are built by highest-weight extraction inside a tensor
power of the natural module, then twisted by a determinant power; the gl(1|1)
menagerie (Berezinian characters, Kac modules) and the orthogonal and
symplectic subalgebras are small enough to write down directly.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

from .algebras import LieSA, make_family
from .errors import InvalidParams, NotDominant
from .linalg import Matrix, column_span, kernel, vstack
from .reps import KacData, Rep, character, kac_induce, kac_zero_part, natural, sub_rep, tensor

GL11_GRADING = (0, 0, 1, -1)

# tensor powers are cached, so every gl_simple call must share one algebra object
_GL: dict[int, LieSA] = {}
_POWERS: dict[tuple[int, int], Rep] = {}


def _gl(n: int) -> LieSA:
    if n not in _GL:
        _GL[n] = make_family("gl", n, 0)
    return _GL[n]


def weyl_dim(lam) -> int:
    n = len(lam)
    num = prod(lam[i] - lam[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den if n > 1 else 1


def det_power(g: LieSA, b: int) -> Rep:
    values = [0] * g.dim
    for h in g.cartan:
        values[h] = b
    return character(g, values)


def _natural_power(g: LieSA, a: int) -> Rep:
    key = (g.ambient.dim, a)
    if key not in _POWERS:
        if a == 1:
            _POWERS[key] = natural(g)
        else:
            _POWERS[key] = tensor(_natural_power(g, a - 1), natural(g))
    return _POWERS[key]


def gl_simple(n: int, lam) -> Rep:
    lam = tuple(int(x) for x in lam)
    if len(lam) != n or any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise NotDominant("weight must be a weakly decreasing integer tuple")
    g = _gl(n)
    b = lam[-1]
    mu = tuple(x - b for x in lam)
    a = sum(mu)
    if a == 0:
        return det_power(g, b)
    t = _natural_power(g, a)
    block = [i for i, w in enumerate(t.space.weights) if w == tuple(Fraction(x) for x in mu)]
    include = Matrix.from_cols([{i: Fraction(1)} for i in block], t.dim)
    raising = [t.actions[g.space.index(f"E[{i},{i + 1}]")] @ include for i in range(1, n)]
    hw_coords = kernel(vstack(*raising))
    hw = include.apply(hw_coords.col(0))
    lowering = [t.actions[g.space.index(f"E[{i + 1},{i}]")] for i in range(1, n)]
    span = column_span(Matrix.from_cols([hw], t.dim))
    while True:
        new_cols = [m.apply(c) for m in lowering for c in span.cols()]
        bigger = column_span(Matrix.from_cols(span.cols() + new_cols, t.dim))
        if bigger.ncols == span.ncols:
            break
        span = bigger
    module = sub_rep(t, span, prefix="v")
    if b:
        module = tensor(module, det_power(g, b))
    if module.dim != weyl_dim(lam):
        raise InvalidParams(f"highest-weight extraction gave dim {module.dim}, "
                            f"Weyl formula says {weyl_dim(lam)}")
    return module


def so_subalgebra(g: LieSA) -> Matrix:
    """Antisymmetric matrices E[i,j] - E[j,i] inside gl(n)."""
    n = g.ambient.dim
    one = Fraction(1)
    cols = [
        {g.space.index(f"E[{i},{j}]"): one, g.space.index(f"E[{j},{i}]"): -one}
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    ]
    return Matrix.from_cols(cols, g.dim)


def sp2_subalgebra(g: LieSA) -> Matrix:
    """sp(2) = sl(2) inside gl(2)."""
    one = Fraction(1)
    cols = [
        {g.space.index("E[1,2]"): one},
        {g.space.index("E[2,1]"): one},
        {g.space.index("E[1,1]"): one, g.space.index("E[2,2]"): -one},
    ]
    return Matrix.from_cols(cols, g.dim)


def spherical_expected(kind: str, lam) -> bool:
    if kind == "so":
        return all((lam[i] - lam[i + 1]) % 2 == 0 for i in range(len(lam) - 1))
    if kind == "sp2":
        return lam[0] == lam[1]
    raise InvalidParams(f"unknown spherical subalgebra kind {kind!r}")


def dominant_weights(n: int, top: int):
    """All weakly decreasing tuples with entries in 0..top."""
    if n == 1:
        yield from ((v,) for v in range(top, -1, -1))
        return
    for head in range(top, -1, -1):
        for tail in dominant_weights(n - 1, head):
            yield (head,) + tail


def ber_power(g11: LieSA, n: int) -> Rep:
    """Character differentiating the n-th Berezinian power: supertrace scaled by n."""
    return character(g11, [n, -n, 0, 0])


def kac_module(g11: LieSA, lam, direction: str = "thin") -> Rep:
    zero = kac_zero_part(g11, GL11_GRADING)
    l0 = character(zero, list(lam))
    return kac_induce(g11, KacData(grading=GL11_GRADING, l0=l0, direction=direction))


def is_typical(lam) -> bool:
    return lam[0] + lam[1] != 0
