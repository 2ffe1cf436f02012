"""Z/2-graded vector spaces with labeled, weighted bases.

A ``SuperSpace`` fixes an ordered basis; every vector and operator in the
package is expressed in such coordinates.  This module is also the single
authority for sign conventions:

* tensor products use the Koszul rule, ``(f (x) g)(v (x) w) =
  (-1)^{|g||v|} f(v) (x) g(w)``;
* the dual action is ``(x.f)(v) = -(-1)^{|x||f|} f(x.v)``;
* the parity shift multiplies the action of ``x`` by ``(-1)^{|x|}`` (the
  canonical map to the shifted space is odd).

Tensor bases are ordered lexicographically, left factor major.  Weights live
in a fixed-arity rational lattice; duals negate them, tensors add them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    DimensionMismatch,
    DuplicateLabel,
    GradingViolation,
    WeightArityMismatch,
)
from .linalg import Matrix, _frac

Weight = tuple[Fraction, ...]


@dataclass(frozen=True)
class SuperSpace:
    labels: tuple[str, ...]
    parities: tuple[int, ...]
    weights: tuple[Weight, ...]
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not (len(self.labels) == len(self.parities) == len(self.weights)):
            raise DimensionMismatch("labels, parities, weights must align")
        if any(p not in (0, 1) for p in self.parities):
            raise GradingViolation("parities must be 0 or 1")
        if len(set(self.labels)) != len(self.labels):
            seen = set()
            dup = next(l for l in self.labels if l in seen or seen.add(l))
            raise DuplicateLabel(f"label {dup!r} repeats")
        arities = {len(w) for w in self.weights}
        if len(arities) > 1:
            raise WeightArityMismatch(f"mixed weight arities {sorted(arities)}")
        object.__setattr__(self, "_index", {l: i for i, l in enumerate(self.labels)})

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def weight_arity(self) -> int:
        return len(self.weights[0]) if self.weights else 0

    def graded_dim(self) -> tuple[int, int]:
        odd = sum(self.parities)
        return len(self.parities) - odd, odd

    def sdim(self) -> int:
        even, odd = self.graded_dim()
        return even - odd

    def index(self, label: str) -> int:
        return self._index[label]

    def even_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 0]

    def odd_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parities) if p == 1]

    def describe(self, v: dict[int, Fraction]) -> str:
        if not v:
            return "0"
        parts = []
        for i in sorted(v):
            c = v[i]
            parts.append(f"{'+' if c > 0 and parts else ''}{c}*{self.labels[i]}")
        return " ".join(parts)


def build_space(
    labels: Sequence[str],
    parities: Sequence[int],
    weights: Sequence[Sequence] | None = None,
) -> SuperSpace:
    labels = tuple(labels)
    if weights is None:
        weights = tuple(() for _ in labels)
    else:
        weights = tuple(tuple(_frac(x) for x in w) for w in weights)
    return SuperSpace(labels=labels, parities=tuple(parities), weights=weights)


# ---------------------------------------------------------------------------
# derived spaces


def tensor_index(a: SuperSpace, b: SuperSpace, i: int, j: int) -> int:
    return i * b.dim + j


def tensor_space(a: SuperSpace, b: SuperSpace) -> SuperSpace:
    if a.dim and b.dim and a.weight_arity != b.weight_arity:
        raise WeightArityMismatch("tensor factors carry different weight lattices")
    labels, parities, weights = [], [], []
    for i in range(a.dim):
        for j in range(b.dim):
            labels.append(f"{a.labels[i]}(x){b.labels[j]}")
            parities.append((a.parities[i] + b.parities[j]) % 2)
            weights.append(tuple(x + y for x, y in zip(a.weights[i], b.weights[j])))
    return SuperSpace(tuple(labels), tuple(parities), tuple(weights))


def dual_space(a: SuperSpace) -> SuperSpace:
    return SuperSpace(
        tuple(f"{l}*" for l in a.labels),
        a.parities,
        tuple(tuple(-x for x in w) for w in a.weights),
    )


def shift_space(a: SuperSpace) -> SuperSpace:
    """Parity shift; weights are untouched."""
    return SuperSpace(
        tuple(f"P{l}" for l in a.labels),
        tuple(1 - p for p in a.parities),
        a.weights,
    )


def direct_sum_space(a: SuperSpace, b: SuperSpace) -> SuperSpace:
    if a.dim and b.dim and a.weight_arity != b.weight_arity:
        raise WeightArityMismatch("summands carry different weight lattices")
    return SuperSpace(
        tuple(f"L.{l}" for l in a.labels) + tuple(f"R.{l}" for l in b.labels),
        a.parities + b.parities,
        a.weights + b.weights,
    )


# ---------------------------------------------------------------------------
# operators between graded spaces


def tensor_operator(
    f: Matrix, pf: int, g: Matrix, pg: int, a: SuperSpace, b: SuperSpace
) -> Matrix:
    """The operator f (x) g on a (x) b, with the Koszul sign.

    ``f`` acts on ``a`` with parity ``pf``, ``g`` on ``b`` with parity ``pg``;
    the sign (-1)^{pg * |v|} is picked up when g crosses v in a.
    """
    if f.nrows != a.dim or f.ncols != a.dim or g.nrows != b.dim or g.ncols != b.dim:
        raise DimensionMismatch("operator shapes must match the spaces")
    rows: list[dict] = [{} for _ in range(a.dim * b.dim)]
    for i, frow in enumerate(f.rows):
        for k, fval in frow.items():
            sign = -1 if (pg and a.parities[k]) else 1
            for j, grow in enumerate(g.rows):
                if not grow:
                    continue
                target = rows[i * b.dim + j]
                for l, gval in grow.items():
                    val = fval * gval * sign
                    target[k * b.dim + l] = target.get(k * b.dim + l, Fraction(0)) + val
    for row in rows:
        for key in [k for k, v in row.items() if not v]:
            del row[key]
    return Matrix._raw(a.dim * b.dim, a.dim * b.dim, rows)


def dual_operator(m: Matrix, px: int, a: SuperSpace) -> Matrix:
    """Action on the dual basis: entry (j, k) is -(-1)^{px p(k)} m[k, j]."""
    rows: list[dict] = [{} for _ in range(a.dim)]
    for k, row in enumerate(m.rows):
        sign = -1 if (px and a.parities[k]) else 1
        for j, x in row.items():
            rows[j][k] = -sign * x
    return Matrix._raw(a.dim, a.dim, rows)


def shift_operator(m: Matrix, px: int) -> Matrix:
    return m.scale(-1) if px else m


def matrix_kron(a: Matrix, b: Matrix) -> Matrix:
    """Plain Kronecker product (no signs); rows and columns left-factor major."""
    rows: list[dict] = [{} for _ in range(a.nrows * b.nrows)]
    for i, arow in enumerate(a.rows):
        for j, brow in enumerate(b.rows):
            target = rows[i * b.nrows + j]
            for p, x in arow.items():
                for q, y in brow.items():
                    target[p * b.ncols + q] = x * y
    return Matrix._raw(a.nrows * b.nrows, a.ncols * b.ncols, rows)


def tensor_vector(
    a: SuperSpace, b: SuperSpace, v: dict[int, Fraction], w: dict[int, Fraction]
) -> dict[int, Fraction]:
    return {
        tensor_index(a, b, i, j): x * y for i, x in v.items() for j, y in w.items()
    }


# ---------------------------------------------------------------------------
# gradings of vectors and matrices


def weight_decompose(space: SuperSpace) -> dict[Weight, list[int]]:
    out: dict[Weight, list[int]] = {}
    for i, w in enumerate(space.weights):
        out.setdefault(w, []).append(i)
    return out


def vector_parity(space: SuperSpace, v: dict[int, Fraction]) -> int | None:
    """Parity of a homogeneous vector, None for 0 or mixed."""
    seen = {space.parities[i] for i in v}
    return seen.pop() if len(seen) == 1 else None


def vector_weight(space: SuperSpace, v: dict[int, Fraction]) -> Weight | None:
    seen = {space.weights[i] for i in v}
    return seen.pop() if len(seen) == 1 else None


def matrix_parity(m: Matrix, target: SuperSpace, source: SuperSpace) -> int | None:
    """0 or 1 if every entry shifts parity uniformly, None for mixed (or zero)."""
    seen = set()
    for i, row in enumerate(m.rows):
        for j in row:
            seen.add((target.parities[i] + source.parities[j]) % 2)
    return seen.pop() if len(seen) == 1 else None


def supertrace(m: Matrix, space: SuperSpace) -> Fraction:
    total = Fraction(0)
    for i in range(space.dim):
        x = m.entry(i, i)
        if x:
            total += -x if space.parities[i] else x
    return total


def check_operator_parity(m: Matrix, space: SuperSpace, parity: int) -> None:
    for i, row in enumerate(m.rows):
        for j in row:
            if (space.parities[i] + space.parities[j]) % 2 != parity % 2:
                raise GradingViolation(
                    f"entry ({i},{j}) violates parity {parity} on {space.labels[j]} -> {space.labels[i]}"
                )
