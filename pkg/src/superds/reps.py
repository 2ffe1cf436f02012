"""Representations with exact action matrices.

A :class:`Rep` carries one matrix per basis element of the acting algebra.
The derived constructions (dual, tensor, parity shift) route every sign
through the conventions fixed in :mod:`superds.spaces`, so a representation
built from any expression tree satisfies the bracket identity

    rho([x, y]) = rho(x) rho(y) - (-1)^{|x||y|} rho(y) rho(x)

which ``verify_rep`` checks on all basis pairs.  The module also houses
invariants, restriction to the 0-eigenspace of a semisimple even element,
and Kac induction for algebras with a compatible short Z-grading.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations

from .algebras import LieSA, SubalgebraSpec, as_algebra, centralizer
from .errors import (
    AlgebraMismatch,
    DimensionMismatch,
    GradingViolation,
    InvalidParams,
    NotASubmodule,
    NotSemisimpleAction,
)
from .linalg import (
    Matrix,
    column_span,
    in_span,
    is_squarefree,
    joint_kernel,
    kernel,
    left_inverse,
    minimal_polynomial,
    quotient_basis,
)
from .spaces import (
    SuperSpace,
    build_space,
    check_operator_parity,
    dual_operator,
    dual_space,
    shift_operator,
    shift_space,
    tensor_operator,
    tensor_space,
    vector_parity,
    vector_weight,
)

Vec = dict[int, Fraction]


@dataclass(eq=False)
class Rep:
    """A module over a fixed-basis Lie superalgebra."""

    algebra: LieSA
    space: SuperSpace
    actions: list[Matrix]

    @property
    def dim(self) -> int:
        return self.space.dim

    def graded_dim(self) -> tuple[int, int]:
        return self.space.graded_dim()

    def sdim(self) -> int:
        return self.space.sdim()

    def action_of(self, v: Vec) -> Matrix:
        """The action matrix of an algebra element given by coordinates."""
        out = Matrix.zero(self.dim, self.dim)
        for i, x in v.items():
            out = out + self.actions[i].scale(x)
        return out

    def __repr__(self):
        even, odd = self.graded_dim()
        return f"<Rep over {self.algebra!r} on ({even}|{odd})>"


# ---------------------------------------------------------------------------
# the construction calculus


def trivial(g: LieSA) -> Rep:
    arity = g.space.weight_arity
    space = build_space(("1",), (0,), ((Fraction(0),) * arity,))
    return Rep(g, space, [Matrix.zero(1, 1) for _ in range(g.dim)])


def natural(g: LieSA) -> Rep:
    if g.matrix_basis is None or g.ambient is None:
        raise AlgebraMismatch("algebra carries no matrix realization")
    return Rep(g, g.ambient, list(g.matrix_basis))


def adjoint(g: LieSA) -> Rep:
    return Rep(g, g.space, [g.ad_basis(i) for i in range(g.dim)])


def dual(r: Rep) -> Rep:
    par = r.algebra.space.parities
    space = dual_space(r.space)
    acts = [dual_operator(m, par[i], r.space) for i, m in enumerate(r.actions)]
    return Rep(r.algebra, space, acts)


def tensor(a: Rep, b: Rep) -> Rep:
    if a.algebra is not b.algebra:
        raise AlgebraMismatch("tensor factors live over different algebras")
    par = a.algebra.space.parities
    ida, idb = Matrix.identity(a.dim), Matrix.identity(b.dim)
    acts = []
    for i in range(a.algebra.dim):
        left = tensor_operator(a.actions[i], par[i], idb, 0, a.space, b.space)
        right = tensor_operator(ida, 0, b.actions[i], par[i], a.space, b.space)
        acts.append(left + right)
    return Rep(a.algebra, tensor_space(a.space, b.space), acts)


def parity_shift(r: Rep) -> Rep:
    par = r.algebra.space.parities
    acts = [shift_operator(m, par[i]) for i, m in enumerate(r.actions)]
    return Rep(r.algebra, shift_space(r.space), acts)


def character(g: LieSA, values) -> Rep:
    """The one-dimensional module on which x acts by the given functional."""
    vals = [Fraction(x) for x in values]
    if len(vals) != g.dim:
        raise DimensionMismatch("need one value per basis element")
    par = g.space.parities
    for i, x in enumerate(vals):
        if x and par[i]:
            raise InvalidParams("a character vanishes on odd elements")
    for (i, j), br in g.brackets.items():
        if sum(vals[k] * x for k, x in br.items()):
            raise InvalidParams("values do not vanish on brackets")
    if g.cartan is not None:
        weight = tuple(vals[i] for i in g.cartan)
    else:
        weight = (Fraction(0),) * g.space.weight_arity
    space = build_space(("v",), (0,), (weight,))
    acts = [Matrix.from_entries(1, 1, {(0, 0): x} if x else {}) for x in vals]
    return Rep(g, space, acts)


def rep_build(g: LieSA, expr) -> Rep:
    """Evaluate a nested constructor expression.

    Leaves: ("natural",), ("adjoint",), ("trivial",).  Nodes: ("dual", e),
    ("shift", e), ("tensor", e, e').
    """
    head = expr[0]
    if head == "natural":
        return natural(g)
    if head == "adjoint":
        return adjoint(g)
    if head == "trivial":
        return trivial(g)
    if head == "dual":
        return dual(rep_build(g, expr[1]))
    if head == "shift":
        return parity_shift(rep_build(g, expr[1]))
    if head == "tensor":
        return tensor(rep_build(g, expr[1]), rep_build(g, expr[2]))
    raise InvalidParams(f"unknown constructor {head!r}")


def verify_rep(r: Rep) -> list[str]:
    """Defects of the bracket-compatibility identity; empty means valid."""
    g = r.algebra
    par = g.space.parities
    defects = []
    for i, m in enumerate(r.actions):
        try:
            check_operator_parity(m, r.space, par[i])
        except GradingViolation:
            defects.append(f"action of {g.space.labels[i]} breaks parity")
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = r.action_of(g.bracket(i, j))
            sign = -1 if (par[i] and par[j]) else 1
            rhs = r.actions[i] @ r.actions[j] - (r.actions[j] @ r.actions[i]).scale(sign)
            if lhs != rhs:
                defects.append(
                    f"bracket pair ({g.space.labels[i]}, {g.space.labels[j]})"
                )
    return defects


# ---------------------------------------------------------------------------
# invariants and restriction


def _sub_columns(sub) -> list[Vec]:
    if isinstance(sub, SubalgebraSpec):
        return sub.basis.cols()
    if isinstance(sub, Matrix):
        return sub.cols()
    return [dict(v) for v in sub]


def invariants(r: Rep, sub) -> Matrix:
    """Canonical basis of the joint kernel of the given algebra elements."""
    cols = _sub_columns(sub)
    mats = [r.action_of(c) for c in cols]
    if not mats:
        return column_span(Matrix.identity(r.dim))
    return joint_kernel(mats)


def _space_on_columns(parent: SuperSpace, cols: list[Vec], prefix: str) -> SuperSpace:
    parities, weights = [], []
    for c in cols:
        p = vector_parity(parent, c)
        if p is None:
            raise GradingViolation("basis vector is not parity homogeneous")
        parities.append(p)
        weights.append(vector_weight(parent, c))
    if any(w is None for w in weights):
        weights = None
    labels = [f"{prefix}{i+1}" for i in range(len(cols))]
    return build_space(labels, parities, weights)


def sub_rep(r: Rep, include: Matrix, prefix: str = "s") -> Rep:
    """Restrict to an action-stable subspace given by independent columns."""
    left = left_inverse(include)
    if left is None:
        raise InvalidParams("subspace basis is linearly dependent")
    acts = []
    for m in r.actions:
        moved = m @ include
        rest = left @ moved
        if include @ rest != moved:
            raise NotASubmodule("subspace is not stable under the action")
        acts.append(rest)
    space = _space_on_columns(r.space, include.cols(), prefix)
    return Rep(r.algebra, space, acts)


def quotient_rep(r: Rep, sub: Matrix):
    """Quotient by an action-stable subspace; returns (rep, project, include).

    Representatives are standard basis vectors, exactly as in the algebra
    quotient, so ``project @ include`` is the identity.
    """
    sub = column_span(sub)
    for m in r.actions:
        for c in sub.cols():
            moved = m.apply(c)
            if moved and not in_span(sub, moved):
                raise NotASubmodule("subspace is not stable under the action")
    reps, project, idxs = quotient_basis(r.dim, sub)
    labels = [r.space.labels[i] for i in idxs]
    parities = [r.space.parities[i] for i in idxs]
    weights = [r.space.weights[i] for i in idxs]
    space = build_space(labels, parities, weights)
    acts = [project @ (m @ reps) for m in r.actions]
    return Rep(r.algebra, space, acts), project, reps


@dataclass
class CInvariants:
    """The 0-eigenspace of a semisimple even element, as a module over the
    centralizer of that element."""

    rep: Rep
    include: Matrix
    embed: Matrix

    @property
    def algebra(self) -> LieSA:
        return self.rep.algebra


def c_invariants(r: Rep, c: Vec) -> CInvariants:
    rho = r.action_of(c)
    if not is_squarefree(minimal_polynomial(rho)):
        raise NotSemisimpleAction("the even element does not act semisimply")
    include = kernel(rho)
    embed = centralizer(r.algebra, [c])
    if embed.ncols == r.algebra.dim:
        halg = r.algebra
        cols = [{i: Fraction(1)} for i in range(r.algebra.dim)]
    else:
        halg = as_algebra(r.algebra, embed)
        cols = embed.cols()
    left = left_inverse(include)
    acts = []
    for col in cols:
        m = r.action_of(col)
        moved = m @ include
        rest = left @ moved
        if include @ rest != moved:
            raise NotASubmodule("0-eigenspace is not stable under the centralizer")
        acts.append(rest)
    space = _space_on_columns(r.space, include.cols(), "m")
    return CInvariants(rep=Rep(halg, space, acts), include=include, embed=embed)


# ---------------------------------------------------------------------------
# Kac induction


@dataclass(frozen=True)
class KacData:
    """A compatible short Z-grading together with a degree-0 module.

    ``grading`` assigns -1, 0 or +1 to every basis index of the big algebra;
    ``direction`` picks the side the monomials come from: "thin" builds on
    the (-1)-part, "thick" on the (+1)-part.
    """

    grading: tuple[int, ...]
    l0: Rep
    direction: str = "thin"


def kac_zero_part(g: LieSA, grading) -> LieSA:
    idx = [i for i, d in enumerate(grading) if d == 0]
    basis = Matrix.from_cols([{i: Fraction(1)} for i in idx], g.dim)
    labels = tuple(g.space.labels[i] for i in idx)
    sub = as_algebra(g, SubalgebraSpec(basis=basis, labels=labels))
    if g.cartan is not None and all(h in idx for h in g.cartan):
        sub.cartan = [idx.index(h) for h in g.cartan]
    return sub


def _validate_kac(g: LieSA, data: KacData) -> None:
    grading = data.grading
    if len(grading) != g.dim or any(d not in (-1, 0, 1) for d in grading):
        raise GradingViolation("grading must assign -1, 0 or 1 to every index")
    par = g.space.parities
    for i, d in enumerate(grading):
        if d == 0 and par[i] == 1 or d != 0 and par[i] == 0:
            raise GradingViolation("degree-0 part must be even, degree-(+-1) odd")
    for (i, j), v in g.brackets.items():
        want = grading[i] + grading[j]
        if any(grading[k] != want for k in v):
            raise GradingViolation(f"bracket ({i},{j}) violates the grading")
    if data.direction not in ("thin", "thick"):
        raise InvalidParams("direction must be 'thin' or 'thick'")
    zero = kac_zero_part(g, grading)
    l0alg = data.l0.algebra
    if l0alg.dim != zero.dim or l0alg.brackets != zero.brackets:
        raise AlgebraMismatch("L0 is not a module over the degree-0 part")


def _monomials(k: int) -> list[tuple[int, ...]]:
    return sorted(chain.from_iterable(combinations(range(k), n) for n in range(k + 1)))


def kac_induce(g: LieSA, data: KacData, check: bool = True) -> Rep:
    """The Kac module: exterior monomials on one odd side tensored with L0.

    The side opposite the monomials acts through the recursion
    x.(y ^ rest (x) v) = [x,y].(rest (x) v) - y ^ (x.(rest (x) v)),
    grounded by x.(1 (x) v) = 0.
    """
    _validate_kac(g, data)
    l0 = data.l0
    side_deg = -1 if data.direction == "thin" else 1
    side = [i for i, d in enumerate(data.grading) if d == side_deg]
    zero = [i for i, d in enumerate(data.grading) if d == 0]
    side_pos = {gi: j for j, gi in enumerate(side)}
    zero_pos = {gi: j for j, gi in enumerate(zero)}
    mons = _monomials(len(side))
    index = {}
    labels, parities, weights = [], [], []
    carry_weights = (
        g.space.weight_arity == l0.space.weight_arity
        and (g.cartan is None or all(data.grading[c] == 0 for c in g.cartan))
    )
    for m in mons:
        mon_label = "^".join(g.space.labels[side[j]] for j in m) or "1"
        for a in range(l0.dim):
            index[(m, a)] = len(labels)
            labels.append(f"{mon_label}(x){l0.space.labels[a]}")
            parities.append((len(m) + l0.space.parities[a]) % 2)
            if carry_weights:
                w = [Fraction(x) for x in l0.space.weights[a]]
                for j in m:
                    for t, x in enumerate(g.space.weights[side[j]]):
                        w[t] += x
                weights.append(tuple(w))
    space = build_space(labels, parities, tuple(weights) if carry_weights else None)

    def wedge(j: int, m: tuple[int, ...], a: int, coeff: Fraction, out: Vec) -> None:
        if j in m:
            return
        cnt = sum(1 for i in m if i < j)
        key = index[(tuple(sorted(m + (j,))), a)]
        val = out.get(key, Fraction(0)) + (-coeff if cnt % 2 else coeff)
        if val:
            out[key] = val
        else:
            del out[key]

    def act_zero(e: int, m: tuple[int, ...], a: int, coeff: Fraction, out: Vec) -> None:
        for t, mj in enumerate(m):
            br = g.brackets.get((e, side[mj]), {})
            rest = m[:t] + m[t + 1 :]
            for k, cv in br.items():
                j = side_pos[k]
                if j in rest:
                    continue
                q = sum(1 for i in rest if i < j)
                sign = -1 if (t + q) % 2 else 1
                key = index[(tuple(sorted(rest + (j,))), a)]
                val = out.get(key, Fraction(0)) + coeff * cv * sign
                if val:
                    out[key] = val
                else:
                    del out[key]
        col = {}
        row_action = l0.actions[zero_pos[e]]
        for b in range(l0.dim):
            x = row_action.entry(b, a)
            if x:
                col[b] = x
        for b, cv in col.items():
            key = index[(m, b)]
            val = out.get(key, Fraction(0)) + coeff * cv
            if val:
                out[key] = val
            else:
                del out[key]

    memo: dict[tuple[int, tuple[int, ...], int], Vec] = {}

    def act_opposite(e: int, m: tuple[int, ...], a: int) -> Vec:
        if not m:
            return {}
        got = memo.get((e, m, a))
        if got is not None:
            return got
        out: Vec = {}
        head, rest = m[0], m[1:]
        br = g.brackets.get((e, side[head]), {})
        for k, cv in br.items():
            act_zero(k, rest, a, cv, out)
        inner = act_opposite(e, rest, a)
        for key, cv in inner.items():
            mm, bb = _unindex(key)
            wedge(head, mm, bb, -cv, out)
        memo[(e, m, a)] = out
        return out

    rev: list[tuple[tuple[int, ...], int]] = [None] * len(labels)
    for key, pos in index.items():
        rev[pos] = key

    def _unindex(pos: int) -> tuple[tuple[int, ...], int]:
        return rev[pos]

    acts = []
    for e in range(g.dim):
        cols: list[Vec] = []
        d = data.grading[e]
        for m in mons:
            for a in range(l0.dim):
                out: Vec = {}
                if d == side_deg:
                    wedge(side_pos[e], m, a, Fraction(1), out)
                elif d == 0:
                    act_zero(e, m, a, Fraction(1), out)
                else:
                    out = act_opposite(e, m, a)
                cols.append(out)
        acts.append(Matrix.from_cols(cols, len(labels)))
    rep = Rep(g, space, acts)
    if check:
        defects = verify_rep(rep)
        if defects:
            raise AlgebraMismatch(f"induced module is inconsistent: {defects[0]}")
    return rep
