"""Chevalley-Eilenberg complexes and exterior-algebra invariants.

Everything here lives over a purely even Lie algebra k: the homology complex
∧k ⊗ L and the cohomology complex ∧k* (trivial coefficients), the adjoint
action on ∧k extended as a derivation with its invariants degree by degree,
and the evaluation pairing between invariants of ∧k and of ∧k*.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebras import LieSA
from .checks import Report
from .errors import GradingViolation, InvalidParams
from .linalg import Matrix, homology, invert, joint_kernel, solve
from .reps import Rep

Vec = dict[int, Fraction]


def monomials_by_degree(n: int) -> list[list[tuple[int, ...]]]:
    return [list(combinations(range(n), p)) for p in range(n + 1)]


def insert_sign(m: tuple[int, ...], s: int) -> tuple[tuple[int, ...], int] | None:
    """Sorted insertion of index s into the monomial m with its wedge sign."""
    if s in m:
        return None
    q = sum(1 for r in m if r < s)
    return tuple(sorted(m + (s,))), -1 if q % 2 else 1


def _require_even(k: LieSA) -> None:
    if any(k.space.parities):
        raise GradingViolation("complex is defined for a purely even algebra")


def ce_boundaries(k: LieSA, module: Rep) -> list[Matrix]:
    """Homology differentials d_p: ∧^p k ⊗ L → ∧^{p-1} k ⊗ L for p = 1..dim k.

    d(x₁∧…∧x_p ⊗ v) = Σ_t (-1)^{t+1} (…x̂_t…) ⊗ x_t·v
                     + Σ_{t<j} (-1)^{t+j+1} [x_t,x_j]∧(…x̂_t…x̂_j…) ⊗ v
    """
    _require_even(k)
    n = k.dim
    dl = module.dim
    mons = monomials_by_degree(n)
    mats = []
    for p in range(1, n + 1):
        pos = {m: i for i, m in enumerate(mons[p - 1])}
        entries: dict[tuple[int, int], Fraction] = {}
        for mi, m in enumerate(mons[p]):
            for a in range(dl):
                col = mi * dl + a
                for t in range(p):
                    sign_t = -1 if t % 2 else 1
                    rest = m[:t] + m[t + 1:]
                    for b, x in module.actions[m[t]].col(a).items():
                        key = (pos[rest] * dl + b, col)
                        entries[key] = entries.get(key, Fraction(0)) + sign_t * x
                    for j in range(t + 1, p):
                        sign_tj = -1 if (t + j + 1) % 2 else 1
                        rest2 = tuple(r for q, r in enumerate(m) if q not in (t, j))
                        for s, x in k.bracket(m[t], m[j]).items():
                            ins = insert_sign(rest2, s)
                            if ins is None:
                                continue
                            target, sign_w = ins
                            key = (pos[target] * dl + a, col)
                            entries[key] = entries.get(key, Fraction(0)) + sign_tj * sign_w * x
        mats.append(Matrix.from_entries(len(mons[p - 1]) * dl, len(mons[p]) * dl,
                                        {k2: v for k2, v in entries.items() if v}))
    return mats


def ce_cochain_maps(k: LieSA) -> list[Matrix]:
    """Cohomology differentials δ_p: ∧^p k* → ∧^{p+1} k* (trivial coefficients).

    (δf)(x₁,…,x_{p+1}) = Σ_{i<j} (-1)^{i+j} f([x_i,x_j], …x̂_i…x̂_j…)
    """
    _require_even(k)
    n = k.dim
    mons = monomials_by_degree(n)
    mats = []
    for p in range(n):
        pos = {m: i for i, m in enumerate(mons[p])}
        entries: dict[tuple[int, int], Fraction] = {}
        for mi, m in enumerate(mons[p + 1]):
            for t in range(p + 1):
                for j in range(t + 1, p + 1):
                    sign_tj = -1 if (t + j + 1) % 2 else 1
                    rest = tuple(r for q, r in enumerate(m) if q not in (t, j))
                    for s, x in k.bracket(m[t], m[j]).items():
                        ins = insert_sign(rest, s)
                        if ins is None:
                            continue
                        target, sign_w = ins
                        key = (mi, pos[target])
                        entries[key] = entries.get(key, Fraction(0)) + sign_tj * sign_w * x
        mats.append(Matrix.from_entries(len(mons[p + 1]), len(mons[p]),
                                        {k2: v for k2, v in entries.items() if v}))
    return mats


@dataclass
class CEHomology:
    variant: str
    dims: list[int]
    representatives: list[Matrix]
    complex_dims: list[int]


def ce_complex(k: LieSA, module: Rep, variant: str = "homology") -> CEHomology:
    n = k.dim
    counts = [len(ms) for ms in monomials_by_degree(n)]
    if variant == "homology":
        mats = ce_boundaries(k, module)
        sizes = [c * module.dim for c in counts]
        downs = [mats[p - 1] if p >= 1 else Matrix.zero(0, sizes[0]) for p in range(n + 1)]
        ups = [mats[p] if p < n else Matrix.zero(sizes[n], 0) for p in range(n + 1)]
    elif variant == "cohomology":
        if module.dim != 1 or any(not m.is_zero() for m in module.actions):
            raise InvalidParams("cohomology variant is implemented for the trivial module")
        deltas = ce_cochain_maps(k)
        sizes = counts
        downs = [deltas[p] if p < n else Matrix.zero(0, sizes[n]) for p in range(n + 1)]
        ups = [deltas[p - 1] if p >= 1 else Matrix.zero(sizes[0], 0) for p in range(n + 1)]
    else:
        raise InvalidParams(f"unknown variant {variant!r}")
    dims, reps = [], []
    for down, up in zip(downs, ups):
        _, _, rep_cols, _ = homology(down, up)
        dims.append(rep_cols.ncols)
        reps.append(rep_cols)
    return CEHomology(variant=variant, dims=dims, representatives=reps, complex_dims=sizes)


# ---------------------------------------------------------------------------
# exterior powers of a linear action


def derivation_powers(action: list[Matrix], n: int) -> list[list[Matrix]]:
    """Extend each degree-1 operator to every ∧^p as a derivation."""
    mons = monomials_by_degree(n)
    out = []
    for p in range(n + 1):
        pos = {m: i for i, m in enumerate(mons[p])}
        mats_p = []
        for op in action:
            entries: dict[tuple[int, int], Fraction] = {}
            for mi, m in enumerate(mons[p]):
                for t in range(p):
                    # sign of carrying the replacement from slot t back into order
                    sign_t = -1 if t % 2 else 1
                    rest = m[:t] + m[t + 1:]
                    for s, x in op.col(m[t]).items():
                        ins = insert_sign(rest, s)
                        if ins is None:
                            continue
                        target, sign_w = ins
                        key = (pos[target], mi)
                        entries[key] = entries.get(key, Fraction(0)) + sign_t * sign_w * x
            mats_p.append(Matrix.from_entries(len(mons[p]), len(mons[p]),
                                              {k2: v for k2, v in entries.items() if v}))
        out.append(mats_p)
    return out


def exterior_invariants(action: list[Matrix], n: int) -> list[Matrix]:
    """Joint kernel of the derivation action on each ∧^p, as canonical columns."""
    powers = derivation_powers(action, n)
    out = []
    for p, mats in enumerate(powers):
        if not mats:
            out.append(Matrix.identity(len(monomials_by_degree(n)[p])))
        else:
            out.append(joint_kernel(mats))
    return out


def wedge_vectors(a: Vec, pa: int, b: Vec, pb: int, n: int) -> Vec:
    """Wedge product of multivectors given in degree-pa and degree-pb monomial coords."""
    mons = monomials_by_degree(n)
    pos = {m: i for i, m in enumerate(mons[pa + pb])}
    out: dict[int, Fraction] = {}
    for ia, xa in a.items():
        ma = mons[pa][ia]
        for ib, xb in b.items():
            mb = mons[pb][ib]
            if set(ma) & set(mb):
                continue
            inversions = sum(1 for r in ma for s in mb if s < r)
            sign = -1 if inversions % 2 else 1
            idx = pos[tuple(sorted(ma + mb))]
            out[idx] = out.get(idx, Fraction(0)) + sign * xa * xb
    return {i: x for i, x in out.items() if x}


@dataclass
class InvariantAlgebra:
    degrees: list[Matrix]
    poincare: list[int]
    products: dict[tuple[int, int], Vec]
    n: int

    @property
    def dimension(self) -> int:
        return sum(self.poincare)

    def poincare_eval(self, x: Fraction) -> Fraction:
        return sum((Fraction(x) ** p) * c for p, c in enumerate(self.poincare))

    def degree_offsets(self) -> list[int]:
        offs, total = [], 0
        for c in self.poincare:
            offs.append(total)
            total += c
        return offs


def invariant_exterior(k: LieSA, dualize: bool = False) -> InvariantAlgebra:
    _require_even(k)
    n = k.dim
    action = [k.ad_basis(i) for i in range(n)]
    if dualize:
        action = [m.transpose().scale(-1) for m in action]
    degrees = exterior_invariants(action, n)
    poincare = [m.ncols for m in degrees]
    offsets = []
    total = 0
    for c in poincare:
        offsets.append(total)
        total += c
    products: dict[tuple[int, int], Vec] = {}
    for pa, inva in enumerate(degrees):
        for pb, invb in enumerate(degrees):
            if pa + pb > n:
                continue
            for ca in range(inva.ncols):
                for cb in range(invb.ncols):
                    w = wedge_vectors(inva.col(ca), pa, invb.col(cb), pb, n)
                    coords = solve(degrees[pa + pb], w) if w else {}
                    assert coords is not None, "wedge of invariants left the invariants"
                    if coords:
                        key = (offsets[pa] + ca, offsets[pb] + cb)
                        products[key] = {offsets[pa + pb] + i: x for i, x in coords.items()}
    return InvariantAlgebra(degrees=degrees, poincare=poincare, products=products, n=n)


def duality_pairing_check(k: LieSA, case: str = "duality") -> Report:
    primal = invariant_exterior(k)
    dual = invariant_exterior(k, dualize=True)
    report = Report(case=case)
    report.add("equal total dimensions", primal.dimension == dual.dimension,
               witness=f"{primal.dimension}|{dual.dimension}")
    for p, (a, b) in enumerate(zip(primal.degrees, dual.degrees)):
        square = a.ncols == b.ncols
        gram = a.transpose() @ b
        ok = square and (gram.ncols == 0 or invert(gram) is not None)
        report.add(f"degree {p} Gram invertible", ok, witness=f"{a.ncols}x{b.ncols}")
    return report
