"""Canonical JSON persistence for algebras, modules, DS output, and reports.

Every object maps to a plain-data payload with a ``kind`` discriminator;
``serialize`` renders that payload with sorted keys so equal objects give
byte-identical text.  ``deserialize`` validates shape and scalar syntax and
returns the payload unchanged, so a round trip through text is the identity
on canonical data.  Scalars travel as ``"p"`` or ``"p/q"`` strings, matrices
as row-major nested arrays (with an explicit ``ncols`` since a matrix may
have zero rows), and a DS result references its source module by content
digest rather than inlining it.
"""

from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction

from .algebras import LieSA
from .checks import Report
from .ds import DSResult
from .errors import SchemaViolation
from .linalg import Matrix
from .reps import Rep
from .spaces import SuperSpace

Vec = dict[int, Fraction]

_SCALAR = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?\Z")
_DIGEST = re.compile(r"[0-9a-f]{64}\Z")


def scalar_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_scalar(s: str) -> Fraction:
    if not isinstance(s, str) or not _SCALAR.match(s):
        raise SchemaViolation(f"$: bad scalar {s!r}")
    return Fraction(s)


def _vec_items(v: Vec) -> list:
    return [[i, scalar_str(x)] for i, x in sorted(v.items()) if x]


def _dense(v: Vec, dim: int) -> list:
    return [scalar_str(v.get(i, Fraction(0))) for i in range(dim)]


def matrix_data(m: Matrix) -> dict:
    rows = [[scalar_str(r.get(j, Fraction(0))) for j in range(m.ncols)] for r in m.rows]
    return {"ncols": m.ncols, "rows": rows}


def space_data(s: SuperSpace) -> dict:
    return {
        "labels": list(s.labels),
        "parities": list(s.parities),
        "weights": [[scalar_str(x) for x in w] for w in s.weights],
    }


def algebra_data(g: LieSA) -> dict:
    brackets = [[i, j, _vec_items(v)] for (i, j), v in sorted(g.brackets.items())]
    return {
        "kind": "algebra",
        "family": g.family,
        "params": {k: g.params[k] for k in sorted(g.params)},
        "cartan": list(g.cartan) if g.cartan is not None else None,
        "space": space_data(g.space),
        "brackets": brackets,
        "matrix_basis": [matrix_data(m) for m in g.matrix_basis]
        if g.matrix_basis is not None
        else None,
        "ambient": space_data(g.ambient) if g.ambient is not None else None,
    }


def module_data(r: Rep) -> dict:
    return {
        "kind": "module",
        "algebra": algebra_data(r.algebra),
        "space": space_data(r.space),
        "actions": [matrix_data(m) for m in r.actions],
    }


def odd_element_data(g: LieSA, u: Vec) -> dict:
    return {"kind": "odd-element", "dim": g.dim, "coordinates": _dense(u, g.dim)}


def ds_result_data(d: DSResult) -> dict:
    return {
        "kind": "ds-result",
        "source": digest(d.source),
        "u": _dense(d.u, d.source.dim),
        "cohomology": space_data(d.cohomology),
        "representatives": matrix_data(d.representatives),
        "project": matrix_data(d.project),
        "kernel": matrix_data(d.kernel_basis),
        "image": matrix_data(d.image_basis),
        "include": matrix_data(d.cinv.include),
        "embed": matrix_data(d.cinv.embed),
    }


def report_data(r: Report) -> dict:
    checks = []
    for c in r.checks:
        entry: dict = {"name": c.name, "pass": c.passed}
        if c.witness is not None:
            entry["witness"] = c.witness
        checks.append(entry)
    dims = {k: list(v) for k, v in sorted(r.graded_dims.items())}
    return {"kind": "report", "case": r.case, "checks": checks, "graded_dimensions": dims}


_BUILDERS = [
    (LieSA, algebra_data),
    (Rep, module_data),
    (DSResult, ds_result_data),
    (Report, report_data),
]


def to_data(x) -> dict:
    """Canonical payload of a library object, or a validated payload as is."""
    for cls, build in _BUILDERS:
        if isinstance(x, cls):
            return build(x)
    if isinstance(x, dict):
        _validate(x)
        return x
    raise SchemaViolation(f"$: cannot serialize {type(x).__name__}")


def serialize(x) -> str:
    return json.dumps(to_data(x), sort_keys=True, indent=2) + "\n"


def deserialize(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaViolation(f"$: not valid JSON ({e.msg})") from None
    if not isinstance(data, dict):
        raise SchemaViolation("$: payload must be an object")
    _validate(data)
    return data


def digest(x) -> str:
    return hashlib.sha256(serialize(x).encode()).hexdigest()


# --------------------------------------------------------------------------
# shape validation; error messages carry the JSON path of the offending field


def _fail(path: str, msg: str):
    raise SchemaViolation(f"{path}: {msg}")


def _get(d, key, path, typ=None):
    if not isinstance(d, dict):
        _fail(path, "expected an object")
    if key not in d:
        _fail(path, f"missing key {key!r}")
    v = d[key]
    if typ is not None and not isinstance(v, typ):
        _fail(f"{path}.{key}", f"expected {typ.__name__}")
    return v

def _only_keys(d, keys, path):
    extra = sorted(set(d) - set(keys))
    if extra:
        _fail(f"{path}.{extra[0]}", "unexpected key")


def _check_scalar(s, path):
    if not isinstance(s, str) or not _SCALAR.match(s):
        _fail(path, f"bad scalar {s!r}")


def _check_scalar_list(xs, path):
    if not isinstance(xs, list):
        _fail(path, "expected an array")
    for i, s in enumerate(xs):
        _check_scalar(s, f"{path}[{i}]")


def _check_matrix(d, path):
    ncols = _get(d, "ncols", path, int)
    rows = _get(d, "rows", path, list)
    _only_keys(d, ("ncols", "rows"), path)
    if ncols < 0:
        _fail(f"{path}.ncols", "must be nonnegative")
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != ncols:
            _fail(f"{path}.rows[{i}]", f"expected {ncols} entries")
        for j, s in enumerate(row):
            _check_scalar(s, f"{path}.rows[{i}][{j}]")


def _check_space(d, path):
    labels = _get(d, "labels", path, list)
    parities = _get(d, "parities", path, list)
    weights = _get(d, "weights", path, list)
    _only_keys(d, ("labels", "parities", "weights"), path)
    if not all(isinstance(l, str) for l in labels):
        _fail(f"{path}.labels", "labels must be strings")
    if len(parities) != len(labels) or len(weights) != len(labels):
        _fail(path, "labels, parities, weights must align")
    for i, p in enumerate(parities):
        if p not in (0, 1):
            _fail(f"{path}.parities[{i}]", "parity must be 0 or 1")
    for i, w in enumerate(weights):
        _check_scalar_list(w, f"{path}.weights[{i}]")


def _check_sparse_vec(v, path, dim=None):
    if not isinstance(v, list):
        _fail(path, "expected an array")
    for t, item in enumerate(v):
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[0], int)):
            _fail(f"{path}[{t}]", "expected [index, scalar]")
        if item[0] < 0 or (dim is not None and item[0] >= dim):
            _fail(f"{path}[{t}]", f"index {item[0]} out of range")
        _check_scalar(item[1], f"{path}[{t}][1]")


def _check_algebra(d, path="$"):
    _only_keys(
        d,
        ("kind", "family", "params", "cartan", "space", "brackets", "matrix_basis", "ambient"),
        path,
    )
    fam = _get(d, "family", path)
    if fam is not None and not isinstance(fam, str):
        _fail(f"{path}.family", "expected string or null")
    params = _get(d, "params", path, dict)
    for k, v in params.items():
        if not isinstance(v, int):
            _fail(f"{path}.params.{k}", "expected int")
    space = _get(d, "space", path, dict)
    _check_space(space, f"{path}.space")
    dim = len(space["labels"])
    cartan = _get(d, "cartan", path)
    if cartan is not None:
        if not isinstance(cartan, list) or any(
            not isinstance(i, int) or not 0 <= i < dim for i in cartan
        ):
            _fail(f"{path}.cartan", "expected indices into the basis")
    brackets = _get(d, "brackets", path, list)
    for t, item in enumerate(brackets):
        here = f"{path}.brackets[{t}]"
        if not (isinstance(item, list) and len(item) == 3):
            _fail(here, "expected [i, j, value]")
        i, j, val = item
        if not (isinstance(i, int) and isinstance(j, int) and 0 <= i < dim and 0 <= j < dim):
            _fail(here, "bracket indices out of range")
        _check_sparse_vec(val, f"{here}[2]", dim)
    basis = _get(d, "matrix_basis", path)
    if basis is not None:
        if not isinstance(basis, list) or len(basis) != dim:
            _fail(f"{path}.matrix_basis", "expected one matrix per basis vector")
        for t, m in enumerate(basis):
            _check_matrix(m, f"{path}.matrix_basis[{t}]")
    ambient = _get(d, "ambient", path)
    if ambient is not None:
        _check_space(ambient, f"{path}.ambient")


def _check_module(d, path="$"):
    _only_keys(d, ("kind", "algebra", "space", "actions"), path)
    _check_algebra(_get(d, "algebra", path, dict), f"{path}.algebra")
    space = _get(d, "space", path, dict)
    _check_space(space, f"{path}.space")
    actions = _get(d, "actions", path, list)
    if len(actions) != len(d["algebra"]["space"]["labels"]):
        _fail(f"{path}.actions", "expected one action per algebra basis vector")
    vdim = len(space["labels"])
    for t, m in enumerate(actions):
        _check_matrix(m, f"{path}.actions[{t}]")
        if m["ncols"] != vdim or len(m["rows"]) != vdim:
            _fail(f"{path}.actions[{t}]", "action shape must match the module")


def _check_odd_element(d, path="$"):
    _only_keys(d, ("kind", "dim", "coordinates"), path)
    dim = _get(d, "dim", path, int)
    coords = _get(d, "coordinates", path, list)
    if len(coords) != dim:
        _fail(f"{path}.coordinates", f"expected {dim} entries")
    _check_scalar_list(coords, f"{path}.coordinates")


def _check_ds_result(d, path="$"):
    _only_keys(
        d,
        ("kind", "source", "u", "cohomology", "representatives", "project",
         "kernel", "image", "include", "embed"),
        path,
    )
    src = _get(d, "source", path, str)
    if not _DIGEST.match(src):
        _fail(f"{path}.source", "expected a sha256 hex digest")
    _check_scalar_list(_get(d, "u", path, list), f"{path}.u")
    _check_space(_get(d, "cohomology", path, dict), f"{path}.cohomology")
    for key in ("representatives", "project", "kernel", "image", "include", "embed"):
        _check_matrix(_get(d, key, path, dict), f"{path}.{key}")


def _check_report(d, path="$"):
    _only_keys(d, ("kind", "case", "checks", "graded_dimensions"), path)
    _get(d, "case", path, str)
    checks = _get(d, "checks", path, list)
    for t, c in enumerate(checks):
        here = f"{path}.checks[{t}]"
        if not isinstance(c, dict):
            _fail(here, "expected an object")
        _only_keys(c, ("name", "pass", "witness"), here)
        _get(c, "name", here, str)
        _get(c, "pass", here, bool)
        if "witness" in c and not isinstance(c["witness"], str):
            _fail(f"{here}.witness", "expected string")
    dims = _get(d, "graded_dimensions", path, dict)
    for k, v in dims.items():
        here = f"{path}.graded_dimensions.{k}"
        if (
            not isinstance(v, list)
            or len(v) != 2
            or any(not isinstance(n, int) or n < 0 for n in v)
        ):
            _fail(here, "expected [even, odd] dimensions")


_VALIDATORS = {
    "algebra": _check_algebra,
    "module": _check_module,
    "odd-element": _check_odd_element,
    "ds-result": _check_ds_result,
    "report": _check_report,
}


def _validate(data: dict, path: str = "$"):
    kind = _get(data, "kind", path, str)
    checker = _VALIDATORS.get(kind)
    if checker is None:
        _fail(f"{path}.kind", f"unknown kind {kind!r}")
    checker(data, path)
