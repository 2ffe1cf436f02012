"""Suite catalogs, runners, and artifact reproducibility."""

import csv
import hashlib
import json

import pytest

from superds.errors import InvalidParams
from superds.reports import (
    build_manifest,
    run_case,
    run_cases,
    run_manifest,
    short_grading,
    suite_cases,
)
from superds.algebras import make_family


def all_pass(suite, seed=0):
    outcomes = run_cases(suite_cases(suite, seed))
    failing = [rep.summary() for _, rep in outcomes if not rep.passed]
    assert not failing, failing
    return outcomes


def test_short_grading():
    assert short_grading(make_family("gl", 1, 1)) == (0, 0, 1, -1)
    assert short_grading(make_family("p", 2)) == (0, 0, 0, 0, 1, 1, 1, -1)
    with pytest.raises(InvalidParams):
        short_grading(make_family("q", 2))


def test_manifest_is_deterministic():
    a = build_manifest("properties", seed=7)
    b = build_manifest("properties", seed=7)
    assert a == b
    c = build_manifest("properties", seed=8)
    assert c["cases"] != a["cases"]
    assert a["schema"] == 1


def test_catalog_suite():
    outcomes = all_pass("catalog")
    assert len(outcomes) == 24


def test_thm3_and_qprop_suites():
    all_pass("thm3")
    all_pass("q-prop")


def test_pprop_honest_failure():
    # The one-slot claim undercounts the even part whenever a pair slot is
    # present; the two-slot form is the one the computation supports.
    rep = run_case({"id": "x", "op": "pprop", "n": 4, "r": 1, "s": 0, "d": 0})
    by_name = {c.name: c.passed for c in rep.checks}
    assert by_name["graded dimension matches p(3) x C^(0|1)"] is False
    assert by_name["graded dimension matches p(2) x C^(0|1)"] is True
    assert by_name["(i) injected g_u is an ideal"] is True
    assert by_name["(iii) odd central complement"] is True


def test_pprop_defect_only_passes():
    rep = run_case({"id": "x", "op": "pprop", "n": 3, "r": 0, "s": 0, "d": 1})
    assert rep.passed


def test_kac_freeness_suite():
    outcomes = all_pass("kac-freeness")
    assert len(outcomes) == 6
    dims = {case["id"]: rep.graded_dims["invariant ring"] for case, rep in outcomes}
    assert sum(dims["kacfree-gl1x1-trivial"]) == 2
    assert sum(dims["kacfree-gl2x2-nat-dualnat"]) == 4


def test_pkac_and_pairing_suites():
    all_pass("p-kac")
    outcomes = all_pass("pairing")
    assert len(outcomes) == 9


def test_properties_suite_composition():
    cases = suite_cases("properties", seed=0)
    pairs = [c for c in cases if c["op"] == "ds-properties"]
    les = [c for c in cases if c["op"] == "ds-les"]
    assert len(pairs) >= 20
    assert len(les) == 5
    all_pass("properties")


def test_spherical_suite():
    all_pass("spherical")


def test_run_cases_rejects_duplicate_ids():
    case = {"id": "x", "op": "split", "index": 0}
    with pytest.raises(InvalidParams):
        run_cases([case, dict(case)])
    with pytest.raises(InvalidParams):
        run_case({"id": "x", "op": "frobnicate"})


def test_artifacts_are_byte_stable(tmp_path):
    manifest = build_manifest("split", seed=0)
    out1, out2 = tmp_path / "a", tmp_path / "b"
    _, digests1 = run_manifest(manifest, out_dir=out1)
    _, digests2 = run_manifest(manifest, out_dir=out2, jobs=2)
    assert digests1 == digests2

    for cid, dig in digests1.items():
        data = (out1 / f"{cid}.json").read_bytes()
        assert hashlib.sha256(data).hexdigest() == dig
        assert data == (out2 / f"{cid}.json").read_bytes()
    assert (out1 / "summary.csv").read_bytes() == (out2 / "summary.csv").read_bytes()
    assert (out1 / "manifest.json").read_bytes() == (out2 / "manifest.json").read_bytes()

    png = (out1 / "split.png").read_bytes()
    assert png[:8] == b"\x89PNG\r\n\x1a\n"
    assert png == (out2 / "split.png").read_bytes()


def test_summary_csv_is_ordered_and_parses(tmp_path):
    manifest = build_manifest("de-rham", seed=0)
    run_manifest(manifest, out_dir=tmp_path)
    with open(tmp_path / "summary.csv", newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["case", "status", "checks", "failed", "failing"]
    ids = [r[0] for r in rows[1:]]
    assert ids == sorted(ids)
    assert all(r[1] == "pass" for r in rows[1:])

    frozen = json.loads((tmp_path / "manifest.json").read_text())
    assert frozen["schema"] == 1
    assert set(frozen["digests"]) == set(ids)
