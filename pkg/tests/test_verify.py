"""Shape and determinism of the built-in verification suites."""

import pytest

from ramify import verify


def _check_shape(report, name):
    assert report["suite"] == name
    assert report["total"] == len(report["cases"])
    assert report["passed"] == sum(1 for c in report["cases"] if c["ok"])
    assert report["ok"] == (report["passed"] == report["total"])
    ids = [c["id"] for c in report["cases"]]
    assert ids == sorted(ids)
    if report["ok"]:
        assert report["counterexample"] is None


def test_quick_suites_pass():
    for name in ("dm-quadratic", "morita-end"):
        report = verify.run_suite(name)
        _check_shape(report, name)
        assert report["ok"], report["counterexample"]


def test_seeded_suites_pass_with_small_case_counts():
    report = verify.run_suite("appendix-a", seed=1, cases=8)
    _check_shape(report, "appendix-a")
    assert report["ok"], report["counterexample"]
    report = verify.run_suite("eq-1-2", seed=2, cases=3)
    _check_shape(report, "eq-1-2")
    assert report["ok"], report["counterexample"]


def test_seed_determinism():
    a = verify.run_suite("appendix-a", seed=9, cases=5)
    b = verify.run_suite("appendix-a", seed=9, cases=5)
    assert a == b


def test_extension_family_covers_tame_and_wild():
    fam = verify.extension_family()
    ids = [case_id for case_id, _ in fam]
    assert len(fam) == 7
    assert "Z2:x^2-2" in ids and "F2:x^2+t*x+t" in ids
    for _, gdata in fam:
        assert gdata.is_galois


def test_unknown_suite_is_rejected():
    with pytest.raises(ValueError):
        verify.run_suite("no-such-suite")
