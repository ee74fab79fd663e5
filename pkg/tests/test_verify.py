"""Tests for the verification driver itself."""

import pytest

from gbstates.verify import GROUPS, VerifyConfig, run_verification


def test_every_group_passes_at_default_bounds():
    report = run_verification(VerifyConfig(seed=123))
    assert sorted(g["name"] for g in report["groups"]) == sorted(GROUPS)
    assert report["all_passed"] is True


def test_overtight_tolerance_reports_failures_without_crash():
    report = run_verification(VerifyConfig(tolerance=1e-16, groups=("gbs", "algebra")))
    assert report["all_passed"] is False
    failed = [
        c["name"]
        for g in report["groups"]
        for c in g["checks"]
        if not c["passed"]
    ]
    assert failed


def test_group_filter_and_n_restriction():
    report = run_verification(VerifyConfig(groups=("completeness",), n=5))
    assert [g["name"] for g in report["groups"]] == ["completeness"]
    assert report["all_passed"] is True


def test_unknown_group_rejected():
    with pytest.raises(ValueError, match="unknown"):
        run_verification(VerifyConfig(groups=("bogus",)))


def test_diagnostic_check_never_gates():
    report = run_verification(VerifyConfig(groups=("appendix",), tolerance=1e-30))
    appendix = report["groups"][0]
    diag = [c for c in appendix["checks"] if c.get("diagnostic")]
    assert diag and all(c["passed"] for c in diag)
