"""Suite runner and report determinism tests."""

import json

import pytest

from monowit.parsing import parse_matrix, parse_poly
from monowit.suites import SUITE_NAMES, render_report, run_suite


def test_all_suites_pass_at_small_scale():
    for name in SUITE_NAMES:
        report = run_suite(name, 11, 3)
        assert report["summary"]["failed"] == 0, (name, report)
        assert report["summary"]["total"] == len(report["cases"])
        assert report["summary"]["passed"] == report["summary"]["total"]
        assert report["name"] == name
        assert all(c["verdict"] == "pass" for c in report["cases"])


def test_report_is_valid_json_and_deterministic():
    a = run_suite("pW", 5, 4)
    b = run_suite("pW", 5, 4)
    assert "timing_ms" in a
    text_a = render_report(a, include_timing=False)
    text_b = render_report(b, include_timing=False)
    assert text_a == text_b
    parsed = json.loads(text_a)
    assert "timing_ms" not in parsed
    assert json.loads(render_report(a))["timing_ms"] == a["timing_ms"]


def test_different_seeds_differ():
    a = render_report(run_suite("pV", 1, 2), include_timing=False)
    b = render_report(run_suite("pV", 2, 2), include_timing=False)
    assert a != b


def test_witness_fields_round_trip():
    report = run_suite("tVdimA", 13, 2)
    for case in report["cases"]:
        w = case["witness"]
        m = parse_matrix(w["matrix"])
        p = parse_poly(w["poly"], "V", m.ncols)
        assert str(p) == w["poly"]
        assert w["kind"] in ("order", "preorder")


def test_run_suite_rejections():
    with pytest.raises(ValueError):
        run_suite("nope", 1, 1)
    with pytest.raises(ValueError):
        run_suite("pR", 1, 0)
