import json

import pytest

from curvepi.derive import DerivationBudget
from curvepi.verify import ALL_CHECKS, SuiteConfig, run_suite, suite_json


def test_suite_ids():
    assert ALL_CHECKS == [f"V{i}" for i in range(1, 13)]


def test_selected_check():
    [report] = run_suite(["V1"])
    assert report.passed
    assert report.artifacts["cosets"] == 320
    assert report.artifacts["abelianization"] == "Z/5"
    # the coset table itself is attached for audit
    assert report.artifacts["table"]["n"] == 320


def test_unknown_check_rejected():
    with pytest.raises(KeyError):
        run_suite(["V99"])


def test_budget_exhaustion_is_inconclusive_never_fail():
    [report] = run_suite(["V3"], SuiteConfig(max_cosets=10))
    assert report.status == "inconclusive"
    [report2] = run_suite(["V4"], SuiteConfig(budget=DerivationBudget(max_states=2)))
    assert report2.status == "inconclusive"


def test_full_suite_passes():
    reports = run_suite()
    assert len(reports) == 12
    for r in reports:
        assert r.passed, (r.id, r.detail)


def test_json_reports_are_byte_identical():
    first = suite_json(run_suite())
    second = suite_json(run_suite())
    assert first == second
    doc = json.loads(first)
    assert doc["all_pass"] is True
    assert [entry["id"] for entry in doc["suite"]] == ALL_CHECKS
    # timings are excluded by design so reports can be byte-stable
    assert "elapsed" not in first


def test_reports_carry_audit_artifacts():
    reports = {r.id: r for r in run_suite(["V3", "V8", "V10"])}
    v3 = reports["V3"].artifacts
    assert v3["index"] == 168
    assert v3["abelianization"] == "Z^6"
    assert v3["simplified_generators"] >= 6
    v8 = reports["V8"].artifacts
    assert sorted(v8["bipartition"][0]) == ["s0_b", "s1_b"]
    assert sorted(v8["bipartition"][1]) == ["s0_a", "s1_a", "s1_x"]
    v10 = reports["V10"].artifacts
    assert v10["2.2.2"]["self_intersections"]["C3"] == [7, 2]
