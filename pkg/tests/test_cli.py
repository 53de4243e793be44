import io
import json
import os
from contextlib import redirect_stderr, redirect_stdout

import pytest

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None

from curvepi.cli import main

PKG = os.path.join(os.path.dirname(__file__), "..", "src", "curvepi")
TYPES = os.path.join(PKG, "data", "types")
BLOWUP = os.path.join(PKG, "data", "blowup")
SCHEMAS = os.path.join(PKG, "schemas")


def run(argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    import sys

    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        with redirect_stdout(out), redirect_stderr(err):
            code = main(argv)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def schema(name):
    with open(os.path.join(SCHEMAS, name)) as fh:
        return json.load(fh)


def test_ab_inline():
    code, out, _ = run(["ab", "<a,b | b=a b^4 a, a^2=b^2 a^3 b^2>"])
    assert code == 0
    assert out.strip() == "Z/5"


def test_ab_json_schema():
    code, out, _ = run(["ab", "<a,b | a^3 = b^4>", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc == {"free_rank": 1, "torsion": []}
    if jsonschema:
        jsonschema.validate(doc, schema("invariants.schema.json"))


def test_tc_pipeline_quotient():
    # catalog gr:2,3,5 | tc --quotient-by a^2 -> 60
    code, out, _ = run(["catalog", "gr:2,3,5"])
    assert code == 0
    code, out2, _ = run(["tc", "-", "--quotient-by", "a^2"], stdin=out)
    assert code == 0
    assert out2.strip() == "60"


def test_tc_json_schema():
    code, out, _ = run(["tc", "<a | a^3>", "--json"])
    doc = json.loads(out)
    assert doc["n"] == 3
    if jsonschema:
        jsonschema.validate(doc, schema("coset_table.schema.json"))


def test_tc_overflow_exit_code():
    code, out, err = run(["tc", "<a,b |>", "--max-cosets", "50"])
    assert code == 1
    assert "overflow" in err


def test_rs_subgroup():
    code, out, _ = run(
        ["rs", "<a,b|>", "--subgroup", "a^2", "--subgroup", "b", "--subgroup", "a b a^-1"]
    )
    assert code == 0
    assert "index: 2" in out


def test_catalog_text_and_json():
    code, out, _ = run(["catalog", "toric:3,4"])
    assert code == 0 and out.strip() == "< a, b | a^3 b^-4 >"
    code, out, _ = run(["catalog", "quintic:C4_3A2", "--json"])
    doc = json.loads(out)
    assert doc["generators"] == ["a", "b", "c"]
    if jsonschema:
        jsonschema.validate(doc, schema("presentation.schema.json"))


def test_catalog_bad_tag_usage_error():
    code, _, err = run(["catalog", "nonsense:1"])
    assert code == 2
    assert "error" in err


def test_classify_fixture():
    path = os.path.join(TYPES, "four_concurrent_lines.json")
    code, out, _ = run(["classify", "--type", path])
    assert code == 0
    assert out.strip() == "F_3 (case 1.3)"


def test_classify_json_schema():
    path = os.path.join(TYPES, "three_cuspidal_quartic.json")
    code, out, _ = run(["classify", "--type", path, "--json"])
    doc = json.loads(out)
    assert doc["group"] == "B_3(S^2)" and doc["finite_order"] == 12
    if jsonschema:
        jsonschema.validate(doc, schema("classification.schema.json"))


def test_classify_not_covered(tmp_path):
    doc = {
        "components": [{"id": "C", "degree": 4}, {"id": "L", "degree": 1}],
        "singularities": [
            {"kind": "A2", "at": "p", "owners": ["C"]},
            {"kind": "x4", "at": "q", "owners": ["C", "L"]},
        ],
    }
    path = tmp_path / "ct.json"
    path.write_text(json.dumps(doc))
    code, out, err = run(["classify", "--type", str(path)])
    assert code == 1
    assert "not covered" in err


def test_blowup_script():
    code, out, _ = run(["blowup", "--script", os.path.join(BLOWUP, "example1.json")])
    assert code == 0
    assert "self-intersection 1 > 0" in out
    if jsonschema:
        for name in os.listdir(BLOWUP):
            with open(os.path.join(BLOWUP, name)) as fh:
                jsonschema.validate(json.load(fh), schema("blowup_script.schema.json"))


def test_type_fixtures_validate_against_schema():
    if not jsonschema:
        pytest.skip("jsonschema unavailable")
    for name in os.listdir(TYPES):
        with open(os.path.join(TYPES, name)) as fh:
            jsonschema.validate(json.load(fh), schema("combinatorial_type.schema.json"))


def test_verify_subset_and_json_schema():
    code, out, _ = run(["verify", "--only", "V1,V12", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["all_pass"] is True
    assert [e["id"] for e in doc["suite"]] == ["V1", "V12"]
    if jsonschema:
        jsonschema.validate(doc, schema("verify_report.schema.json"))


def test_verify_text_mode():
    code, out, _ = run(["verify", "--only", "V12"])
    assert code == 0
    assert "PASS" in out and "2/2" not in out


def test_parse_error_is_usage_error():
    code, _, err = run(["ab", "<a,b | q>"])
    assert code == 2
    assert "parse error" in err
