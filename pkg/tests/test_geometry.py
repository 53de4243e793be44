import json
import os

import pytest

from curvepi.geometry import (
    BlowUpLedger,
    CombinatorialType,
    Point,
    Singularity,
    blow_up,
    load_script,
    nori_check,
    run_script,
    validate_combinatorial_type,
)

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "curvepi", "data", "blowup")


def ct(components, sings):
    return CombinatorialType(
        components,
        [Singularity(k, f"p{i}", owners) for i, (k, owners) in enumerate(sings)],
    )


# ---------------------------------------------------------------------------
# combinatorial type validation


def test_smooth_conic_passes():
    assert validate_combinatorial_type(ct([("C", 2)], [])).ok


def test_quartic_with_four_singular_points_fails_genus_bound():
    bad = ct([("C", 4)], [("A1", ("C", "C"))] * 4)
    report = validate_combinatorial_type(bad)
    assert not report.ok
    assert any("genus" in v[0] for v in report.violations)


def test_three_cusped_quartic_passes_exactly_at_the_bound():
    assert validate_combinatorial_type(ct([("C", 4)], [("A2", ("C",))] * 3)).ok
    assert validate_combinatorial_type(ct([("C", 5)], [("A4", ("C",))] * 3)).ok


def test_cubic_line_bezout():
    good = ct([("C", 3), ("L", 1)], [("A1", ("C", "L"))] * 3)
    assert validate_combinatorial_type(good).ok
    # intersection multiplicities must total deg C * deg L
    bad = ct([("C", 3), ("L", 1)], [("A1", ("C", "L"))] * 2)
    report = validate_combinatorial_type(bad)
    assert any("Bezout" in v[0] for v in report.violations)


def test_tangency_markers_count_with_multiplicity():
    # x3 + transverse line crossing would overshoot Bezout for a cubic
    bad = ct([("C", 3), ("L", 1)], [("x3", ("C", "L")), ("A1", ("C", "L"))])
    assert not validate_combinatorial_type(bad).ok
    good = ct([("C", 3), ("L", 1)], [("x3", ("C", "L"))])
    assert validate_combinatorial_type(good).ok


def test_decorated_kinds():
    # line through the node of a cubic: multiplicity 2 plus a transverse point
    good = ct([("C", 3), ("L", 1)], [("A1T", ("C", "L")), ("A1", ("C", "L"))])
    assert validate_combinatorial_type(good).ok
    # tangent through the node uses all three intersections
    good2 = ct([("C", 3), ("L", 1)], [("A1*", ("C", "L"))])
    assert validate_combinatorial_type(good2).ok


def test_total_degree_flagged():
    report = validate_combinatorial_type(ct([("C", 5), ("L", 1)], []))
    assert any("degree exceeds" in v[0] for v in report.violations)


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        Singularity("E8", "p", ("C",))


def test_arity_checked():
    report = validate_combinatorial_type(ct([("C", 3)], [("A2", ("C", "C"))]))
    assert not report.ok


def test_json_round_trip():
    c = ct([("C", 3), ("L", 1)], [("A2", ("C",)), ("x3", ("C", "L"))])
    again = CombinatorialType.from_json(json.loads(json.dumps(c.to_json())))
    assert again.components == c.components
    assert [s.kind for s in again.singularities] == [s.kind for s in c.singularities]


# ---------------------------------------------------------------------------
# blow-up ledger


def test_blow_up_drops_by_m_squared():
    # cuspidal cubic: blowing the cusp drops 9 to 5
    ledger = BlowUpLedger({"C": 9}, [Point("q", "cusp", [("C", 2)])])
    after = blow_up(ledger, "q")
    assert after.self_int["C"] == 5
    assert len(after.exceptional) == 1
    # smooth conic at a smooth point: 4 to 3
    conic = BlowUpLedger({"C": 4}, [])
    assert blow_up(conic, [("C", 1)]).self_int["C"] == 3


def test_ledger_is_immutable_value():
    ledger = BlowUpLedger({"C": 9}, [Point("q", "cusp", [("C", 2)])])
    blow_up(ledger, "q")
    assert ledger.self_int["C"] == 9
    assert len(ledger.points) == 1


def test_cusp_resolution_chain():
    # cusp -> tangency with the exceptional curve -> triple point -> done
    ledger = BlowUpLedger({"C": 9}, [Point("q", "cusp", [("C", 2)])])
    l1 = blow_up(ledger, "q")
    assert [p.kind for p in l1.points] == ["tangency"]
    l2 = blow_up(l1, "q.1")
    assert [p.kind for p in l2.points] == ["multiple"]
    l3 = blow_up(l2, "q.1.1")
    assert not l3.points
    assert l3.self_int["C"] == 9 - 4 - 1 - 1


def test_smooth_point_sequences_drop_by_one_each():
    for k in range(1, 5):
        ledger = BlowUpLedger({"C": 9}, [])
        for _ in range(k):
            ledger = blow_up(ledger, [("C", 1)])
        assert ledger.self_int["C"] == 9 - k
        assert len(ledger.exceptional) == k


def test_free_form_blow_up_validation():
    ledger = BlowUpLedger({"C": 4}, [])
    with pytest.raises(ValueError):
        blow_up(ledger, [("missing", 1)])
    with pytest.raises(ValueError):
        blow_up(ledger, [])
    with pytest.raises(ValueError):
        blow_up(ledger, [("C", 2)])  # free-form blow-ups are smooth points


def test_nori_rejects_unresolved():
    ledger = BlowUpLedger({"C": 9}, [Point("q", "cusp", [("C", 2)])])
    with pytest.raises(ValueError):
        nori_check(ledger, ["C"])


def test_nori_boundary_case():
    # C.C = 2 with one node: 2 > 2 is false
    ledger = BlowUpLedger({"C": 2}, [Point("n", "node", [("C", 2)])])
    report = nori_check(ledger, ["C"])
    assert not report.overall
    assert report.rows[0][1:3] == (2, 2)


def test_nori_monotone():
    # increasing C.C or decreasing r never flips pass -> fail
    for cc in range(-1, 6):
        for r in range(0, 3):
            points = [Point(f"n{i}", "node", [("C", 2)]) for i in range(r)]
            report = nori_check(BlowUpLedger({"C": cc}, points), ["C"])
            if report.overall:
                better = nori_check(BlowUpLedger({"C": cc + 1}, points), ["C"])
                assert better.overall
                if r:
                    fewer = nori_check(BlowUpLedger({"C": cc}, points[:-1]), ["C"])
                    assert fewer.overall


PRINTED_VALUES = {
    "2.1.2": ("C3", 6), "2.1.3": ("C3", 7), "2.2.2": ("C3", 7), "2.2.3": ("C3", 6),
    "2.2.4": ("C3", 5), "2.2.5": ("C3", 4), "2.3.1": ("C3", 4), "2.3.2": ("C3", 1),
    "2.3.5": ("C3", 3), "3.2": ("C2a", 1), "4.2": ("C2", 3), "4.3": ("C2", 2),
    "example1": ("C", 1),
}


@pytest.mark.parametrize("case", sorted(PRINTED_VALUES))
def test_scripted_replays(case):
    script = load_script(os.path.join(DATA, f"{case}.json"))
    ledger, report = run_script(script)
    comp, expected = PRINTED_VALUES[case]
    assert ledger.self_int[comp] == expected
    assert report.overall
    assert report.d_nodal_only and report.d_e_transverse
    # the exceptional count equals the script length
    assert len(ledger.exceptional) == len(script["steps"])


def test_example1_details():
    script = load_script(os.path.join(DATA, "example1.json"))
    ledger, report = run_script(script)
    assert ledger.self_int["C"] == 9 - 4 - 1 - 1 - 1 - 1
    assert len(ledger.exceptional) == 5
    [(cid, cc, two_r, ok)] = report.rows
    assert (cc, two_r, ok) == (1, 0, True)


def test_case_2_2_2_keeps_its_node():
    script = load_script(os.path.join(DATA, "2.2.2.json"))
    ledger, report = run_script(script)
    assert ledger.node_count("C3") == 1
    [(cid, cc, two_r, ok)] = report.rows
    assert (cc, two_r) == (7, 2) and ok


def test_case_2_3_1_leaves_a_transverse_triple_point():
    script = load_script(os.path.join(DATA, "2.3.1.json"))
    ledger, report = run_script(script)
    assert any(p.kind == "multiple" for p in ledger.points)
    assert report.notes
