"""Diagram machinery, isotropy typing, and the classification tables."""

from __future__ import annotations

import pathlib

import pytest

from conftest import light_pipeline
from sasakian.dynkin import (cartan_from_diagram, classification_table,
                             classify_component, diagram, extended_diagram,
                             isotropy_report, render_csv, render_json,
                             render_markdown, report_for_type,
                             simple_roots_of_h, FAMILY_TEMPLATES, WOLF_TEMPLATES)
from sasakian.roots import build_root_system, highest_root

GOLDEN = pathlib.Path(__file__).parent / "golden"


def test_diagram_examples():
    a3 = diagram(build_root_system("A3"))
    assert a3.edges == {(0, 1): 1, (1, 2): 1}
    g2 = diagram(build_root_system("G2"))
    assert list(g2.edges.values()) == [3]
    f4 = diagram(build_root_system("F4"))
    assert sorted(f4.edges.values()) == [1, 1, 2]


@pytest.mark.parametrize("name", ["A1", "A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"])
def test_cartan_diagram_roundtrip(name):
    rs = build_root_system(name)
    assert cartan_from_diagram(diagram(rs)) == rs.cartan


def test_extended_diagram_attaches_lowest_root():
    rs = build_root_system("E6")
    ext = extended_diagram(rs)
    assert len(ext.nodes) == 7
    new_edges = {e for e in ext.edges if rs.rank in e}
    # the lowest root bonds to exactly one node of E6, the branch node
    assert new_edges == {(1, 6)}


def test_bds_node_deletion_matches_perpendicularity():
    # deleting the lowest-root node and its neighbors is the same subset as
    # the simple roots perpendicular to the highest root
    for name in ["A3", "B4", "C3", "D5", "E6", "E7", "E8", "F4", "G2"]:
        rs, _, d = light_pipeline(name)
        ext = extended_diagram(rs)
        attached = {i for (i, j) in ext.edges if j == rs.rank}
        attached |= {j for (i, j) in ext.edges if i == rs.rank}
        kept = tuple(sorted(set(range(rs.rank)) - attached))
        assert kept == simple_roots_of_h(d)


def test_h_simple_roots_examples():
    _, _, d = light_pipeline("E6")
    kept = simple_roots_of_h(d)
    assert len(kept) == 5
    sub = diagram(d.cb.rs).sub(kept)
    comps = sub.components()
    assert len(comps) == 1
    assert str(classify_component(sub, comps[0])) == "A5"

    _, _, d = light_pipeline("A2")
    assert simple_roots_of_h(d) == ()

    _, _, d = light_pipeline("F4")
    kept = simple_roots_of_h(d)
    sub = diagram(d.cb.rs).sub(kept)
    assert str(classify_component(sub, sub.components()[0])) == "C3"


def test_isotropy_rows():
    r = report_for_type("C4")
    assert r.h_name == "Sp(3)" and r.pi1_quotient == "Z2"
    r = report_for_type("E8")
    assert r.h_name == "E7" and r.dim_m == 115
    r = report_for_type("A4")
    assert [str(c) for c in r.h_components] == ["A2"]
    assert r.center_dim == 1
    assert r.h_name == "S(U(3)xU(1))"
    r = report_for_type("B3")
    assert r.space_name == "SO(7)/(SO(3)xSp(1))"
    r = report_for_type("E7")
    assert r.h_name == "Spin(12)"
    assert r.wolf_name == "E7/Spin(12)Sp(1)"
    r = report_for_type("G2")
    assert r.space_name == "G2/Sp(1)" and r.wolf_name == "G2/SO(4)"


@pytest.mark.parametrize("name", ["A1", "A5", "B4", "C5", "D4", "E6", "F4", "G2"])
def test_rank_bookkeeping(name):
    r = report_for_type(name)
    assert sum(c.rank for c in r.h_components) + r.center_dim == r.lie_type.rank - 1
    assert r.dim_g - r.dim_h == r.dim_m == 4 * r.n + 3


def test_isotropy_report_requires_canonical_root():
    from sasakian.datum import build_complex_datum
    rs, cb, _ = light_pipeline("G2")
    other_long = next(b for b in rs.roots
                      if rs.norm2(b) == 2 and b != highest_root(rs))
    d = build_complex_datum(cb, other_long)
    with pytest.raises(ValueError):
        isotropy_report(d)


def test_classification_table_golden():
    got = render_markdown(classification_table(8))
    want = (GOLDEN / "classification_rank8.md").read_text()
    assert got == want


def test_classification_contains_all_nine_families():
    md = render_markdown(classification_table(8))
    for fragment in ["S^3", "SU(3)/S(U(1)xU(1))", "SO(7)/(SO(3)xSp(1))",
                     "G2/Sp(1)", "F4/Sp(3)", "E6/SU(6)", "E7/Spin(12)",
                     "E8/E7", "Z2 (lookup)"]:
        assert fragment in md
    assert len(FAMILY_TEMPLATES) == 9
    assert len(WOLF_TEMPLATES) == 8


def test_render_formats_agree_on_rows():
    reports = classification_table(4)
    md = render_markdown(reports)
    csv = render_csv(reports)
    js = render_json(reports)
    assert md.count("\n") == len(reports) + 2
    assert csv.count("\n") == len(reports) + 1
    assert "E8/E7" not in md  # rank cap respected
    assert '"rows"' in js


def test_table_rejects_tiny_rank():
    with pytest.raises(ValueError):
        classification_table(1)
