"""Fixture integrity and the table reproduction reports."""

import json
from fractions import Fraction

import pytest

from irrforge.errors import DegenerateDenominator, IrrforgeError
from irrforge.extremal import Interpretation
from irrforge.report import (
    FIXTURE_DIGEST,
    STAR_FIXTURE,
    TABLE1_FIXTURE,
    TABLE2_FIXTURE,
    assert_fixture_integrity,
    compute_L_values,
    fixture_digest,
    format_fraction,
    reproduce_table2_alpha_beta,
    reproduce_tables,
)


def test_fixture_digest_intact():
    assert fixture_digest() == FIXTURE_DIGEST
    assert_fixture_integrity()


def test_fixture_shapes():
    assert len(TABLE1_FIXTURE) == 8
    assert len(TABLE2_FIXTURE) == 10
    assert STAR_FIXTURE == "228"


def test_compute_l_values_main_row():
    l1, l2, l3 = compute_L_values((2, 4, 5, 7, 9), 120, 23)
    assert l1 == Fraction(5, 12)
    assert l2 == -80
    assert l3 == 1832


def test_compute_l_values_zero_minimum():
    l1, _l2, _l3 = compute_L_values((1, 2, 2, 2, 3), 0, 9)
    assert l1 == 0


def test_compute_l_values_degenerate():
    with pytest.raises(DegenerateDenominator):
        compute_L_values((1, 1, 1, 1, 1), 5, 4)


def test_alpha_beta_reproduction():
    rows = reproduce_table2_alpha_beta()
    assert len(rows) == 10
    assert all(r["alpha_match"] and r["beta_match"] for r in rows)
    by_degrees = {tuple(r["degrees"]): r for r in rows}
    assert by_degrees[(4, 5, 6, 7, 11)]["alpha"] == "4.5"
    assert by_degrees[(9, 10, 11, 15, 18)]["beta"] == "16.5"
    assert by_degrees[(20, 22, 23, 27, 42)]["alpha"] == "21"


def test_table1_report_runs_all_rows_and_flags():
    rep = reproduce_tables(1)
    assert rep.table == 1 and len(rep.rows) == 8
    assert rep.unreconciled_cells()
    ids = [f["id"] for f in rep.findings]
    assert "table1-columns-unreconciled" in ids
    assert "five-term-vs-spine-closed-form" in ids


def test_table1_five_term_divergence_reported():
    rep = reproduce_tables(1)
    finding = next(f for f in rep.findings if f["id"] == "five-term-vs-spine-closed-form")
    first = next(r for r in finding["rows"] if r["degrees"] == [2, 4, 5, 7, 9])
    assert first["five_term"] == 188 and first["min_found"] == 120


def test_table2_alpha_beta_match_extremal_unreconciled():
    rep = reproduce_tables(2)
    assert len(rep.rows) == 10
    for row in rep.rows:
        assert row.cell("alpha").match and row.cell("beta").match
        assert not row.cell("irr_max").match
        assert not row.cell("irr_min").match
        assert row.cell("irr_max").status == "unreconciled"


def test_table2_max_below_min_rows_flagged():
    rep = reproduce_tables(2)
    flagged = [r.degrees for r in rep.rows if "max < min in fixture" in r.notes]
    assert (4, 5, 6, 7, 11) in flagged
    assert (6, 6, 7, 10, 12) not in flagged


def test_star_finding_in_both_tables():
    for which in (1, 2):
        rep = reproduce_tables(which)
        star = next(f for f in rep.findings if f["id"] == "two-level-star-estimate")
        assert star["fixture"] == "228" and star["computed"] == "296"
        assert star["status"] == "unreconciled"


def test_realization_reading_not_realizable():
    rep = reproduce_tables(1, Interpretation.FULL_REALIZATIONS)
    for row in rep.rows:
        assert any("not realizable" in note for note in row.notes)
        assert all(c.ours is None for _, c in row.cells)


def test_reports_are_deterministic_json():
    a = reproduce_tables(2).to_json()
    b = reproduce_tables(2).to_json()
    assert a == b
    obj = json.loads(a)
    assert obj["table"] == 2 and len(obj["rows"]) == 10


def test_report_markdown():
    md = reproduce_tables(2).to_markdown()
    assert md.startswith("## Table 2")
    assert "4.5 = 4.5" in md


def test_format_fraction():
    assert format_fraction(Fraction(9, 2)) == "4.5"
    assert format_fraction(Fraction(21)) == "21"
    assert format_fraction(Fraction(27, 5)) == "5.4"
    assert "5/12" in format_fraction(Fraction(5, 12))


def test_reproduce_tables_rejects_other_ids():
    with pytest.raises(ValueError):
        reproduce_tables(3)


def test_checksum_guards_against_tampering(monkeypatch):
    import irrforge.report as report_mod

    monkeypatch.setattr(report_mod, "STAR_FIXTURE", "229")
    with pytest.raises(IrrforgeError):
        report_mod.assert_fixture_integrity()
