from __future__ import annotations

import pytest

from e67lie.golden import (
    GoldenTableError,
    compare_tables,
    packaged_golden_path,
    parse_golden_file,
    parse_golden_text,
)
from e67lie.roots import Root, RootSystemType


def test_packaged_file_parses(golden):
    assert set(golden.patterns[RootSystemType.E6]) == {"W", "Wstar", "X", "Y", "Zu"}
    assert set(golden.patterns[RootSystemType.E7]) == {
        "W", "Wstar", "X", "Y", "Zu", "X1", "Y1",
    }
    assert len(golden.cells[RootSystemType.E6]) == 14  # 8 e-cells + 6 f-cells
    assert len(golden.cells[RootSystemType.E7]) == 18  # 10 e-cells + 8 f-cells


def test_layout_mapping_anchored_on_highest_root(golden):
    assert golden.cell(RootSystemType.E6, "e1") == Root((1, 2, 2, 3, 2, 1))
    assert golden.cell(RootSystemType.E7, "e1") == Root((2, 2, 3, 4, 3, 2, 1))


def test_pattern_matching_zu(golden, e6ctx):
    """The E6 center pattern is exactly the c1 = c6 = 1 filter."""
    matched = set(golden.pattern_roots(e6ctx.rs, "Zu"))
    by_filter = {r for r in e6ctx.rs.positive if r.coeff(1) == 1 and r.coeff(6) == 1}
    assert matched == by_filter
    assert len(matched) == 8


def test_all_patterns_and_cells_match_derived(both_ctx, golden):
    for ctx in both_ctx.values():
        comps = compare_tables(ctx.rs, golden, ctx.u_split, ctx.n3_split, ctx.basis)
        assert comps, "no comparisons produced"
        mismatched = [c.name for c in comps if not c.matched]
        assert mismatched == []


def test_comment_and_blank_handling():
    text = """
    # leading comment
    [E6] e1
    1 2 3 2 1 2   # trailing comment
    """
    tables = parse_golden_text(text)
    assert tables.cell(RootSystemType.E6, "e1") == Root((1, 2, 2, 3, 2, 1))


def test_mismatching_cell_is_flagged_not_fatal(both_ctx, golden_path):
    """A corrupted explicit cell yields a mismatch report entry."""
    text = open(golden_path, encoding="utf-8").read()
    corrupted = text.replace("[E6] e2\n1 2 3 2 1 1", "[E6] e2\n1 1 1 1 1 1")
    tables = parse_golden_text(corrupted)
    ctx = both_ctx[RootSystemType.E6]
    comps = compare_tables(ctx.rs, tables, ctx.u_split, ctx.n3_split, ctx.basis)
    bad = [c for c in comps if not c.matched]
    assert [c.name for c in bad] == ["cell.e2"]


@pytest.mark.parametrize(
    "text,message",
    [
        ("1 2 3", "row before any section"),
        ("[E8] W\n1 2 3", "unknown system"),
        ("[E6]\n1 2 3 2 1 2", "without a set name"),
        ("[E6] e1\n1 2 3 2 1", "expected 6 entries"),
        ("[E6] e1\n1 2 3 2 1 x", "bad entry"),
        ("[E6] e1\n1 2 3 2 1 *", "wildcard in explicit cell"),
        ("[E6] e1\n1 2 3 2 1 2\n[E6] e1\n1 2 3 2 1 2", "duplicate cell"),
    ],
)
def test_malformed_files_rejected(text, message):
    with pytest.raises(GoldenTableError, match=message):
        parse_golden_text(text)


def test_wrong_anchor_rejected():
    with pytest.raises(GoldenTableError, match="highest root"):
        parse_golden_text("[E6] e1\n1 1 1 1 1 0")


def test_packaged_path_exists():
    assert packaged_golden_path().is_file()
    parse_golden_file(packaged_golden_path())
