"""Golden root-table files: parsing and comparison against derived structure.

File format (read-only input):  UTF-8 text; ``#`` starts a comment; a section
starts with a header line ``[E6] name`` or ``[E7] name``; the following
nonempty lines are rows of n whitespace-separated entries, each an integer or
the wildcard ``*``.  Rows are written in diagram reading order (horizontal
arm, then the low node); ingestion permutes them to Bourbaki node order and
validates the permutation by requiring the ``e1`` cell to equal the highest
root of its system.

Comparison is strictly one-way: every derived object is computed before the
file is read, and a mismatching entry is reported (flagged) rather than
raised, so that a transcription typo in the data is distinguishable from a
structural failure.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .roots import Root, RootSystem, RootSystemType
from .structures import PairedBasis, RadicalDecomposition, HeisenbergDecomposition


class GoldenTableError(ValueError):
    """Malformed golden table file."""


# Diagram reading order -> Bourbaki node numbers.
_LAYOUT = {
    RootSystemType.E6: (6, 5, 4, 3, 1, 2),
    RootSystemType.E7: (7, 6, 5, 4, 3, 1, 2),
}

PATTERN_NAMES = ("W", "Wstar", "X", "Y", "Zu", "X1", "Y1")

PatternRow = tuple[int | None, ...]


@dataclass(frozen=True)
class GoldenTables:
    """Parsed pattern rows and explicit cells, in Bourbaki coordinates."""

    patterns: Mapping[RootSystemType, Mapping[str, tuple[PatternRow, ...]]]
    cells: Mapping[RootSystemType, Mapping[str, Root]]

    def pattern_roots(self, rs: RootSystem, name: str) -> tuple[Root, ...]:
        """All positive roots matching any row of the named pattern."""
        rows = self.patterns[rs.type][name]
        out = [
            r
            for r in rs.positive
            if any(all(v is None or r.coeffs[i] == v for i, v in enumerate(row)) for row in rows)
        ]
        return tuple(out)

    def cell(self, kind: RootSystemType, name: str) -> Root:
        return self.cells[kind][name]

    def cell_names(self, kind: RootSystemType) -> tuple[str, ...]:
        return tuple(self.cells[kind])


def packaged_golden_path() -> Path:
    """Location of the golden table file shipped with the package."""
    return Path(str(importlib.resources.files("e67lie").joinpath("data/golden_tables.txt")))


def parse_golden_file(path: str | Path) -> GoldenTables:
    text = Path(path).read_text(encoding="utf-8")
    return parse_golden_text(text)


def parse_golden_text(text: str) -> GoldenTables:
    patterns: dict[RootSystemType, dict[str, list[PatternRow]]] = {
        t: {} for t in RootSystemType
    }
    cells: dict[RootSystemType, dict[str, Root]] = {t: {} for t in RootSystemType}
    current: tuple[RootSystemType, str] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            close = line.find("]")
            if close < 0:
                raise GoldenTableError(f"line {lineno}: unterminated section header")
            kind_label = line[1:close].strip()
            name = line[close + 1 :].strip()
            try:
                kind = RootSystemType[kind_label]
            except KeyError:
                raise GoldenTableError(f"line {lineno}: unknown system {kind_label!r}")
            if not name:
                raise GoldenTableError(f"line {lineno}: section without a set name")
            current = (kind, name)
            continue
        if current is None:
            raise GoldenTableError(f"line {lineno}: row before any section header")
        kind, name = current
        layout = _LAYOUT[kind]
        tokens = line.split()
        if len(tokens) != len(layout):
            raise GoldenTableError(
                f"line {lineno}: expected {len(layout)} entries, got {len(tokens)}"
            )
        entries: list[int | None] = []
        for tok in tokens:
            if tok == "*":
                entries.append(None)
            else:
                try:
                    entries.append(int(tok))
                except ValueError:
                    raise GoldenTableError(f"line {lineno}: bad entry {tok!r}")
        row: list[int | None] = [None] * kind.rank
        for pos, node in enumerate(layout):
            row[node - 1] = entries[pos]
        if name in PATTERN_NAMES:
            patterns[kind].setdefault(name, []).append(tuple(row))
        else:
            if any(v is None for v in row):
                raise GoldenTableError(f"line {lineno}: wildcard in explicit cell {name}")
            if name in cells[kind]:
                raise GoldenTableError(f"line {lineno}: duplicate cell {name}")
            cells[kind][name] = Root(tuple(int(v) for v in row))  # type: ignore[arg-type]
    tables = GoldenTables(
        patterns={t: {n: tuple(rows) for n, rows in patterns[t].items()} for t in RootSystemType},
        cells={t: dict(cells[t]) for t in RootSystemType},
    )
    _validate_layout_anchor(tables)
    return tables


def _validate_layout_anchor(tables: GoldenTables) -> None:
    """The e1 cell must be the highest root; this pins the layout mapping."""
    expected = {
        RootSystemType.E6: Root((1, 2, 2, 3, 2, 1)),
        RootSystemType.E7: Root((2, 2, 3, 4, 3, 2, 1)),
    }
    for kind, cellmap in tables.cells.items():
        if not cellmap and not tables.patterns[kind]:
            continue
        got = cellmap.get("e1")
        if got is None:
            raise GoldenTableError(f"{kind.label}: missing the e1 anchor cell")
        if got != expected[kind]:
            raise GoldenTableError(
                f"{kind.label}: e1 cell {got.coeffs} is not the highest root; "
                "layout mapping rejected"
            )


# ---------------------------------------------------------------------------
# comparison against derived structure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TableComparison:
    name: str
    expected: str
    actual: str
    matched: bool


def _fmt_roots(roots: Iterable[Root]) -> str:
    items = sorted(roots, key=Root.sort_key)
    return "{" + ", ".join(str(r.coeffs) for r in items) + "}"


def compare_tables(
    rs: RootSystem,
    golden: GoldenTables,
    u_split: RadicalDecomposition,
    n3_split: HeisenbergDecomposition,
    basis: PairedBasis,
) -> list[TableComparison]:
    """Per-entry comparison of every golden pattern and cell with the
    independently derived sets; mismatches are reported, never raised."""
    out: list[TableComparison] = []
    derived_sets = {
        "W": set(n3_split.w_roots),
        "Wstar": set(n3_split.wstar_roots),
        "X": set(u_split.x_roots),
        "Y": set(u_split.y_roots),
        "Zu": set(u_split.zu_roots),
    }
    for name, derived in derived_sets.items():
        table_set = set(golden.pattern_roots(rs, name))
        out.append(
            TableComparison(
                name=f"pattern.{name}",
                expected=_fmt_roots(table_set),
                actual=_fmt_roots(derived),
                matched=table_set == derived,
            )
        )
    if rs.type is RootSystemType.E7:
        omega = set(u_split.omega_roots)
        x1 = set(golden.pattern_roots(rs, "X1"))
        y1 = set(golden.pattern_roots(rs, "Y1"))
        out.append(
            TableComparison(
                name="pattern.X1Y1.partition",
                expected="disjoint halves of size 16 covering X+Y",
                actual=f"|X1|={len(x1)}, |Y1|={len(y1)}, overlap={len(x1 & y1)}, "
                f"cover={'yes' if (x1 | y1) == omega else 'no'}",
                matched=(x1 | y1) == omega and not (x1 & y1) and len(x1) == len(y1) == 16,
            )
        )
    for i in sorted(basis.e, key=lambda i: (abs(i), -i)):
        name = f"e{i}"
        cell = golden.cells[rs.type].get(name)
        derived_root = basis.e[i].root
        out.append(
            TableComparison(
                name=f"cell.{name}",
                expected=str(cell.coeffs) if cell else "(missing)",
                actual=str(derived_root.coeffs),
                matched=cell == derived_root,
            )
        )
    for i in sorted(basis.f, key=lambda i: (abs(i), -i)):
        name = f"f{i}"
        cell = golden.cells[rs.type].get(name)
        derived_root = basis.f[i].root
        out.append(
            TableComparison(
                name=f"cell.{name}",
                expected=str(cell.coeffs) if cell else "(missing)",
                actual=str(derived_root.coeffs),
                matched=cell == derived_root,
            )
        )
    return out
