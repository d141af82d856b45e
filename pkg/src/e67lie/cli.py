"""Command-line driver.

Grammar::

    e67lie <command> --type {e6|e7|both} [--golden PATH] [--format {text|json}] [--fast]

Commands:
    roots      root-system data (counts, Cartan matrix, highest root, roots)
    parabolic  the four named parabolics with dimensions and classes
    tower      cascade layers, orbit dimension, principal-series codimension
    verify     the full check battery including golden-table comparisons
    tables     golden-table comparisons only
    report     the full check battery without golden data

``verify`` and ``tables`` require ``--golden``.  Exit status: 0 when every
check passes, 1 when any check fails, 2 on usage or input errors.  Output is
deterministic; two runs on identical inputs emit identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence

from .chevalley import build_chevalley
from .golden import GoldenTableError, GoldenTables, compare_tables, parse_golden_file
from .parabolic import (
    NamedParabolic,
    heisenberg_tower,
    named_parabolic,
    principal_series_codim,
    rank3_orbit_dim,
)
from .roots import RootSystemType, build_root_system
from .verify import Check, VerificationReport, build_structures, verify_all

_COMMANDS = ("roots", "parabolic", "tower", "verify", "tables", "report")
_NEEDS_GOLDEN = ("verify", "tables")


@dataclass(frozen=True)
class CliConfig:
    command: str
    type_selector: str  # e6 | e7 | both
    output_format: str  # text | json
    golden_path: str | None
    fast_mode: bool

    @property
    def kinds(self) -> tuple[RootSystemType, ...]:
        if self.type_selector == "e6":
            return (RootSystemType.E6,)
        if self.type_selector == "e7":
            return (RootSystemType.E7,)
        return (RootSystemType.E6, RootSystemType.E7)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="e67lie",
        description="Exact structure toolkit and verifier for split E6/E7.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--type", required=True, choices=["e6", "e7", "both"])
        p.add_argument("--golden", default=None, metavar="PATH")
        p.add_argument("--format", default="text", choices=["text", "json"])
        p.add_argument("--fast", action="store_true")
    return parser


def parse_config(argv: Sequence[str]) -> CliConfig:
    ns = _build_parser().parse_args(list(argv))
    return CliConfig(
        command=ns.command,
        type_selector=ns.type,
        output_format=ns.format,
        golden_path=ns.golden,
        fast_mode=ns.fast,
    )


# ---------------------------------------------------------------------------
# command payloads
# ---------------------------------------------------------------------------


def _roots_payload(kind: RootSystemType) -> dict:
    rs = build_root_system(kind)
    return {
        "type": kind.label,
        "rank": rs.rank,
        "count": len(rs.all_roots),
        "positive_count": rs.num_positive,
        "cartan": [list(row) for row in rs.cartan],
        "simple": [list(r.coeffs) for r in rs.simple],
        "highest": list(rs.highest.coeffs),
        "positive": [list(r.coeffs) for r in rs.positive],
        "roots": [list(r.coeffs) for r in rs.all_roots],
    }


def _parabolic_payload(kind: RootSystemType) -> dict:
    rs = build_root_system(kind)
    alg = build_chevalley(rs)
    entries = []
    for name in NamedParabolic:
        dec = named_parabolic(alg, name)
        entries.append(
            {
                "name": name.value,
                "levi_keep": sorted(dec.levi_keep),
                "levi_components": sorted(dec.levi.component_labels),
                "nilradical_dim": dec.nilradical_dim,
                "nilpotency_class": dec.nilpotency_class,
                "center_dim": dec.center_dim,
                "abelian": dec.is_abelian,
            }
        )
    return {"type": kind.label, "parabolics": entries}


def _tower_payload(kind: RootSystemType) -> dict:
    rs = build_root_system(kind)
    alg = build_chevalley(rs)
    tower = heisenberg_tower(rs, alg)
    codim = principal_series_codim(rs, alg, tower=tower)
    return {
        "type": kind.label,
        "betas": [list(b.coeffs) for b in tower.betas],
        "layer_dims_cascade": list(tower.layer_dims),
        "layer_dims_tower_order": list(reversed(tower.layer_dims)),
        "residual_nodes": list(tower.residual.simple_nodes()),
        "rank3_orbit_dim": rank3_orbit_dim(tower),
        "principal_series_codim": codim.codim,
        "codim_inequality_holds": codim.inequality_holds,
    }


def _tables_report(kind: RootSystemType, golden: GoldenTables) -> VerificationReport:
    ctx = build_structures(kind)
    report = VerificationReport(type_label=kind.label)
    for cmpres in compare_tables(ctx.rs, golden, ctx.u_split, ctx.n3_split, ctx.basis):
        status = "pass" if cmpres.matched else "flagged"
        report.checks.append(
            Check(
                name=f"table.{cmpres.name}",
                anchor=f"tables.{cmpres.name}",
                expected=cmpres.expected,
                actual=cmpres.actual,
                status=status,
            )
        )
    return report


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _emit_json(objs: list[dict], single: bool, out) -> None:
    payload = objs[0] if single and len(objs) == 1 else objs
    out.write(json.dumps(payload, separators=(",", ":"), sort_keys=False))
    out.write("\n")


def _emit_payload_text(objs: list[dict], out) -> None:
    for obj in objs:
        out.write(f"== {obj['type']} ==\n")
        for key, val in obj.items():
            if key == "type":
                continue
            out.write(f"{key}: {json.dumps(val)}\n")


def emit_report(reports: list[VerificationReport], fmt: str, out) -> None:
    """Serialize one report per system; JSON uses the report schema."""
    if fmt == "json":
        objs = [r.to_obj() for r in reports]
        payload = objs[0] if len(objs) == 1 else objs
        out.write(json.dumps(payload, separators=(",", ":"), sort_keys=False))
        out.write("\n")
    else:
        for r in reports:
            out.write(r.to_text())
            out.write("\n")


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # argparse already printed the usage message
        return 2 if exc.code not in (0, None) else 0

    golden: GoldenTables | None = None
    if cfg.command in _NEEDS_GOLDEN and cfg.golden_path is None:
        err.write(
            "error: --golden PATH is required for this command\n"
            "usage: e67lie <command> --type {e6|e7|both} [--golden PATH]"
            " [--format {text|json}] [--fast]\n"
        )
        return 2
    if cfg.golden_path is not None:
        try:
            golden = parse_golden_file(cfg.golden_path)
        except (OSError, GoldenTableError) as exc:
            err.write(f"error: cannot load golden tables: {exc}\n")
            return 2

    try:
        if cfg.command == "roots":
            objs = [_roots_payload(k) for k in cfg.kinds]
            if cfg.output_format == "json":
                _emit_json(objs, single=True, out=out)
            else:
                _emit_payload_text(objs, out)
            return 0
        if cfg.command == "parabolic":
            objs = [_parabolic_payload(k) for k in cfg.kinds]
            if cfg.output_format == "json":
                _emit_json(objs, single=True, out=out)
            else:
                _emit_payload_text(objs, out)
            return 0
        if cfg.command == "tower":
            objs = [_tower_payload(k) for k in cfg.kinds]
            if cfg.output_format == "json":
                _emit_json(objs, single=True, out=out)
            else:
                _emit_payload_text(objs, out)
            return 0
        if cfg.command == "tables":
            assert golden is not None
            reports = [_tables_report(k, golden) for k in cfg.kinds]
        elif cfg.command == "verify":
            assert golden is not None
            reports = [verify_all(k, golden=golden, fast=cfg.fast_mode) for k in cfg.kinds]
        else:  # report
            reports = [verify_all(k, golden=golden, fast=cfg.fast_mode) for k in cfg.kinds]
    except Exception as exc:
        err.write(f"error: {exc}\n")
        return 2
    emit_report(reports, cfg.output_format, out)
    return 0 if all(r.fail_count == 0 for r in reports) else 1


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
