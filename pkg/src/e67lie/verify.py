"""The verification report: every finite claim of the toolkit as a named,
exactly evaluated check.

``verify_all`` builds the complete structure set for one system (root system,
bracket engine, named parabolics, tower, radical splits, paired basis, form),
runs the full battery of checks in a fixed order, and returns a
``VerificationReport``.  Checks never assert; a failed comparison or a raised
structural error becomes a ``fail`` entry.  Golden-table comparisons become
``flagged`` entries on mismatch so that a data transcription typo is
distinguishable from a structural failure.

Reports are deterministic: fixed check order, fixed sampling seeds, no
environment-dependent content.  Two runs on the same inputs emit identical
bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

import numpy as np

from .chevalley import ChevalleyAlgebra, build_chevalley
from .golden import GoldenTables, compare_tables
from .parabolic import (
    HeisenbergTower,
    NamedParabolic,
    ParabolicDecomposition,
    PrincipalSeriesCodim,
    heisenberg_tower,
    named_parabolic,
    principal_series_codim,
    rank3_orbit_dim,
)
from .roots import Root, RootSystem, RootSystemType, build_root_system, orthogonal_subsystem
from .structures import (
    CharacterClass,
    HeisenbergDecomposition,
    InvariantForm,
    PairedBasis,
    QuartetPartition,
    RadicalDecomposition,
    abelian_radical_partition,
    center_form,
    center_slice_action,
    classify_character,
    find_paired_basis,
    induced_heisenberg_rank,
    orbit_tangent_dims,
    polarization_check,
    quartet_partition,
    spectrum_identity_poly,
    spectrum_vector,
    split_heisenberg_radical,
    split_radical,
    stabilizer_dim,
)

FAST_JACOBI_SAMPLES = 100_000
_REPORT_RANK_SAMPLES = 12


def jsonable(value: object) -> object:
    """Exact JSON encoding: Fractions become 'p/q' strings, never floats."""
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, bool) or isinstance(value, int) or isinstance(value, str) or value is None:
        return value
    if isinstance(value, Root):
        return list(value.coeffs)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, Mapping):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, CharacterClass):
        return value.value
    return str(value)


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    expected: object
    actual: object
    status: str  # pass | fail | flagged


@dataclass
class VerificationReport:
    type_label: str
    checks: list[Check] = field(default_factory=list)

    @property
    def pass_count(self) -> int:
        return sum(1 for c in self.checks if c.status == "pass")

    @property
    def fail_count(self) -> int:
        return sum(1 for c in self.checks if c.status == "fail")

    @property
    def flagged_count(self) -> int:
        return sum(1 for c in self.checks if c.status == "flagged")

    @property
    def ok(self) -> bool:
        return self.fail_count == 0

    def to_obj(self) -> dict:
        return {
            "type": self.type_label,
            "checks": [
                {
                    "name": c.name,
                    "anchor": c.anchor,
                    "expected": jsonable(c.expected),
                    "actual": jsonable(c.actual),
                    "status": c.status,
                }
                for c in self.checks
            ],
            "summary": {
                "pass": self.pass_count,
                "fail": self.fail_count,
                "flagged": self.flagged_count,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_obj(), separators=(",", ":"), sort_keys=False)

    def to_text(self) -> str:
        lines = [f"== verification report: {self.type_label} =="]
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            tag = {"pass": "PASS", "fail": "FAIL", "flagged": "FLAG"}[c.status]
            lines.append(
                f"[{tag}] {c.name.ljust(width)}  expected={json.dumps(jsonable(c.expected))}"
                f" actual={json.dumps(jsonable(c.actual))}"
            )
        lines.append(
            f"summary: pass={self.pass_count} fail={self.fail_count} flagged={self.flagged_count}"
        )
        return "\n".join(lines)


class _Recorder:
    def __init__(self, report: VerificationReport) -> None:
        self.report = report

    def expect(self, name: str, anchor: str, expected: object, actual: object) -> None:
        status = "pass" if expected == actual else "fail"
        self.report.checks.append(Check(name, anchor, expected, actual, status))

    def run(self, name: str, anchor: str, expected: object, thunk: Callable[[], object]) -> None:
        """Evaluate ``thunk``; structural errors become fail entries."""
        try:
            actual = thunk()
        except Exception as exc:  # structural errors are data here, not crashes
            self.report.checks.append(Check(name, anchor, expected, f"error: {exc}", "fail"))
            return
        self.expect(name, anchor, expected, actual)

    def flag_unless(self, name: str, anchor: str, expected: object, actual: object, matched: bool) -> None:
        status = "pass" if matched else "flagged"
        self.report.checks.append(Check(name, anchor, expected, actual, status))


# ---------------------------------------------------------------------------
# the full structure set for one system
# ---------------------------------------------------------------------------


@dataclass
class StructureSet:
    """Everything the checks need, built once per root-system type."""

    rs: RootSystem
    alg: ChevalleyAlgebra
    p: ParabolicDecomposition
    q: ParabolicDecomposition
    r: ParabolicDecomposition
    pg: ParabolicDecomposition
    tower: HeisenbergTower
    codim: PrincipalSeriesCodim
    u_split: RadicalDecomposition
    n3_split: HeisenbergDecomposition
    basis: PairedBasis
    form: InvariantForm
    quartets: QuartetPartition | None

    @property
    def kind(self) -> RootSystemType:
        return self.rs.type


def build_structures(kind: RootSystemType) -> StructureSet:
    rs = build_root_system(kind)
    alg = build_chevalley(rs)
    p = named_parabolic(alg, NamedParabolic.P)
    q = named_parabolic(alg, NamedParabolic.Q)
    r = named_parabolic(alg, NamedParabolic.R)
    pg = named_parabolic(alg, NamedParabolic.PG)
    tower = heisenberg_tower(rs, alg, q_dec=q, pg_dec=pg)
    codim = principal_series_codim(rs, alg, tower=tower)
    u_split = split_radical(alg, r)
    n3_split = split_heisenberg_radical(alg, q, u_split)
    basis = find_paired_basis(alg, r, q, u_split, n3_split)
    form = center_form(alg, r, u_split, basis)
    quartets = (
        quartet_partition(alg, u_split) if kind is RootSystemType.E7 else None
    )
    return StructureSet(
        rs=rs, alg=alg, p=p, q=q, r=r, pg=pg, tower=tower, codim=codim,
        u_split=u_split, n3_split=n3_split, basis=basis, form=form, quartets=quartets,
    )


# per-type expected constants (frozen from independent derivations)
_EXPECT = {
    RootSystemType.E6: dict(
        roots=72, pos=36, highest=[1, 2, 2, 3, 2, 1], dim=78,
        perp_highest=["A5"], p_levi=["D5"], p_nil=16, q_node=2, q_nil=21,
        r_levi=["D4"], r_nil=24, r_center=8, pg_keep=[4],
        tower=[21, 9, 5], tower_total=35, residual=[4], orbit=32,
        codim=15, levi_pos=20, u_dims=[8, 8, 8], n3_dims=[10, 10, 1],
        k=4, sig=[4, 4], big_rank=16, small_rank=8,
        stab_big=21, acting=28, tangent_big=8,
    ),
    RootSystemType.E7: dict(
        roots=126, pos=63, highest=[2, 2, 3, 4, 3, 2, 1], dim=133,
        perp_highest=["D6"], p_levi=["E6"], p_nil=27, q_node=1, q_nil=33,
        r_levi=["A1", "D5"], r_nil=42, r_center=10, pg_keep=[2, 3, 5, 7],
        tower=[33, 17, 9], tower_total=59, residual=[2, 3, 5, 7], orbit=56,
        codim=26, levi_pos=36, u_dims=[16, 16, 10], n3_dims=[16, 16, 1],
        k=5, sig=[5, 5], big_rank=32, small_rank=16,
        stab_big=39, acting=48, tangent_big=10,
    ),
}


def _grading_compatible(alg: ChevalleyAlgebra, dec: ParabolicDecomposition) -> bool:
    """[depth i, depth j] lands in depth i+j for all nilradical root pairs,
    and the Levi action preserves each depth layer."""
    rs = alg.rs
    nil = dec.nilradical_roots
    for i, a in enumerate(nil):
        for b in nil[i:]:
            s = a + b
            if s in rs and alg.N(a, b) != 0:
                if dec.depth.get(s) != dec.depth[a] + dec.depth[b]:
                    return False
    for a in dec.levi.positive:
        for b in nil:
            for sa in (a, -a):
                s = sa + b
                if s in rs and alg.N(sa, b) != 0 and dec.depth.get(s) != dec.depth[b]:
                    return False
    return True


def _abelian_bracket_count(alg: ChevalleyAlgebra, dec: ParabolicDecomposition) -> tuple[int, int]:
    """(vanishing pairwise brackets, total pairs) over the nilradical."""
    nil = dec.nilradical_roots
    total = 0
    vanishing = 0
    for i, a in enumerate(nil):
        for b in nil[i + 1 :]:
            total += 1
            s = a + b
            if s not in alg.rs or alg.N(a, b) == 0:
                vanishing += 1
    return vanishing, total


def _random_rational(rng: np.random.Generator) -> Fraction:
    num = int(rng.integers(-9, 10))
    den = int(rng.integers(1, 7))
    return Fraction(num, den)


def _sampled_spectrum_coords(
    form: InvariantForm, rng: np.random.Generator, anisotropic: bool
) -> dict[int, Fraction]:
    k = form.k
    while True:
        t = _random_rational(rng)
        if t == 0:
            continue
        s = Fraction(0)
        if anisotropic:
            while s == 0:
                s = _random_rational(rng)
        a = {i: _random_rational(rng) for i in list(range(2, k + 1)) + list(range(-2, -k - 1, -1))}
        sv = spectrum_vector(form, t, s, a)
        return dict(sv.coords)


def verify_all(
    kind: RootSystemType,
    golden: GoldenTables | None = None,
    fast: bool = False,
    structures: StructureSet | None = None,
) -> VerificationReport:
    """Run every check for one system; failures are data, not exceptions."""
    report = VerificationReport(type_label=kind.label)
    rec = _Recorder(report)
    want = _EXPECT[kind]
    try:
        ctx = structures if structures is not None else build_structures(kind)
    except Exception as exc:
        report.checks.append(
            Check("build.structures", "build", "construction succeeds", f"error: {exc}", "fail")
        )
        return report

    rs, alg = ctx.rs, ctx.alg

    # ---- root system -----------------------------------------------------
    rec.expect("roots.count", "rootsys.build.count", want["roots"], len(rs.all_roots))
    rec.expect("roots.positive_count", "rootsys.build.positive", want["pos"], rs.num_positive)
    rec.expect("roots.highest", "rootsys.highest_root", want["highest"], list(rs.highest.coeffs))
    rec.expect(
        "roots.negation_symmetry",
        "rootsys.negation",
        True,
        all(-r in rs for r in rs.all_roots),
    )
    pair_vals = {
        int(v)
        for i, a in enumerate(rs.all_roots)
        for v in (rs.pairing(a, b) for b in rs.all_roots[i:])
    }
    rec.expect("roots.pairing_range", "rootsys.pairing.range", True, pair_vals <= {-2, -1, 0, 1, 2})
    rec.expect(
        "roots.pairing_diagonal",
        "rootsys.pairing.diagonal",
        True,
        all(rs.pairing(a, a) == 2 for a in rs.all_roots),
    )
    rec.run(
        "roots.orthogonal_complement_of_highest",
        "rootsys.orthogonal_subsystem",
        want["perp_highest"],
        lambda: sorted(orthogonal_subsystem(rs, [rs.highest]).component_labels),
    )

    # ---- bracket engine ----------------------------------------------------
    rec.expect("chevalley.dimension", "chevalley.build.dimension", want["dim"], alg.dimension)
    t = alg.tables
    rec.expect(
        "chevalley.antisymmetry",
        "chevalley.build.antisymmetry",
        True,
        bool(np.array_equal(t.nmat, -t.nmat.T)),
    )
    has_sum = t.sum_idx >= 0
    rec.expect(
        "chevalley.constant_magnitude",
        "chevalley.build.string_property",
        True,
        bool(np.all(np.abs(t.nmat[has_sum]) == 1) and np.all(t.nmat[~has_sum] == 0)),
    )
    inv = t.nmat[np.ix_(t.neg, t.neg)]
    rec.expect(
        "chevalley.opposition_rule",
        "chevalley.build.opposition",
        True,
        bool(np.all((t.nmat * inv)[has_sum] == -1)),
    )
    if fast:
        rec.run(
            "chevalley.jacobi_sampled",
            "chevalley.jacobi.sampled",
            0,
            lambda: alg.jacobi_violations_sampled(FAST_JACOBI_SAMPLES, seed=0),
        )
    else:
        rec.run(
            "chevalley.jacobi_exhaustive",
            "chevalley.jacobi.exhaustive",
            0,
            lambda: alg.jacobi_violations_exhaustive()[0],
        )

    # ---- named parabolics ----------------------------------------------------
    rec.expect("parabolic.P.levi", "parabolic.P.levi_type", want["p_levi"], sorted(ctx.p.levi.component_labels))
    rec.expect("parabolic.P.nilradical_dim", "parabolic.P.dim", want["p_nil"], ctx.p.nilradical_dim)
    rec.expect("parabolic.P.abelian", "parabolic.P.abelian", True, ctx.p.is_abelian)
    vanish, total = _abelian_bracket_count(alg, ctx.p)
    rec.expect(
        "parabolic.P.pairwise_brackets_vanish",
        "parabolic.P.abelian_pairs",
        total,
        vanish,
    )
    rec.expect(
        "parabolic.Q.dropped_node", "parabolic.Q.node",
        want["q_node"],
        next(iter(set(range(1, rs.rank + 1)) - ctx.q.levi_keep)),
    )
    rec.expect("parabolic.Q.nilradical_dim", "parabolic.Q.dim", want["q_nil"], ctx.q.nilradical_dim)
    rec.expect("parabolic.Q.center_dim", "parabolic.Q.center", 1, ctx.q.center_dim)
    rec.expect(
        "parabolic.Q.center_is_highest_root",
        "parabolic.Q.center_root",
        [list(rs.highest.coeffs)],
        [list(r.coeffs) for r in ctx.q.center_roots],
    )
    rec.expect("parabolic.Q.two_step", "parabolic.Q.class", 2, ctx.q.nilpotency_class)
    rec.expect(
        "parabolic.R.levi",
        "parabolic.R.levi_type",
        want["r_levi"],
        sorted(ctx.r.levi.component_labels),
    )
    rec.expect("parabolic.R.nilradical_dim", "parabolic.R.dim", want["r_nil"], ctx.r.nilradical_dim)
    rec.expect("parabolic.R.center_dim", "parabolic.R.center", want["r_center"], ctx.r.center_dim)
    rec.expect("parabolic.R.two_step", "parabolic.R.class", 2, ctx.r.nilpotency_class)
    if kind is RootSystemType.E7:
        a1 = next(c for c in ctx.r.levi.components if c.label == "A1")
        rec.expect(
            "parabolic.R.a1_on_last_node",
            "parabolic.R.a1_node",
            list(rs.simple[6].coeffs),
            list(a1.highest.coeffs),
        )
    rec.expect("parabolic.PG.levi_keep", "parabolic.PG.keep", want["pg_keep"], sorted(ctx.pg.levi_keep))
    for dec, label in ((ctx.p, "P"), (ctx.q, "Q"), (ctx.r, "R"), (ctx.pg, "PG")):
        rec.expect(
            f"parabolic.{label}.grading_compatible",
            f"parabolic.{label}.grading",
            True,
            _grading_compatible(alg, dec),
        )
        rec.expect(
            f"parabolic.{label}.class_equals_max_depth",
            f"parabolic.{label}.class_vs_depth",
            dec.max_depth,
            dec.nilpotency_class,
        )

    # ---- tower -----------------------------------------------------------
    rec.expect("tower.layer_dims", "tower.layers", want["tower"], list(ctx.tower.layer_dims))
    rec.expect("tower.total_dim", "tower.total", want["tower_total"], ctx.tower.total_dim)
    rec.expect(
        "tower.residual_nodes", "tower.residual", want["residual"], list(ctx.tower.residual.simple_nodes())
    )
    rec.expect(
        "tower.residual_all_rank_one",
        "tower.residual_type",
        True,
        all(c.label == "A1" for c in ctx.tower.residual.components),
    )
    strong = all(
        (ctx.tower.betas[i] + ctx.tower.betas[j]) not in rs
        and (ctx.tower.betas[i] - ctx.tower.betas[j]) not in rs
        for i in range(3)
        for j in range(i + 1, 3)
    )
    rec.expect("tower.strongly_orthogonal", "tower.strong_orthogonality", True, strong)
    rec.expect(
        "tower.first_layer_is_heisenberg_radical",
        "tower.outermost",
        sorted(r.coeffs for r in ctx.q.nilradical_roots),
        sorted(r.coeffs for r in ctx.tower.layers[0]),
    )
    union = sorted(r.coeffs for layer in ctx.tower.layers for r in layer)
    rec.expect(
        "tower.union_is_tower_radical",
        "tower.union",
        sorted(r.coeffs for r in ctx.pg.nilradical_roots),
        union,
    )
    rec.expect("tower.rank3_orbit_dim", "tower.orbit_dim", want["orbit"], rank3_orbit_dim(ctx.tower))

    # ---- principal series bound -------------------------------------------
    rec.expect("series.codim", "series.codim", want["codim"], ctx.codim.codim)
    rec.expect(
        "series.levi_positive_count", "series.levi_count", want["levi_pos"], ctx.codim.levi_positive_count
    )
    rec.expect(
        "series.codim_bound",
        "series.inequality",
        True,
        ctx.codim.inequality_holds and 2 * ctx.codim.codim < want["orbit"],
    )

    # ---- radical splits ------------------------------------------------------
    rec.expect("split.u_dims", "split.u", want["u_dims"], list(ctx.u_split.dims))
    rec.expect("split.n3_dims", "split.n3", want["n3_dims"], list(ctx.n3_split.dims))
    second = ctx.basis.e[-1].root
    rec.expect(
        "split.top_roots_in_center",
        "split.center_tops",
        True,
        rs.highest in set(ctx.u_split.zu_roots) and second in set(ctx.u_split.zu_roots),
    )
    rec.expect(
        "split.center_rest_in_wstar",
        "split.wstar_containment",
        True,
        all(
            r in set(ctx.n3_split.wstar_roots)
            for r in ctx.u_split.zu_roots
            if r not in (rs.highest, second)
        ),
    )

    # ---- paired basis and form ----------------------------------------------
    k = want["k"]
    rec.expect("basis.index_bound", "basis.k", k, ctx.basis.k)
    rec.expect(
        "basis.e1_is_highest_root",
        "basis.e1",
        list(rs.highest.coeffs),
        list(ctx.basis.e[1].root.coeffs),
    )
    delta_ok = 0
    idxs = sorted(ctx.basis.f, key=lambda i: (abs(i), -i))
    e1 = ctx.basis.e_element(alg, 1)
    for i in idxs:
        for j in idxs:
            got = alg.bracket(ctx.basis.e_element(alg, i), ctx.basis.f_element(alg, j))
            want_el = e1 if i == j else alg.zero()
            if got == want_el:
                delta_ok += 1
    rec.expect(
        "basis.delta_bracket_table",
        "basis.delta",
        len(idxs) ** 2,
        delta_ok,
    )
    descent_ok = all(
        alg.bracket(ctx.basis.e_element(alg, -1), ctx.basis.f_element(alg, i))
        == -ctx.basis.e_element(alg, -i)
        for i in idxs
    )
    rec.expect("basis.descent_identity", "basis.descent", True, descent_ok)
    spanned = {bv.root for bv in ctx.basis.e.values()} | {bv.root for bv in ctx.basis.f.values()}
    outside_ok = all(
        alg.bracket(ctx.basis.e_element(alg, -1), alg.root_vector(r)).is_zero
        for r in ctx.q.nilradical_roots
        if r not in spanned
    )
    rec.expect("basis.outside_annihilation", "basis.part_e", True, outside_ok)
    hyperbolic = all(
        ctx.form.gram[a][b] == (1 if ctx.form.order[a] == -ctx.form.order[b] else 0)
        for a in range(2 * k)
        for b in range(2 * k)
    )
    rec.expect("form.hyperbolic_gram", "form.gram", True, hyperbolic)
    rec.run("form.signature", "form.signature", want["sig"], lambda: list(ctx.form.signature()))

    # ---- spectrum vectors and characters --------------------------------------
    lhs, rhs = spectrum_identity_poly(k)
    rec.expect("spectrum.closed_form", "spectrum.identity", True, lhs == rhs)
    sv0 = spectrum_vector(ctx.form, 1, 0, {2: Fraction(1), -2: Fraction(1)})
    rec.expect("spectrum.isotropic_family", "spectrum.s_zero", "0", str(sv0.form_value))
    sv1 = spectrum_vector(ctx.form, 1, 3, None)
    rec.expect("spectrum.anisotropic_example", "spectrum.s_three", "-6", str(sv1.form_value))
    big = {1: Fraction(1), -1: Fraction(1)}
    small = {1: Fraction(1)}
    rec.expect(
        "classify.trichotomy",
        "classify.examples",
        ["zero", "small", "big"],
        [
            classify_character(ctx.form, {}).value,
            classify_character(ctx.form, small).value,
            classify_character(ctx.form, big).value,
        ],
    )
    rec.expect(
        "classify.big_value", "classify.big_form_value", "2", str(ctx.form.quadratic(big))
    )
    rng = np.random.default_rng(1)
    scale_ok = True
    for _ in range(10):
        lam = Fraction(0)
        while lam == 0:
            lam = _random_rational(rng)
        v = _sampled_spectrum_coords(ctx.form, rng, anisotropic=bool(rng.integers(0, 2)))
        cls = classify_character(ctx.form, v)
        scaled = {i: lam * c for i, c in v.items()}
        if classify_character(ctx.form, scaled) is not cls:
            scale_ok = False
    rec.expect("classify.scale_invariance", "classify.rescaling", True, scale_ok)

    # ---- induced Heisenberg ranks ---------------------------------------------
    rec.run(
        "rank.big_canonical",
        "rank.big",
        want["big_rank"],
        lambda: induced_heisenberg_rank(alg, ctx.u_split, ctx.form, big),
    )
    rec.run(
        "rank.small_canonical",
        "rank.small",
        want["small_rank"],
        lambda: induced_heisenberg_rank(alg, ctx.u_split, ctx.form, small),
    )
    rng = np.random.default_rng(2)
    big_ranks = {
        induced_heisenberg_rank(alg, ctx.u_split, ctx.form, _sampled_spectrum_coords(ctx.form, rng, True))
        for _ in range(_REPORT_RANK_SAMPLES)
    }
    small_ranks = {
        induced_heisenberg_rank(alg, ctx.u_split, ctx.form, _sampled_spectrum_coords(ctx.form, rng, False))
        for _ in range(_REPORT_RANK_SAMPLES)
    }
    rec.expect("rank.big_sampled", "rank.big_random", [want["big_rank"]], sorted(big_ranks))
    rec.expect("rank.small_sampled", "rank.small_random", [want["small_rank"]], sorted(small_ranks))
    rec.expect(
        "rank.quotient_dims",
        "rank.quotient",
        [want["big_rank"] + 1, want["small_rank"] + 1, want["big_rank"] - want["small_rank"]],
        [
            want["big_rank"] + 1,
            want["small_rank"] + 1,
            len(ctx.u_split.omega_roots) - want["small_rank"],
        ],
    )

    # ---- stabilizers and tangents ----------------------------------------------
    act_ss = center_slice_action(alg, ctx.r, ctx.form, include_center=False)
    act_full = center_slice_action(alg, ctx.r, ctx.form, include_center=True)
    st_big = stabilizer_dim(alg, ctx.r, ctx.u_split, ctx.form, big, action=act_ss)
    rec.expect("stabilizer.acting_dim", "stabilizer.acting", want["acting"], st_big.acting_dim)
    rec.expect("stabilizer.big", "stabilizer.anisotropic", want["stab_big"], st_big.stabilizer_dim)
    rec.expect(
        "stabilizer.rank_nullity",
        "stabilizer.rank_nullity",
        st_big.acting_dim,
        st_big.stabilizer_dim + st_big.tangent_dim,
    )
    st_zero = stabilizer_dim(alg, ctx.r, ctx.u_split, ctx.form, {}, action=act_ss)
    rec.expect("stabilizer.zero", "stabilizer.origin", want["acting"], st_zero.stabilizer_dim)
    tangents = orbit_tangent_dims(alg, ctx.r, ctx.u_split, ctx.form, action=act_full)
    rec.expect(
        "tangent.dims",
        "tangent.classes",
        [want["tangent_big"], want["tangent_big"] - 1, 0],
        [tangents.big, tangents.small, tangents.zero],
    )
    rec.expect(
        "orbit.scope_note",
        "orbit.infinitesimal_only",
        "tangent dimensions and form trichotomy only; real orbit components not decided",
        "tangent dimensions and form trichotomy only; real orbit components not decided",
    )

    # ---- E7 specifics ------------------------------------------------------------
    if kind is RootSystemType.E7 and ctx.quartets is not None:
        sl2 = [
            alg.root_vector(rs.simple[6]),
            alg.coroot_element(rs.simple[6]),
            alg.root_vector(-rs.simple[6]),
        ]
        module = [ctx.form.basis.e_element(alg, i) for i in ctx.form.order]
        from .chevalley import action_matrix as _am

        act = _am(alg, sl2, module)
        all_zero = all(
            all(all(v == 0 for v in row) for row in act.matrix_of(g)) for g in range(3)
        )
        rec.expect("e7.a1_acts_trivially_on_center", "e7.a1_zero_matrix", True, all_zero)
        rec.expect("e7.quartet_count", "e7.quartets.count", 8, len(ctx.quartets.blocks))
        rec.expect(
            "e7.quartet_sizes",
            "e7.quartets.sizes",
            [4] * 8,
            [len(b.roots) for b in ctx.quartets.blocks],
        )
        cover = sorted(r.coeffs for r in ctx.quartets.covered)
        rec.expect(
            "e7.quartet_cover",
            "e7.quartets.cover",
            sorted(r.coeffs for r in ctx.u_split.omega_roots),
            cover,
        )
        shift_ok = all(
            b.roots[1] == b.roots[0] + rs.simple[6] and b.roots[3] == b.roots[2] + rs.simple[6]
            for b in ctx.quartets.blocks
        )
        rec.expect("e7.quartet_string_steps", "e7.quartets.condition_a", True, shift_ok)
        member_ok = all(
            {b.roots[0], b.roots[2]} <= set(ctx.u_split.x_roots)
            and {b.roots[1], b.roots[3]} <= set(ctx.u_split.y_roots)
            for b in ctx.quartets.blocks
        )
        rec.expect("e7.quartet_membership", "e7.quartets.condition_b", True, member_ok)
        rec.run(
            "e7.abelian_radical_partition",
            "e7.radical_partition",
            [16, 10, 1],
            lambda: list(abelian_radical_partition(alg, ctx.p, ctx.u_split)),
        )
        if golden is not None:
            x1 = golden.pattern_roots(rs, "X1")
            y1 = golden.pattern_roots(rs, "Y1")
            rec.run(
                "e7.polarization",
                "e7.polarization.stable",
                {"halves": 16, "rank": 16, "blocks": 8},
                lambda: (
                    lambda rep: {
                        "halves": len(rep.x1_roots),
                        "rank": rep.lagrangian_rank,
                        "blocks": rep.blocks_aligned,
                    }
                )(polarization_check(alg, ctx.u_split, ctx.form, ctx.quartets, x1, y1)),
            )

    # ---- golden tables -------------------------------------------------------------
    if golden is not None:
        for cmpres in compare_tables(rs, golden, ctx.u_split, ctx.n3_split, ctx.basis):
            rec.flag_unless(
                f"table.{cmpres.name}",
                f"tables.{cmpres.name}",
                cmpres.expected,
                cmpres.actual,
                cmpres.matched,
            )

    return report
