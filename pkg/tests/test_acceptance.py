"""Acceptance criteria.

Each test covers one numbered criterion and prints one PASS/FAIL line;
run with ``pytest -s tests/test_acceptance.py`` to see the lines.  All
comparisons are exact equality; the only tolerances anywhere are the two
wall-clock budgets of criterion 12b (60 s full / 2 s fast), asserted as
stated.
"""

from __future__ import annotations

import io
import json
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from e67lie.cli import run
from e67lie.parabolic import rank3_orbit_dim
from e67lie.roots import Root, RootSystemType
from e67lie.structures import (
    CharacterClass,
    classify_character,
    induced_heisenberg_rank,
    polarization_check,
    spectrum_identity_poly,
    spectrum_vector,
    stabilizer_dim,
)
from e67lie.verify import _grading_compatible  # used as the criterion-12 battery


@contextmanager
def criterion(number: int, label: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number:>2} FAIL: {label}")
        raise
    print(f"ACCEPTANCE {number:>2} PASS: {label}")


def test_criterion_01_root_counts(both_ctx):
    with criterion(1, "root counts 72/36 and 126/63; highest roots exact"):
        rs6 = both_ctx[RootSystemType.E6].rs
        rs7 = both_ctx[RootSystemType.E7].rs
        assert (len(rs6.all_roots), rs6.num_positive) == (72, 36)
        assert (len(rs7.all_roots), rs7.num_positive) == (126, 63)
        assert rs6.highest == Root((1, 2, 2, 3, 2, 1))
        assert rs7.highest == Root((2, 2, 3, 4, 3, 2, 1))


def test_criterion_02_named_parabolics(both_ctx):
    with criterion(2, "named parabolics: abelian 16/27, Heisenberg 21/33, two-step 24/42"):
        expect = {
            RootSystemType.E6: (16, 21, 24, 8, ("D4",)),
            RootSystemType.E7: (27, 33, 42, 10, ("A1", "D5")),
        }
        for kind, ctx in both_ctx.items():
            p_nil, q_nil, r_nil, r_center, r_levi = expect[kind]
            assert ctx.p.nilradical_dim == p_nil and ctx.p.is_abelian
            alg = ctx.alg
            for i, a in enumerate(ctx.p.nilradical_roots):
                for b in ctx.p.nilradical_roots[i + 1 :]:
                    assert (a + b) not in ctx.rs or alg.N(a, b) == 0
            assert ctx.q.nilradical_dim == q_nil
            assert ctx.q.nilpotency_class == 2
            assert ctx.q.center_roots == (ctx.rs.highest,)
            assert ctx.r.nilradical_dim == r_nil
            assert ctx.r.nilpotency_class == 2
            assert ctx.r.center_dim == r_center
            assert tuple(sorted(ctx.r.levi.component_labels)) == r_levi


def test_criterion_03_heisenberg_tower(both_ctx):
    with criterion(3, "tower layers (21,9,5)/(33,17,9); residual nodes {4}/{2,3,5,7}"):
        expect = {
            RootSystemType.E6: ((21, 9, 5), (4,)),
            RootSystemType.E7: ((33, 17, 9), (2, 3, 5, 7)),
        }
        for kind, ctx in both_ctx.items():
            dims, nodes = expect[kind]
            assert ctx.tower.layer_dims == dims
            assert ctx.tower.residual.simple_nodes() == nodes
            # bracket-level Heisenberg test per layer
            alg, rs = ctx.alg, ctx.rs
            for beta, layer in zip(ctx.tower.betas, ctx.tower.layers):
                rest = [r for r in layer if r != beta]
                for i, a in enumerate(layer):
                    for b in layer[i:]:
                        s = a + b
                        if s in rs and alg.N(a, b) != 0:
                            assert s == beta
                for a in rest:
                    assert (beta - a) in set(rest) and alg.N(a, beta - a) != 0


def test_criterion_04_orbit_dims_and_codims(both_ctx):
    with criterion(4, "orbit dims 32/56; codims 15/26; 2*15<32 and 2*26<56"):
        e6, e7 = both_ctx[RootSystemType.E6], both_ctx[RootSystemType.E7]
        assert rank3_orbit_dim(e6.tower) == 32
        assert rank3_orbit_dim(e7.tower) == 56
        assert e6.codim.codim == 15 and e7.codim.codim == 26
        assert 2 * 15 < 32 and 2 * 26 < 56
        assert e6.codim.inequality_holds and e7.codim.inequality_holds


def test_criterion_05_paired_basis(both_ctx):
    with criterion(5, "paired basis found; delta bracket table and descent identity exact"):
        for ctx in both_ctx.values():
            alg = ctx.alg
            basis = ctx.basis
            assert basis.e[1].root == ctx.rs.highest
            e1 = basis.e_element(alg, 1)
            for i in basis.f:
                for j in basis.f:
                    got = alg.bracket(basis.e_element(alg, i), basis.f_element(alg, j))
                    assert got == (e1 if i == j else alg.zero())
            for i in basis.f:
                assert alg.bracket(
                    basis.e_element(alg, -1), basis.f_element(alg, i)
                ) == -basis.e_element(alg, -i)
            spanned = {bv.root for bv in basis.e.values()} | {
                bv.root for bv in basis.f.values()
            }
            for r in ctx.q.nilradical_roots:
                if r not in spanned:
                    assert alg.bracket(basis.e_element(alg, -1), alg.root_vector(r)).is_zero
            # part d through the verified hyperbolic Gram matrix
            for a, i in enumerate(ctx.form.order):
                for b, j in enumerate(ctx.form.order):
                    assert ctx.form.gram[a][b] == (1 if i == -j else 0)


def test_criterion_06_spectrum_identity(both_ctx):
    with criterion(6, "form value of the spectrum vector is exactly -2ts"):
        for ctx in both_ctx.values():
            lhs, rhs = spectrum_identity_poly(ctx.form.k)
            assert lhs == rhs
            sv = spectrum_vector(ctx.form, 1, 0, {2: Fraction(1, 3)})
            assert sv.form_value == 0
            assert classify_character(ctx.form, sv.coords) is CharacterClass.SMALL
            sv2 = spectrum_vector(ctx.form, Fraction(2, 3), Fraction(-1, 2))
            assert sv2.form_value == -2 * Fraction(2, 3) * Fraction(-1, 2)
            assert classify_character(ctx.form, sv2.coords) is CharacterClass.BIG


def _random_rational(rng) -> Fraction:
    return Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 7)))


def _random_rep(ctx, rng, anisotropic: bool):
    k = ctx.form.k
    t = Fraction(0)
    while t == 0:
        t = _random_rational(rng)
    s = Fraction(0)
    if anisotropic:
        while s == 0:
            s = _random_rational(rng)
    a = {
        i: _random_rational(rng)
        for i in list(range(2, k + 1)) + list(range(-2, -k - 1, -1))
    }
    return spectrum_vector(ctx.form, t, s, a).coords


def test_criterion_07_induced_ranks_100_random(both_ctx):
    with criterion(7, "induced Heisenberg ranks 16/8 (E6) and 32/16 (E7), 100 random reps each"):
        expect = {RootSystemType.E6: (16, 8), RootSystemType.E7: (32, 16)}
        rng = np.random.default_rng(42)
        for kind, ctx in both_ctx.items():
            big_rank, small_rank = expect[kind]
            for _ in range(100):
                v = _random_rep(ctx, rng, anisotropic=True)
                assert induced_heisenberg_rank(ctx.alg, ctx.u_split, ctx.form, v) == big_rank
            for _ in range(100):
                v = _random_rep(ctx, rng, anisotropic=False)
                assert induced_heisenberg_rank(ctx.alg, ctx.u_split, ctx.form, v) == small_rank


def test_criterion_08_stabilizer_dims(both_ctx):
    with criterion(8, "stabilizers at e1+e-1: 21 (E6) and 39 = 3+36 (E7, rank-one factor trivial)"):
        big = {1: Fraction(1), -1: Fraction(1)}
        e6 = both_ctx[RootSystemType.E6]
        assert stabilizer_dim(e6.alg, e6.r, e6.u_split, e6.form, big).stabilizer_dim == 21
        e7 = both_ctx[RootSystemType.E7]
        res = stabilizer_dim(e7.alg, e7.r, e7.u_split, e7.form, big)
        assert res.stabilizer_dim == 39 == 3 + 36
        # the rank-one Levi factor acts by the zero matrix on the center slice
        from e67lie.chevalley import action_matrix

        alg, rs = e7.alg, e7.rs
        sl2 = [
            alg.root_vector(rs.simple[6]),
            alg.coroot_element(rs.simple[6]),
            alg.root_vector(-rs.simple[6]),
        ]
        module = [e7.form.basis.e_element(alg, i) for i in e7.form.order]
        act = action_matrix(alg, sl2, module)
        assert all(v == 0 for g in range(3) for row in act.matrix_of(g) for v in row)


def test_criterion_09_quartets_and_polarization(e7ctx, golden):
    with criterion(9, "E7: 8 quartets of 4 with both conditions; X1/Y1 Lagrangian and stable"):
        part = e7ctx.quartets
        assert part is not None and len(part.blocks) == 8
        rs = e7ctx.rs
        alpha7 = rs.simple[6]
        second = e7ctx.basis.e[-1].root
        for b in part.blocks:
            a1, a2, a3, a4 = b.roots
            beta = rs.highest if b.j == 1 else second
            assert a2 == a1 + alpha7 and a3 == beta - a2 and a4 == a3 + alpha7
            assert {a1, a3} <= set(e7ctx.u_split.x_roots)
            assert {a2, a4} <= set(e7ctx.u_split.y_roots)
        rep = polarization_check(
            e7ctx.alg,
            e7ctx.u_split,
            e7ctx.form,
            part,
            golden.pattern_roots(rs, "X1"),
            golden.pattern_roots(rs, "Y1"),
        )
        assert len(rep.x1_roots) == len(rep.y1_roots) == 16
        assert rep.lagrangian_rank == 16
        assert rep.blocks_aligned == 8


def test_criterion_10_golden_tables(both_ctx, golden):
    with criterion(10, "every golden pattern and cell matches the derived sets"):
        from e67lie.golden import compare_tables

        for ctx in both_ctx.values():
            comps = compare_tables(ctx.rs, golden, ctx.u_split, ctx.n3_split, ctx.basis)
            mismatched = [(c.name, c.expected, c.actual) for c in comps if not c.matched]
            assert mismatched == []


def test_criterion_11_abelian_radical_partition(e7ctx):
    with criterion(11, "E7 abelian radical splits as 16 + 10 + 1 = 27"):
        from e67lie.structures import abelian_radical_partition

        sizes = abelian_radical_partition(e7ctx.alg, e7ctx.p, e7ctx.u_split)
        assert sizes == (16, 10, 1) and sum(sizes) == 27


def test_criterion_12a_property_suites(both_ctx):
    with criterion(12, "exhaustive Jacobi; grading on all parabolic pairs; rank-nullity"):
        for ctx in both_ctx.values():
            bad, backend = ctx.alg.jacobi_violations_exhaustive()
            assert bad == 0, f"jacobi violations via {backend}"
            for dec in (ctx.p, ctx.q, ctx.r, ctx.pg):
                assert _grading_compatible(ctx.alg, dec)
            rng = np.random.default_rng(5)
            for _ in range(5):
                coords = {
                    i: _random_rational(rng)
                    for i in ctx.form.order
                    if rng.integers(0, 2)
                }
                res = stabilizer_dim(ctx.alg, ctx.r, ctx.u_split, ctx.form, coords)
                assert res.stabilizer_dim + res.tangent_dim == res.acting_dim


def test_criterion_12b_determinism_and_budget(golden_path):
    with criterion(12, "byte-identical reports; full verify < 60 s; fast < 2 s"):
        argv_full = ["verify", "--type", "both", "--golden", golden_path, "--format", "json"]
        t0 = time.perf_counter()
        out1 = io.StringIO()
        code = run(argv_full, stdout=out1, stderr=io.StringIO())
        full_seconds = time.perf_counter() - t0
        assert code == 0
        assert full_seconds < 60.0, f"full verify took {full_seconds:.1f}s"
        reports = json.loads(out1.getvalue())
        assert [r["summary"]["fail"] for r in reports] == [0, 0]
        assert all(len(r["checks"]) > 40 for r in reports)

        argv_fast = argv_full + ["--fast"]
        t0 = time.perf_counter()
        out2 = io.StringIO()
        code = run(argv_fast, stdout=out2, stderr=io.StringIO())
        fast_seconds = time.perf_counter() - t0
        assert code == 0
        assert fast_seconds < 2.0, f"fast verify took {fast_seconds:.2f}s"

        out3 = io.StringIO()
        assert run(argv_fast, stdout=out3, stderr=io.StringIO()) == 0
        assert out2.getvalue() == out3.getvalue()
        print(f"   (full verify: {full_seconds:.2f}s, fast verify: {fast_seconds:.2f}s)")
