from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from e67lie.parabolic import (
    NamedParabolic,
    decompose,
    heisenberg_tower,
    named_parabolic,
    principal_series_codim,
    rank3_orbit_dim,
    true_center_roots,
)
from e67lie.roots import RootSystemType

# Frozen expected values, each independently derivable by counting positive
# roots with the relevant coefficient patterns.
NAMED_DIMS = {
    RootSystemType.E6: {"P": (16, 1, 16), "Q": (21, 2, 1), "R": (24, 2, 8), "Pg": (35, 8, 1)},
    RootSystemType.E7: {"P": (27, 1, 27), "Q": (33, 2, 1), "R": (42, 2, 10), "Pg": (59, 8, 1)},
}


@pytest.mark.parametrize("kind", list(RootSystemType))
def test_named_parabolic_dimensions(kind, both_ctx):
    ctx = both_ctx[kind]
    decs = {"P": ctx.p, "Q": ctx.q, "R": ctx.r, "Pg": ctx.pg}
    for name, (nil, cls, center) in NAMED_DIMS[kind].items():
        dec = decs[name]
        assert dec.nilradical_dim == nil, name
        assert dec.nilpotency_class == cls, name
        assert dec.center_dim == center, name


def test_nilradical_dims_by_independent_count(both_ctx):
    """Oracle: count positive roots supported off the Levi directly."""
    for kind, ctx in both_ctx.items():
        rs = ctx.rs
        n = rs.rank
        assert ctx.p.nilradical_dim == sum(1 for r in rs.positive if r.coeff(n) >= 1)
        qnode = 2 if kind is RootSystemType.E6 else 1
        assert ctx.q.nilradical_dim == sum(1 for r in rs.positive if r.coeff(qnode) >= 1)


def test_p_abelian_every_pair(both_ctx):
    for ctx in both_ctx.values():
        alg = ctx.alg
        nil = ctx.p.nilradical_roots
        for i, a in enumerate(nil):
            for b in nil[i + 1 :]:
                assert (a + b) not in alg.rs or alg.N(a, b) == 0


def test_q_center_is_highest_root_space(both_ctx):
    for ctx in both_ctx.values():
        assert ctx.q.center_roots == (ctx.rs.highest,)
        assert set(true_center_roots(ctx.alg, ctx.q.nilradical_roots)) == {ctx.rs.highest}


def test_q_heisenberg_skew_form_nondegenerate(both_ctx):
    """Every noncentral root of the Heisenberg radical pairs against its
    complement to the highest root."""
    for ctx in both_ctx.values():
        rs = ctx.rs
        rest = [r for r in ctx.q.nilradical_roots if r != rs.highest]
        for a in rest:
            partner = rs.highest - a
            assert partner in set(rest)
            assert ctx.alg.N(a, partner) != 0


def test_r_two_step_structure(both_ctx):
    for ctx in both_ctx.values():
        alg, dec = ctx.alg, ctx.r
        one, two = dec.layer(1), dec.layer(2)
        assert set(one) | set(two) == set(dec.nilradical_roots)
        assert set(two) == set(dec.center_roots)
        for a in one:
            for b in two:
                assert (a + b) not in alg.rs or alg.N(a, b) == 0
        assert set(true_center_roots(alg, dec.nilradical_roots)) == set(two)


def test_r_levi_types(both_ctx):
    assert both_ctx[RootSystemType.E6].r.levi.component_labels == ("D4",)
    r7 = both_ctx[RootSystemType.E7].r
    assert sorted(r7.levi.component_labels) == ["A1", "D5"]
    a1 = next(c for c in r7.levi.components if c.label == "A1")
    assert a1.highest == both_ctx[RootSystemType.E7].rs.simple[6]


def test_q_drop_node_unique(both_ctx):
    for kind, ctx in both_ctx.items():
        rs = ctx.rs
        hits = [
            i for i in range(1, rs.rank + 1) if rs.pairing_with_simple(rs.highest, i) != 0
        ]
        assert hits == [2] if kind is RootSystemType.E6 else hits == [1]
        assert set(range(1, rs.rank + 1)) - ctx.q.levi_keep == set(hits)


def test_pg_levi_keep(both_ctx):
    assert both_ctx[RootSystemType.E6].pg.levi_keep == {4}
    assert both_ctx[RootSystemType.E7].pg.levi_keep == {2, 3, 5, 7}


def test_tower_layers_and_residual(both_ctx):
    expected = {
        RootSystemType.E6: ((21, 9, 5), (4,)),
        RootSystemType.E7: ((33, 17, 9), (2, 3, 5, 7)),
    }
    for kind, ctx in both_ctx.items():
        dims, nodes = expected[kind]
        assert ctx.tower.layer_dims == dims
        assert ctx.tower.total_dim == sum(dims)
        assert ctx.tower.residual.simple_nodes() == nodes
        assert all(c.label == "A1" for c in ctx.tower.residual.components)


def test_tower_indexing_against_heisenberg_radical(both_ctx):
    """Cascade layer 1 is the Heisenberg radical; in semidirect-tower
    numbering that layer carries index 3."""
    for ctx in both_ctx.values():
        assert set(ctx.tower.layers[0]) == set(ctx.q.nilradical_roots)
        assert ctx.tower.reversed_index(1) == 3
        assert ctx.tower.reversed_index(3) == 1


def test_tower_strong_orthogonality(both_ctx):
    for ctx in both_ctx.values():
        rs = ctx.rs
        b = ctx.tower.betas
        for i in range(3):
            for j in range(i + 1, 3):
                assert (b[i] + b[j]) not in rs
                assert (b[i] - b[j]) not in rs
                assert rs.pairing(b[i], b[j]) == 0


def test_tower_layer_membership_pattern(both_ctx):
    """Layer k consists of the positive roots meeting beta_k and orthogonal
    to all earlier betas (the defining property)."""
    for ctx in both_ctx.values():
        rs = ctx.rs
        betas = ctx.tower.betas
        for k in range(3):
            expected = {
                r
                for r in rs.positive
                if rs.pairing(r, betas[k]) > 0
                and all(rs.pairing(r, betas[j]) == 0 for j in range(k))
            }
            assert set(ctx.tower.layers[k]) == expected


def test_tower_semidirect_bracket_absorption(both_ctx):
    for ctx in both_ctx.values():
        alg, rs = ctx.alg, ctx.rs
        layers = ctx.tower.layers
        for i in range(3):
            for j in range(i + 1, 3):
                for a in layers[i]:
                    for b in layers[j]:
                        s = a + b
                        if s in rs and alg.N(a, b) != 0:
                            assert s in set(layers[i])


def test_rank3_orbit_dims(both_ctx):
    assert rank3_orbit_dim(both_ctx[RootSystemType.E6].tower) == 32
    assert rank3_orbit_dim(both_ctx[RootSystemType.E7].tower) == 56


def test_degenerate_heisenberg_orbit_dim():
    """A single three-dimensional Heisenberg layer contributes 3 - 1 = 2."""

    class _Stub:
        layers = ((1, 2, 3),)

    assert rank3_orbit_dim(_Stub()) == 2


def test_principal_series_codims(both_ctx):
    e6 = principal_series_codim(both_ctx[RootSystemType.E6].rs, both_ctx[RootSystemType.E6].alg,
                                tower=both_ctx[RootSystemType.E6].tower)
    e7 = principal_series_codim(both_ctx[RootSystemType.E7].rs, both_ctx[RootSystemType.E7].alg,
                                tower=both_ctx[RootSystemType.E7].tower)
    assert (e6.codim, e6.levi_positive_count) == (15, 20)
    assert (e7.codim, e7.levi_positive_count) == (26, 36)
    assert e6.inequality_holds and 2 * 15 < 32
    assert e7.inequality_holds and 2 * 26 < 56
    # sanity: the Levi count is forced by the abelian radical dimension
    assert e6.levi_positive_count == 36 - 16
    assert e7.levi_positive_count == 63 - 27


@settings(max_examples=25, deadline=None)
@given(data=st.data(), kind=st.sampled_from(list(RootSystemType)))
def test_decompose_random_keeps(both_ctx, data, kind):
    ctx = both_ctx[kind]
    rs = ctx.rs
    keep = data.draw(st.sets(st.integers(1, rs.rank), max_size=rs.rank))
    dec = decompose(ctx.alg, keep)
    # partition of all roots into levi, nilradical, opposite nilradical
    assert 2 * len(dec.levi.positive) + 2 * dec.nilradical_dim == len(rs.all_roots)
    assert dec.nilpotency_class == dec.max_depth
    for r in dec.nilradical_roots:
        assert dec.depth[r] >= 1
    # grading additivity on a small sample
    nil = dec.nilradical_roots
    for a in nil[:6]:
        for b in nil[:10]:
            s = a + b
            if s in rs and ctx.alg.N(a, b) != 0:
                assert dec.depth[s] == dec.depth[a] + dec.depth[b]


def test_named_parabolic_enum_roundtrip(e6ctx):
    for name in NamedParabolic:
        dec = named_parabolic(e6ctx.alg, name)
        assert dec.nilradical_dim == NAMED_DIMS[RootSystemType.E6][name.value][0]


def test_tower_rebuild_matches_cached(e6ctx):
    tower = heisenberg_tower(e6ctx.rs, e6ctx.alg)
    assert tower.layer_dims == e6ctx.tower.layer_dims
    assert tower.betas == e6ctx.tower.betas


def test_levi_nilradical_root_partition(both_ctx):
    """Levi roots, nilradical roots and their negatives partition the system."""
    for ctx in both_ctx.values():
        rs = ctx.rs
        for dec in (ctx.p, ctx.q, ctx.r, ctx.pg):
            parts = (
                set(dec.levi_roots)
                | set(dec.nilradical_roots)
                | {-r for r in dec.nilradical_roots}
            )
            assert parts == set(rs.all_roots)
            assert len(dec.levi_roots) + 2 * dec.nilradical_dim == len(rs.all_roots)
