"""Root-system construction against independent oracles.

The oracle for the root sets is the characterization of simply-laced roots
as the norm-2 vectors of the root lattice: enumerate every integer
coefficient vector inside the box bounded by the highest root (plus a
margin) and keep those with quadratic form value 2 under the Cartan matrix.
This is a different algorithm from the reflection closure used by the
implementation.
"""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from e67lie.roots import (
    Root,
    RootSystemError,
    RootSystemType,
    build_root_system,
    closure_from_simples,
    orthogonal_subsystem,
    subsystem,
)

# Test-local copies of the Cartan data; deliberately not imported.
CARTAN = {
    RootSystemType.E6: [
        [2, 0, -1, 0, 0, 0],
        [0, 2, 0, -1, 0, 0],
        [-1, 0, 2, -1, 0, 0],
        [0, -1, -1, 2, -1, 0],
        [0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, -1, 2],
    ],
    RootSystemType.E7: [
        [2, 0, -1, 0, 0, 0, 0],
        [0, 2, 0, -1, 0, 0, 0],
        [-1, 0, 2, -1, 0, 0, 0],
        [0, -1, -1, 2, -1, 0, 0],
        [0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, 0, -1, 2],
    ],
}
HIGHEST = {
    RootSystemType.E6: (1, 2, 2, 3, 2, 1),
    RootSystemType.E7: (2, 2, 3, 4, 3, 2, 1),
}


def norm_two_vectors(kind: RootSystemType) -> set[tuple[int, ...]]:
    """Brute-force oracle: all lattice vectors of squared length 2 inside a
    box one unit wider than the highest-root box."""
    a = np.array(CARTAN[kind], dtype=np.int64)
    hi = HIGHEST[kind]
    axes = [np.arange(-(h + 1), h + 2, dtype=np.int64) for h in hi]
    grids = np.meshgrid(*axes, indexing="ij")
    coords = np.stack([g.ravel() for g in grids], axis=1)
    norms = np.einsum("ki,ij,kj->k", coords, a, coords)
    return {tuple(int(x) for x in row) for row in coords[norms == 2]}


@pytest.mark.parametrize(
    "kind,count", [(RootSystemType.E6, 72), (RootSystemType.E7, 126)]
)
def test_root_sets_match_norm_two_oracle(kind, count):
    rs = build_root_system(kind)
    oracle = norm_two_vectors(kind)
    assert len(oracle) == count
    assert {r.coeffs for r in rs.all_roots} == oracle
    assert rs.num_positive == count // 2


def test_simple_roots_are_positive(e6ctx):
    rs = e6ctx.rs
    assert all(s in set(rs.positive) for s in rs.simple)


@pytest.mark.parametrize("kind", list(RootSystemType))
def test_highest_root_by_dominance_oracle(kind, both_ctx):
    rs = both_ctx[kind].rs
    # Oracle: the unique positive root dominating every other coefficientwise.
    dominant = [
        r
        for r in rs.positive
        if all(all(c >= 0 for c in (r - o).coeffs) for o in rs.positive)
    ]
    assert dominant == [rs.highest]
    assert rs.highest.coeffs == HIGHEST[kind]


def test_pairing_examples(e6ctx):
    rs = e6ctx.rs
    a1, a2, a3 = rs.simple[0], rs.simple[1], rs.simple[2]
    assert rs.pairing(a1, a1) == 2
    assert rs.pairing(a1, a3) == -1
    assert rs.pairing(a1, a2) == 0


def test_pairing_range_and_symmetry(e7ctx):
    rs = e7ctx.rs
    vals = set()
    for a in rs.all_roots[:40]:
        for b in rs.all_roots:
            v = rs.pairing(a, b)
            assert v == rs.pairing(b, a)
            vals.add(v)
    assert vals <= {-2, -1, 0, 1, 2}
    assert all(rs.pairing(a, a) == 2 for a in rs.all_roots)


def test_negation_symmetry(both_ctx):
    for ctx in both_ctx.values():
        rs = ctx.rs
        assert all(-r in rs for r in rs.all_roots)
        assert 2 * rs.num_positive == len(rs.all_roots)


def test_subsystem_detection_named_levis(both_ctx):
    rs6 = both_ctx[RootSystemType.E6].rs
    rs7 = both_ctx[RootSystemType.E7].rs
    assert subsystem(rs6, {2, 3, 4, 5}).component_labels == ("D4",)
    assert sorted(subsystem(rs7, {1, 2, 3, 4, 5, 7}).component_labels) == ["A1", "D5"]
    empty = subsystem(rs6, set())
    assert empty.components == () and empty.root_count == 0


def test_rank_one_subsystem_highest_is_itself(e6ctx):
    sub = subsystem(e6ctx.rs, {4})
    (comp,) = sub.components
    assert comp.highest == e6ctx.rs.simple[3]


def test_orthogonal_subsystem_of_highest(both_ctx):
    rs6 = both_ctx[RootSystemType.E6].rs
    sub6 = orthogonal_subsystem(rs6, [rs6.highest])
    assert sub6.component_labels == ("A5",)
    assert sub6.simple_nodes() == (1, 3, 4, 5, 6)
    rs7 = both_ctx[RootSystemType.E7].rs
    sub7 = orthogonal_subsystem(rs7, [rs7.highest])
    assert sub7.component_labels == ("D6",)
    assert sub7.simple_nodes() == (2, 3, 4, 5, 6, 7)


def test_orthogonal_subsystem_empty_betas_is_everything(e6ctx):
    rs = e6ctx.rs
    assert orthogonal_subsystem(rs, []).root_count == len(rs.all_roots)


def test_orthogonal_subsystem_rejects_non_orthogonal(e6ctx):
    rs = e6ctx.rs
    with pytest.raises(RootSystemError):
        orthogonal_subsystem(rs, [rs.simple[0], rs.simple[2]])


def test_reflection_stability(e6ctx):
    rs = e6ctx.rs
    for r in rs.all_roots:
        for node in range(1, rs.rank + 1):
            assert rs.reflect(r, node) in rs


_COUNT_FORMULA = {"A": lambda k: k * (k + 1), "D": lambda k: 2 * k * (k - 1)}


@settings(max_examples=60, deadline=None)
@given(data=st.data(), kind=st.sampled_from(list(RootSystemType)))
def test_component_detection_roundtrip(both_ctx, data, kind):
    """Rebuilding a detected component from its own simples reproduces its
    root count, which must also match the classical count formula."""
    rs = both_ctx[kind].rs
    keep = data.draw(
        st.sets(st.integers(min_value=1, max_value=rs.rank), max_size=rs.rank)
    )
    sub = subsystem(rs, keep)
    total = 0
    for comp in sub.components:
        family, k = comp.label[0], int(comp.label[1:])
        if family in _COUNT_FORMULA:
            assert comp.root_count == _COUNT_FORMULA[family](k)
        rebuilt = closure_from_simples(rs, comp.simple)
        assert len(rebuilt) == comp.root_count
        assert {r for r in rebuilt if r.is_positive} == set(comp.positive)
        total += comp.root_count
    assert total == sub.root_count


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_closure_under_root_addition(e7ctx, data):
    """If a coefficientwise sum of two roots is a root, the bracket tables
    must see it (string construction reachability)."""
    rs = e7ctx.rs
    i = data.draw(st.integers(0, len(rs.all_roots) - 1))
    j = data.draw(st.integers(0, len(rs.all_roots) - 1))
    a, b = rs.all_roots[i], rs.all_roots[j]
    s = a + b
    if s in rs:
        # the string through a in direction b has positive length
        assert rs.pairing(a, b) < 2
        assert Root(s.coeffs) in rs


def test_root_value_semantics():
    r = Root((1, 0, 2))
    assert r.height == 3
    assert r.coeff(3) == 2
    assert (-r).coeffs == (-1, 0, -2)
    assert r + r - r == r
    assert r.support == {1, 3}


def test_free_function_wrappers(e6ctx):
    from e67lie.roots import build_root_system, highest_root, pairing

    rs = build_root_system(RootSystemType.E6)
    assert highest_root(rs) == e6ctx.rs.highest
    assert pairing(rs, rs.simple[0], rs.simple[2]) == -1
