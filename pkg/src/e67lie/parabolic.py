"""Standard parabolic subalgebras, their nilradical gradings, and the
three-layer Heisenberg tower.

A standard parabolic is named by the set of simple-root nodes kept in its
Levi factor.  The nilradical is spanned by the positive root spaces supported
outside the Levi, graded by the depth function (sum of coefficients on the
dropped nodes).  Nilpotency classes, centers and Heisenberg properties are
established from actual brackets through the structure constants, never
inferred from the grading alone.

Four parabolics get names:

* ``P``: drop the last node; its nilradical is abelian.
* ``Q``: drop the unique node not orthogonal to the highest root; its
  nilradical is a Heisenberg algebra with center on the highest root.
* ``R``: Levi of type D4 (E6) or A1 x D5 (E7); two-step nilradical.
* ``PG``: the Levi keeps exactly the nodes surviving the orthogonal cascade;
  its nilradical is the union of the tower layers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from . import linalg
from .chevalley import ChevalleyAlgebra
from .roots import (
    Root,
    RootSystem,
    RootSystemType,
    Subsystem,
    orthogonal_subsystem,
    subsystem,
)


class ParabolicError(RuntimeError):
    """A constructed parabolic contradicts its required structure."""


class NamedParabolic(Enum):
    P = "P"
    Q = "Q"
    R = "R"
    PG = "Pg"


_R_LEVI_KEEP = {
    RootSystemType.E6: frozenset({2, 3, 4, 5}),
    RootSystemType.E7: frozenset({1, 2, 3, 4, 5, 7}),
}
_PG_LEVI_KEEP = {
    RootSystemType.E6: frozenset({4}),
    RootSystemType.E7: frozenset({2, 3, 5, 7}),
}
_Q_DROP_NODE = {RootSystemType.E6: 2, RootSystemType.E7: 1}
_R_LEVI_LABELS = {
    RootSystemType.E6: ("D4",),
    RootSystemType.E7: ("D5", "A1"),
}


@dataclass(frozen=True)
class ParabolicDecomposition:
    """Levi/nilradical split of a standard parabolic, with its grading."""

    levi_keep: frozenset[int]
    levi: Subsystem
    nilradical_roots: tuple[Root, ...]
    depth: Mapping[Root, int]
    center_roots: tuple[Root, ...]
    nilpotency_class: int

    @property
    def levi_roots(self) -> tuple[Root, ...]:
        """All Levi roots, both signs."""
        return self.levi.positive + tuple(-r for r in self.levi.positive)

    @property
    def nilradical_dim(self) -> int:
        return len(self.nilradical_roots)

    @property
    def center_dim(self) -> int:
        return len(self.center_roots)

    @property
    def is_abelian(self) -> bool:
        return self.nilpotency_class <= 1

    def layer(self, d: int) -> tuple[Root, ...]:
        return tuple(r for r in self.nilradical_roots if self.depth[r] == d)

    @property
    def max_depth(self) -> int:
        return max(self.depth.values(), default=0)


def _bracket_generated_layers(
    alg: ChevalleyAlgebra, roots: Iterable[Root]
) -> list[set[Root]]:
    """Lower central series F^1 = n, F^{k+1} = [n, F^k] as root sets."""
    base = set(roots)
    if not base:
        return []
    layers = [base]
    cur = base
    while cur:
        nxt = {
            a + b
            for a in base
            for b in cur
            if (a + b) in alg.rs and alg.N(a, b) != 0
        }
        if not nxt:
            break
        layers.append(nxt)
        cur = nxt
    return layers


def true_center_roots(alg: ChevalleyAlgebra, roots: Iterable[Root]) -> tuple[Root, ...]:
    """Roots spanning the genuine center of the nilradical, from brackets."""
    rset = sorted(set(roots), key=Root.sort_key)
    out = [
        a
        for a in rset
        if all((a + b) not in alg.rs or alg.N(a, b) == 0 for b in rset)
    ]
    return tuple(out)


def decompose(alg: ChevalleyAlgebra, levi_keep: Iterable[int]) -> ParabolicDecomposition:
    """Levi/nilradical partition with grading and bracket-verified class."""
    rs = alg.rs
    keep = frozenset(levi_keep)
    if not keep <= set(range(1, rs.rank + 1)):
        raise ParabolicError(f"levi nodes {sorted(keep)} out of range")
    dropped = [i for i in range(1, rs.rank + 1) if i not in keep]
    levi = subsystem(rs, keep)
    levi_pos = set(levi.positive)
    nil = tuple(r for r in rs.positive if r not in levi_pos)
    depth = {r: sum(r.coeff(i) for i in dropped) for r in nil}
    if any(d <= 0 for d in depth.values()):
        raise ParabolicError("nilradical root with nonpositive depth")
    # Partition check: levi + nilradical + opposite nilradical is everything.
    if 2 * len(levi_pos) + 2 * len(nil) != len(rs.all_roots):
        raise ParabolicError("levi/nilradical partition does not cover the roots")
    layers = _bracket_generated_layers(alg, nil)
    nclass = len(layers)
    max_depth = max(depth.values(), default=0)
    if nil and nclass != max_depth:
        raise ParabolicError(
            f"bracket nilpotency class {nclass} differs from max depth {max_depth}"
        )
    if nclass <= 1:
        center = nil
    else:
        center = tuple(r for r in nil if depth[r] == max_depth)
    return ParabolicDecomposition(
        levi_keep=keep,
        levi=levi,
        nilradical_roots=nil,
        depth=depth,
        center_roots=center,
        nilpotency_class=nclass,
    )


def _q_drop_node(rs: RootSystem) -> int:
    hits = [
        i
        for i in range(1, rs.rank + 1)
        if rs.pairing_with_simple(rs.highest, i) != 0
    ]
    if len(hits) != 1:
        raise ParabolicError(f"expected one node meeting the highest root, got {hits}")
    return hits[0]


def named_parabolic(alg: ChevalleyAlgebra, name: NamedParabolic) -> ParabolicDecomposition:
    """One of the four named parabolics, with its structure re-verified."""
    rs = alg.rs
    t = rs.type
    allnodes = set(range(1, rs.rank + 1))
    if name is NamedParabolic.P:
        dec = decompose(alg, allnodes - {rs.rank})
        if not dec.is_abelian:
            raise ParabolicError("P's nilradical failed the abelian check")
        tc = true_center_roots(alg, dec.nilradical_roots)
        if set(tc) != set(dec.nilradical_roots):
            raise ParabolicError("abelian nilradical has a proper center")
        return dec
    if name is NamedParabolic.Q:
        node = _q_drop_node(rs)
        if node != _Q_DROP_NODE[t]:
            raise ParabolicError(f"Heisenberg node {node} contradicts the expected one")
        dec = decompose(alg, allnodes - {node})
        _check_heisenberg(alg, dec.nilradical_roots, rs.highest)
        if dec.center_roots != (rs.highest,) or set(
            true_center_roots(alg, dec.nilradical_roots)
        ) != {rs.highest}:
            raise ParabolicError("Q's center is not the highest root space")
        return dec
    if name is NamedParabolic.R:
        dec = decompose(alg, _R_LEVI_KEEP[t])
        labels = tuple(sorted(dec.levi.component_labels))
        if labels != tuple(sorted(_R_LEVI_LABELS[t])):
            raise ParabolicError(f"R Levi detected as {labels}")
        if t is RootSystemType.E7:
            a1 = next(c for c in dec.levi.components if c.label == "A1")
            if a1.highest != rs.simple[6]:
                raise ParabolicError("the A1 factor of R's Levi is not on node 7")
        if dec.nilpotency_class != 2:
            raise ParabolicError("R's nilradical is not two-step")
        _check_two_step(alg, dec)
        if set(true_center_roots(alg, dec.nilradical_roots)) != set(dec.center_roots):
            raise ParabolicError("R's center differs from its top graded layer")
        return dec
    if name is NamedParabolic.PG:
        return decompose(alg, _PG_LEVI_KEEP[t])
    raise ParabolicError(f"unknown parabolic {name}")


def _check_heisenberg(alg: ChevalleyAlgebra, roots: Iterable[Root], center: Root) -> None:
    """Brackets land on the center root space and the induced skew form is
    nondegenerate on the complement."""
    rlist = sorted(set(roots), key=Root.sort_key)
    if center not in rlist:
        raise ParabolicError("claimed center root is not in the layer")
    rest = [r for r in rlist if r != center]
    for i, a in enumerate(rlist):
        for b in rlist[i:]:
            s = a + b
            if s in alg.rs and alg.N(a, b) != 0 and s != center:
                raise ParabolicError(f"bracket [{a},{b}] escapes the center")
    k = len(rest)
    gram = [[Fraction(0)] * k for _ in range(k)]
    for i, a in enumerate(rest):
        for j, b in enumerate(rest):
            if (a + b) == center:
                gram[i][j] = Fraction(alg.N(a, b))
    if linalg.rank(gram) != k:
        raise ParabolicError("induced skew form on the layer is degenerate")


def _check_two_step(alg: ChevalleyAlgebra, dec: ParabolicDecomposition) -> None:
    one = dec.layer(1)
    two = dec.layer(2)
    if set(one) | set(two) != set(dec.nilradical_roots):
        raise ParabolicError("two-step nilradical has depth > 2")
    for a in one:
        for b in two:
            if (a + b) in alg.rs and alg.N(a, b) != 0:
                raise ParabolicError("[depth-1, depth-2] is nonzero")
    for a in one:
        for b in one:
            s = a + b
            if s in alg.rs and alg.N(a, b) != 0 and s not in set(two):
                raise ParabolicError("[depth-1, depth-1] escapes depth 2")


# ---------------------------------------------------------------------------
# the Heisenberg tower
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HeisenbergTower:
    """Three nested Heisenberg layers from the orthogonal highest-root cascade.

    ``layers[k]`` is built around ``betas[k]``; cascade order puts the big
    layer (the Heisenberg parabolic's nilradical) first.  The outermost layer
    of the semidirect tower is cascade layer 1, i.e. reversed-index ``3``;
    ``reversed_index`` translates between the two conventions.
    """

    betas: tuple[Root, Root, Root]
    layers: tuple[tuple[Root, ...], tuple[Root, ...], tuple[Root, ...]]
    residual: Subsystem

    @property
    def layer_dims(self) -> tuple[int, int, int]:
        return tuple(len(t) for t in self.layers)  # type: ignore[return-value]

    @staticmethod
    def reversed_index(cascade_index: int) -> int:
        """Semidirect-tower index of cascade layer ``cascade_index`` (1-based)."""
        return 4 - cascade_index

    @property
    def total_dim(self) -> int:
        return sum(self.layer_dims)


class TowerError(RuntimeError):
    pass


def heisenberg_tower(
    rs: RootSystem,
    alg: ChevalleyAlgebra,
    q_dec: ParabolicDecomposition | None = None,
    pg_dec: ParabolicDecomposition | None = None,
) -> HeisenbergTower:
    """Cascade construction: repeatedly split off the layer around the
    highest root of the orthogonal complement, three times.

    On a reducible complement the cascade continues in the component whose
    highest root has maximal ambient height (canonical order breaks ties).
    Every layer is verified to be a Heisenberg algebra through brackets, and
    the residual may only contain rank-one components.  ``q_dec``/``pg_dec``
    take already-built named parabolics for the cross-checks.
    """
    betas: list[Root] = []
    layers: list[tuple[Root, ...]] = []
    current = orthogonal_subsystem(rs, [])
    for _ in range(3):
        if not current.components:
            raise TowerError("cascade ran out of components before three layers")
        comp = max(
            current.components,
            key=lambda c: (c.highest.height, c.highest.coeffs),
        )
        beta = comp.highest
        layer = tuple(
            r for r in current.positive if rs.pairing(r, beta) > 0
        )
        _check_heisenberg(alg, layer, beta)
        betas.append(beta)
        layers.append(layer)
        current = orthogonal_subsystem(rs, betas)
    residual = current
    for comp in residual.components:
        if comp.label != "A1":
            raise TowerError(f"residual component {comp.label} is not A1")
    for i in range(3):
        for j in range(i + 1, 3):
            for s in (betas[i] + betas[j], betas[i] - betas[j]):
                if s in rs:
                    raise TowerError("cascade roots are not strongly orthogonal")
    # Semidirect compatibility: earlier layers absorb brackets with later ones.
    for i in range(3):
        seti = set(layers[i])
        for j in range(i + 1, 3):
            for a in layers[i]:
                for b in layers[j]:
                    s = a + b
                    if s in rs and alg.N(a, b) != 0 and s not in seti:
                        raise TowerError("tower layers are not bracket compatible")
    tower = HeisenbergTower(
        betas=(betas[0], betas[1], betas[2]),
        layers=(layers[0], layers[1], layers[2]),
        residual=residual,
    )
    # Cross-checks against the named parabolics.
    q = q_dec if q_dec is not None else named_parabolic(alg, NamedParabolic.Q)
    if set(tower.layers[0]) != set(q.nilradical_roots):
        raise TowerError("first cascade layer differs from the Heisenberg nilradical")
    pg = pg_dec if pg_dec is not None else named_parabolic(alg, NamedParabolic.PG)
    union = set().union(*tower.layers)
    if union != set(pg.nilradical_roots):
        raise TowerError("tower layers do not exhaust the tower parabolic's nilradical")
    return tower


def rank3_orbit_dim(t: HeisenbergTower) -> int:
    """Generic coadjoint-orbit dimension of a three-factor rankable
    representation: each Heisenberg layer of dimension 2d+1 contributes 2d."""
    return sum(len(layer) - 1 for layer in t.layers)


@dataclass(frozen=True)
class PrincipalSeriesCodim:
    """Codimension bookkeeping for the degenerate principal series bound."""

    codim: int
    orbit_dim: int
    levi_positive_count: int

    @property
    def inequality_holds(self) -> bool:
        return 2 * self.codim < self.orbit_dim


def principal_series_codim(
    rs: RootSystem,
    alg: ChevalleyAlgebra,
    tower: HeisenbergTower | None = None,
) -> PrincipalSeriesCodim:
    """dim N_B minus dim U2, where U1 consists of the positive root groups of
    P's Levi and U2 adjoins the highest root group, compared against the
    rank-three orbit dimension."""
    n = rs.rank
    levi_pos = sum(1 for r in rs.positive if r.coeff(n) == 0)
    codim = rs.num_positive - (levi_pos + 1)
    if tower is None:
        tower = heisenberg_tower(rs, alg)
    return PrincipalSeriesCodim(
        codim=codim,
        orbit_dim=rank3_orbit_dim(tower),
        levi_positive_count=levi_pos,
    )
