"""Root systems of types E6 and E7 in simple-root coordinates.

A root is stored as its integer coefficient vector over the simple roots
``alpha_1 .. alpha_n`` in Bourbaki order: the chain is 1-3-4-5-6(-7) with
node 2 attached to node 4.  The full system is generated from the simple
roots by closure under simple reflections, and every derived object in the
package (structure constants, parabolic gradings, verification tables) uses
the canonical ordering fixed here: ascending height, ties broken
lexicographically on the coefficient vector.

``RootSystem`` and ``Subsystem`` instances are immutable after construction
and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np


class RootSystemError(RuntimeError):
    """Construction or query violated a root-system invariant."""


class RootSystemType(Enum):
    E6 = 6
    E7 = 7

    @property
    def rank(self) -> int:
        return self.value

    @property
    def label(self) -> str:
        return self.name


# Dynkin edges in Bourbaki labelling (1-based node numbers).
_EDGES: dict[RootSystemType, tuple[tuple[int, int], ...]] = {
    RootSystemType.E6: ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4)),
    RootSystemType.E7: ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)),
}

_EXPECTED_ROOT_COUNT = {RootSystemType.E6: 72, RootSystemType.E7: 126}


class Root:
    """Integer coefficient vector over the simple roots.

    Immutable value object; vector arithmetic (`+`, `-`, unary `-`) is plain
    coordinate arithmetic and need not land on a root.
    """

    __slots__ = ("coeffs", "height", "_hash")

    def __init__(self, coeffs) -> None:
        cs = coeffs if type(coeffs) is tuple else tuple(coeffs)
        if any(type(c) is not int for c in cs):
            cs = tuple(int(c) for c in cs)
        self.coeffs: tuple[int, ...] = cs
        self.height: int = sum(cs)
        self._hash = hash(cs)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    def coeff(self, node: int) -> int:
        """Coefficient of simple root ``alpha_node`` (1-based)."""
        return self.coeffs[node - 1]

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, c in enumerate(self.coeffs) if c != 0)

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coeffs))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.height, self.coeffs)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Root):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return "Root" + str(self.coeffs)


def _cartan_matrix(t: RootSystemType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
    for i, j in _EDGES[t]:
        a[i - 1][j - 1] = -1
        a[j - 1][i - 1] = -1
    return tuple(tuple(row) for row in a)


class RootSystem:
    """The closed root system of a split simple Lie algebra of type E6 or E7.

    Attributes:
      type: the RootSystemType.
      simple: the n simple roots (unit coordinate vectors).
      positive: all positive roots, canonically ordered.
      all_roots: positive roots followed by their negatives, in matching order.
      cartan: integer Cartan matrix ``<alpha_i, alpha_j^vee>``.
      highest: the highest root.
    """

    def __init__(self, t: RootSystemType) -> None:
        self.type = t
        n = t.rank
        self.cartan = _cartan_matrix(t)
        self.simple = tuple(
            Root(tuple(1 if j == i else 0 for j in range(n))) for i in range(n)
        )
        positive = self._generate_positive()
        self.positive = tuple(sorted(positive, key=Root.sort_key))
        self.all_roots = self.positive + tuple(-r for r in self.positive)
        self._index = {r: i for i, r in enumerate(self.all_roots)}
        self._coeff_array = np.array([r.coeffs for r in self.all_roots], dtype=np.int64)
        self._pair_table = (
            self._coeff_array @ np.array(self.cartan, dtype=np.int64) @ self._coeff_array.T
        ).astype(np.int64)
        self.highest = self._find_highest()
        self._check_invariants()

    # -- construction -------------------------------------------------------

    def _reflect_coeffs(self, coeffs: tuple[int, ...], i: int) -> tuple[int, ...]:
        pair = sum(self.cartan[i][j] * coeffs[j] for j in range(len(coeffs)))
        out = list(coeffs)
        out[i] -= pair
        return tuple(out)

    def _generate_positive(self) -> list[Root]:
        n = self.type.rank
        seen: set[tuple[int, ...]] = {r.coeffs for r in self.simple}
        frontier = [r.coeffs for r in self.simple]
        while frontier:
            nxt = []
            for c in frontier:
                for i in range(n):
                    image = self._reflect_coeffs(c, i)
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
        positive = [Root(c) for c in seen if sum(c) > 0]
        return positive

    def _find_highest(self) -> Root:
        candidates = [
            r
            for r in self.positive
            if all((r + s) not in self._index for s in self.simple)
        ]
        if len(candidates) != 1:
            raise RootSystemError(f"expected a unique highest root, got {candidates}")
        return candidates[0]

    def _check_invariants(self) -> None:
        count = len(self.all_roots)
        if count != _EXPECTED_ROOT_COUNT[self.type]:
            raise RootSystemError(
                f"{self.type.label}: generated {count} roots, expected "
                f"{_EXPECTED_ROOT_COUNT[self.type]}"
            )
        for r in self.positive:
            if any(c < 0 for c in r.coeffs):
                raise RootSystemError(f"mixed-sign positive root {r}")
            if -r not in self._index:
                raise RootSystemError(f"negation symmetry broken at {r}")
        # Reflection stability of the closed set.
        n = self.type.rank
        for r in self.all_roots:
            for i in range(n):
                if Root(self._reflect_coeffs(r.coeffs, i)) not in self._index:
                    raise RootSystemError(f"reflection s_{i+1} leaves the set at {r}")
        # Dominance of the highest root.
        for r in self.positive:
            if any(c < 0 for c in (self.highest - r).coeffs):
                raise RootSystemError(f"highest root not dominant over {r}")

    # -- queries ------------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def num_positive(self) -> int:
        return len(self.positive)

    def __contains__(self, r: Root) -> bool:
        return r in self._index

    def index_of(self, r: Root) -> int:
        return self._index[r]

    def is_root(self, coeffs: Sequence[int]) -> bool:
        return Root(tuple(coeffs)) in self._index

    def pairing(self, a: Root, b: Root) -> int:
        """Cartan pairing ``<a, b^vee>``; equals the inner product (b,b)=2."""
        return int(self._pair_table[self._index[a], self._index[b]])

    def pairing_with_simple(self, a: Root, node: int) -> int:
        c = a.coeffs
        return sum(self.cartan[node - 1][j] * c[j] for j in range(self.rank))

    def reflect(self, r: Root, node: int) -> Root:
        return Root(self._reflect_coeffs(r.coeffs, node - 1))

    def roots_where(self, predicate) -> tuple[Root, ...]:
        return tuple(r for r in self.positive if predicate(r))

    def __repr__(self) -> str:
        return f"RootSystem({self.type.label}, {len(self.all_roots)} roots)"


def build_root_system(t: RootSystemType) -> RootSystem:
    """Construct the full closed root system of the given type."""
    return RootSystem(t)


def highest_root(rs: RootSystem) -> Root:
    return rs.highest


def pairing(rs: RootSystem, a: Root, b: Root) -> int:
    return rs.pairing(a, b)


# -- subsystems -------------------------------------------------------------


@dataclass(frozen=True)
class SubsystemComponent:
    """One irreducible component of a closed subsystem."""

    label: str
    simple: tuple[Root, ...]
    positive: tuple[Root, ...]
    highest: Root

    @property
    def dynkin_rank(self) -> int:
        return len(self.simple)

    @property
    def root_count(self) -> int:
        return 2 * len(self.positive)


@dataclass(frozen=True)
class Subsystem:
    """A closed set of ambient roots with detected component types."""

    positive: tuple[Root, ...]
    simple: tuple[Root, ...]
    components: tuple[SubsystemComponent, ...]

    @property
    def root_count(self) -> int:
        return 2 * len(self.positive)

    @property
    def component_labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.components)

    def simple_nodes(self) -> tuple[int, ...]:
        """Ambient node numbers, for subsystem simples that are simple roots."""
        nodes = []
        for s in self.simple:
            if s.height == 1:
                nodes.append(next(i + 1 for i, c in enumerate(s.coeffs) if c == 1))
        return tuple(sorted(nodes))


def _detect_component_label(rs: RootSystem, simples: list[Root]) -> str:
    """Classify a connected simply-laced diagram as A_k, D_k or E_k."""
    k = len(simples)
    deg = {
        i: sum(1 for j in range(k) if j != i and rs.pairing(simples[i], simples[j]) != 0)
        for i in range(k)
    }
    branch = [i for i, d in deg.items() if d >= 3]
    if any(deg[i] > 3 for i in deg):
        raise RootSystemError("node of degree > 3: not an ADE diagram")
    if not branch:
        return f"A{k}"
    if len(branch) > 1:
        raise RootSystemError("two branch nodes: not an ADE diagram")
    b = branch[0]
    arms = []
    for start in (j for j in range(k) if rs.pairing(simples[b], simples[j]) != 0 and j != b):
        length = 1
        prev, cur = b, start
        while True:
            nxt = [
                j
                for j in range(k)
                if j not in (prev, cur) and rs.pairing(simples[cur], simples[j]) != 0
            ]
            if not nxt:
                break
            if len(nxt) > 1:
                raise RootSystemError("cycle or extra branch in diagram")
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{k}"
    if arms[0] == 1 and arms[1] == 2:
        return f"E{k}"
    raise RootSystemError(f"arm lengths {arms}: not an ADE diagram")


def _make_subsystem(rs: RootSystem, positive: Iterable[Root]) -> Subsystem:
    pos = sorted(set(positive), key=Root.sort_key)
    pos_set = set(pos)
    # Simples of a closed subsystem: positive members that are not sums of
    # two positive members.
    simple = [
        r for r in pos if not any(a != r and (r - a) in pos_set for a in pos)
    ]
    # Partition the simples into connected diagram components.
    unassigned = set(range(len(simple)))
    groups: list[list[int]] = []
    while unassigned:
        seed = min(unassigned)
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in list(unassigned - comp):
                if rs.pairing(simple[i], simple[j]) != 0:
                    comp.add(j)
                    frontier.append(j)
        unassigned -= comp
        groups.append(sorted(comp))
    components = []
    claimed: set[Root] = set()
    for group in groups:
        gsimple = [simple[i] for i in group]
        # Components of a root system are mutually orthogonal, so membership
        # is detected by a nonzero pairing with the component's simples.
        roots = [r for r in pos if any(rs.pairing(r, s) != 0 for s in gsimple)]
        for r in roots:
            if r in claimed:
                raise RootSystemError("root assigned to two components")
            claimed.add(r)
        top = [r for r in roots if all((r + s) not in pos_set for s in gsimple)]
        if len(top) != 1:
            raise RootSystemError(f"component has {len(top)} maximal roots")
        label = _detect_component_label(rs, gsimple)
        components.append(
            SubsystemComponent(
                label=label,
                simple=tuple(sorted(gsimple, key=Root.sort_key)),
                positive=tuple(sorted(roots, key=Root.sort_key)),
                highest=top[0],
            )
        )
    if claimed != pos_set:
        raise RootSystemError("subsystem roots not exhausted by components")
    components.sort(key=lambda c: (-len(c.simple), c.simple[0].sort_key() if c.simple else (0, ())))
    return Subsystem(
        positive=tuple(pos), simple=tuple(sorted(simple, key=Root.sort_key)), components=tuple(components)
    )


def subsystem(rs: RootSystem, keep: Iterable[int]) -> Subsystem:
    """All roots supported on the given simple-root nodes, with detection."""
    keep_set = frozenset(keep)
    pos = [r for r in rs.positive if r.support <= keep_set]
    return _make_subsystem(rs, pos)


def orthogonal_subsystem(rs: RootSystem, betas: Sequence[Root]) -> Subsystem:
    """All roots orthogonal to every root in ``betas``."""
    for i in range(len(betas)):
        for j in range(i + 1, len(betas)):
            if rs.pairing(betas[i], betas[j]) != 0:
                raise RootSystemError(
                    f"{betas[i]} and {betas[j]} are not orthogonal"
                )
    pos = [r for r in rs.positive if all(rs.pairing(r, b) == 0 for b in betas)]
    return _make_subsystem(rs, pos)


def closure_from_simples(rs: RootSystem, simples: Sequence[Root]) -> set[Root]:
    """Reflection closure of ``simples`` inside the ambient system."""
    seen: set[Root] = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for r in frontier:
            for s in simples:
                image = r - Root(tuple(rs.pairing(r, s) * c for c in s.coeffs))
                if image not in seen:
                    if image not in rs:
                        raise RootSystemError("closure escaped the ambient system")
                    seen.add(image)
                    nxt.append(image)
        frontier = nxt
    return seen
