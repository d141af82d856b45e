"""Exact Chevalley-basis arithmetic for the split algebras of types E6/E7.

The algebra is presented on the basis {e_alpha : alpha a root} together with
the simple coroots {h_1 .. h_n}, with integer structure constants:

    [h_i, h_j] = 0
    [h_i, e_a] = <a, alpha_i^vee> e_a
    [e_a, e_-a] = h_a = sum_i c_i(a) h_i          (simply laced: coroot = root)
    [e_a, e_b]  = N(a, b) e_{a+b}                 (zero unless a+b is a root)

Signs are fixed by the extraspecial-pair convention: positive roots are taken
in the package's canonical order, each non-simple positive root gamma gets
N = +1 on its extraspecial pair (the decomposition gamma = a + b with a
minimal), and every other constant is propagated through antisymmetry, the
opposition rule N(-a,-b) = -N(a,b), the rotation rule for triples summing to
zero, and the standard Jacobi recurrence.  E6/E7 are simply laced, so every
nonzero N is +1 or -1.

All arithmetic is exact; coefficients are integers and ``Fraction``s.
``ChevalleyAlgebra`` is immutable after construction and safe to share
between threads; ``bracket`` and the matrix helpers are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

import numpy as np

from . import linalg
from .roots import Root, RootSystem

Rational = Fraction


class ChevalleyError(RuntimeError):
    """Internal inconsistency while building or checking the bracket tables."""


# ---------------------------------------------------------------------------
# structure constants
# ---------------------------------------------------------------------------


def _build_constant_fn(rs: RootSystem) -> Callable[[Root, Root], int]:
    """Return N(a, b) on arbitrary root pairs, built from extraspecial pairs."""
    members = set(rs.all_roots)
    order = {r: i for i, r in enumerate(rs.positive)}

    # Extraspecial pair of each non-simple positive root gamma: the
    # decomposition gamma = a + b into positive roots with a canonically
    # minimal (then a <= b automatically).
    extraspecial: dict[Root, tuple[Root, Root]] = {}
    for gamma in rs.positive:
        if gamma.height == 1:
            continue
        for a in rs.positive:
            if order[a] > order.get(gamma - a, len(order)):
                continue
            b = gamma - a
            if b in order:
                extraspecial[gamma] = (a, b)
                break
        else:
            raise ChevalleyError(f"{gamma} has no two-positive-root decomposition")

    memo: dict[tuple[Root, Root], int] = {}

    def n(a: Root, b: Root) -> int:
        s = a + b
        if s not in members:
            return 0
        key = (a, b)
        if key in memo:
            return memo[key]
        if a.height > 0 and b.height > 0:
            if order[b] < order[a]:
                val = -n(b, a)
            else:
                a1, b1 = extraspecial[s]
                if (a, b) == (a1, b1):
                    val = 1
                else:
                    # Jacobi on (e_a1, e_b1, e_-a), using N(a1, b1) = 1.
                    t = 0
                    if (b1 - a) in members:
                        t += n(b1, -a) * n(a1, b1 - a)
                    if (a1 - a) in members:
                        t += n(-a, a1) * n(b1, a1 - a)
                    val = -t
        elif a.height < 0 and b.height < 0:
            val = -n(-a, -b)
        elif a.height > 0:  # b negative
            if s.height > 0:
                # rotate the triple (a, b, -s):  N(a,b) = N(s, -b)
                val = n(s, -b)
            else:
                # rotate the other way:         N(a,b) = N(-s, a)
                val = n(-s, a)
        else:  # a negative, b positive
            val = -n(b, a)
        memo[key] = val
        return val

    return n


@dataclass(frozen=True)
class KernelTables:
    """Integer tables driving the verification kernels.

    Basis layout: indices ``0 .. 2m-1`` are the root vectors in root order
    (positives then negatives), indices ``2m .. 2m+n-1`` the simple coroots.
    """

    nmat: np.ndarray      # (2m, 2m) int8, structure constants
    sum_idx: np.ndarray   # (2m, 2m) int32, index of root sum, -1 none, -2 zero
    neg: np.ndarray       # (2m,) int32, index of the opposite root
    hco: np.ndarray       # (2m, n) int8, coroot coordinates of h_{root i}
    cart: np.ndarray      # (n, 2m) int8, <root_j, alpha_k^vee>
    nroots: int
    ncartan: int

    @property
    def dim(self) -> int:
        return self.nroots + self.ncartan


class ChevalleyAlgebra:
    """Signed structure constants and exact bracket engine over one root system.

    Immutable after construction.  A failed internal consistency check is a
    construction-time ``ChevalleyError``: it signals a bug, never valid output.
    """

    def __init__(self, rs: RootSystem, jacobi_samples: int = 2000) -> None:
        self.rs = rs
        self.n = rs.rank
        self.m = rs.num_positive
        self.dimension = 2 * self.m + self.n

        nfun = _build_constant_fn(rs)
        nroots = 2 * self.m
        nmat = np.zeros((nroots, nroots), dtype=np.int8)
        sum_idx = np.full((nroots, nroots), -1, dtype=np.int32)
        neg = np.zeros(nroots, dtype=np.int32)
        for i, a in enumerate(rs.all_roots):
            neg[i] = rs.index_of(-a)
        for i, a in enumerate(rs.all_roots):
            for j, b in enumerate(rs.all_roots):
                s = a + b
                if s in rs:
                    sum_idx[i, j] = rs.index_of(s)
                    nmat[i, j] = nfun(a, b)
                elif j == neg[i]:
                    sum_idx[i, j] = -2
        hco = np.array([r.coeffs for r in rs.all_roots], dtype=np.int8)
        cart = np.array(
            [[rs.pairing_with_simple(r, k + 1) for r in rs.all_roots] for k in range(self.n)],
            dtype=np.int8,
        )
        self._tables = KernelTables(
            nmat=nmat, sum_idx=sum_idx, neg=neg, hco=hco, cart=cart,
            nroots=nroots, ncartan=self.n,
        )
        self._nfun = nfun
        self._verify_tables()
        self._verify_jacobi_sampled(jacobi_samples)

    # -- table-level consistency --------------------------------------------

    def _verify_tables(self) -> None:
        t = self._tables
        nmat, sum_idx, neg = t.nmat, t.sum_idx, t.neg
        if not np.array_equal(nmat, -nmat.T):
            raise ChevalleyError("antisymmetry N(b,a) = -N(a,b) fails")
        has_sum = sum_idx >= 0
        if np.any(nmat[~has_sum] != 0):
            raise ChevalleyError("nonzero constant on a non-root sum")
        if np.any(np.abs(nmat[has_sum]) != 1):
            # simply laced: every root string through a root has length p+1 = 1
            raise ChevalleyError("constant magnitude differs from p+1 = 1")
        # String property: if a+b is a root then b-a is not (p = 0).
        diff_is_root = sum_idx[neg] >= 0  # [i,j] -> (a_j - a_i) is a root
        if np.any(has_sum & diff_is_root):
            raise ChevalleyError("string property violated: p > 0 in a laced system")
        inv = nmat[np.ix_(neg, neg)]
        prod = nmat * inv
        if np.any(prod[has_sum] != -1):
            raise ChevalleyError("opposition rule N(a,b) N(-a,-b) = -1 fails")

    def _verify_jacobi_sampled(self, samples: int) -> None:
        if samples <= 0:
            return
        bad = self.jacobi_violations_sampled(samples, seed=0)
        if bad:
            raise ChevalleyError(f"Jacobi identity failed on {bad} sampled triples")

    # -- basis bookkeeping ---------------------------------------------------

    @property
    def tables(self) -> KernelTables:
        return self._tables

    def N(self, a: Root, b: Root) -> int:
        """Structure constant N(a, b); zero when a+b is not a root."""
        return self._nfun(a, b)

    def structure_constants(self) -> Mapping[tuple[Root, Root], int]:
        """Dense map of all nonzero structure constants (built on demand)."""
        out: dict[tuple[Root, Root], int] = {}
        roots = self.rs.all_roots
        t = self._tables
        for i, a in enumerate(roots):
            row = t.nmat[i]
            for j, b in enumerate(roots):
                if row[j]:
                    out[(a, b)] = int(row[j])
        return out

    # -- elements ------------------------------------------------------------

    def zero(self) -> "AlgElement":
        return AlgElement({}, (Fraction(0),) * self.n)

    def root_vector(self, r: Root, coeff: object = 1) -> "AlgElement":
        if r not in self.rs:
            raise ChevalleyError(f"{r} is not a root of {self.rs.type.label}")
        c = Fraction(coeff)
        return AlgElement({r: c} if c else {}, (Fraction(0),) * self.n)

    def cartan_element(self, coords: Sequence[object]) -> "AlgElement":
        if len(coords) != self.n:
            raise ChevalleyError("wrong Cartan coordinate length")
        return AlgElement({}, tuple(Fraction(c) for c in coords))

    def coroot_element(self, r: Root) -> "AlgElement":
        """h_r = [e_r, e_-r], in simple-coroot coordinates."""
        return self.cartan_element(r.coeffs)

    def element(self, root_part: Mapping[Root, object], cartan: Sequence[object] | None = None) -> "AlgElement":
        cart = tuple(Fraction(c) for c in cartan) if cartan is not None else (Fraction(0),) * self.n
        parts = {r: Fraction(c) for r, c in root_part.items() if Fraction(c) != 0}
        for r in parts:
            if r not in self.rs:
                raise ChevalleyError(f"{r} is not a root")
        return AlgElement(parts, cart)

    def coordinates(self, x: "AlgElement") -> list[Fraction]:
        """Dense coordinates on (root vectors in root order, then coroots)."""
        coords = [Fraction(0)] * self.dimension
        for r, c in x.root_part.items():
            coords[self.rs.index_of(r)] = c
        for k, c in enumerate(x.cartan_part):
            coords[2 * self.m + k] = c
        return coords

    # -- bracket --------------------------------------------------------------

    def bracket(self, x: "AlgElement", y: "AlgElement") -> "AlgElement":
        """Exact Lie bracket, bilinear over the rationals."""
        rs = self.rs
        root_acc: dict[Root, Fraction] = {}
        cart_acc = [Fraction(0)] * self.n

        def add_root(r: Root, c: Fraction) -> None:
            if not c:
                return
            cur = root_acc.get(r)
            new = c if cur is None else cur + c
            if new:
                root_acc[r] = new
            elif cur is not None:
                del root_acc[r]

        for a, ca in x.root_part.items():
            for b, cb in y.root_part.items():
                coeff = ca * cb
                s = a + b
                if s in rs:
                    add_root(s, coeff * self.N(a, b))
                elif s.height == 0 and not any(s.coeffs):
                    for k in range(self.n):
                        cart_acc[k] += coeff * a.coeffs[k]
        for k in range(self.n):
            hk = x.cartan_part[k]
            if hk:
                for b, cb in y.root_part.items():
                    add_root(b, hk * cb * rs.pairing_with_simple(b, k + 1))
        for k in range(self.n):
            hk = y.cartan_part[k]
            if hk:
                for a, ca in x.root_part.items():
                    add_root(a, -hk * ca * rs.pairing_with_simple(a, k + 1))
        return AlgElement(root_acc, tuple(cart_acc))

    # -- Jacobi verification ---------------------------------------------------

    def jacobi_violations_sampled(self, samples: int, seed: int = 0) -> int:
        """Evaluate the Jacobi sum on deterministic pseudo-random basis triples."""
        from . import kernels

        rng = np.random.default_rng(seed)
        triples = rng.integers(0, self.dimension, size=(samples, 3), dtype=np.int64)
        return kernels.jacobi_violations_python(self._tables, triples)

    def jacobi_violations_exhaustive(self, backend: str | None = None) -> tuple[int, str]:
        """Jacobi residual over every ordered basis triple.

        Returns (violation count, backend actually used).  The count must be
        zero for a correctly constructed algebra.
        """
        from . import kernels

        return kernels.jacobi_violations_exhaustive(self._tables, backend=backend)


@dataclass(frozen=True)
class AlgElement:
    """Algebra element: root-space coefficients plus simple-coroot coordinates.

    Zero coefficients are never stored in ``root_part``.
    """

    root_part: Mapping[Root, Fraction]
    cartan_part: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "root_part", {r: c for r, c in self.root_part.items() if c != 0}
        )
        object.__setattr__(
            self, "cartan_part", tuple(Fraction(c) for c in self.cartan_part)
        )

    @property
    def is_zero(self) -> bool:
        return not self.root_part and not any(self.cartan_part)

    def __add__(self, other: "AlgElement") -> "AlgElement":
        parts = dict(self.root_part)
        for r, c in other.root_part.items():
            parts[r] = parts.get(r, Fraction(0)) + c
        cart = tuple(a + b for a, b in zip(self.cartan_part, other.cartan_part))
        return AlgElement(parts, cart)

    def __sub__(self, other: "AlgElement") -> "AlgElement":
        return self + other.scaled(-1)

    def __neg__(self) -> "AlgElement":
        return self.scaled(-1)

    def scaled(self, c: object) -> "AlgElement":
        f = Fraction(c)
        return AlgElement(
            {r: f * v for r, v in self.root_part.items()},
            tuple(f * v for v in self.cartan_part),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgElement):
            return NotImplemented
        return dict(self.root_part) == dict(other.root_part) and self.cartan_part == other.cartan_part

    def __repr__(self) -> str:
        terms = [f"{c}*e{r.coeffs}" for r, c in sorted(self.root_part.items(), key=lambda kv: kv[0].sort_key())]
        if any(self.cartan_part):
            terms.append(f"h{tuple(str(c) for c in self.cartan_part)}")
        return " + ".join(terms) if terms else "0"


def build_chevalley(rs: RootSystem, jacobi_samples: int = 2000) -> ChevalleyAlgebra:
    """Build the exact bracket engine for ``rs`` (fatal on any inconsistency)."""
    return ChevalleyAlgebra(rs, jacobi_samples=jacobi_samples)


def bracket(alg: ChevalleyAlgebra, x: AlgElement, y: AlgElement) -> AlgElement:
    return alg.bracket(x, y)


# ---------------------------------------------------------------------------
# linearized actions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ActionMatrix:
    """Exact matrices of an ad-action on an invariant module span.

    ``matrices[g][i][j]`` is the coefficient on ``module[i]`` of the bracket
    of ``acting[g]`` with ``module[j]``.
    """

    acting: tuple[AlgElement, ...]
    module: tuple[AlgElement, ...]
    matrices: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def matrix_of(self, g: int) -> linalg.Matrix:
        return [list(row) for row in self.matrices[g]]

    def evaluated_at(self, coords: Sequence[object]) -> linalg.Matrix:
        """Matrix whose column g is (acting_g acting on the point ``coords``)."""
        v = [Fraction(c) for c in coords]
        if len(v) != len(self.module):
            raise ValueError("point must be given in module coordinates")
        cols = [linalg.mat_vec(self.matrix_of(g), v) for g in range(len(self.acting))]
        return [[cols[g][i] for g in range(len(self.acting))] for i in range(len(self.module))]

    def weights(self) -> list[tuple[Fraction, ...]]:
        """Diagonal weight vector of each module basis element (diagonal actions)."""
        out = []
        for j in range(len(self.module)):
            out.append(tuple(self.matrices[g][j][j] for g in range(len(self.acting))))
        return out


def _single_root_coordinates(
    module: Sequence[AlgElement],
) -> Callable[[AlgElement], list[Fraction] | None] | None:
    """Fast coordinate reader when every module vector spans one root space."""
    slots: dict[Root, tuple[int, Fraction]] = {}
    for j, v in enumerate(module):
        if any(v.cartan_part) or len(v.root_part) != 1:
            return None
        (root, scale), = v.root_part.items()
        if root in slots:
            return None
        slots[root] = (j, scale)

    def read(w: AlgElement) -> list[Fraction] | None:
        if any(w.cartan_part):
            return None
        out = [Fraction(0)] * len(module)
        for r, c in w.root_part.items():
            hit = slots.get(r)
            if hit is None:
                return None
            out[hit[0]] = c / hit[1]
        return out

    return read


def action_matrix(
    alg: ChevalleyAlgebra,
    acting: Sequence[AlgElement],
    module: Sequence[AlgElement],
) -> ActionMatrix:
    """Linearize the ad-action of ``acting`` on the span of ``module``.

    Raises ``ChevalleyError`` if some bracket leaves the module span.
    """
    reader = _single_root_coordinates(module)
    if reader is None:
        coord_cols = [alg.coordinates(v) for v in module]
        coord_mat = [
            [coord_cols[j][i] for j in range(len(module))] for i in range(alg.dimension)
        ]
        solver = linalg.PreparedSolver(coord_mat)
        reader = lambda w: solver.solve(alg.coordinates(w))  # noqa: E731
    mats = []
    for g in acting:
        cols = []
        for v in module:
            w = alg.bracket(g, v)
            sol = reader(w)
            if sol is None:
                raise ChevalleyError("module span is not invariant under the acting set")
            cols.append(sol)
        mats.append(tuple(tuple(cols[j][i] for j in range(len(module))) for i in range(len(module))))
    return ActionMatrix(acting=tuple(acting), module=tuple(module), matrices=tuple(mats))


def kernel_dim(m: linalg.Matrix) -> int:
    """Exact nullity over the rationals."""
    return linalg.nullity(m)
