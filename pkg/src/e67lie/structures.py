"""Decompositions, bases, forms and dimension counts over the two-step
parabolic and the Heisenberg parabolic.

The objects here are the load-bearing combinatorial facts of the package:

* the split ``u = X + Y + Z(u)`` of the two-step nilradical, where ``X`` is
  the part lying in the abelian parabolic's Levi and ``Z(u)`` the center;
* the split ``n3 = W + W* + Z(n3)`` of the Heisenberg nilradical, with
  ``W``/``W*`` a polarization of the symplectic quotient;
* a paired basis ``e_{+-i}`` of ``Z(u)`` and ``f_{+-i}`` of ``W`` meeting
  ``[e_i, f_j] = delta_ij e_1``, normalized so the invariant symmetric form
  on ``Z(u)`` is exactly hyperbolic;
* the central-character machinery: spectrum vectors, the isotropy
  trichotomy, induced Heisenberg ranks, stabilizer and orbit-tangent
  dimensions;
* for E7 only: the quartet partition of the noncentral root slice and the
  rank-one-stable polarization X1 + Y1.

Everything is exact.  Every construction re-verifies its defining conditions
and raises ``StructureError`` on any failure; a raised error always means a
falsified structural claim, not a recoverable condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .chevalley import AlgElement, ActionMatrix, ChevalleyAlgebra, action_matrix
from .parabolic import ParabolicDecomposition
from .roots import Root, RootSystem, RootSystemType, subsystem

Rational = Fraction


class StructureError(RuntimeError):
    """A structural claim failed its bracket-level verification."""


# ---------------------------------------------------------------------------
# small exact polynomials (for the closed-form spectrum identity)
# ---------------------------------------------------------------------------


Monomial = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class Poly:
    """Sparse multivariate polynomial with Fraction coefficients."""

    terms: Mapping[Monomial, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "terms", {m: c for m, c in self.terms.items() if c != 0}
        )

    @staticmethod
    def const(c: object) -> "Poly":
        return Poly({(): Fraction(c)})

    @staticmethod
    def var(name: str) -> "Poly":
        return Poly({((name, 1),): Fraction(1)})

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                exps: dict[str, int] = {}
                for v, e in m1 + m2:
                    exps[v] = exps.get(v, 0) + e
                mono = tuple(sorted(exps.items()))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return Poly(out)

    def scaled(self, c: object) -> "Poly":
        f = Fraction(c)
        return Poly({m: f * v for m, v in self.terms.items()})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v, e in m:
                term *= values[v] ** e
            total += term
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(f"{v}^{e}" if e > 1 else v for v, e in m)
            bits.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# root-set decompositions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RadicalDecomposition:
    """u = X + Y + Z(u) for the two-step parabolic's nilradical.

    ``x_roots`` is the slice inside the abelian parabolic's Levi (last
    coefficient zero), ``zu_roots`` the center, ``y_roots`` the rest; each
    part is a union of root spaces and the three parts partition u.
    """

    x_roots: tuple[Root, ...]
    y_roots: tuple[Root, ...]
    zu_roots: tuple[Root, ...]

    @property
    def dims(self) -> tuple[int, int, int]:
        return (len(self.x_roots), len(self.y_roots), len(self.zu_roots))

    @property
    def omega_roots(self) -> tuple[Root, ...]:
        """The noncentral slice X + Y."""
        return tuple(sorted(self.x_roots + self.y_roots, key=Root.sort_key))


def split_radical(alg: ChevalleyAlgebra, r_dec: ParabolicDecomposition) -> RadicalDecomposition:
    """Split the two-step nilradical; verifies each defining condition."""
    rs = alg.rs
    n = rs.rank
    nil = set(r_dec.nilradical_roots)
    zu = set(r_dec.center_roots)
    x = {r for r in nil - zu if r.coeff(n) == 0}
    y = nil - zu - x
    # The split is forced: X is a coefficient filter, Z(u) the center, and Y
    # the set-theoretic rest; check the parts are disjoint and exhaustive.
    if x & zu or y & zu or x & y or (x | y | zu) != nil:
        raise StructureError("u-split is not a partition")
    if any(r.coeff(n) != 0 for r in x):
        raise StructureError("X contains a root outside the abelian Levi")
    if any(r.coeff(n) == 0 for r in y):
        raise StructureError("Y claims a root that conditions force into X")
    key = Root.sort_key
    return RadicalDecomposition(
        x_roots=tuple(sorted(x, key=key)),
        y_roots=tuple(sorted(y, key=key)),
        zu_roots=tuple(sorted(zu, key=key)),
    )


@dataclass(frozen=True)
class HeisenbergDecomposition:
    """n3 = W + W* + Z(n3) for the Heisenberg parabolic's nilradical."""

    w_roots: tuple[Root, ...]
    wstar_roots: tuple[Root, ...]
    center_root: Root

    @property
    def dims(self) -> tuple[int, int, int]:
        return (len(self.w_roots), len(self.wstar_roots), 1)


def split_heisenberg_radical(
    alg: ChevalleyAlgebra,
    q_dec: ParabolicDecomposition,
    u_split: RadicalDecomposition,
) -> HeisenbergDecomposition:
    """Split the Heisenberg nilradical and verify the polarization.

    The induced skew form ``omega(x, y) e_top = [x, y]`` on n3 mod center
    must vanish on W x W and W* x W* and pair W with W* perfectly; also the
    central root spaces of u other than the two top roots must fall in W*.
    """
    rs = alg.rs
    n = rs.rank
    nil = set(q_dec.nilradical_roots)
    top = rs.highest
    w = {r for r in nil if r != top and r.coeff(n) == 0}
    wstar = nil - w - {top}
    key = Root.sort_key
    wl = sorted(w, key=key)
    wsl = sorted(wstar, key=key)
    if len(wl) != len(wsl):
        raise StructureError("W and W* have different dimensions")
    for part in (wl, wsl):
        for i, a in enumerate(part):
            for b in part[i:]:
                if (a + b) == top:
                    raise StructureError("polarization half is not isotropic")
    gram = [
        [Fraction(alg.N(a, b)) if (a + b) == top else Fraction(0) for b in wsl]
        for a in wl
    ]
    if linalg.rank(gram) != len(wl):
        raise StructureError("W does not pair perfectly with W*")
    beta2 = _second_highest_root(rs)
    for r in u_split.zu_roots:
        if r not in (top, beta2) and r not in wstar:
            raise StructureError("central root space of u escapes W*")
    return HeisenbergDecomposition(
        w_roots=tuple(wl), wstar_roots=tuple(wsl), center_root=top
    )


def _second_highest_root(rs: RootSystem) -> Root:
    """Highest root of the Heisenberg Levi's derived subsystem."""
    from .parabolic import _q_drop_node  # local: avoids a cycle at import time

    node = _q_drop_node(rs)
    keep = set(range(1, rs.rank + 1)) - {node}
    levi = subsystem(rs, keep)
    if len(levi.components) != 1:
        raise StructureError("Heisenberg Levi is not irreducible")
    return levi.components[0].highest


# ---------------------------------------------------------------------------
# the paired basis of Z(u) and W
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BasisVector:
    root: Root
    scale: Fraction


@dataclass(frozen=True)
class PairedBasis:
    """Bases e_{+-1..+-k} of Z(u) and f_{+-2..+-k} of W inside the Levi.

    Every vector is a rational multiple of a single Chevalley root vector.
    Index +1 sits on the highest root, -1 on the second cascade root, and
    ``[e_{+-i}, f_{+-j}] = delta e_1`` holds exactly for |i|,|j| >= 2.
    """

    kind: RootSystemType
    e: Mapping[int, BasisVector]
    f: Mapping[int, BasisVector]

    @property
    def k(self) -> int:
        """Index bound: Z(u) has dimension 2k."""
        return max(self.e)

    @property
    def e_order(self) -> tuple[int, ...]:
        k = self.k
        return tuple(range(1, k + 1)) + tuple(range(-1, -k - 1, -1))

    def e_element(self, alg: ChevalleyAlgebra, i: int) -> AlgElement:
        bv = self.e[i]
        return alg.root_vector(bv.root, bv.scale)

    def f_element(self, alg: ChevalleyAlgebra, i: int) -> AlgElement:
        bv = self.f[i]
        return alg.root_vector(bv.root, bv.scale)


def _levi_generators(
    alg: ChevalleyAlgebra, dec: ParabolicDecomposition, include_center: bool = False
) -> list[AlgElement]:
    """Generators of the Levi's derived algebra (all root vectors plus the
    subsystem's simple coroots), optionally with the Levi center appended."""
    gens: list[AlgElement] = []
    for r in dec.levi.positive:
        gens.append(alg.root_vector(r))
        gens.append(alg.root_vector(-r))
    for s in dec.levi.simple:
        gens.append(alg.coroot_element(s))
    if include_center:
        rs = alg.rs
        keep = sorted(dec.levi_keep)
        rows = [[Fraction(rs.cartan[i - 1][j]) for j in range(rs.rank)] for i in keep]
        for vec in linalg.nullspace(rows):
            gens.append(alg.cartan_element(vec))
    return gens


def _solve_invariant_form(
    alg: ChevalleyAlgebra, r_dec: ParabolicDecomposition, zu: Sequence[Root]
) -> dict[tuple[Root, Root], Fraction]:
    """The (unique up to scale) symmetric form on Z(u) invariant under the
    Levi's derived algebra, normalized to 1 on the top root pair.

    Weight reduction first: invariance under the Levi Cartan forces the form
    to pair root spaces with opposite Levi weights only, which leaves one
    unknown per root pair; invariance under the simple root vectors then cuts
    the unknowns down to a line.
    """
    rs = alg.rs
    levi_simple = list(r_dec.levi.simple)
    weight = {
        mu: tuple(rs.pairing(mu, s) for s in levi_simple) for mu in zu
    }
    partner: dict[Root, Root] = {}
    for mu in zu:
        mates = [nu for nu in zu if all(a + b == 0 for a, b in zip(weight[mu], weight[nu]))]
        if len(mates) != 1:
            raise StructureError("Levi weights on Z(u) are not in opposite pairs")
        partner[mu] = mates[0]
    pairs: list[frozenset[Root]] = []
    for mu in zu:
        p = frozenset({mu, partner[mu]})
        if p not in pairs:
            pairs.append(p)
    pair_index = {p: i for i, p in enumerate(pairs)}

    def unknown(mu: Root, nu: Root) -> int | None:
        if partner[mu] != nu:
            return None
        return pair_index[frozenset({mu, nu})]

    zu_set = set(zu)
    for sigma_root in r_dec.levi.positive:
        for sigma in (sigma_root, -sigma_root):
            for mu in zu:
                smu = sigma + mu
                if smu in alg.rs and smu not in zu_set:
                    raise StructureError("Levi action leaves Z(u)")
    rows: list[list[Fraction]] = []
    for sigma_root in levi_simple:
        for sigma in (sigma_root, -sigma_root):
            for mu in zu:
                for nu in zu:
                    row = [Fraction(0)] * len(pairs)
                    hit = False
                    smu = sigma + mu
                    if smu in zu_set:
                        u = unknown(smu, nu)
                        if u is not None:
                            row[u] += alg.N(sigma, mu)
                            hit = True
                    snu = sigma + nu
                    if snu in zu_set:
                        u = unknown(mu, snu)
                        if u is not None:
                            row[u] += alg.N(sigma, nu)
                            hit = True
                    if hit:
                        rows.append(row)
    basis = linalg.nullspace(rows) if rows else []
    if len(basis) != 1:
        raise StructureError(
            f"invariant form space has dimension {len(basis)}, expected 1"
        )
    sol = basis[0]
    top_pair = frozenset({rs.highest, _second_highest_root(rs)})
    if top_pair not in pair_index:
        raise StructureError("top roots are not a weight pair")
    anchor = sol[pair_index[top_pair]]
    if anchor == 0:
        raise StructureError("invariant form vanishes on the top root pair")
    values: dict[tuple[Root, Root], Fraction] = {}
    for mu in zu:
        nu = partner[mu]
        v = sol[pair_index[frozenset({mu, nu})]] / anchor
        if v == 0:
            raise StructureError("invariant form is degenerate on a weight pair")
        values[(mu, nu)] = v
    return values


def find_paired_basis(
    alg: ChevalleyAlgebra,
    r_dec: ParabolicDecomposition,
    q_dec: ParabolicDecomposition,
    u_split: RadicalDecomposition,
    n3_split: HeisenbergDecomposition,
) -> PairedBasis:
    """Construct and fully verify the paired basis.

    The root assignment is forced (partner roots sum to the sum of the two
    top roots; the f-root of index i is the top root minus the e-root), and
    the rational rescalings are forced by the normalizations, so the search
    reduces to a deterministic construction followed by an exhaustive check
    of every required bracket.  Index conventions: pairs are numbered by
    descending height of the taller member; inside a pair the positive index
    goes to the taller root, ties to the lexicographically smaller one.
    """
    rs = alg.rs
    k = rs.rank - 2
    top = rs.highest
    second = _second_highest_root(rs)
    zu = list(u_split.zu_roots)
    if top not in zu or second not in zu:
        raise StructureError("Z(u) does not contain both top roots")
    pair_sum = top + second
    partner = {}
    for mu in zu:
        nu = pair_sum - mu
        if nu not in set(zu):
            raise StructureError(f"{mu} has no partner inside Z(u)")
        partner[mu] = nu
    others = [mu for mu in zu if mu not in (top, second)]
    chosen: list[tuple[Root, Root]] = []
    seen: set[Root] = set()
    for mu in others:
        if mu in seen:
            continue
        nu = partner[mu]
        seen.update({mu, nu})
        if (mu.height, tuple(-c for c in mu.coeffs)) > (nu.height, tuple(-c for c in nu.coeffs)):
            plus, minus = mu, nu
        else:
            plus, minus = nu, mu
        chosen.append((plus, minus))
    chosen.sort(key=lambda pm: (-pm[0].height, pm[0].coeffs))
    if len(chosen) != k - 1:
        raise StructureError("wrong number of root pairs in Z(u)")

    e_roots: dict[int, Root] = {1: top, -1: second}
    for idx, (plus, minus) in enumerate(chosen, start=2):
        e_roots[idx] = plus
        e_roots[-idx] = minus

    levi_r = set(r_dec.levi.positive)
    w_in_levi = {r for r in n3_split.w_roots if r in levi_r}
    f_roots: dict[int, Root] = {}
    for i, mu in e_roots.items():
        if abs(i) == 1:
            continue
        nu = top - mu
        if nu not in rs or nu not in w_in_levi:
            raise StructureError(f"f-root for index {i} is not in W inside the Levi")
        f_roots[i] = nu
    if set(f_roots.values()) != w_in_levi:
        raise StructureError("f-roots do not exhaust W inside the Levi")

    form = _solve_invariant_form(alg, r_dec, zu)

    e_scales: dict[int, Fraction] = {1: Fraction(1), -1: Fraction(1)}
    if form[(top, second)] != 1:
        raise StructureError("form normalization on the top pair failed")
    for i in range(2, k + 1):
        e_scales[i] = Fraction(1)
        e_scales[-i] = 1 / form[(e_roots[i], e_roots[-i])]
    f_scales: dict[int, Fraction] = {}
    for i, nu in f_roots.items():
        c = alg.N(e_roots[i], nu)
        if c == 0:
            raise StructureError("paired bracket vanishes")
        f_scales[i] = 1 / (e_scales[i] * c)

    basis = PairedBasis(
        kind=rs.type,
        e={i: BasisVector(e_roots[i], e_scales[i]) for i in e_roots},
        f={i: BasisVector(f_roots[i], f_scales[i]) for i in f_roots},
    )
    _verify_paired_basis(alg, q_dec, basis)
    return basis


def _verify_paired_basis(
    alg: ChevalleyAlgebra, q_dec: ParabolicDecomposition, basis: PairedBasis
) -> None:
    rs = alg.rs
    k = basis.k
    e1 = basis.e_element(alg, 1)
    idxs = [i for i in basis.f]
    for i in idxs:
        for j in idxs:
            got = alg.bracket(basis.e_element(alg, i), basis.f_element(alg, j))
            want = e1 if i == j else alg.zero()
            if got != want:
                raise StructureError(f"[e_{i}, f_{j}] != delta e_1")
    em1 = basis.e_element(alg, -1)
    for i in idxs:
        got = alg.bracket(em1, basis.f_element(alg, i))
        want = -basis.e_element(alg, -i)
        if got != want:
            raise StructureError(f"[e_-1, f_{i}] != -e_{-i}")
    spanned = {bv.root for bv in basis.e.values()} | {bv.root for bv in basis.f.values()}
    for r in q_dec.nilradical_roots:
        if r in spanned:
            continue
        if not alg.bracket(em1, alg.root_vector(r)).is_zero:
            raise StructureError(f"[e_-1, g_{r}] != 0 outside the spanned roots")
    for i in list(range(1, k + 1)) + list(range(-1, -k - 1, -1)):
        if i not in basis.e:
            raise StructureError(f"missing e index {i}")


# ---------------------------------------------------------------------------
# the invariant form in the paired basis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantForm:
    """Hyperbolic Gram matrix of the invariant form on the paired e-basis.

    Basis order is ``e_1 .. e_k, e_-1 .. e_-k``; the Gram matrix has
    ``<e_i, e_-j> = delta_ij`` and zero blocks on equal signs.  ``root_values``
    stores the same form on raw root-vector coordinates.
    """

    basis: PairedBasis
    gram: tuple[tuple[Fraction, ...], ...]
    root_values: Mapping[tuple[Root, Root], Fraction]

    @property
    def k(self) -> int:
        return self.basis.k

    @property
    def order(self) -> tuple[int, ...]:
        return self.basis.e_order

    def value(self, v: Mapping[int, Fraction], w: Mapping[int, Fraction]) -> Fraction:
        total = Fraction(0)
        for i, ci in v.items():
            for j, cj in w.items():
                if i == -j:
                    total += ci * cj
        return total

    def quadratic(self, v: Mapping[int, Fraction]) -> Fraction:
        return self.value(v, v)

    def value_with_root_vector(self, v: Mapping[int, Fraction], mu: Root) -> Fraction:
        """<v, E_mu> where E_mu is an unscaled Chevalley root vector."""
        total = Fraction(0)
        for i, ci in v.items():
            bv = self.basis.e[i]
            pairval = self.root_values.get((bv.root, mu))
            if pairval is not None:
                total += ci * bv.scale * pairval
        return total

    def signature(self) -> tuple[int, int]:
        pos, negs, zero = linalg.signature([list(row) for row in self.gram])
        if zero:
            raise StructureError("invariant form is degenerate")
        return pos, negs


def center_form(
    alg: ChevalleyAlgebra,
    r_dec: ParabolicDecomposition,
    u_split: RadicalDecomposition,
    basis: PairedBasis,
) -> InvariantForm:
    """Assemble the hyperbolic Gram matrix and cross-validate Levi invariance.

    The Gram matrix is declared hyperbolic on the paired basis and then
    checked two ways: it must agree with the independently solved invariant
    form, and the matrix identity ``M^T G + G M = 0`` must hold for the
    action matrix M of every generator of the Levi's derived algebra.
    """
    rs = alg.rs
    zu = list(u_split.zu_roots)
    solved = _solve_invariant_form(alg, r_dec, zu)
    order = basis.e_order
    dim = len(order)
    gram = [[Fraction(0)] * dim for _ in range(dim)]
    for a, i in enumerate(order):
        for b, j in enumerate(order):
            bi, bj = basis.e[i], basis.e[j]
            val = solved.get((bi.root, bj.root), Fraction(0)) * bi.scale * bj.scale
            gram[a][b] = val
            want = Fraction(1) if i == -j else Fraction(0)
            if val != want:
                raise StructureError(
                    f"form value <e_{i}, e_{j}> = {val}, hyperbolic normalization broken"
                )
    module = [basis.e_element(alg, i) for i in order]
    gens = _levi_generators(alg, r_dec)
    act = action_matrix(alg, gens, module)
    # G is the hyperbolic permutation matrix, so (M^T G + G M)[a][b] reduces
    # to M[dual(b)][a] + M[dual(a)][b] with dual the index of the opposite
    # basis label.
    dual = [order.index(-i) for i in order]
    for g in range(len(gens)):
        m = act.matrix_of(g)
        for a in range(dim):
            for b in range(dim):
                if m[dual[b]][a] + m[dual[a]][b] != 0:
                    raise StructureError("Levi invariance of the form fails")
    root_values = {pair: val for pair, val in solved.items()}
    return InvariantForm(
        basis=basis,
        gram=tuple(tuple(row) for row in gram),
        root_values=root_values,
    )


# ---------------------------------------------------------------------------
# spectrum vectors and central characters
# ---------------------------------------------------------------------------


class CharacterClass(Enum):
    ZERO = "zero"
    SMALL = "small"
    BIG = "big"


@dataclass(frozen=True)
class SpectrumVector:
    """Central-character parameter vector on the paired e-basis.

    ``v = t e_1 + sum_i (t a_i e_i + t a_-i e_-i) - (s + t sum_i a_i a_-i) e_-1``
    with t nonzero; its form value is exactly -2 t s, so s = 0 gives the
    isotropic family and s != 0 the anisotropic one.
    """

    t: Fraction
    s: Fraction
    a: Mapping[int, Fraction]
    coords: Mapping[int, Fraction]
    form_value: Fraction


def spectrum_vector(
    form: InvariantForm,
    t: object,
    s: object,
    a: Mapping[int, object] | None = None,
) -> SpectrumVector:
    """Build the spectrum vector for parameters (t, s, a); error when t = 0."""
    tf, sf = Fraction(t), Fraction(s)
    if tf == 0:
        raise StructureError("spectrum parameter t must be nonzero")
    k = form.k
    af: dict[int, Fraction] = {i: Fraction(0) for i in range(2, k + 1)}
    af.update({-i: Fraction(0) for i in range(2, k + 1)})
    for i, val in (a or {}).items():
        if abs(i) < 2 or abs(i) > k:
            raise StructureError(f"spectrum index {i} out of range")
        af[i] = Fraction(val)
    coords: dict[int, Fraction] = {1: tf}
    cross = Fraction(0)
    for i in range(2, k + 1):
        coords[i] = tf * af[i]
        coords[-i] = tf * af[-i]
        cross += af[i] * af[-i]
    coords[-1] = -(sf + cross * tf)
    coords = {i: c for i, c in coords.items() if c != 0}
    value = form.quadratic(coords)
    if value != -2 * tf * sf:
        raise StructureError("spectrum form value disagrees with the closed form")
    return SpectrumVector(t=tf, s=sf, a=af, coords=coords, form_value=value)


def spectrum_identity_poly(k: int) -> tuple[Poly, Poly]:
    """Symbolic form value of the spectrum vector and its closed form -2ts.

    Computed by expanding the hyperbolic form on polynomial coordinates in
    the variables t, s, a_{+-2} .. a_{+-k}; equality is exact cancellation.
    """
    t, s = Poly.var("t"), Poly.var("s")
    avars = {i: Poly.var(f"a{i}") for i in range(2, k + 1)}
    avars.update({-i: Poly.var(f"a_m{i}") for i in range(2, k + 1)})
    coords: dict[int, Poly] = {1: t}
    cross = Poly.const(0)
    for i in range(2, k + 1):
        coords[i] = t * avars[i]
        coords[-i] = t * avars[-i]
        cross = cross + avars[i] * avars[-i]
    coords[-1] = -(s + cross * t)
    value = Poly.const(0)
    for i in range(1, k + 1):
        value = value + coords[i] * coords[-i] + coords[-i] * coords[i]
    return value, -(Poly.const(2) * t * s)


def classify_character(form: InvariantForm, v: Mapping[int, Fraction]) -> CharacterClass:
    """Trichotomy of central characters by the invariant form value."""
    coords = {i: Fraction(c) for i, c in v.items() if Fraction(c) != 0}
    if not coords:
        return CharacterClass.ZERO
    return CharacterClass.SMALL if form.quadratic(coords) == 0 else CharacterClass.BIG


# ---------------------------------------------------------------------------
# induced skew form on X + Y and its rank
# ---------------------------------------------------------------------------


def _e_coords_to_element(
    alg: ChevalleyAlgebra, form: InvariantForm, v: Mapping[int, Fraction]
) -> AlgElement:
    out = alg.zero()
    for i, c in v.items():
        out = out + form.basis.e_element(alg, i).scaled(c)
    return out


def omega_matrix(
    alg: ChevalleyAlgebra,
    u_split: RadicalDecomposition,
    form: InvariantForm,
    v: Mapping[int, Fraction],
) -> list[list[Fraction]]:
    """Gram matrix of omega_v(x, y) = <v, [x, y]> on the noncentral slice.

    Brackets of two noncentral radical roots land in the center (two-step),
    so each entry is a single structure constant paired against v.
    """
    omega = u_split.omega_roots
    zu_set = set(u_split.zu_roots)
    k = len(omega)
    out = [[Fraction(0)] * k for _ in range(k)]
    vv = {i: Fraction(c) for i, c in v.items()}
    pair_value: dict[Root, Fraction] = {
        mu: form.value_with_root_vector(vv, mu) for mu in zu_set
    }
    for i, a in enumerate(omega):
        for j in range(i + 1, k):
            b = omega[j]
            s = a + b
            if s in zu_set:
                val = alg.N(a, b) * pair_value[s]
                out[i][j] = val
                out[j][i] = -val
            elif s in alg.rs:
                raise StructureError("noncentral bracket escapes the center")
    return out


def induced_heisenberg_rank(
    alg: ChevalleyAlgebra,
    u_split: RadicalDecomposition,
    form: InvariantForm,
    v: Mapping[int, Fraction],
) -> int:
    """Rank of omega_v; the quotient Heisenberg group has dimension rank + 1
    and the kernel directions form the abelian complement."""
    coords = {i: Fraction(c) for i, c in v.items() if Fraction(c) != 0}
    if not coords:
        raise StructureError("central character vector must be nonzero")
    m = omega_matrix(alg, u_split, form, coords)
    ints = linalg.clear_denominators(m)
    return linalg.bareiss_rank(ints)


# ---------------------------------------------------------------------------
# stabilizers and orbit tangents
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StabilizerResult:
    stabilizer_dim: int
    tangent_dim: int
    acting_dim: int


def center_slice_action(
    alg: ChevalleyAlgebra,
    r_dec: ParabolicDecomposition,
    form: InvariantForm,
    include_center: bool = False,
) -> ActionMatrix:
    """Action matrices of the Levi generators on the paired basis of Z(u)."""
    gens = _levi_generators(alg, r_dec, include_center=include_center)
    module = [form.basis.e_element(alg, i) for i in form.order]
    return action_matrix(alg, gens, module)


def stabilizer_dim(
    alg: ChevalleyAlgebra,
    r_dec: ParabolicDecomposition,
    u_split: RadicalDecomposition,
    form: InvariantForm,
    v: Mapping[int, Fraction],
    include_center: bool = False,
    action: ActionMatrix | None = None,
) -> StabilizerResult:
    """Exact kernel and image dimensions of x -> [x, v] on the central slice,
    with x running over the Levi's derived algebra (optionally the full Levi)."""
    act = action if action is not None else center_slice_action(
        alg, r_dec, form, include_center
    )
    order = form.order
    coords = [Fraction(v.get(i, 0)) for i in order]
    evaluated = act.evaluated_at(coords)
    null = linalg.nullity(evaluated)
    rk = len(act.acting) - null
    return StabilizerResult(
        stabilizer_dim=null, tangent_dim=rk, acting_dim=len(act.acting)
    )


@dataclass(frozen=True)
class OrbitTangents:
    big: int
    small: int
    zero: int


def orbit_tangent_dims(
    alg: ChevalleyAlgebra,
    r_dec: ParabolicDecomposition,
    u_split: RadicalDecomposition,
    form: InvariantForm,
    action: ActionMatrix | None = None,
) -> OrbitTangents:
    """Orbit-tangent dimensions under the full Levi at one representative of
    each character class: anisotropic, nonzero isotropic, and zero."""
    act = action if action is not None else center_slice_action(
        alg, r_dec, form, include_center=True
    )
    big = {1: Fraction(1), -1: Fraction(1)}
    small = {1: Fraction(1)}
    zero: dict[int, Fraction] = {}
    dims = []
    for rep in (big, small, zero):
        dims.append(
            stabilizer_dim(alg, r_dec, u_split, form, rep, action=act).tangent_dim
        )
    return OrbitTangents(big=dims[0], small=dims[1], zero=dims[2])


# ---------------------------------------------------------------------------
# E7: partition of the noncentral slice and the stable polarization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Quartet:
    """Four noncentral roots (a1, a1+d, b_j - a1 - d, b_j - a1) tied by the
    last simple root d = alpha_7 and one of the two top roots b_j."""

    roots: tuple[Root, Root, Root, Root]
    j: int


@dataclass(frozen=True)
class QuartetPartition:
    blocks: tuple[Quartet, ...]

    @property
    def covered(self) -> tuple[Root, ...]:
        out: list[Root] = []
        for b in self.blocks:
            out.extend(b.roots)
        return tuple(sorted(out, key=Root.sort_key))


def quartet_partition(
    alg: ChevalleyAlgebra, u_split: RadicalDecomposition
) -> QuartetPartition:
    """Partition the 32 noncentral roots of the E7 two-step radical into
    eight quartets; verifies both defining conditions on every block."""
    rs = alg.rs
    if rs.type is not RootSystemType.E7:
        raise StructureError("the quartet partition exists only for E7")
    alpha7 = rs.simple[6]
    top = rs.highest
    second = _second_highest_root(rs)
    x_set = set(u_split.x_roots)
    y_set = set(u_split.y_roots)
    blocks: list[Quartet] = []
    used: set[Root] = set()
    for a1 in u_split.x_roots:
        if a1 in used:
            continue
        a2 = a1 + alpha7
        if a2 not in y_set:
            raise StructureError(f"{a1} + alpha_7 is not in Y")
        choices = []
        for j, beta in ((1, top), (2, second)):
            a3 = beta - a2
            if a3 in x_set and a3 not in used and a3 != a1:
                a4 = a3 + alpha7
                if a4 in y_set:
                    choices.append((j, a3, a4))
        if len(choices) != 1:
            raise StructureError(
                f"block starting at {a1} admits {len(choices)} completions"
            )
        j, a3, a4 = choices[0]
        used.update({a1, a2, a3, a4})
        blocks.append(Quartet(roots=(a1, a2, a3, a4), j=j))
    part = QuartetPartition(blocks=tuple(blocks))
    _verify_quartets(alg, u_split, part)
    return part


def _verify_quartets(
    alg: ChevalleyAlgebra, u_split: RadicalDecomposition, part: QuartetPartition
) -> None:
    rs = alg.rs
    alpha7 = rs.simple[6]
    top = rs.highest
    second = _second_highest_root(rs)
    omega = set(u_split.omega_roots)
    if len(part.blocks) != 8:
        raise StructureError(f"{len(part.blocks)} blocks, expected 8")
    seen: set[Root] = set()
    for b in part.blocks:
        a1, a2, a3, a4 = b.roots
        beta = top if b.j == 1 else second
        if a2 != a1 + alpha7 or a3 != beta - a2 or a4 != a3 + alpha7:
            raise StructureError("quartet equations fail")
        if not ({a1, a3} <= set(u_split.x_roots) and {a2, a4} <= set(u_split.y_roots)):
            raise StructureError("quartet membership condition fails")
        if seen & set(b.roots):
            raise StructureError("quartets overlap")
        seen.update(b.roots)
    if seen != omega:
        raise StructureError("quartets do not cover the noncentral slice")


@dataclass(frozen=True)
class PolarizationReport:
    x1_roots: tuple[Root, ...]
    y1_roots: tuple[Root, ...]
    lagrangian_rank: int
    blocks_aligned: int


def polarization_check(
    alg: ChevalleyAlgebra,
    u_split: RadicalDecomposition,
    form: InvariantForm,
    part: QuartetPartition,
    x1_roots: Iterable[Root],
    y1_roots: Iterable[Root],
) -> PolarizationReport:
    """Verify the distinguished polarization X1 + Y1 of the E7 slice.

    Checks: the two halves partition the noncentral slice 16/16; each quartet
    contributes one alpha_7-string to each half; both halves are Lagrangian
    for omega at v = e_1 + e_-1 and pair perfectly with each other; and both
    halves are stable under the alpha_7 triple modulo the center.
    """
    rs = alg.rs
    x1 = tuple(sorted(set(x1_roots), key=Root.sort_key))
    y1 = tuple(sorted(set(y1_roots), key=Root.sort_key))
    omega = u_split.omega_roots
    if set(x1) | set(y1) != set(omega) or set(x1) & set(y1):
        raise StructureError("X1 and Y1 do not partition the noncentral slice")
    if len(x1) != len(y1):
        raise StructureError("polarization halves have unequal dimension")
    aligned = 0
    for b in part.blocks:
        a1, a2, a3, a4 = b.roots
        first, secondpair = {a1, a2}, {a3, a4}
        in_x1 = [s <= set(x1) for s in (first, secondpair)]
        in_y1 = [s <= set(y1) for s in (first, secondpair)]
        if not (
            (in_x1[0] and in_y1[1]) or (in_x1[1] and in_y1[0])
        ):
            raise StructureError("a quartet does not split across the polarization")
        aligned += 1
    v = {1: Fraction(1), -1: Fraction(1)}
    full = omega_matrix(alg, u_split, form, v)
    index = {r: i for i, r in enumerate(omega)}
    for half in (x1, y1):
        for a in half:
            for b2 in half:
                if full[index[a]][index[b2]] != 0:
                    raise StructureError("polarization half is not omega-isotropic")
    cross = [[full[index[a]][index[b2]] for b2 in y1] for a in x1]
    cross_rank = linalg.rank(cross)
    if cross_rank != len(x1):
        raise StructureError("polarization halves do not pair perfectly")
    zu_set = set(u_split.zu_roots)
    alpha7 = rs.simple[6]
    for half in (x1, y1):
        half_set = set(half)
        for r in half:
            for step in (alpha7, -alpha7):
                s = r + step
                if s in rs and alg.N(step, r) != 0:
                    if s not in half_set and s not in zu_set:
                        raise StructureError(
                            "alpha_7 action moves the polarization half off itself"
                        )
    return PolarizationReport(
        x1_roots=x1, y1_roots=y1, lagrangian_rank=cross_rank, blocks_aligned=aligned
    )


# ---------------------------------------------------------------------------
# E7: the abelian radical as Y + Z(u) + last root space
# ---------------------------------------------------------------------------


def abelian_radical_partition(
    alg: ChevalleyAlgebra,
    p_dec: ParabolicDecomposition,
    u_split: RadicalDecomposition,
) -> tuple[int, int, int]:
    """Verify nilradical(P) = Y + Z(u) + g_{alpha_7} as a root-set partition
    (E7 only) and return the part sizes."""
    rs = alg.rs
    if rs.type is not RootSystemType.E7:
        raise StructureError("the three-part radical split exists only for E7")
    alpha7 = rs.simple[6]
    nil = set(p_dec.nilradical_roots)
    y = set(u_split.y_roots)
    zu = set(u_split.zu_roots)
    parts = [y, zu, {alpha7}]
    union: set[Root] = set()
    total = 0
    for p in parts:
        if not p <= nil:
            raise StructureError("partition part escapes the abelian radical")
        if union & p:
            raise StructureError("partition parts overlap")
        union |= p
        total += len(p)
    if union != nil:
        raise StructureError("partition does not exhaust the abelian radical")
    if any(r.coeff(7) != 1 for r in y):
        raise StructureError("Y root with last coefficient != 1")
    return (len(y), len(zu), 1)
