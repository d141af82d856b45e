"""Exact linear algebra over the rationals.

Everything in this package that needs a rank, a kernel, or a solved linear
system goes through these routines.  Matrices are plain ``list[list[Fraction]]``
and stay small (at most a few thousand entries), so naive fraction-free and
fraction-full eliminations are more than fast enough and keep every result
exact.  No floating point enters here.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = list[Fraction]
Matrix = list[list[Fraction]]


def matrix(rows: Iterable[Iterable[object]]) -> Matrix:
    """Copy ``rows`` into a rectangular Fraction matrix."""
    out = [[Fraction(x) for x in row] for row in rows]
    if out:
        width = len(out[0])
        if any(len(row) != width for row in out):
            raise ValueError("ragged rows")
    return out


def zeros(nrows: int, ncols: int) -> Matrix:
    return [[Fraction(0)] * ncols for _ in range(nrows)]


def identity(n: int) -> Matrix:
    eye = zeros(n, n)
    for i in range(n):
        eye[i][i] = Fraction(1)
    return eye


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> Vector:
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in m]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def row_echelon(m: Matrix) -> tuple[Matrix, list[int]]:
    """Forward elimination; returns (echelon copy, pivot column indices)."""
    a = [row[:] for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    return len(row_echelon(m)[1])


def nullity(m: Matrix) -> int:
    ncols = len(m[0]) if m else 0
    return ncols - rank(m)


def nullspace(m: Matrix) -> list[Vector]:
    """Basis of {x : m x = 0}, one vector per free column."""
    ncols = len(m[0]) if m else 0
    ech, pivots = row_echelon(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis: list[Vector] = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -ech[r][fc]
        basis.append(v)
    return basis


def solve(m: Matrix, b: Sequence[Fraction]) -> Vector | None:
    """One exact solution of ``m x = b`` (free variables 0), or None."""
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    aug = [m[i][:] + [Fraction(b[i])] for i in range(nrows)]
    ech, pivots = row_echelon(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = ech[r][ncols]
    return x


class PreparedSolver:
    """Repeated exact solves against a fixed coefficient matrix.

    Eliminates ``[m | I]`` once, then each right-hand side costs a single
    matrix-vector product plus a consistency check.
    """

    def __init__(self, m: Matrix) -> None:
        self.nrows = len(m)
        self.ncols = len(m[0]) if m else 0
        a = [m[i][:] + [Fraction(int(i == j)) for j in range(self.nrows)] for i in range(self.nrows)]
        pivots: list[int] = []
        r = 0
        # Gauss-Jordan restricted to the coefficient block; the appended
        # identity only records the row operations.
        for c in range(self.ncols):
            pr = next((i for i in range(r, self.nrows) if a[i][c] != 0), None)
            if pr is None:
                continue
            a[r], a[pr] = a[pr], a[r]
            inv = Fraction(1) / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(self.nrows):
                if i != r and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        self._ech = a
        self._pivots = pivots

    def solve(self, b: Sequence[Fraction]) -> Vector | None:
        n = self.ncols
        x = [Fraction(0)] * n
        for r, pc in enumerate(self._pivots):
            x[pc] = sum((self._ech[r][n + j] * b[j] for j in range(self.nrows)), Fraction(0))
        # Rows beyond the pivot count encode consistency constraints.
        for r in range(len(self._pivots), self.nrows):
            resid = sum((self._ech[r][n + j] * b[j] for j in range(self.nrows)), Fraction(0))
            if resid != 0:
                return None
        return x


def clear_denominators(m: Matrix) -> list[list[int]]:
    """Scale each row to coprime integers (rank-preserving)."""
    out: list[list[int]] = []
    for row in m:
        lcm = 1
        for x in row:
            d = x.denominator
            lcm = lcm * d // gcd(lcm, d)
        ints = [int(x * lcm) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def bareiss_rank(m: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    Independent of the Fraction elimination above; the two are cross-checked
    in the test suite and both are used on hot paths.
    """
    a = [list(map(int, row)) for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = 1
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        piv = a[r][c]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                a[i][j] = (piv * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = piv
        r += 1
        if r == nrows:
            break
    return r


def signature(sym: Matrix) -> tuple[int, int, int]:
    """Inertia ``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix.

    Congruence diagonalization: simultaneous row/column operations preserve
    the signature (Sylvester), so counting diagonal signs at the end is exact.
    """
    a = [row[:] for row in sym]
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
            if j is None:
                zero += 1
                continue
            # a_kk = a_jj = 0, a_kj != 0: add row/col j into k to expose a pivot.
            for c in range(n):
                a[k][c] += a[j][c]
            for r in range(n):
                a[r][k] += a[r][j]
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / piv
                for c in range(n):
                    a[i][c] -= f * a[k][c]
                for r in range(n):
                    a[r][i] -= f * a[r][k]
    return pos, neg, zero
