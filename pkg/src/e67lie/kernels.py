"""Exhaustive Jacobi-identity kernels.

Checking the Jacobi identity on every ordered basis triple of the E7 algebra
means 133^3 = 2,352,637 double brackets; this is the one hot loop in the
package.  Two interchangeable backends implement it:

* ``numba``: a JIT-compiled literal triple loop over the integer structure
  tables (used when numba is importable, unless overridden).
* ``numpy``: the same exhaustive statement reformulated as exact matrix
  identities.  With ``A_i`` the adjoint matrix of basis vector ``x_i``,
  the Jacobi identity for all triples ``(x_i, x_j, *)`` is precisely
  ``ad([x_i, x_j]) = A_i A_j - A_j A_i``.  Entries are small integers
  (bounded by a few thousand, far below 2^53), so float64 BLAS products
  are exact and a zero residual is an exact statement.  Pairs with i > j
  are covered by the bracket antisymmetry, which the routine also checks
  exactly as a tensor identity.

Backend selection: the ``E67LIE_JACOBI_BACKEND`` environment variable
(``auto``, ``numba`` or ``numpy``; default ``auto``) or the ``backend=``
argument.  numba is imported lazily so that the numpy path (and the sampled
fast mode) never pays JIT startup cost.
"""

from __future__ import annotations

import os
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:  # pragma: no cover
    from .chevalley import KernelTables

_ENV_VAR = "E67LIE_JACOBI_BACKEND"
_numba_impl = None


def available_backends() -> tuple[str, ...]:
    out = ["numpy"]
    try:  # probe without caching the module import cost at package load
        import numba  # noqa: F401

        out.insert(0, "numba")
    except ImportError:
        pass
    return tuple(out)


def _resolve_backend(backend: str | None) -> str:
    choice = backend or os.environ.get(_ENV_VAR, "auto")
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"unknown Jacobi backend {choice!r}")
    if choice == "numpy":
        return "numpy"
    try:
        _load_numba()
        return "numba"
    except ImportError:
        if choice == "numba":
            raise RuntimeError("numba backend requested but numba is not importable")
        return "numpy"


def jacobi_violations_exhaustive(
    tables: "KernelTables", backend: str | None = None
) -> tuple[int, str]:
    """Count of ordered basis triples violating the Jacobi identity.

    Must be zero for a valid algebra.  Returns ``(violations, backend_used)``.
    """
    used = _resolve_backend(backend)
    if used == "numba":
        fn = _load_numba()
        bad = int(
            fn(
                tables.nmat,
                tables.sum_idx,
                tables.neg,
                tables.hco.astype(np.int64),
                tables.cart.astype(np.int64),
                tables.nroots,
                tables.ncartan,
            )
        )
    else:
        bad = _jacobi_exhaustive_numpy(tables)
    return bad, used


# ---------------------------------------------------------------------------
# pure python (sampled fast mode, and reference for the tests)
# ---------------------------------------------------------------------------


def jacobi_violations_python(tables: "KernelTables", triples: np.ndarray) -> int:
    """Evaluate the Jacobi sum on the given (k, 3) array of basis triples."""
    nmat = tables.nmat.tolist()
    sum_idx = tables.sum_idx.tolist()
    neg = tables.neg.tolist()
    hco = tables.hco.tolist()
    cart = tables.cart.tolist()
    nroots = tables.nroots
    ncartan = tables.ncartan

    def term(x: int, y: int, z: int, hacc: list[int]) -> tuple[int, int]:
        # inner bracket [y, z]
        if y < nroots and z < nroots:
            if z == neg[y]:
                # inner is the coroot vector of root y
                if x < nroots:
                    c = 0
                    hv = hco[y]
                    for k in range(ncartan):
                        c -= hv[k] * cart[k][x]
                    return x, c
                return -1, 0
            s = sum_idx[y][z]
            if s < 0:
                return -1, 0
            r, c = s, nmat[y][z]
        elif y < nroots:  # z is a coroot
            r, c = y, -cart[z - nroots][y]
        elif z < nroots:  # y is a coroot
            r, c = z, cart[y - nroots][z]
        else:
            return -1, 0
        if c == 0:
            return -1, 0
        # outer bracket [x, c*e_r]
        if x < nroots:
            if r == neg[x]:
                hv = hco[x]
                for k in range(ncartan):
                    hacc[k] += c * hv[k]
                return -1, 0
            s2 = sum_idx[x][r]
            if s2 < 0:
                return -1, 0
            return s2, c * nmat[x][r]
        return r, c * cart[x - nroots][r]

    bad = 0
    for a, b, c in triples.tolist():
        hacc = [0] * ncartan
        i1, c1 = term(a, b, c, hacc)
        i2, c2 = term(b, c, a, hacc)
        i3, c3 = term(c, a, b, hacc)
        if i1 >= 0 and i2 == i1:
            c1 += c2
            i2 = -1
        if i1 >= 0 and i3 == i1:
            c1 += c3
            i3 = -1
        if i2 >= 0 and i3 == i2:
            c2 += c3
            i3 = -1
        violated = any(h != 0 for h in hacc)
        if i1 >= 0 and c1 != 0:
            violated = True
        if i2 >= 0 and c2 != 0:
            violated = True
        if i3 >= 0 and c3 != 0:
            violated = True
        if violated:
            bad += 1
    return bad


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------


def adjoint_tensor(tables: "KernelTables") -> np.ndarray:
    """Stack of adjoint matrices A[k] = ad(basis_k), exact integer-valued."""
    nroots, ncartan = tables.nroots, tables.ncartan
    dim = nroots + ncartan
    a = np.zeros((dim, dim, dim), dtype=np.float64)
    ii, jj = np.nonzero(tables.sum_idx >= 0)
    a[ii, tables.sum_idx[ii, jj], jj] = tables.nmat[ii, jj]
    ridx = np.arange(nroots)
    kidx = np.arange(ncartan)
    # [e_i, e_{-i}] = h_i (coroot coordinates)
    a[ridx[:, None], nroots + kidx[None, :], tables.neg[:, None]] = tables.hco
    # [e_i, h_k] = -<root_i, alpha_k^vee> e_i   and   [h_k, e_j] likewise
    a[ridx[:, None], ridx[:, None], (nroots + kidx)[None, :]] = -tables.cart.T
    a[(nroots + kidx)[:, None], ridx[None, :], ridx[None, :]] = tables.cart
    return a


def _jacobi_exhaustive_numpy(tables: "KernelTables") -> int:
    a = adjoint_tensor(tables)
    dim = a.shape[0]
    # Bracket antisymmetry as a tensor identity: coords of [x_i, x_j] are
    # a[i][:, j]; this must be the negative of [x_j, x_i] for every pair.
    coords = a.transpose(0, 2, 1)
    if not np.array_equal(coords, -coords.transpose(1, 0, 2)):
        return dim * dim * dim
    ahat = a.transpose(1, 0, 2).reshape(dim, dim * dim)
    bmat = a.reshape(dim * dim, dim)
    aflat = a.reshape(dim, dim * dim)
    bad = 0
    for i in range(dim):
        nj = dim - i
        p1 = (a[i] @ ahat[:, i * dim:]).reshape(dim, nj, dim).transpose(1, 0, 2)
        p2 = (bmat[i * dim:, :] @ a[i]).reshape(nj, dim, dim)
        expected = (a[i][:, i:].T @ aflat).reshape(nj, dim, dim)
        resid = expected - p1 + p2
        if resid.any():
            nonzero_cols = np.any(resid != 0.0, axis=1)  # (nj, dim) -> triple (i, j, z)
            pairs = int(np.count_nonzero(nonzero_cols))
            diag = int(np.count_nonzero(nonzero_cols[0])) if nj else 0
            # i < j violations occur mirrored at (j, i, z)
            bad += 2 * pairs - diag
    return bad


# ---------------------------------------------------------------------------
# numba backend (lazy import and compile)
# ---------------------------------------------------------------------------


def _load_numba():
    global _numba_impl
    if _numba_impl is not None:
        return _numba_impl
    from . import _jacobi_numba  # ImportError propagates to the resolver

    _numba_impl = _jacobi_numba.jacobi_exhaustive
    return _numba_impl
