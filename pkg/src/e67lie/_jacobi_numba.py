"""JIT-compiled exhaustive Jacobi sweep.

Kept in its own module, imported lazily by ``kernels``, so that the numba
import cost is only paid when this backend is actually selected and the
compiled code can be disk-cached (module-level functions only).
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _term(x, y, z, nmat, sum_idx, neg, hco, cart, nroots, ncartan, hacc):
    # inner bracket [y, z]
    if y < nroots and z < nroots:
        if z == neg[y]:
            if x < nroots:
                c = 0
                for k in range(ncartan):
                    c -= hco[y, k] * cart[k, x]
                return x, c
            return -1, 0
        s = sum_idx[y, z]
        if s < 0:
            return -1, 0
        r = s
        c = int(nmat[y, z])
    elif y < nroots:
        r = y
        c = -int(cart[z - nroots, y])
    elif z < nroots:
        r = z
        c = int(cart[y - nroots, z])
    else:
        return -1, 0
    if c == 0:
        return -1, 0
    # outer bracket [x, c * e_r]
    if x < nroots:
        if r == neg[x]:
            for k in range(ncartan):
                hacc[k] += c * hco[x, k]
            return -1, 0
        s2 = sum_idx[x, r]
        if s2 < 0:
            return -1, 0
        return s2, c * int(nmat[x, r])
    return r, c * int(cart[x - nroots, r])


@njit(cache=True)
def jacobi_exhaustive(nmat, sum_idx, neg, hco, cart, nroots, ncartan):
    dim = nroots + ncartan
    bad = 0
    hacc = np.zeros(ncartan, dtype=np.int64)
    for x in range(dim):
        for y in range(dim):
            for z in range(dim):
                i1, c1 = _term(x, y, z, nmat, sum_idx, neg, hco, cart, nroots, ncartan, hacc)
                i2, c2 = _term(y, z, x, nmat, sum_idx, neg, hco, cart, nroots, ncartan, hacc)
                i3, c3 = _term(z, x, y, nmat, sum_idx, neg, hco, cart, nroots, ncartan, hacc)
                if i1 >= 0 and i2 == i1:
                    c1 += c2
                    i2 = -1
                if i1 >= 0 and i3 == i1:
                    c1 += c3
                    i3 = -1
                if i2 >= 0 and i3 == i2:
                    c2 += c3
                    i3 = -1
                violated = False
                for k in range(ncartan):
                    if hacc[k] != 0:
                        violated = True
                    hacc[k] = 0
                if i1 >= 0 and c1 != 0:
                    violated = True
                if i2 >= 0 and c2 != 0:
                    violated = True
                if i3 >= 0 and c3 != 0:
                    violated = True
                if violated:
                    bad += 1
    return bad
