"""Numba-compiled curvature kernels: the default backend.

Mirrors ``_kernels_numpy`` exactly; arithmetic is written with the same
operation order so both backends produce bit-identical float64 results.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ._kernels_numpy import (
    KIND_AUGMENTED,
    KIND_BFC,
    KIND_FORMAN_1D,
    KIND_HAANTJES,
)


@njit(cache=True)
def _row_ex(indptr, indices, z, ea, eb):
    base = indices[indptr[z]:indptr[z + 1]]
    if ea < 0 or (z != ea and z != eb):
        return base
    other = eb if z == ea else ea
    pos = np.searchsorted(base, other)
    out = np.empty(base.size + 1, dtype=np.int64)
    out[:pos] = base[:pos]
    out[pos] = other
    out[pos + 1:] = base[pos:]
    return out


@njit(cache=True)
def _deg_ex(deg, z, ea, eb):
    if ea >= 0 and (z == ea or z == eb):
        return deg[z] + 1
    return deg[z]


@njit(cache=True)
def _sorted_intersect_count(a, b):
    i = 0
    j = 0
    c = 0
    while i < a.size and j < b.size:
        if a[i] == b[j]:
            c += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return c


@njit(cache=True)
def _tri(indptr, indices, u, v, ea, eb):
    nu = _row_ex(indptr, indices, u, ea, eb)
    nv = _row_ex(indptr, indices, v, ea, eb)
    return _sorted_intersect_count(nu, nv)


@njit(cache=True)
def _exclusive_neighbors(na, nb, skip):
    """Members of sorted ``na`` that are not in sorted ``nb`` and != skip."""
    out = np.empty(na.size, dtype=np.int64)
    n = 0
    j = 0
    for i in range(na.size):
        x = na[i]
        while j < nb.size and nb[j] < x:
            j += 1
        if (j >= nb.size or nb[j] != x) and x != skip:
            out[n] = x
            n += 1
    return out[:n]


@njit(cache=True)
def _bfc_parts_ex(indptr, indices, deg, u, v, ea, eb):
    nu = _row_ex(indptr, indices, u, ea, eb)
    nv = _row_ex(indptr, indices, v, ea, eb)
    t = _sorted_intersect_count(nu, nv)
    ks = _exclusive_neighbors(nu, nv, v)
    ws = _exclusive_neighbors(nv, nu, u)
    s1 = 0
    gmax = 0
    wcnt = np.zeros(ws.size, dtype=np.int64)
    for a in range(ks.size):
        nk = _row_ex(indptr, indices, ks[a], ea, eb)
        c = 0
        i = 0
        j = 0
        while i < nk.size and j < ws.size:
            if nk[i] == ws[j]:
                c += 1
                wcnt[j] += 1
                i += 1
                j += 1
            elif nk[i] < ws[j]:
                i += 1
            else:
                j += 1
        if c > 0:
            s1 += 1
            if c > gmax:
                gmax = c
    s2 = 0
    for j in range(ws.size):
        if wcnt[j] > 0:
            s2 += 1
            if wcnt[j] > gmax:
                gmax = wcnt[j]
    return t, s1, s2, gmax


@njit(cache=True)
def bfc_parts(indptr, indices, deg, u, v):
    return _bfc_parts_ex(indptr, indices, deg, u, v, -1, -1)


@njit(cache=True)
def _bfc_one(indptr, indices, deg, u, v, ea, eb):
    d1 = _deg_ex(deg, u, ea, eb)
    d2 = _deg_ex(deg, v, ea, eb)
    if min(d1, d2) == 1:
        return 0.0
    t, s1, s2, gmax = _bfc_parts_ex(indptr, indices, deg, u, v, ea, eb)
    dmax = max(d1, d2)
    dmin = min(d1, d2)
    val = 2.0 / d1 + 2.0 / d2 - 2.0 + 2.0 * t / dmax + t / dmin
    if s1 + s2 > 0:
        val += (1.0 / gmax) / dmax * (s1 + s2)
    return val


@njit(cache=True)
def curv_one(indptr, indices, deg, kind, u, v, ea, eb):
    if kind == KIND_FORMAN_1D:
        return float(4 - (_deg_ex(deg, u, ea, eb) + _deg_ex(deg, v, ea, eb)))
    if kind == KIND_HAANTJES:
        return float(_tri(indptr, indices, u, v, ea, eb))
    if kind == KIND_AUGMENTED:
        f = 4 - (_deg_ex(deg, u, ea, eb) + _deg_ex(deg, v, ea, eb))
        return float(f + 3 * _tri(indptr, indices, u, v, ea, eb))
    if kind == KIND_BFC:
        return _bfc_one(indptr, indices, deg, u, v, ea, eb)
    raise ValueError("unknown curvature kind code")


@njit(cache=True)
def curv_all(indptr, indices, deg, kind, eu, ev):
    out = np.empty(eu.size, dtype=np.float64)
    for e in range(eu.size):
        out[e] = curv_one(indptr, indices, deg, kind, eu[e], ev[e], -1, -1)
    return out


@njit(cache=True)
def improvements(indptr, indices, deg, kind, i, j, ka, la):
    base = curv_one(indptr, indices, deg, kind, i, j, -1, -1)
    out = np.empty(ka.size, dtype=np.float64)
    for c in range(ka.size):
        out[c] = curv_one(indptr, indices, deg, kind, i, j, ka[c], la[c]) - base
    return out
