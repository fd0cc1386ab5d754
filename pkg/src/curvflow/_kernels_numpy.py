"""Pure-numpy curvature kernels: the fallback backend.

Semantics are identical to the numba backend; every function takes raw CSR
arrays so the two modules stay drop-in interchangeable. An "extra edge"
(ea, eb) lets callers evaluate an edge's curvature in the graph plus one
temporarily added edge without rebuilding the CSR; ea = -1 means no extra.
"""

from __future__ import annotations

import numpy as np

KIND_FORMAN_1D = 0
KIND_AUGMENTED = 1
KIND_HAANTJES = 2
KIND_BFC = 3


def _row(indptr, indices, z):
    return indices[indptr[z]:indptr[z + 1]]


def _row_ex(indptr, indices, z, ea, eb):
    base = indices[indptr[z]:indptr[z + 1]]
    if ea < 0 or (z != ea and z != eb):
        return base
    other = eb if z == ea else ea
    pos = int(np.searchsorted(base, other))
    out = np.empty(base.size + 1, dtype=np.int64)
    out[:pos] = base[:pos]
    out[pos] = other
    out[pos + 1:] = base[pos:]
    return out


def _deg_ex(deg, z, ea, eb):
    if ea >= 0 and (z == ea or z == eb):
        return int(deg[z]) + 1
    return int(deg[z])


def _tri(indptr, indices, u, v, ea, eb):
    nu = _row_ex(indptr, indices, u, ea, eb)
    nv = _row_ex(indptr, indices, v, ea, eb)
    return int(np.intersect1d(nu, nv, assume_unique=True).size)


def _bfc_parts_ex(indptr, indices, deg, u, v, ea, eb):
    """(t, s_u, s_v, gamma_max) of edge (u, v), optionally with an extra edge."""
    nu = _row_ex(indptr, indices, u, ea, eb)
    nv = _row_ex(indptr, indices, v, ea, eb)
    t = int(np.intersect1d(nu, nv, assume_unique=True).size)
    ks = nu[(~np.isin(nu, nv)) & (nu != v)]
    ws = nv[(~np.isin(nv, nu)) & (nv != u)]
    s1 = 0
    gmax = 0
    wcnt = np.zeros(ws.size, dtype=np.int64)
    for k in ks:
        nk = _row_ex(indptr, indices, int(k), ea, eb)
        hits = np.isin(ws, nk, assume_unique=True)
        c = int(hits.sum())
        if c > 0:
            s1 += 1
            wcnt += hits
            if c > gmax:
                gmax = c
    s2 = int((wcnt > 0).sum())
    if ws.size and wcnt.max() > gmax:
        gmax = int(wcnt.max())
    return t, s1, s2, gmax


def bfc_parts(indptr, indices, deg, u, v):
    return _bfc_parts_ex(indptr, indices, deg, u, v, -1, -1)


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


def curv_one(indptr, indices, deg, kind, u, v, ea, eb):
    """Curvature of edge (u, v) under one kind; float result, exact for the
    integer-valued kinds."""
    if kind == KIND_FORMAN_1D:
        return float(4 - (_deg_ex(deg, u, ea, eb) + _deg_ex(deg, v, ea, eb)))
    if kind == KIND_HAANTJES:
        return float(_tri(indptr, indices, u, v, ea, eb))
    if kind == KIND_AUGMENTED:
        f = 4 - (_deg_ex(deg, u, ea, eb) + _deg_ex(deg, v, ea, eb))
        return float(f + 3 * _tri(indptr, indices, u, v, ea, eb))
    if kind == KIND_BFC:
        return _bfc_one(indptr, indices, deg, u, v, ea, eb)
    raise ValueError(f"unknown curvature kind code {kind}")


def curv_all(indptr, indices, deg, kind, eu, ev):
    """Curvature of every canonical edge, same order as (eu, ev)."""
    if kind == KIND_FORMAN_1D:
        return (4 - (deg[eu] + deg[ev])).astype(np.float64)
    out = np.empty(eu.size, dtype=np.float64)
    for e in range(eu.size):
        out[e] = curv_one(indptr, indices, deg, kind, int(eu[e]), int(ev[e]), -1, -1)
    return out


def improvements(indptr, indices, deg, kind, i, j, ka, la):
    """x_kl = Curv_{kl}(i,j) - Curv(i,j) for each candidate edge (ka[c], la[c])."""
    base = curv_one(indptr, indices, deg, kind, i, j, -1, -1)
    out = np.empty(ka.size, dtype=np.float64)
    for c in range(ka.size):
        out[c] = curv_one(indptr, indices, deg, kind, i, j, int(ka[c]), int(la[c])) - base
    return out
