# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels for dominance-cone sweeps (int64).

Callers guarantee that no intermediate product exceeds 2**62; see the
overflow guards in ``domcert.batch``.
"""
import numpy as np

ctypedef long long i64


cdef i64 _rec(i64[:] A, i64 wa, int d, i64 w, int i, i64 prefix, i64 mx,
              i64[:] acc, i64[:, :] out, i64 row) except -1:
    cdef i64 left = w - prefix
    cdef i64 hi, x, j
    if i == d:
        if prefix == w:
            if out is not None:
                for j in range(d):
                    out[row, j] = acc[j]
            return row + 1
        return row
    hi = mx if mx < left else left
    if i < d - 1:
        x = (w * A[i]) // wa - prefix
        if x < hi:
            hi = x
    x = hi
    while x >= 0:
        if x * (d - i) < left:
            break
        acc[i] = x
        row = _rec(A, wa, d, w, i + 1, prefix + x, x, acc, out, row)
        x -= 1
    return row


def cone_points(a, i64 max_weight, i64 min_weight=0):
    """Integer points of C(a) with weight in [min_weight, max_weight], as an (n, d) array."""
    cdef int d = len(a)
    cdef i64 wa = sum(a)
    A_np = np.cumsum(np.asarray(a, dtype=np.int64))
    cdef i64[:] A = A_np
    acc_np = np.zeros(d, dtype=np.int64)
    cdef i64[:] acc = acc_np
    cdef i64 w, n = 0
    for w in range(min_weight, max_weight + 1):
        n = _rec(A, wa, d, w, 0, 0, w, acc, None, n)
    out_np = np.zeros((n, d), dtype=np.int64)
    cdef i64[:, :] out = out_np
    n = 0
    for w in range(min_weight, max_weight + 1):
        n = _rec(A, wa, d, w, 0, 0, w, acc, out, n)
    return out_np


def locate(i64[:, :] pts, i64[:, :] rows, i64[:, :, :] adj, i64[:, :, :] basis,
           i64[:] dims, i64[:] dets):
    """First subcone containing each point and its coordinate numerators (-1 if none)."""
    cdef Py_ssize_t n = pts.shape[0], d = pts.shape[1], S = dims.shape[0]
    cdef Py_ssize_t kmax = adj.shape[1]
    idx_np = np.full(n, -1, dtype=np.int64)
    t_np = np.zeros((n, kmax), dtype=np.int64)
    cdef i64[:] idx = idx_np
    cdef i64[:, :] t = t_np
    tmp_np = np.zeros(kmax, dtype=np.int64)
    cdef i64[:] tmp = tmp_np
    cdef Py_ssize_t p, s, i, j, k
    cdef i64 acc
    cdef bint ok
    for p in range(n):
        for s in range(S):
            k = dims[s]
            ok = True
            for i in range(k):
                acc = 0
                for j in range(k):
                    acc += adj[s, i, j] * pts[p, rows[s, j]]
                if acc < 0:
                    ok = False
                    break
                tmp[i] = acc
            if not ok:
                continue
            for j in range(d):
                acc = 0
                for i in range(k):
                    acc += tmp[i] * basis[s, i, j]
                if acc != dets[s] * pts[p, j]:
                    ok = False
                    break
            if ok:
                idx[p] = s
                for i in range(k):
                    t[p, i] = tmp[i]
                break
    return idx_np, t_np


def parallelepiped(i64[:, :] adj, i64 det, i64[:, :] basis, i64[:] diag):
    """Integer points sum_j tau_j basis[j] with 0 <= tau_j < 1, as an (n, d) array."""
    cdef Py_ssize_t k = adj.shape[0], d = basis.shape[1]
    cdef i64 total = 1
    cdef Py_ssize_t i, j
    for i in range(k):
        total *= diag[i]
    out_np = np.zeros((total, d), dtype=np.int64)
    cdef i64[:, :] out = out_np
    x_np = np.zeros(k, dtype=np.int64)
    t_np = np.zeros(k, dtype=np.int64)
    cdef i64[:] x = x_np
    cdef i64[:] t = t_np
    cdef i64 n = 0, q, acc
    cdef bint ok
    for q in range(total):
        for i in range(k):
            acc = 0
            for j in range(k):
                acc += adj[i, j] * x[j]
            acc %= det
            if acc < 0:
                acc += det
            t[i] = acc
        ok = True
        for j in range(d):
            acc = 0
            for i in range(k):
                acc += t[i] * basis[i, j]
            if acc % det != 0:
                ok = False
                break
            out[n, j] = acc // det
        if ok:
            n += 1
        # odometer over 0 <= x_i < diag_i
        for i in range(k):
            x[i] += 1
            if x[i] < diag[i]:
                break
            x[i] = 0
    return out_np[:n]
