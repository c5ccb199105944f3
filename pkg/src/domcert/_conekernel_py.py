"""Pure-Python fallback for ``_conekernel``; same signatures, same results."""
import itertools

import numpy as np


def cone_points(a, max_weight, min_weight=0):
    d, wa = len(a), sum(a)
    A = list(itertools.accumulate(a))
    out = []

    def rec(w, i, prefix, mx, acc):
        if i == d:
            if prefix == w:
                out.append(tuple(acc))
            return
        left = w - prefix
        hi = min(mx, left)
        if i < d - 1:
            hi = min(hi, (w * A[i]) // wa - prefix)
        for x in range(hi, -1, -1):
            if x * (d - i) < left:
                break
            acc.append(x)
            rec(w, i + 1, prefix + x, x, acc)
            acc.pop()

    for w in range(min_weight, max_weight + 1):
        rec(w, 0, 0, w, [])
    return np.array(out, dtype=np.int64).reshape(len(out), d)


def locate(pts, rows, adj, basis, dims, dets):
    n, d = pts.shape
    kmax = adj.shape[1]
    idx = np.full(n, -1, dtype=np.int64)
    t = np.zeros((n, kmax), dtype=np.int64)
    pts_l = pts.tolist()
    subs = [
        (int(dims[s]), rows[s].tolist(), adj[s].tolist(), basis[s].tolist(), int(dets[s]))
        for s in range(len(dims))
    ]
    for p, b in enumerate(pts_l):
        for s, (k, rw, ad, bs, det) in enumerate(subs):
            sub = [b[rw[j]] for j in range(k)]
            tmp = [sum(ad[i][j] * sub[j] for j in range(k)) for i in range(k)]
            if min(tmp) < 0:
                continue
            if all(sum(tmp[i] * bs[i][j] for i in range(k)) == det * b[j] for j in range(d)):
                idx[p] = s
                t[p, :k] = tmp
                break
    return idx, t


def parallelepiped(adj, det, basis, diag):
    k, d = len(adj), len(basis[0])
    adj = [list(map(int, r)) for r in adj]
    basis = [list(map(int, r)) for r in basis]
    out = []
    for x in itertools.product(*(range(int(h)) for h in reversed(list(diag)))):
        # odometer order of the compiled kernel varies x[0] fastest
        x = x[::-1]
        t = [sum(adj[i][j] * x[j] for j in range(k)) % det for i in range(k)]
        p = []
        for j in range(d):
            s = sum(t[i] * basis[i][j] for i in range(k))
            if s % det:
                break
            p.append(s // det)
        else:
            out.append(p)
    return np.array(out, dtype=np.int64).reshape(len(out), d)
