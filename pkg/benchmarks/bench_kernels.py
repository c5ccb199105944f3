"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]
"""
import argparse
import json
import time

import numpy as np

from domcert import _conekernel_py, _lrkernel_py
from domcert.cone import _hermite, _triangulation, dominance_cone
from domcert.partition import Partition, partitions_up_to

try:
    from domcert import _conekernel, _lrkernel
except ImportError:
    _conekernel = _lrkernel = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def lr_workload(mod):
    def run():
        for d in (3, 4):
            ps = list(partitions_up_to(5, d))
            for a in ps:
                for b in ps:
                    mod.lr_expand(a.parts, b.parts, d)
    return run


def cone_workload(mod, a, wmax):
    a = Partition(a)
    subs = _triangulation(a)
    kmax = max(sc.dim for sc in subs)
    rows = np.zeros((len(subs), kmax), dtype=np.int64)
    adj = np.zeros((len(subs), kmax, kmax), dtype=np.int64)
    basis = np.zeros((len(subs), kmax, a.d), dtype=np.int64)
    for s, sc in enumerate(subs):
        rows[s, : sc.dim] = sc.rows
        adj[s, : sc.dim, : sc.dim] = sc.adj
        basis[s, : sc.dim] = sc.basis
    dims = np.array([sc.dim for sc in subs], dtype=np.int64)
    dets = np.array([sc.det for sc in subs], dtype=np.int64)
    dominance_cone(a)

    def enum():
        return mod.cone_points(a.parts, wmax, 0)

    pts = np.asarray(enum())

    def locate():
        mod.locate(pts, rows, adj, basis, dims, dets)

    def para():
        for sc in subs:
            diag, _ = _hermite(sc)
            mod.parallelepiped(
                np.array(sc.adj, dtype=np.int64), sc.det,
                np.array(sc.basis, dtype=np.int64), np.array(diag, dtype=np.int64),
            )

    return {"cone_points": enum, "locate": locate, "parallelepiped": para}, len(pts)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    if _lrkernel is None:
        raise SystemExit("compiled kernels are not built; run pip install -e . first")

    rows = []
    rows.append(("lr_expand d<=4 |a|,|b|<=5", best_of(lr_workload(_lrkernel), args.repeat),
                 best_of(lr_workload(_lrkernel_py), args.repeat)))
    a, wmax = (2, 1, 0, 0), 72
    fast, n = cone_workload(_conekernel, a, wmax)
    slow, _ = cone_workload(_conekernel_py, a, wmax)
    for name in fast:
        rows.append((f"{name} a={list(a)} w<={wmax} ({n} pts)",
                     best_of(fast[name], args.repeat), best_of(slow[name], args.repeat)))

    if args.json:
        print(json.dumps([{"kernel": k, "cython_s": c, "python_s": p, "speedup": p / c} for k, c, p in rows], indent=1))
        return
    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'cython s':>9}  {'python s':>9}  {'speedup':>7}")
    for k, c, p in rows:
        print(f"{k:<{width}}  {c:9.4f}  {p:9.4f}  {p / c:6.1f}x")


if __name__ == "__main__":
    main()
