"""The dominance cone ``C(a)``: generators, membership, triangulation, remainders.

``C(a)`` is the set of non-increasing non-negative rational vectors ``b`` with
``b <= a`` after cross-scaling.  It is spanned by the block-averaged vectors
``v(L, a)``, one per composition ``L`` of ``d``.  Scaling ``a`` by
``mu(d) = lcm(1..d)`` makes every generator integral.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from . import _kernels, linalg
from .lr import DEFAULT_SUPPORT_CAP, SupportCapExceeded
from .partition import (
    Composition,
    Partition,
    PartitionError,
    PartitionLike,
    RationalVector,
    as_partition,
    blocks,
    compositions,
    mu,
    partial_sums,
)


class ConeError(ValueError):
    pass


@dataclass(frozen=True)
class ConeGenerator:
    label: Composition
    vector: RationalVector
    base: Partition


@dataclass(frozen=True)
class Subcone:
    """Simplicial cone on linearly independent integer generators.

    Coordinates are computed on the independent rows ``rows``:
    ``tau = adj @ b[rows] / det`` with ``det > 0``.
    """

    labels: tuple[Composition, ...]
    basis: tuple[tuple[int, ...], ...]
    rows: tuple[int, ...]
    adj: tuple[tuple[int, ...], ...]
    det: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    def numerators(self, b: Sequence[int]) -> list[int] | None:
        """Integers ``t`` with ``b = sum_j (t_j/det) basis[j]``, or None when ``b`` is off the span."""
        sub = [b[r] for r in self.rows]
        t = [sum(x * y for x, y in zip(row, sub)) for row in self.adj]
        for i in range(len(b)):
            if sum(t[j] * self.basis[j][i] for j in range(self.dim)) != self.det * b[i]:
                return None
        return t

    def coordinates(self, b: Sequence) -> list[Fraction] | None:
        if all(isinstance(x, int) for x in b):
            t = self.numerators(b)
            return None if t is None else [Fraction(x, self.det) for x in t]
        return linalg.solve(self.basis, b)

    def contains(self, b: Sequence) -> bool:
        tau = self.coordinates(b)
        return tau is not None and all(x >= 0 for x in tau)

    def to_json(self) -> dict:
        return {"labels": [list(L.blocks) for L in self.labels], "basis": [list(w) for w in self.basis]}


@dataclass(frozen=True)
class DominanceCone:
    base: Partition
    generators: tuple[ConeGenerator, ...]
    # distinct scaled generators v(L, mu(d) a), keyed by their smallest label
    scaled: tuple[tuple[Composition, tuple[int, ...]], ...]

    @property
    def d(self) -> int:
        return self.base.d

    @property
    def scale(self) -> int:
        return mu(self.base.d)

    def scaled_generator(self, L: Composition) -> tuple[int, ...]:
        return _scaled_vector(self.base, L)


@dataclass(frozen=True)
class Decomposition:
    """``target = remainder + sum_L mult_L * v(L, mu(d) base)``."""

    base: Partition
    target: Partition
    remainder: Partition
    multipliers: tuple[tuple[Composition, int], ...]

    @property
    def s(self) -> int:
        return sum(m for _, m in self.multipliers)

    def generator_part(self) -> Partition:
        return self.target - self.remainder

    def reconstruct(self) -> tuple[int, ...]:
        acc = list(self.remainder.parts)
        for L, m in self.multipliers:
            for i, x in enumerate(_scaled_vector(self.base, L)):
                acc[i] += m * x
        return tuple(acc)

    def to_json(self) -> dict:
        return {
            "base": list(self.base.parts),
            "target": list(self.target.parts),
            "remainder": list(self.remainder.parts),
            "terms": [
                {"L": list(L.blocks), "generator": list(_scaled_vector(self.base, L)), "mult": m}
                for L, m in self.multipliers
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Decomposition":
        terms = tuple((Composition(tuple(t["L"])), int(t["mult"])) for t in data["terms"])
        dec = cls(
            Partition(tuple(data["base"])),
            Partition(tuple(data["target"])),
            Partition(tuple(data["remainder"])),
            terms,
        )
        for t, (L, _) in zip(data["terms"], terms):
            if tuple(t["generator"]) != _scaled_vector(dec.base, L):
                raise ConeError(f"term {L} lists a wrong generator {t['generator']}")
        return dec


def generator(a: PartitionLike, L: Composition) -> ConeGenerator:
    """``v(L, a)``: each block of ``a`` replaced by its average."""
    a = as_partition(a)
    if L.total != a.d:
        raise PartitionError(f"composition {L} does not split rank {a.d}")
    vec: list[Fraction] = []
    for blk in blocks(a, L):
        avg = Fraction(sum(blk), len(blk))
        vec.extend([avg] * len(blk))
    return ConeGenerator(L, tuple(vec), a)


@lru_cache(maxsize=None)
def _scaled_vector(a: Partition, L: Composition) -> tuple[int, ...]:
    vec = generator(a * mu(a.d), L).vector
    if any(x.denominator != 1 for x in vec):
        raise AssertionError(f"v({L}, mu(d) {a}) is not integral")
    return tuple(int(x) for x in vec)


def cone_violation(a: PartitionLike, b: Sequence) -> str | None:
    """Reason ``b`` is outside ``C(a)``, or None when it is a member."""
    a = as_partition(a)
    b = tuple(b)
    if len(b) != a.d:
        raise PartitionError(f"rank mismatch: {len(b)} vs {a.d}")
    for i in range(len(b) - 1):
        if b[i] < b[i + 1]:
            return f"not non-increasing at position {i + 1}: {b[i]} < {b[i + 1]}"
    if b and b[-1] < 0:
        return "negative entry"
    wb, wa = sum(b), a.weight
    if wb == 0:
        return None
    if wa == 0:
        return "C(0) = {0}"
    sb = partial_sums(x * wa for x in b)
    sa = partial_sums(x * wb for x in a)
    for k in range(len(b) - 1):
        if sb[k] > sa[k]:
            return (
                f"partial sum {k + 1}: |a| * {sum(b[:k + 1])} = {sb[k]} > "
                f"|b| * {sum(a[:k + 1])} = {sa[k]}"
            )
    return None


def cone_member(a: PartitionLike, b: Sequence) -> bool:
    return cone_violation(a, b) is None


@lru_cache(maxsize=None)
def dominance_cone(a: Partition) -> DominanceCone:
    a = as_partition(a)
    gens = tuple(generator(a, L) for L in compositions(a.d))
    best: dict[tuple[int, ...], Composition] = {}
    for L in compositions(a.d):
        v = _scaled_vector(a, L)
        if v not in best or L < best[v]:
            best[v] = L
    order = {L: i for i, L in enumerate(compositions(a.d))}
    scaled = tuple(sorted(((L, v) for v, L in best.items()), key=lambda t: order[t[0]]))
    return DominanceCone(a, gens, scaled)


def polytope_vertices(a: PartitionLike) -> set[RationalVector]:
    """Vertices of ``P(a) = C(a) cap {|b| = |a|}`` from its inequality description.

    Facets: ``b_n - b_{n+1} >= 0`` (with ``b_{d+1} = 0``) and the partial sums
    ``b_1 + ... + b_n <= a_1 + ... + a_n`` for ``n < d``; the total is fixed.
    A vertex is a feasible point where ``d`` independent constraints are tight.
    """
    a = as_partition(a)
    if a.weight == 0:
        raise ConeError("P(0) is empty of non-zero points; base must be non-zero")
    d = a.d
    A = partial_sums(a)
    cons: list[tuple[list[int], int]] = []  # row . b <= rhs
    for n in range(d):
        row = [0] * d
        row[n] = -1
        if n + 1 < d:
            row[n + 1] = 1
        cons.append((row, 0))
    for n in range(d - 1):
        cons.append(([1] * (n + 1) + [0] * (d - n - 1), A[n]))
    total = ([1] * d, A[-1])
    out: set[RationalVector] = set()
    for chosen in itertools.combinations(range(len(cons)), d - 1):
        rows = [total[0]] + [cons[i][0] for i in chosen]
        rhs = [total[1]] + [cons[i][1] for i in chosen]
        try:
            x = linalg.solve(linalg.transpose(rows), rhs)
        except ValueError:
            continue
        if x is None:
            continue
        if all(sum(r * xi for r, xi in zip(row, x)) <= c for row, c in cons):
            out.add(tuple(x))
    return out


def triangulate(cone: DominanceCone) -> tuple[Subcone, ...]:
    return _triangulation(cone.base)


@lru_cache(maxsize=None)
def _triangulation(a: Partition) -> tuple[Subcone, ...]:
    """Placing triangulation over the distinct scaled generators in canonical order."""
    cone = dominance_cone(a)
    pts = [(L, v) for L, v in cone.scaled if any(v)]
    simplices: list[tuple[int, ...]] = []
    used: list[int] = []
    for idx, (_, w) in enumerate(pts):
        if not used:
            simplices = [(idx,)]
            used.append(idx)
            continue
        span = [pts[i][1] for i in used]
        if linalg.rank(span + [w]) > linalg.rank(span):
            simplices = [s + (idx,) for s in simplices]
            used.append(idx)
            continue
        coords = {s: linalg.solve([pts[i][1] for i in s], w) for s in simplices}
        if any(all(x >= 0 for x in c) for c in coords.values()):
            continue
        facet_count: dict[frozenset, int] = {}
        for s in simplices:
            for j in range(len(s)):
                f = frozenset(s[:j] + s[j + 1 :])
                facet_count[f] = facet_count.get(f, 0) + 1
        new = []
        for s in simplices:
            c = coords[s]
            for j in range(len(s)):
                f = s[:j] + s[j + 1 :]
                if c[j] < 0 and facet_count[frozenset(f)] == 1:
                    new.append(tuple(sorted(f + (idx,))))
        simplices.extend(new)
        used.append(idx)
    out = []
    for s in simplices:
        basis = tuple(pts[i][1] for i in s)
        rows = tuple(linalg.independent_rows(basis))
        sq = [[w[r] for w in basis] for r in rows]
        adj, det = linalg.adjugate_int(sq)
        if det < 0:
            adj, det = [[-x for x in row] for row in adj], -det
        out.append(Subcone(tuple(pts[i][0] for i in s), basis, rows, tuple(map(tuple, adj)), det))
    return tuple(out)


def _nonzero(a: PartitionLike) -> Partition:
    a = as_partition(a)
    if a.weight == 0:
        raise ConeError("the base partition must be non-zero (C(0) = {0})")
    return a


def sigma_size_bound(a: PartitionLike) -> int:
    """Upper bound on ``|sigma(a)|``: sum of the subcone lattice indices, plus one."""
    a = _nonzero(a)
    return 1 + sum(_hermite(sc)[1] for sc in _triangulation(a))


@lru_cache(maxsize=None)
def _hermite(sc: Subcone) -> tuple[tuple[int, ...], int]:
    sq_cols = [[w[r] for r in sc.rows] for w in sc.basis]
    H = linalg.hermite_lower(sq_cols)
    diag = tuple(H[i][i] for i in range(sc.dim))
    n = 1
    for x in diag:
        n *= x
    return diag, n


def _fundamental_points(sc: Subcone) -> Iterator[tuple[int, ...]]:
    """Integer points ``sum tau_j w_j`` with ``0 <= tau_j < 1``."""
    diag, _ = _hermite(sc)
    k, det = sc.dim, sc.det
    for x in itertools.product(*(range(h) for h in diag)):
        t = [sum(c * xi for c, xi in zip(row, x)) % det for row in sc.adj]
        p = []
        for i in range(len(sc.basis[0])):
            s = sum(t[j] * sc.basis[j][i] for j in range(k))
            if s % det:
                break
            p.append(s // det)
        else:
            yield tuple(p)


def sigma(a: PartitionLike, cap: int = DEFAULT_SUPPORT_CAP) -> frozenset[Partition]:
    """Remainder set: integer points of the half-open fundamental parallelepipeds of all subcones, plus 0."""
    return frozenset(Partition(tuple(p)) for p in sigma_array(a, cap).tolist())


_INT64_SAFE = 1 << 62


def _subcone_points(sc: Subcone) -> np.ndarray:
    diag, _ = _hermite(sc)
    k = sc.dim
    amax = max(abs(x) for row in sc.adj for x in row)
    bmax = max(abs(x) for w in sc.basis for x in w)
    if amax * max(diag) * k < _INT64_SAFE and sc.det * bmax * k < _INT64_SAFE:
        return _kernels.cone.parallelepiped(
            np.array(sc.adj, dtype=np.int64),
            sc.det,
            np.array(sc.basis, dtype=np.int64),
            np.array(diag, dtype=np.int64),
        )
    pts = list(_fundamental_points(sc))
    return np.array(pts, dtype=object).reshape(len(pts), len(sc.basis[0]))


def sigma_array(a: PartitionLike, cap: int = DEFAULT_SUPPORT_CAP) -> np.ndarray:
    """:func:`sigma` as a lexicographically sorted ``(n, d)`` array."""
    a = _nonzero(a)
    bound = sigma_size_bound(a)
    if bound > cap:
        raise SupportCapExceeded(cap, bound, "sigma")
    parts = [np.zeros((1, a.d), dtype=np.int64)]
    parts += [_subcone_points(sc) for sc in _triangulation(a)]
    allpts = np.concatenate(parts)
    return np.unique(allpts, axis=0)


def decompose_many(a: PartitionLike, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Batch :func:`decompose` of cone points given as rows of an integer array.

    Returns ``(multipliers, remainders)`` where ``multipliers[p, g]`` is the
    multiple of the g-th distinct scaled generator (``dominance_cone(a).scaled``
    order).  Raises ConeError if some row lies outside ``C(a)``.
    """
    a = _nonzero(a)
    pts = np.asarray(points, dtype=np.int64).reshape(-1, a.d)
    cone = dominance_cone(a)
    gens = [v for _, v in cone.scaled]
    col = {L: i for i, (L, _) in enumerate(cone.scaled)}
    subs = _triangulation(a)
    kmax = max(sc.dim for sc in subs)
    S = len(subs)
    rows = np.zeros((S, kmax), dtype=np.int64)
    adj = np.zeros((S, kmax, kmax), dtype=np.int64)
    basis = np.zeros((S, kmax, a.d), dtype=np.int64)
    for s, sc in enumerate(subs):
        rows[s, : sc.dim] = sc.rows
        adj[s, : sc.dim, : sc.dim] = sc.adj
        basis[s, : sc.dim] = sc.basis
    dims = np.array([sc.dim for sc in subs], dtype=np.int64)
    dets = np.array([sc.det for sc in subs], dtype=np.int64)
    pmax = int(np.abs(pts).max()) if pts.size else 0
    amax, bmax = int(np.abs(adj).max()), int(np.abs(basis).max())
    tbound = amax * pmax * kmax
    if tbound * bmax * kmax >= _INT64_SAFE or int(dets.max()) * pmax >= _INT64_SAFE:
        return _decompose_many_exact(a, pts.tolist(), gens, col)
    idx, t = _kernels.cone.locate(pts, rows, adj, basis, dims, dets)
    if (idx < 0).any():
        bad = pts[np.argmax(idx < 0)].tolist()
        raise ConeError(f"{bad} is not in C({a}): {cone_violation(a, bad)}")
    mults = np.zeros((len(pts), len(gens)), dtype=np.int64)
    for s, sc in enumerate(subs):
        sel = idx == s
        if not sel.any():
            continue
        q = t[sel, : sc.dim] // sc.det
        for j, L in enumerate(sc.labels):
            mults[sel, col[L]] = q[:, j]
    rem = pts - mults @ np.array(gens, dtype=np.int64)
    return mults, rem


def _decompose_many_exact(a, pts, gens, col):
    mults, rems = [], []
    for b in pts:
        dec = decompose(a, b)
        row = [0] * len(gens)
        for L, m in dec.multipliers:
            row[col[L]] = m
        mults.append(row)
        rems.append(list(dec.remainder.parts))
    return np.array(mults, dtype=object), np.array(rems, dtype=object)


def cone_points_array(a: PartitionLike, max_weight: int, min_weight: int = 0) -> np.ndarray:
    """:func:`cone_points` as an ``(n, d)`` int64 array (compiled when available)."""
    a = _nonzero(a)
    return _kernels.cone.cone_points(tuple(a.parts), max_weight, min_weight)


def in_sigma(a: PartitionLike, c: PartitionLike) -> bool:
    """Membership in :func:`sigma` without enumerating it."""
    a = _nonzero(a)
    c = as_partition(c, a.d)
    if c.weight == 0:
        return True
    for sc in _triangulation(a):
        t = sc.numerators(c.parts)
        if t is not None and all(0 <= x < sc.det for x in t):
            return True
    return False


def locate(a: PartitionLike, b: Sequence[int]) -> tuple[int, list[int]]:
    """Index of the first subcone containing ``b`` and its coordinate numerators."""
    a = _nonzero(a)
    for i, sc in enumerate(_triangulation(a)):
        t = sc.numerators(b)
        if t is not None and all(x >= 0 for x in t):
            return i, t
    raise ConeError(f"{list(b)} lies in no subcone of C({a})")


def decompose(a: PartitionLike, b: PartitionLike) -> Decomposition:
    """Split ``b`` into a remainder in ``sigma(a)`` plus whole scaled generators."""
    a = _nonzero(a)
    b = as_partition(b, a.d)
    why = cone_violation(a, b.parts)
    if why is not None:
        raise ConeError(f"{b} is not in C({a}): {why}")
    if b.weight == 0:
        return Decomposition(a, b, b, ())
    i, t = locate(a, b.parts)
    sc = _triangulation(a)[i]
    mults = [x // sc.det for x in t]
    rem = list(b.parts)
    for m, w in zip(mults, sc.basis):
        for j, x in enumerate(w):
            rem[j] -= m * x
    order = {L: n for n, L in enumerate(compositions(a.d))}
    terms = tuple(sorted(((L, m) for L, m in zip(sc.labels, mults) if m), key=lambda t: order[t[0]]))
    return Decomposition(a, b, Partition(tuple(rem)), terms)


def cone_points(a: PartitionLike, max_weight: int, min_weight: int = 0) -> Iterator[Partition]:
    """Integer points of ``C(a)`` by weight, enumerated with partial-sum pruning."""
    a = _nonzero(a)
    d, wa = a.d, a.weight
    A = partial_sums(a)

    def rec(w, i, prefix, mx, acc):
        if i == d:
            if prefix == w:
                yield Partition(tuple(acc))
            return
        left = w - prefix
        # largest entry allowed by non-increase and by |a| * partial <= w * A_i
        hi = min(mx, left)
        if i < d - 1:
            hi = min(hi, (w * A[i]) // wa - prefix)
        for x in range(hi, -1, -1):
            if x * (d - i) < left:
                break
            acc.append(x)
            yield from rec(w, i + 1, prefix + x, x, acc)
            acc.pop()

    for w in range(min_weight, max_weight + 1):
        yield from rec(w, 0, 0, w, [])


def decomposition_dumps(dec: Decomposition) -> str:
    return json.dumps(dec.to_json(), sort_keys=True)
