"""Littlewood-Richardson products over GL(d) and iterated tensor powers."""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from . import _kernels
from .partition import (
    Composition,
    Partition,
    PartitionError,
    PartitionLike,
    as_partition,
    blocks,
    is_partition,
)

log = logging.getLogger(__name__)

DEFAULT_SUPPORT_CAP = 10**6


class SupportCapExceeded(RuntimeError):
    """An intermediate support grew beyond the configured cardinality cap."""

    def __init__(self, cap: int, size: int, what: str = "support"):
        super().__init__(f"{what} cardinality {size} exceeds support cap {cap}")
        self.cap = cap
        self.size = size


@dataclass(frozen=True)
class TensorSupport:
    """Partitions (with multiplicities) in a GL(d) tensor product."""

    rank: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        for p, m in self.entries.items():
            if p.d != self.rank or m < 1:
                raise PartitionError(f"bad support entry {p}: {m}")

    @property
    def support(self) -> frozenset:
        return frozenset(self.entries)

    def __contains__(self, p) -> bool:
        return as_partition(p) in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self.entries))

    def mult(self, p: PartitionLike) -> int:
        return self.entries.get(as_partition(p), 0)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "entries": [
                {"partition": list(p.parts), "mult": self.entries[p]} for p in sorted(self.entries)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TensorSupport":
        return cls(
            data["rank"],
            {Partition(tuple(e["partition"])): int(e["mult"]) for e in data["entries"]},
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class SkewLRTableau:
    """An LR filling of ``outer / inner``; ``rows[i]`` lists the letters of row i."""

    outer: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def content(self) -> tuple[int, ...]:
        n = max((x for row in self.rows for x in row), default=0)
        return tuple(sum(row.count(k) for row in self.rows) for k in range(1, n + 1))

    def reading_word(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in reversed(row))

    def is_valid(self) -> bool:
        """Semistandard on the skew shape with a lattice reading word."""
        cells = {}
        for i, row in enumerate(self.rows):
            if len(row) != self.outer[i] - self.inner[i]:
                return False
            if any(x > y for x, y in zip(row, row[1:])):
                return False
            for j, x in enumerate(row):
                cells[(i, self.inner[i] + j)] = x
        for (i, j), x in cells.items():
            above = cells.get((i - 1, j))
            if above is not None and above >= x:
                return False
        counts: dict[int, int] = {}
        for x in self.reading_word():
            counts[x] = counts.get(x, 0) + 1
            if x > 1 and counts[x] > counts.get(x - 1, 0):
                return False
        return True


def lr_tableaux(a: PartitionLike, b: PartitionLike, c: PartitionLike) -> list[SkewLRTableau]:
    """All LR tableaux of shape ``c/a`` and content ``b`` (explicit, for inspection).

    Much slower than :func:`lr_coefficient`; intended for small shapes.
    """
    a, b, c = as_partition(a), as_partition(b), as_partition(c)
    d = c.d
    a = a.padded(d)
    if not c.contains(a) or c.weight != a.weight + b.weight:
        return []
    content = [x for x in b if x]
    lengths = [c[i] - a[i] for i in range(d)]
    out = []

    def rows_for(i, cur):
        if i == d:
            t = SkewLRTableau(c, a, tuple(cur))
            if t.content == tuple(content) and t.is_valid():
                out.append(t)
            return
        n = lengths[i]
        for row in _weak_rows(n, len(content)):
            rows_for(i + 1, cur + [row])

    rows_for(0, [])
    return out


def _weak_rows(n: int, kmax: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if kmax == 0:
        return

    def rec(pos, lo, acc):
        if pos == n:
            yield tuple(acc)
            return
        for x in range(lo, kmax + 1):
            yield from rec(pos + 1, x, acc + [x])

    yield from rec(0, 1, [])


@lru_cache(maxsize=1 << 18)
def _expand(a: tuple, b: tuple, nrows: int) -> dict:
    return _kernels.lr.lr_expand(a, b, nrows)


@lru_cache(maxsize=1 << 18)
def _coef(a: tuple, b: tuple, c: tuple) -> int:
    return _kernels.lr.lr_coefficient(a, b, c)


def lr_coefficient(a: PartitionLike, b: PartitionLike, c: PartitionLike) -> int:
    """Multiplicity of ``S_c`` in ``S_a (x) S_b``."""
    a, b, c = as_partition(a), as_partition(b), as_partition(c)
    if not (a.d == b.d == c.d):
        raise PartitionError(f"rank mismatch among {a}, {b}, {c}")
    if c.weight != a.weight + b.weight or not c.contains(a):
        return 0
    return _coef(a.parts, b.parts, c.parts)


def tensor_product(a: PartitionLike, b: PartitionLike, rank: int | None = None) -> TensorSupport:
    """Decomposition of ``S_a V (x) S_b V`` for ``dim V = rank`` (default: the common rank).

    Partitions with more than ``rank`` non-zero parts vanish and are dropped.
    """
    a, b = as_partition(a), as_partition(b)
    if rank is None:
        if a.d != b.d:
            raise PartitionError(f"rank mismatch: {a} vs {b}")
        rank = a.d
    if a.length > rank or b.length > rank:
        return TensorSupport(rank, {})
    a, b = a.padded(rank), b.padded(rank)
    raw = _expand(a.parts, b.parts, rank)
    return TensorSupport(rank, {Partition(k): v for k, v in raw.items()})


def tensor_power_support(
    a: PartitionLike,
    m: int,
    multiplicities: bool = True,
    cap: int = DEFAULT_SUPPORT_CAP,
) -> TensorSupport:
    """``a^(x)m`` over GL(d).  With ``multiplicities=False`` every mult is reported as 1."""
    a = as_partition(a)
    if m < 1:
        raise ValueError("tensor power needs m >= 1")
    if multiplicities:
        raw = _power_with_mult(a.parts, m, cap)
        return TensorSupport(a.d, {Partition(k): v for k, v in raw.items()})
    return TensorSupport(a.d, {Partition(k): 1 for k in _power_support(a.parts, m, cap)})


@lru_cache(maxsize=4096)
def _power_support(a: tuple, m: int, cap: int) -> frozenset:
    if m == 1:
        return frozenset([a])
    prev = _power_support(a, m - 1, cap)
    d = len(a)
    out: set = set()
    for e in sorted(prev):
        out.update(_expand(e, a, d))
        if len(out) > cap:
            raise SupportCapExceeded(cap, len(out))
    return frozenset(out)


@lru_cache(maxsize=1024)
def _power_with_mult(a: tuple, m: int, cap: int) -> dict:
    if m == 1:
        return {a: 1}
    prev = _power_with_mult(a, m - 1, cap)
    d = len(a)
    out: dict = {}
    for e in sorted(prev):
        me = prev[e]
        for c, k in _expand(e, a, d).items():
            out[c] = out.get(c, 0) + me * k
        if len(out) > cap:
            raise SupportCapExceeded(cap, len(out))
    return out


def contains_in_power(a: PartitionLike, g: PartitionLike, m: int, cap: int = DEFAULT_SUPPORT_CAP) -> bool:
    """Whether ``g`` occurs in ``a^(x)m``, searching only shapes inside ``g``.

    Each LR factor only adds boxes, so intermediate shapes not contained in
    ``g`` cannot lead to ``g`` and are discarded.
    """
    a, g = as_partition(a), as_partition(g)
    if a.d != g.d:
        raise PartitionError(f"rank mismatch: {a} vs {g}")
    if g.weight != m * a.weight:
        log.info("weight mismatch: |g| = %d but %d * |a| = %d", g.weight, m, m * a.weight)
        return False
    if m < 1:
        return False
    if not g.contains(a):
        return False
    if m == 1:
        return g == a
    gp, ap, d = g.parts, a.parts, a.d
    level = {ap}
    for _ in range(m - 2):
        nxt: set = set()
        for e in sorted(level):
            for c in _expand(e, ap, d):
                if all(x <= y for x, y in zip(c, gp)):
                    nxt.add(c)
            if len(nxt) > cap:
                raise SupportCapExceeded(cap, len(nxt))
        level = nxt
        if not level:
            return False
    return any(_coef(e, ap, gp) > 0 for e in sorted(level))


def blockwise_product_check(
    a: PartitionLike, b: PartitionLike, c: PartitionLike, L: Composition
) -> bool:
    """True iff every block ``c(L,i)`` occurs in ``a(L,i) (x) b(L,i)`` at rank ``l_i``."""
    a, b, c = as_partition(a), as_partition(b), as_partition(c)
    if not (a.d == b.d == c.d == L.total):
        raise PartitionError(f"rank mismatch for composition {L}")
    for i, (ab, bb, cb) in enumerate(zip(blocks(a, L), blocks(b, L), blocks(c, L)), start=1):
        if not (is_partition(ab) and is_partition(bb) and is_partition(cb)):
            log.info("block %d of %s is not a partition", i, L)
            return False
        if lr_coefficient(ab, bb, cb) == 0:
            return False
    return True


def clear_caches() -> None:
    for f in (_expand, _coef, _power_support, _power_with_mult):
        f.cache_clear()
