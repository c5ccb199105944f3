"""Partitions of fixed rank, compositions, and dominance comparisons.

A :class:`Partition` always carries its rank ``d`` explicitly: ``[2,1,0]`` and
``[2,1]`` are different objects.  All arithmetic is over Python integers or
:class:`fractions.Fraction`, never floats.
"""
from __future__ import annotations

import math
import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Union

RationalVector = tuple[Fraction, ...]


class PartitionError(ValueError):
    """Raised on malformed partitions, compositions, or rank mismatches."""


@dataclass(frozen=True)
class Partition:
    """Non-increasing sequence of non-negative integers of fixed length ``d``."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        try:
            parts = tuple(operator.index(x) for x in self.parts)
        except TypeError:
            raise PartitionError(f"non-integer part in {list(self.parts)}") from None
        if not parts:
            raise PartitionError("a partition needs rank d >= 1")
        if parts[-1] < 0:
            raise PartitionError(f"negative part in {list(parts)}")
        for x, y in zip(parts, parts[1:]):
            if x < y:
                raise PartitionError(f"{list(parts)} is not non-increasing")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def zero(cls, d: int) -> "Partition":
        return cls((0,) * d)

    @classmethod
    def wedge(cls, k: int, d: int) -> "Partition":
        """The partition ``1_k v 0_{d-k}`` of the k-th exterior power."""
        if not 0 <= k <= d:
            raise PartitionError(f"wedge index {k} outside 0..{d}")
        return cls((1,) * k + (0,) * (d - k))

    @classmethod
    def det(cls, d: int, power: int = 1) -> "Partition":
        return cls((power,) * d)

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of non-zero parts."""
        return sum(1 for x in self.parts if x)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __add__(self, other: "Partition") -> "Partition":
        _check_rank(self, other)
        return Partition(tuple(x + y for x, y in zip(self.parts, other.parts)))

    def __sub__(self, other: "Partition") -> "Partition":
        _check_rank(self, other)
        return Partition(tuple(x - y for x, y in zip(self.parts, other.parts)))

    def __mul__(self, k: int) -> "Partition":
        if k < 0:
            raise PartitionError("scalar must be non-negative")
        return Partition(tuple(k * x for x in self.parts))

    __rmul__ = __mul__

    def __lt__(self, other: "Partition") -> bool:
        # lexicographic, used only for canonical sorting
        return self.parts < other.parts

    def padded(self, d: int) -> "Partition":
        if d < self.length:
            raise PartitionError(f"{self} has more than {d} non-zero parts")
        trimmed = self.parts[: self.length]
        return Partition(trimmed + (0,) * (d - len(trimmed)))

    def contains(self, other: "Partition") -> bool:
        """Young-diagram containment ``other`` inside ``self``."""
        _check_rank(self, other)
        return all(x >= y for x, y in zip(self.parts, other.parts))

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.parts)) + "]"

    def __repr__(self) -> str:
        return f"Partition({self})"


@dataclass(frozen=True)
class Composition:
    """Ordered tuple of positive integers; ``total`` is the rank it splits."""

    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        blocks = tuple(int(x) for x in self.blocks)
        if not blocks or any(x < 1 for x in blocks):
            raise PartitionError(f"composition blocks must be positive: {blocks}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def total(self) -> int:
        return sum(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[int]:
        return iter(self.blocks)

    def __lt__(self, other: "Composition") -> bool:
        return self.blocks < other.blocks

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.blocks)) + ")"

    def __repr__(self) -> str:
        return f"Composition{self}"


PartitionLike = Union[Partition, Sequence[int]]


def as_partition(p: PartitionLike, d: int | None = None) -> Partition:
    if not isinstance(p, Partition):
        p = Partition(tuple(p))
    if d is not None and p.d != d:
        p = p.padded(d)
    return p


def _check_rank(a: Partition, b: Partition) -> None:
    if a.d != b.d:
        raise PartitionError(f"rank mismatch: {a} has d={a.d}, {b} has d={b.d}")


def weight(p: PartitionLike) -> int:
    return sum(p)


def partial_sums(seq: Iterable) -> list:
    out, s = [], 0
    for x in seq:
        s += x
        out.append(s)
    return out


def first_dominance_violation(a: PartitionLike, b: PartitionLike) -> str | None:
    """Explain why ``a <= b`` fails in dominance order, or None if it holds."""
    a, b = as_partition(a), as_partition(b)
    _check_rank(a, b)
    sa, sb = partial_sums(a), partial_sums(b)
    if sa[-1] != sb[-1]:
        return f"weights differ: {sa[-1]} != {sb[-1]}"
    for k, (x, y) in enumerate(zip(sa, sb), start=1):
        if x > y:
            return f"partial sum {k}: {x} > {y}"
    return None


def dominance_leq(a: PartitionLike, b: PartitionLike) -> bool:
    """``a <= b`` in dominance order; both must have the same rank."""
    return first_dominance_violation(a, b) is None


def scaled_dominance_leq(a: PartitionLike, b: PartitionLike) -> bool:
    """Dominance after cross-scaling: ``|b| a <= |a| b``.

    Entries may be Fractions; the comparison is exact.  A zero vector is
    dominated by anything non-zero only if both are zero, which is rejected.
    """
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise PartitionError(f"rank mismatch: {len(a)} vs {len(b)}")
    wa, wb = sum(a), sum(b)
    if wa == 0 and wb == 0:
        raise PartitionError("scaled dominance is undefined for two zero partitions")
    sa = partial_sums(x * wb for x in a)
    sb = partial_sums(y * wa for y in b)
    return sa[-1] == sb[-1] and all(x <= y for x, y in zip(sa, sb))


def equivalent(a: PartitionLike, b: PartitionLike) -> bool:
    return scaled_dominance_leq(a, b) and scaled_dominance_leq(b, a)


def transpose(a: PartitionLike, length: int | None = None) -> Partition:
    """Conjugate partition, of length ``a_1`` unless ``length`` pads it."""
    a = tuple(a)
    n = a[0] if a else 0
    cols = tuple(sum(1 for x in a if x > j) for j in range(n))
    if length is not None:
        if length < n:
            if any(cols[length:]):
                raise PartitionError(f"transpose of {list(a)} needs length {n}")
            cols = cols[:length]
        cols = cols + (0,) * (length - len(cols))
    if not cols:
        cols = (0,)
    return Partition(cols)


def join(b: Sequence, c: Sequence) -> tuple:
    """Concatenation ``b v c`` as a raw tuple; may be non-monotone."""
    return tuple(b) + tuple(c)


def is_partition(seq: Sequence) -> bool:
    seq = tuple(seq)
    return bool(seq) and seq[-1] >= 0 and all(x >= y for x, y in zip(seq, seq[1:]))


def blocks(a: Sequence, L: Composition) -> tuple[tuple, ...]:
    """Split ``a`` into consecutive slices of lengths ``l_1, ..., l_r``."""
    a = tuple(a)
    if L.total != len(a):
        raise PartitionError(f"composition {L} does not split rank {len(a)}")
    out, i = [], 0
    for l in L.blocks:
        out.append(a[i : i + l])
        i += l
    return tuple(out)


@lru_cache(maxsize=None)
def compositions(d: int) -> tuple[Composition, ...]:
    """All ``2^(d-1)`` compositions of ``d``, ordered by block count then lexicographically."""
    if d < 1:
        raise PartitionError(f"compositions need d >= 1, got {d}")
    out = []
    for mask in range(1 << (d - 1)):
        blk, run = [], 1
        for i in range(d - 1):
            if mask >> i & 1:
                blk.append(run)
                run = 1
            else:
                run += 1
        blk.append(run)
        out.append(Composition(tuple(blk)))
    out.sort(key=lambda L: (len(L), L.blocks))
    return tuple(out)


def mu(l: int) -> int:
    """lcm(1, 2, ..., l)."""
    if l < 1:
        raise PartitionError(f"mu needs l >= 1, got {l}")
    return math.lcm(*range(1, l + 1))


def schur_dimension(a: PartitionLike, d: int) -> int:
    """Dimension of the irreducible GL(d)-module with highest weight ``a`` (hook-content)."""
    a = [x for x in a if x > 0]
    if len(a) > d:
        return 0
    conj = transpose(a) if a else Partition((0,))
    num, den = 1, 1
    for i, row in enumerate(a):
        for j in range(row):
            hook = (row - j) + (conj[j] - i) - 1
            num *= d + j - i
            den *= hook
    return num // den


def partitions_of(w: int, d: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of weight ``w`` with at most ``d`` parts, padded to rank ``d``, in reverse lex order."""
    for p in _partitions(w, d, w if max_part is None else max_part):
        yield Partition(p)


def _partitions(w: int, d: int, mx: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        if w == 0:
            yield ()
        return
    for first in range(min(w, mx), -1, -1):
        if first * d < w:
            break
        for rest in _partitions(w - first, d - 1, first):
            yield (first,) + rest


def partitions_up_to(max_weight: int, d: int, min_weight: int = 0) -> Iterator[Partition]:
    for w in range(min_weight, max_weight + 1):
        yield from partitions_of(w, d)


_PART_RE = re.compile(r"^\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*$")
_COMP_RE = re.compile(r"^\s*\(\s*(\d+(\s*,\s*\d+)*)?\s*,?\s*\)\s*$")


def parse_partition(text: str, rank: int | None = None) -> Partition:
    """Parse ``"[4,2,0]"``; ``rank`` pads with trailing zeros."""
    if not _PART_RE.match(text):
        raise PartitionError(f"cannot parse partition {text!r}; expected e.g. [4,2,0]")
    body = text.strip()[1:-1].strip()
    parts = tuple(int(x) for x in body.split(",")) if body else ()
    p = Partition(parts)
    if rank is not None and rank != p.d:
        p = p.padded(rank)
    return p


def parse_composition(text: str) -> Composition:
    if not _COMP_RE.match(text):
        raise PartitionError(f"cannot parse composition {text!r}; expected e.g. (1,2)")
    body = text.strip()[1:-1].strip().rstrip(",")
    return Composition(tuple(int(x) for x in body.split(",")))
