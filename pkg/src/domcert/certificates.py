"""Derivations witnessing tensor-power containments ``g in a^(x)n``.

Every step of a :class:`Certificate` records a *fact* ``(base, power,
result)`` meaning ``result`` occurs in ``base^(x)power``.  Step kinds:

``axiom``
    ``a in a^(x)1``.
``lr-step``
    From ``x in B^(x)n1`` and ``y in B^(x)n2`` and an LR coefficient
    ``c^z_{x,y} > 0`` conclude ``z in B^(x)(n1+n2)``.
``add``
    From ``x in B^(x)n`` and ``y in B'^(x)n`` conclude
    ``x + y in (B + B')^(x)n``.
``blockwise``
    From ``r_i in B_i^(x)n`` for the blocks of a composition ``L``
    conclude ``r_1 v ... v r_k in (B_1 v ... v B_k)^(x)n``.

The verifier recomputes every fact from the premises and rejects on the
first mismatch; it never searches.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from .cone import (
    Decomposition,
    _scaled_vector,
    cone_violation,
    decompose,
    in_sigma,
)
from .lr import DEFAULT_SUPPORT_CAP, SupportCapExceeded, contains_in_power, lr_coefficient, tensor_power_support
from .partition import (
    Composition,
    Partition,
    PartitionError,
    PartitionLike,
    as_partition,
    blocks,
    is_partition,
    mu,
    scaled_dominance_leq,
    transpose,
)

log = logging.getLogger(__name__)

KINDS = ("axiom", "lr-step", "add", "blockwise")

Fact = tuple[tuple[int, ...], int, tuple[int, ...]]


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class CertStep:
    id: int
    kind: str
    base: tuple[int, ...]
    power: int
    result: tuple[int, ...]
    premises: tuple[int, ...] = ()
    left: tuple[int, ...] | None = None
    right: tuple[int, ...] | None = None
    L: tuple[int, ...] | None = None

    @property
    def fact(self) -> Fact:
        return (self.base, self.power, self.result)

    def to_json(self) -> dict:
        out: dict[str, Any] = {"id": self.id, "kind": self.kind}
        if self.kind == "axiom":
            out["partition"] = list(self.result)
        else:
            out["premises"] = list(self.premises)
        if self.kind == "lr-step":
            out["left"] = list(self.left)
            out["right"] = list(self.right)
        if self.kind == "blockwise":
            out["L"] = list(self.L)
        out["base"] = list(self.base)
        out["power"] = self.power
        out["result"] = list(self.result)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "CertStep":
        kind = data["kind"]
        if kind not in KINDS:
            raise CertificateError(f"unknown step kind {kind!r}")

        def vec(key):
            v = data[key]
            if not isinstance(v, list) or not all(isinstance(x, int) for x in v):
                raise CertificateError(f"field {key!r} must be a list of integers")
            return tuple(v)

        if kind == "axiom":
            res = vec("partition")
            if "result" in data and vec("result") != res:
                raise CertificateError("axiom result differs from its partition")
        else:
            res = vec("result")
        return cls(
            id=int(data["id"]),
            kind=kind,
            base=vec("base"),
            power=int(data["power"]),
            result=res,
            premises=vec("premises") if kind != "axiom" else (),
            left=vec("left") if kind == "lr-step" else None,
            right=vec("right") if kind == "lr-step" else None,
            L=vec("L") if kind == "blockwise" else None,
        )


@dataclass(frozen=True)
class Certificate:
    rank: int
    base: tuple[int, ...]
    power: int
    target: tuple[int, ...]
    steps: tuple[CertStep, ...]
    conclusion: int | None

    @property
    def claim(self) -> Fact:
        return (self.base, self.power, self.target)

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "claim": {"base": list(self.base), "power": self.power, "target": list(self.target)},
            "steps": [s.to_json() for s in self.steps],
            "conclusion": self.conclusion,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "Certificate":
        claim = data["claim"]
        return cls(
            rank=int(data["rank"]),
            base=tuple(claim["base"]),
            power=int(claim["power"]),
            target=tuple(claim["target"]),
            steps=tuple(CertStep.from_json(s) for s in data["steps"]),
            conclusion=data["conclusion"],
        )


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    step: int | None = None
    message: str = ""
    deep_checked: int = 0
    deep_skipped: int = 0

    def __bool__(self) -> bool:
        return self.accepted

    def to_json(self) -> dict:
        out = {"accepted": self.accepted, "message": self.message}
        if self.step is not None:
            out["step"] = self.step
        if self.deep_checked or self.deep_skipped:
            out["deep_checked"] = self.deep_checked
            out["deep_skipped"] = self.deep_skipped
        return out


class CertBuilder:
    """Appends steps, reusing the id of any fact already derived."""

    def __init__(self) -> None:
        self.steps: list[CertStep] = []
        self._by_fact: dict[Fact, int] = {}

    def _push(self, **kw) -> int:
        fact = (kw["base"], kw["power"], kw["result"])
        if fact in self._by_fact:
            return self._by_fact[fact]
        sid = len(self.steps)
        self.steps.append(CertStep(id=sid, **kw))
        self._by_fact[fact] = sid
        return sid

    def fact(self, sid: int) -> Fact:
        return self.steps[sid].fact

    def axiom(self, a: tuple[int, ...]) -> int:
        return self._push(kind="axiom", base=a, power=1, result=a)

    def product(self, p: int, q: int, result: tuple[int, ...]) -> int:
        bp, np_, x = self.fact(p)
        bq, nq, y = self.fact(q)
        assert bp == bq, "lr-step premises must share a base"
        return self._push(
            kind="lr-step", base=bp, power=np_ + nq, result=result, premises=(p, q), left=x, right=y
        )

    def top_product(self, p: int, q: int) -> int:
        """``x + y`` always occurs in ``x (x) y`` (the Cartan component)."""
        x, y = self.fact(p)[2], self.fact(q)[2]
        return self.product(p, q, _vadd(x, y))

    def add(self, p: int, q: int) -> int:
        bp, n, x = self.fact(p)
        bq, nq, y = self.fact(q)
        assert n == nq, "add premises must have equal powers"
        return self._push(kind="add", base=_vadd(bp, bq), power=n, result=_vadd(x, y), premises=(p, q))

    def blockwise(self, L: tuple[int, ...], ids: list[int]) -> int:
        facts = [self.fact(i) for i in ids]
        base = tuple(x for f in facts for x in f[0])
        result = tuple(x for f in facts for x in f[2])
        return self._push(
            kind="blockwise", base=base, power=facts[0][1], result=result, premises=tuple(ids), L=L
        )

    def repeat(self, sid: int, times: int) -> int:
        """Tensor a fact with itself ``times`` times (top components)."""
        cur = sid
        for _ in range(times - 1):
            cur = self.top_product(cur, sid)
        return cur

    def include(self, cert: Certificate) -> int:
        """Replay another certificate's steps; returns the id of its conclusion here."""
        remap: dict[int, int] = {}
        for st in cert.steps:
            if st.kind == "axiom":
                new = self.axiom(st.result)
            elif st.kind == "lr-step":
                new = self.product(remap[st.premises[0]], remap[st.premises[1]], st.result)
            elif st.kind == "add":
                new = self.add(remap[st.premises[0]], remap[st.premises[1]])
            else:
                new = self.blockwise(st.L, [remap[p] for p in st.premises])
            remap[st.id] = new
        return remap[cert.conclusion]

    def finish(self, rank: int, conclusion: int) -> Certificate:
        base, power, target = self.fact(conclusion)
        return Certificate(rank, base, power, target, tuple(self.steps), conclusion)


def _vadd(x, y) -> tuple[int, ...]:
    return tuple(a + b for a, b in zip(x, y))


def wedge_exponents(d: int, k: int, m: int) -> tuple[int, int]:
    """``(q, s)`` with ``m k = d q + s`` and ``0 <= s < d``."""
    return divmod(m * k, d)


def build_wedge_certificate(d: int, k: int, m: int) -> Certificate:
    """Certificate for ``q 1_d + (1_s v 0_{d-s}) in (1_k v 0_{d-k})^(x)m``, where ``mk = dq + s``.

    Multiplies by the k-th exterior power one factor at a time; each step
    either lengthens the column (``s + k < d``) or wraps a full column of
    height ``d`` into the determinant part.
    """
    if not 1 <= k <= d:
        raise CertificateError(f"wedge index k={k} must satisfy 1 <= k <= d={d}")
    if m < 1:
        raise CertificateError("power m must be >= 1")
    wedge = tuple(Partition.wedge(k, d).parts)
    b = CertBuilder()
    ax = b.axiom(wedge)
    cur, q, s = ax, 0, k
    if k == d:
        q, s = 1, 0
    for _ in range(m - 1):
        if s + k < d:
            s += k
        else:
            q, s = q + 1, s + k - d
        cur = b.product(cur, ax, (q + 1,) * s + (q,) * (d - s))
    return b.finish(d, cur)


def build_det_certificate(a: PartitionLike) -> Certificate:
    """Certificate for ``|a| 1_d in a^(x)d``, summing one wedge certificate per column of ``a``."""
    a = as_partition(a)
    if a.weight == 0:
        raise CertificateError("det certificate needs a non-zero partition")
    b = CertBuilder()
    return b.finish(a.d, _det_into(b, a))


def _det_into(b: CertBuilder, a: Partition) -> int:
    cur = None
    for t in transpose(a).parts:
        sid = b.include(_wedge_cached(a.d, t, a.d))
        cur = sid if cur is None else b.add(cur, sid)
    return cur


@lru_cache(maxsize=None)
def _wedge_cached(d: int, k: int, m: int) -> Certificate:
    return build_wedge_certificate(d, k, m)


def build_vertex_certificate(a: PartitionLike, L: Composition) -> Certificate:
    """Certificate for ``v(L, mu(d) a) in a^(x)mu(d)``.

    Block i contributes ``|a(L,i)| 1_{l_i} in a(L,i)^(x)l_i`` repeated
    ``mu(d)/l_i`` times; the blocks are then joined.
    """
    a = as_partition(a)
    if a.weight == 0:
        raise CertificateError("vertex certificate needs a non-zero partition")
    if L.total != a.d:
        raise PartitionError(f"composition {L} does not split rank {a.d}")
    return _vertex_cached(a, L)


@lru_cache(maxsize=None)
def _vertex_cached(a: Partition, L: Composition) -> Certificate:
    n = mu(a.d)
    b = CertBuilder()
    ids = []
    for blk in blocks(a, L):
        blk = Partition(blk)
        if blk.weight == 0:
            ids.append(b.repeat(b.axiom(blk.parts), n))
        else:
            ids.append(b.repeat(_det_into(b, blk), n // blk.d))
    top = ids[0] if len(ids) == 1 else b.blockwise(L.blocks, ids)
    cert = b.finish(a.d, top)
    assert cert.target == _scaled_vector(a, L)
    return cert


def empty_certificate(a: PartitionLike) -> Certificate:
    """``0 in a^(x)0``: the vacuous claim for a zero generator part."""
    a = as_partition(a)
    return Certificate(a.d, a.parts, 0, (0,) * a.d, (), None)


def build_generator_certificate(dec: Decomposition) -> Certificate:
    """Certificate for ``target - remainder in base^(x)(mu(d) s)``."""
    if dec.s == 0:
        return empty_certificate(dec.base)
    b = CertBuilder()
    cur = None
    for L, m in dec.multipliers:
        v = b.include(build_vertex_certificate(dec.base, L))
        for _ in range(m):
            cur = v if cur is None else b.top_product(cur, v)
    return b.finish(dec.base.d, cur)


def verify_certificate(
    cert: Certificate,
    deep: bool = False,
    deep_weight_cap: int = 24,
    cap: int = DEFAULT_SUPPORT_CAP,
) -> Verdict:
    """Check a certificate step by step against the LR oracle.

    ``deep`` additionally re-derives the conclusions of ``add`` and
    ``blockwise`` steps by direct tensor-power search when the result weight
    is at most ``deep_weight_cap``.
    """
    d = cert.rank
    if d < 1:
        return Verdict(False, None, "rank must be >= 1")

    def part_ok(v) -> bool:
        return len(v) == d and is_partition(v)

    if not (part_ok(cert.base) and part_ok(cert.target)):
        return Verdict(False, None, "claim partitions are malformed")
    if cert.power < 0:
        return Verdict(False, None, "negative claim power")
    if cert.power == 0 or not cert.steps:
        ok = cert.power == 0 and not any(cert.target) and not cert.steps and cert.conclusion is None
        return Verdict(ok, None, "vacuous claim" if ok else "empty derivation for a non-vacuous claim")

    facts: list[Fact] = []
    checked = skipped = 0
    for pos, st in enumerate(cert.steps):
        def bad(msg: str) -> Verdict:
            return Verdict(False, pos, f"step {pos} ({st.kind}): {msg}")

        if st.id != pos:
            return bad(f"id {st.id} out of sequence")
        if any(p < 0 or p >= pos for p in st.premises):
            return bad("premise does not reference an earlier step")
        if not is_partition(st.result) or not is_partition(st.base):
            return bad("base or result is not a partition")
        if st.power < 1:
            return bad("power must be >= 1")
        prem = [facts[p] for p in st.premises]

        if len(st.result) > d or len(st.base) != len(st.result):
            return bad("length mismatch")
        if st.kind == "axiom":
            expect = (st.result, 1, st.result)
        elif st.kind == "lr-step":
            if len(prem) != 2:
                return bad("lr-step needs two premises")
            (b1, n1, x), (b2, n2, y) = prem
            if b1 != b2:
                return bad("premises have different bases")
            if st.left != x or st.right != y:
                return bad("left/right do not match the premises")
            if sum(st.result) != sum(x) + sum(y):
                return bad(f"weight not conserved: {sum(st.result)} != {sum(x)} + {sum(y)}")
            if not (len(x) == len(y) == len(st.result)):
                return bad("length mismatch")
            if lr_coefficient(x, y, st.result) == 0:
                return bad(f"{list(st.result)} does not occur in {list(x)} (x) {list(y)}")
            expect = (b1, n1 + n2, st.result)
        elif st.kind == "add":
            if len(prem) != 2:
                return bad("add needs two premises")
            (b1, n1, x), (b2, n2, y) = prem
            if n1 != n2:
                return bad(f"powers differ: {n1} vs {n2}")
            if not (len(b1) == len(b2) == len(x) == len(y)):
                return bad("length mismatch")
            expect = (_vadd(b1, b2), n1, _vadd(x, y))
        else:
            L = st.L
            if not L or any(l < 1 for l in L) or len(L) != len(prem):
                return bad("composition does not match the premises")
            if any(len(f[0]) != l or len(f[2]) != l for f, l in zip(prem, L)):
                return bad("block lengths differ from the composition")
            if len({f[1] for f in prem}) != 1:
                return bad("blocks have different powers")
            base = tuple(x for f in prem for x in f[0])
            res = tuple(x for f in prem for x in f[2])
            if not (is_partition(base) and is_partition(res)):
                return bad("joined blocks are not partitions")
            expect = (base, prem[0][1], res)

        if st.fact != expect:
            return bad(f"recorded fact {st.fact} differs from derived {expect}")
        if sum(st.result) != st.power * sum(st.base):
            return bad("weight identity |result| = power * |base| fails")
        if deep and st.kind in ("add", "blockwise"):
            if sum(st.result) <= deep_weight_cap:
                try:
                    ok = contains_in_power(st.base, st.result, st.power, cap)
                except SupportCapExceeded:
                    skipped += 1
                else:
                    checked += 1
                    if not ok:
                        return bad("deep check: conclusion not found by direct search")
            else:
                skipped += 1
        facts.append(st.fact)

    if not isinstance(cert.conclusion, int) or not 0 <= cert.conclusion < len(facts):
        return Verdict(False, None, "conclusion does not reference a step")
    if facts[cert.conclusion] != cert.claim:
        return Verdict(False, cert.conclusion, f"conclusion {facts[cert.conclusion]} differs from claim {cert.claim}")
    return Verdict(True, None, "accepted", checked, skipped)


@dataclass(frozen=True)
class DominanceRecord:
    c: Partition
    decomposition: Decomposition
    certificate: Certificate

    def to_json(self) -> dict:
        return {
            "c": list(self.c.parts),
            "decomposition": self.decomposition.to_json(),
            "certificate": self.certificate.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "DominanceRecord":
        return cls(
            Partition(tuple(data["c"])),
            Decomposition.from_json(data["decomposition"]),
            Certificate.from_json(data["certificate"]),
        )


@dataclass(frozen=True)
class DominanceCertificate:
    """For each ``c`` in ``b^(x)m``: ``c = f + g`` with ``f`` in sigma(a) and a certificate for ``g``."""

    a: Partition
    b: Partition
    m: int
    records: tuple[DominanceRecord, ...]

    @property
    def mu(self) -> int:
        return mu(self.a.d)

    def to_json(self) -> dict:
        return {
            "kind": "dominance",
            "rank": self.a.d,
            "a": list(self.a.parts),
            "b": list(self.b.parts),
            "m": self.m,
            "mu": self.mu,
            "records": [r.to_json() for r in self.records],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "DominanceCertificate":
        a = Partition(tuple(data["a"]))
        if data.get("rank", a.d) != a.d or data.get("mu", mu(a.d)) != mu(a.d):
            raise CertificateError("rank or mu field inconsistent with a")
        return cls(
            a,
            Partition(tuple(data["b"])),
            int(data["m"]),
            tuple(DominanceRecord.from_json(r) for r in data["records"]),
        )


def build_dominance_certificate(
    a: PartitionLike, b: PartitionLike, m: int, cap: int = DEFAULT_SUPPORT_CAP
) -> DominanceCertificate:
    a, b = as_partition(a), as_partition(b)
    if a.d != b.d:
        raise PartitionError(f"rank mismatch: {a} vs {b}")
    if a.weight == 0 or b.weight == 0:
        raise CertificateError("dominance certificates need non-zero a and b")
    if not scaled_dominance_leq(b, a):
        raise CertificateError(f"{b} is not dominated by {a}")
    support = tensor_power_support(b, m, multiplicities=False, cap=cap)
    records = []
    for c in support:
        dec = decompose(a, c)
        records.append(DominanceRecord(c, dec, build_generator_certificate(dec)))
    return DominanceCertificate(a, b, m, tuple(records))


def verify_dominance_certificate(
    dc: DominanceCertificate, deep: bool = False, cap: int = DEFAULT_SUPPORT_CAP
) -> Verdict:
    a, b, m = dc.a, dc.b, dc.m
    if a.d != b.d or m < 1 or a.weight == 0 or b.weight == 0:
        return Verdict(False, None, "malformed header")
    if not scaled_dominance_leq(b, a):
        return Verdict(False, None, f"{b} is not dominated by {a}")
    n = mu(a.d)
    support = tensor_power_support(b, m, multiplicities=False, cap=cap).support
    seen = set()
    for i, rec in enumerate(dc.records):
        def bad(msg: str) -> Verdict:
            return Verdict(False, i, f"record {i} ({rec.c}): {msg}")

        dec, cert = rec.decomposition, rec.certificate
        if rec.c not in support:
            return bad("not in the support of b^(x)m")
        if rec.c in seen:
            return bad("duplicate record")
        seen.add(rec.c)
        if dec.base != a or dec.target != rec.c:
            return bad("decomposition is for a different base or target")
        if any(mult < 0 for _, mult in dec.multipliers):
            return bad("negative multiplier")
        f, s = dec.remainder, dec.s
        if m * b.weight != f.weight + n * a.weight * s:
            return bad(f"weight identity fails: {m}*{b.weight} != {f.weight} + {n}*{a.weight}*{s}")
        if dec.reconstruct() != rec.c.parts:
            return bad("decomposition does not reconstruct c")
        if not in_sigma(a, f) or cone_violation(a, f.parts) is not None:
            return bad(f"remainder {f} is not in sigma(a)")
        g = (rec.c - f).parts
        if cert.claim != (a.parts, n * s, g):
            return bad(f"certificate claims {cert.claim}, expected ({list(a)}, {n * s}, {list(g)})")
        v = verify_certificate(cert, deep=deep, cap=cap)
        if not v:
            return bad(f"certificate rejected: {v.message}")
    missing = sorted(support - seen)
    if missing:
        return Verdict(False, None, f"missing support element {missing[0]}")
    return Verdict(True, None, "accepted")


def load_any(data: dict) -> Certificate | DominanceCertificate:
    if data.get("kind") == "dominance":
        return DominanceCertificate.from_json(data)
    return Certificate.from_json(data)


def verify_any(obj, deep: bool = False, cap: int = DEFAULT_SUPPORT_CAP) -> Verdict:
    if isinstance(obj, DominanceCertificate):
        return verify_dominance_certificate(obj, deep=deep, cap=cap)
    return verify_certificate(obj, deep=deep, cap=cap)
