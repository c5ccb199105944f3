"""Exhaustive invariant grids, runnable in parallel with deterministic output."""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .certificates import (
    build_det_certificate,
    build_vertex_certificate,
    build_wedge_certificate,
    verify_certificate,
    wedge_exponents,
)
from .cone import cone_member, cone_points, decompose, dominance_cone, in_sigma
from .lr import contains_in_power, tensor_product
from .partition import (
    Composition,
    Partition,
    compositions,
    dominance_leq,
    partitions_of,
    partitions_up_to,
    scaled_dominance_leq,
    schur_dimension,
    transpose,
)

Item = tuple  # (suite name, *args), picklable


def _nonzero(d: int, w: int) -> list[Partition]:
    return list(partitions_up_to(w, d, min_weight=1))


def _items(rank: int, weight: int) -> Iterator[Item]:
    for d in range(1, rank + 1):
        for w in range(weight + 1):
            yield ("dominance-order", d, w)
        for w in range(1, weight + 1):
            yield ("scaled-vs-plain", d, w)
        yield ("transpose-involution", d, weight)
        for a in partitions_up_to(weight, d):
            yield ("lr-commutativity", d, a.parts, weight)
            yield ("lr-dominated-by-sum", d, a.parts, weight)
            yield ("det-twist", a.parts)
        for k in range(1, d + 1):
            for m in range(1, weight + 1):
                yield ("wedge-certificate", d, k, m)
        for a in _nonzero(d, weight):
            yield ("det-certificate", a.parts)
            yield ("cone-generators", a.parts)
            if d <= 3:
                yield ("decompose", a.parts, weight)
                for L in compositions(d):
                    yield ("vertex-certificate", a.parts, L.blocks)
    for wa in range(weight + 1):
        for wb in range(weight + 1):
            yield ("lr-dimension", wa, wb)


def _check(cond: bool, failures: list, what) -> int:
    if not cond:
        failures.append(str(what))
    return 1


def run_item(item: Item) -> tuple[str, int, list[str]]:
    name, *args = item
    failures: list[str] = []
    n = 0
    if name == "dominance-order":
        d, w = args
        ps = list(partitions_of(w, d))
        for a in ps:
            n += _check(dominance_leq(a, a), failures, ("reflexive", a))
            for b in ps:
                if dominance_leq(a, b) and dominance_leq(b, a):
                    n += _check(a == b, failures, ("antisymmetric", a, b))
                for c in ps:
                    if dominance_leq(a, b) and dominance_leq(b, c):
                        n += _check(dominance_leq(a, c), failures, ("transitive", a, b, c))
    elif name == "scaled-vs-plain":
        d, w = args
        ps = list(partitions_of(w, d))
        for a, b in itertools.product(ps, ps):
            n += _check(scaled_dominance_leq(a, b) == dominance_leq(a, b), failures, (a, b))
    elif name == "transpose-involution":
        d, w = args
        for a in partitions_up_to(w, d):
            back = transpose(transpose(a), length=d) if a.weight else a
            n += _check(back == a, failures, a)
    elif name == "lr-commutativity":
        d, a, w = args
        for b in partitions_up_to(w, d):
            n += _check(tensor_product(a, b).entries == tensor_product(b, a).entries, failures, (a, b))
    elif name == "lr-dominated-by-sum":
        d, a, w = args
        a = Partition(a)
        for b in partitions_up_to(w, d):
            top = a + b
            for c in tensor_product(a, b):
                n += _check(dominance_leq(c, top), failures, (a, b, c))
    elif name == "det-twist":
        a = Partition(args[0])
        prod = tensor_product(a, Partition.det(a.d))
        n += _check(prod.entries == {a + Partition.det(a.d): 1}, failures, a)
    elif name == "lr-dimension":
        wa, wb = args
        rank = wa + wb + 1
        for a in partitions_of(wa, rank):
            for b in partitions_of(wb, rank):
                prod = tensor_product(a, b)
                for dim in (1, 2, 3, rank):
                    lhs = schur_dimension(a, dim) * schur_dimension(b, dim)
                    rhs = sum(m * schur_dimension(c, dim) for c, m in prod.entries.items())
                    n += _check(lhs == rhs, failures, (a, b, dim))
    elif name == "wedge-certificate":
        d, k, m = args
        cert = build_wedge_certificate(d, k, m)
        q, s = wedge_exponents(d, k, m)
        n += _check(m * k == d * q + s and 0 <= s < d, failures, ("exponents", d, k, m))
        n += _check(bool(verify_certificate(cert)), failures, ("verify", d, k, m))
        if m * k <= 20:
            n += _check(contains_in_power(cert.base, cert.target, m), failures, ("oracle", d, k, m))
    elif name == "det-certificate":
        a = Partition(args[0])
        cert = build_det_certificate(a)
        n += _check(cert.target == (a.weight,) * a.d and cert.power == a.d, failures, ("claim", a))
        n += _check(bool(verify_certificate(cert)), failures, ("verify", a))
        if a.weight * a.d <= 16:
            n += _check(contains_in_power(a, cert.target, a.d), failures, ("oracle", a))
    elif name == "cone-generators":
        a = Partition(args[0])
        for g in dominance_cone(a).generators:
            n += _check(cone_member(a, g.vector), failures, (a, g.label))
            v = dominance_cone(a).scaled_generator(g.label)
            n += _check(all(isinstance(x, int) for x in v), failures, ("integral", a, g.label))
    elif name == "vertex-certificate":
        a, L = Partition(args[0]), Composition(args[1])
        cert = build_vertex_certificate(a, L)
        n += _check(bool(verify_certificate(cert)), failures, ("verify", a, L))
        if a.weight * cert.power <= 18:
            n += _check(contains_in_power(a, cert.target, cert.power), failures, ("oracle", a, L))
    elif name == "decompose":
        a, w = Partition(args[0]), args[1]
        for b in cone_points(a, w * a.weight):
            dec = decompose(a, b)
            ok = dec.reconstruct() == b.parts and in_sigma(a, dec.remainder)
            n += _check(ok, failures, (a, b))
    else:
        raise ValueError(f"unknown suite {name}")
    return name, n, failures


def run_selftest(rank: int, weight: int, jobs: int = 1) -> dict:
    items = list(_items(rank, weight))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run_item, items, chunksize=max(1, len(items) // (4 * jobs))))
    else:
        results = [run_item(it) for it in items]
    suites: dict[str, dict] = {}
    for name, n, failures in results:
        s = suites.setdefault(name, {"checked": 0, "failed": 0, "failures": []})
        s["checked"] += n
        s["failed"] += len(failures)
        s["failures"].extend(failures)
    for s in suites.values():
        s["failures"] = s["failures"][:10]
    total_failed = sum(s["failed"] for s in suites.values())
    return {"rank": rank, "weight": weight, "ok": total_failed == 0, "suites": suites}
