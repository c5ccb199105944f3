import json
from fractions import Fraction

import numpy as np
import pytest

from domcert import linalg
from domcert.cone import (
    ConeError,
    Decomposition,
    cone_member,
    cone_points,
    cone_points_array,
    decompose,
    decompose_many,
    dominance_cone,
    generator,
    in_sigma,
    polytope_vertices,
    sigma,
    sigma_array,
    triangulate,
)
from domcert.partition import Composition, Partition, compositions, mu, partitions_up_to, scaled_dominance_leq

import oracles


def C(*xs):
    return Composition(xs)


def vec(*xs):
    return tuple(Fraction(x) for x in xs)


def test_generator_examples():
    a = (4, 2, 0)
    assert generator(a, C(1, 2)).vector == vec(4, 1, 1)
    assert generator(a, C(3)).vector == vec(2, 2, 2)
    assert generator(a, C(1, 1, 1)).vector == vec(4, 2, 0)


def test_generator_rank_mismatch():
    with pytest.raises(ValueError):
        generator((4, 2, 0), C(1, 1))


def test_membership_examples():
    assert cone_member((1, 0), (3, 1))
    assert not cone_member((1, 0), (1, 2))
    for a in [(4, 2, 0), (3, 1, 1, 0), (2, 2)]:
        for L in compositions(len(a)):
            v = generator(a, L).vector
            assert cone_member(a, v)
            assert scaled_dominance_leq(v, a)


def test_vertex_examples():
    assert polytope_vertices((2, 0)) == {vec(2, 0), vec(1, 1)}
    assert polytope_vertices((3, 3, 3)) == {vec(3, 3, 3)}
    assert polytope_vertices((4, 2, 0)) == {vec(4, 2, 0), vec(4, 1, 1), vec(3, 3, 0), vec(2, 2, 2)}


def test_triangulation_examples():
    for a in [(1, 0), (3, 1), (2, 0)]:
        assert len(triangulate(dominance_cone(Partition(a)))) == 1
    assert len(triangulate(dominance_cone(Partition((4, 2, 0))))) == 2
    ray = triangulate(dominance_cone(Partition((2, 2, 2))))
    assert len(ray) == 1 and ray[0].dim == 1


def test_sigma_examples():
    assert sigma((1, 0)) == {Partition((0, 0)), Partition((1, 0))}
    for d in (2, 3):
        for k in (1, 2):
            a = Partition((k,) * d)
            assert sigma(a) == {Partition((j,) * d) for j in range(mu(d) * k)}
    for a in [(4, 2, 0), (1, 0, 0), (2, 1)]:
        assert Partition.zero(len(a)) in sigma(a)


def test_decompose_examples():
    dec = decompose((1, 0), (2, 1))
    assert dec.remainder.parts == (1, 0)
    assert dict(dec.multipliers) == {C(2): 1}
    dec = decompose((1, 0), (3, 1))
    assert dec.remainder.parts == (0, 0)
    assert dict(dec.multipliers) == {C(2): 1, C(1, 1): 1}
    a = Partition((4, 2, 0))
    cone = dominance_cone(a)
    for L, v in cone.scaled:
        dec = decompose(a, v)
        assert dec.remainder == Partition.zero(3)
        assert dict(dec.multipliers) == {L: 1}


def test_decompose_outside_cone_names_violation():
    with pytest.raises(ConeError, match="partial sum"):
        decompose((2, 1, 0), (3, 0, 0))


def test_zero_base_rejected():
    with pytest.raises(ConeError):
        sigma((0, 0))
    with pytest.raises(ConeError):
        decompose((0, 0), (1, 0))


def test_decomposition_json_round_trip():
    dec = decompose((2, 1, 0), (42, 24, 6))
    data = json.loads(json.dumps(dec.to_json()))
    assert set(data) == {"base", "target", "remainder", "terms"}
    assert data["terms"]
    assert Decomposition.from_json(data) == dec
    data["terms"][0]["generator"][0] += 1
    with pytest.raises(ConeError):
        Decomposition.from_json(data)


# invariants

def test_generators_in_cone():
    for d in range(1, 6):
        for a in partitions_up_to(8, d, min_weight=1):
            for g in dominance_cone(a).generators:
                assert cone_member(a, g.vector)
                assert sum(g.vector) == a.weight
                assert all(x >= y for x, y in zip(g.vector, g.vector[1:]))


def test_scaled_generators_integral():
    for d in range(1, 7):
        for a in partitions_up_to(8 if d <= 4 else 4, d, min_weight=1):
            for L in compositions(d):
                v = generator(a * mu(d), L).vector
                assert all(x.denominator == 1 for x in v)


def test_vertices_are_generators():
    for d in range(1, 5):
        for a in partitions_up_to(5, d, min_weight=1):
            gens = {g.vector for g in dominance_cone(a).generators}
            verts = polytope_vertices(a)
            assert verts <= gens
            # a generator that is not a vertex must be a convex combination of the vertices
            for g in gens:
                others = [v for v in gens if v != g]
                if g in verts:
                    assert not oracles.is_convex_combination(g, others)
                else:
                    assert oracles.is_convex_combination(g, list(verts))


def test_membership_matches_feasibility():
    # b in C(a) by partial sums  <=>  b is a non-negative combination of generators
    for d in range(1, 4):
        for a in partitions_up_to(4, d, min_weight=1):
            gens = [g.vector for g in dominance_cone(a).generators]
            w = 2 * a.weight
            for b in partitions_up_to(w, d):
                feasible = linalg.nonneg_solution(gens, b.parts) is not None
                assert feasible == cone_member(a, b)


def test_cone_points_match_filter():
    for d in range(1, 4):
        for a in partitions_up_to(3, d, min_weight=1):
            got = set(cone_points(a, 9))
            ref = {b for b in partitions_up_to(9, d) if cone_member(a, b)}
            assert got == ref
            arr = cone_points_array(a, 9)
            assert {Partition(tuple(r)) for r in arr.tolist()} == ref


def test_sigma_in_cone_and_in_parallelepipeds():
    for d in range(1, 5):
        for a in partitions_up_to(3 if d == 4 else 6, d, min_weight=1):
            s = sigma(a, cap=10**7)
            for c in s:
                assert cone_member(a, c)
                assert in_sigma(a, c)


def test_decompose_reconstructs():
    for d in range(1, 4):
        for a in partitions_up_to(4, d, min_weight=1):
            for b in cone_points(a, 2 * mu(d) * a.weight):
                dec = decompose(a, b)
                assert dec.reconstruct() == b.parts
                assert in_sigma(a, dec.remainder)
                assert all(m > 0 for _, m in dec.multipliers)


def test_decompose_many_matches_single():
    a = Partition((3, 1, 0))
    pts = cone_points_array(a, 30)
    mults, rems = decompose_many(a, pts)
    labels = [L for L, _ in dominance_cone(a).scaled]
    for p, m, r in zip(pts.tolist(), mults.tolist(), rems.tolist()):
        dec = decompose(a, p)
        assert dec.remainder.parts == tuple(r)
        assert dict(dec.multipliers) == {L: x for L, x in zip(labels, m) if x}


def test_sigma_array_sorted_unique():
    arr = sigma_array((2, 1, 0))
    rows = [tuple(r) for r in arr.tolist()]
    assert rows == sorted(set(rows))
    assert isinstance(arr, np.ndarray)
