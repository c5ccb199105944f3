import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from domcert.partition import (
    Composition,
    Partition,
    PartitionError,
    blocks,
    compositions,
    dominance_leq,
    equivalent,
    first_dominance_violation,
    is_partition,
    join,
    mu,
    parse_composition,
    parse_partition,
    partitions_of,
    partitions_up_to,
    scaled_dominance_leq,
    schur_dimension,
    transpose,
    weight,
)

from oracles import weyl_dimension


@pytest.mark.parametrize("a,w", [((0, 0, 0), 0), ((2, 1, 0), 3), ((4, 2, 0), 6)])
def test_weight(a, w):
    assert weight(a) == w
    assert Partition(a).weight == w


@pytest.mark.parametrize(
    "a,b,expected",
    [
        ((1, 1), (2, 0), True),
        ((2, 2, 0), (3, 1, 0), True),
        ((2, 2, 2, 0), (3, 1, 1, 1), False),
        ((2, 0), (1, 1), False),
    ],
)
def test_dominance_examples(a, b, expected):
    assert dominance_leq(a, b) is expected


def test_dominance_hand_check():
    # partial sums of (2,2,2,0): 2,4,6 ; of (3,1,1,1): 3,4,5
    assert first_dominance_violation((2, 2, 2, 0), (3, 1, 1, 1)) == "partial sum 3: 6 > 5"
    assert first_dominance_violation((2, 0), (1, 1)) == "partial sum 1: 2 > 1"


def test_dominance_rejects_rank_mismatch():
    with pytest.raises(PartitionError):
        dominance_leq((1, 0), (1, 0, 0))


def test_dominance_unequal_weight_is_false():
    assert not dominance_leq((1, 0), (2, 0))
    assert "weight" in first_dominance_violation((1, 0), (2, 0))


def test_scaled_examples():
    assert scaled_dominance_leq((1, 1), (2, 1))
    # by hand: 3*(1,1) = (3,3), 2*(2,1) = (4,2)
    assert dominance_leq((3, 3), (4, 2))
    assert scaled_dominance_leq((2, 1), (4, 2)) and scaled_dominance_leq((4, 2), (2, 1))
    assert equivalent((2, 1), (4, 2))
    assert not scaled_dominance_leq((2, 0), (1, 1))


def test_scaled_both_zero_is_error():
    with pytest.raises(PartitionError):
        scaled_dominance_leq((0, 0), (0, 0))


def test_scaled_accepts_rationals():
    half = Fraction(1, 2)
    assert scaled_dominance_leq((half, half), (1, 0))
    assert not scaled_dominance_leq((1, 0), (half, half))


@pytest.mark.parametrize("a,t", [((2, 1, 0), (2, 1)), ((3, 1), (2, 1, 1)), ((2, 2), (2, 2))])
def test_transpose_examples(a, t):
    assert transpose(a).parts == t


def test_join_examples():
    assert join((4,), (1, 1)) == (4, 1, 1)
    assert join((), (2, 0)) == (2, 0)
    assert join((1,), (3,)) == (1, 3)
    assert not is_partition(join((1,), (3,)))


@pytest.mark.parametrize(
    "L,expected",
    [((1, 2), ((4,), (2, 0))), ((3,), ((4, 2, 0),)), ((1, 1, 1), ((4,), (2,), (0,)))],
)
def test_blocks_examples(L, expected):
    assert blocks((4, 2, 0), Composition(L)) == expected


def test_blocks_length_mismatch():
    with pytest.raises(PartitionError):
        blocks((4, 2, 0), Composition((1, 1)))


def test_compositions_examples():
    assert [c.blocks for c in compositions(1)] == [(1,)]
    assert {c.blocks for c in compositions(3)} == {(3,), (1, 2), (2, 1), (1, 1, 1)}
    assert len(compositions(5)) == 16
    with pytest.raises(PartitionError):
        compositions(0)


@pytest.mark.parametrize("l,m", [(1, 1), (3, 6), (4, 12), (6, 60)])
def test_mu(l, m):
    assert mu(l) == m


def test_schur_dimension_examples():
    assert schur_dimension((1, 0), 2) == 2
    assert schur_dimension((1, 1), 2) == 1
    assert schur_dimension((2, 1, 0), 3) == 8
    assert schur_dimension((1, 1, 1), 2) == 0


def test_parse_round_trip():
    p = parse_partition("[4, 2,0]")
    assert p.parts == (4, 2, 0) and str(p) == "[4,2,0]"
    assert parse_partition("[2]", rank=3).parts == (2, 0, 0)
    assert str(parse_composition("(1,2)")) == "(1,2)"
    for bad in ("4,2", "[1,a]", "[1,2]"):
        with pytest.raises(PartitionError):
            parse_partition(bad)


def test_partition_validation():
    for bad in ((1, 2), (-1,), (1.5,)):
        with pytest.raises(PartitionError):
            Partition(bad)


# invariants

def _pairs(d, w):
    ps = list(partitions_of(w, d))
    return itertools.product(ps, ps)


def test_dominance_is_partial_order():
    for d in range(1, 5):
        for w in range(9):
            ps = list(partitions_of(w, d))
            leq = {(a, b): dominance_leq(a, b) for a in ps for b in ps}
            for a in ps:
                assert leq[a, a]
            for a, b in itertools.product(ps, ps):
                if leq[a, b] and leq[b, a]:
                    assert a == b
                if leq[a, b]:
                    for c in ps:
                        if leq[b, c]:
                            assert leq[a, c]


def test_scaled_agrees_at_equal_weight():
    for d in range(1, 5):
        for w in range(1, 9):
            for a, b in _pairs(d, w):
                assert scaled_dominance_leq(a, b) == dominance_leq(a, b)


def test_scaling_equivalence():
    for d in range(1, 4):
        for a in partitions_up_to(4, d, min_weight=1):
            for m, n in itertools.product(range(1, 6), repeat=2):
                assert scaled_dominance_leq(a * m, a * n)
                assert scaled_dominance_leq(a * n, a * m)


def test_transpose_involution():
    for d in range(1, 7):
        for a in partitions_up_to(10, d):
            assert transpose(transpose(a), length=d) == a


def test_blocks_join_identity():
    for d in range(1, 6):
        for a in partitions_up_to(5, d):
            for L in compositions(d):
                parts = blocks(a, L)
                assert [len(p) for p in parts] == list(L.blocks)
                assert tuple(itertools.chain.from_iterable(parts)) == a.parts


def test_composition_count():
    for d in range(1, 13):
        assert len(compositions(d)) == 2 ** (d - 1)
        assert all(c.total == d for c in compositions(d))


def test_schur_dimension_special_values():
    for d in range(1, 6):
        assert schur_dimension(Partition.det(d), d) == 1
        for k in range(7):
            row = Partition((k,) + (0,) * (d - 1))
            assert schur_dimension(row, d) == comb(d + k - 1, k)


def test_schur_dimension_matches_weyl():
    for d in range(1, 5):
        for a in partitions_up_to(6, d):
            for n in range(1, 6):
                assert schur_dimension(a, n) == weyl_dimension(a.parts, n)


def test_partition_enumeration_counts():
    # p(w) for unrestricted length once d >= w
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert [len(list(partitions_of(w, w or 1))) for w in range(9)] == expected


parts_st = st.lists(st.integers(0, 6), min_size=1, max_size=5).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


@given(parts_st, st.integers(1, 4), st.integers(1, 4))
def test_scaled_is_scale_invariant(a, m, n):
    if a.weight:
        b = Partition.det(a.d) * 1 + a
        assert scaled_dominance_leq(a, b) == scaled_dominance_leq(a * m, b * n)


@given(parts_st)
def test_transpose_preserves_weight(a):
    assert transpose(a).weight == a.weight
