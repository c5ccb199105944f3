import itertools
import random
from fractions import Fraction

import pytest

from domcert import linalg


def test_rank_and_solve():
    cols = [(2, 0), (1, 1)]
    assert linalg.rank(cols) == 2
    assert linalg.solve(cols, (2, 1)) == [Fraction(1, 2), 1]
    assert linalg.solve([(1, 0)], (0, 1)) is None
    with pytest.raises(ValueError):
        linalg.solve([(1, 1), (2, 2)], (3, 3))


def test_det_and_adjugate_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        det = linalg.det_int(m)
        # Leibniz formula as reference
        ref = 0
        for perm in itertools.permutations(range(n)):
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            term = (-1) ** inv
            for i in range(n):
                term *= m[i][perm[i]]
            ref += term
        assert det == ref
        if det:
            adj, d2 = linalg.adjugate_int(m)
            assert d2 == det
            for i in range(n):
                for j in range(n):
                    assert sum(m[i][k] * adj[k][j] for k in range(n)) == det * (i == j)


def test_hermite_lower_spans_same_lattice():
    rng = random.Random(11)
    for _ in range(100):
        k = rng.randint(1, 3)
        cols = [[rng.randint(-6, 6) for _ in range(k)] for _ in range(k)]
        if linalg.det_int([[c[i] for c in cols] for i in range(k)]) == 0:
            continue
        H = linalg.hermite_lower(cols)
        for i in range(k):
            assert H[i][i] > 0
            assert all(H[i][j] == 0 for j in range(i + 1, k))
        det = abs(linalg.det_int([[c[i] for c in cols] for i in range(k)]))
        diag = 1
        for i in range(k):
            diag *= H[i][i]
        assert diag == det
        # every H column is an integer combination of the original columns
        hcols = [[H[i][j] for i in range(k)] for j in range(k)]
        for h in hcols:
            x = linalg.solve(cols, h)
            assert all(v.denominator == 1 for v in x)


def test_nonneg_solution():
    gens = [(2, 0), (1, 1)]
    x = linalg.nonneg_solution(gens, (3, 1))
    assert x is not None and all(v >= 0 for v in x)
    assert linalg.nonneg_solution(gens, (0, 1)) is None
    assert linalg.nonneg_solution(gens, (0, 0)) == [0, 0]


def test_nonneg_solution_random_feasible():
    rng = random.Random(3)
    for _ in range(150):
        d, n = rng.randint(1, 4), rng.randint(1, 6)
        cols = [[rng.randint(0, 4) for _ in range(d)] for _ in range(n)]
        lam = [Fraction(rng.randint(0, 3), rng.randint(1, 3)) for _ in range(n)]
        b = [sum(l * c[i] for l, c in zip(lam, cols)) for i in range(d)]
        x = linalg.nonneg_solution(cols, b)
        assert x is not None
        assert all(v >= 0 for v in x)
        assert [sum(v * c[i] for v, c in zip(x, cols)) for i in range(d)] == b


def test_independent_rows():
    cols = [(1, 1, 0), (2, 2, 0)]
    rows = linalg.independent_rows(cols)
    assert len(rows) == 1
