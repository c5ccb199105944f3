"""Exact linear algebra over Q and Z: elimination, feasibility, Hermite form.

Matrices are lists of rows.  Nothing here touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[Fraction]]


def _frac_rows(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and its pivot columns."""
    m = _frac_rows(rows)
    if not m:
        return m, []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def transpose(rows: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*rows)]


def solve(columns: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Unique ``x`` with ``sum_j x_j columns[j] = b``, or None.

    None when the system is inconsistent; ValueError when the columns are
    dependent (no unique solution).
    """
    k = len(columns)
    aug = [list(row) + [bi] for row, bi in zip(transpose(columns), b)]
    m, piv = rref(aug)
    if k in piv:
        return None
    if len(piv) < k:
        raise ValueError("columns are linearly dependent")
    return [m[i][k] for i in range(k)]


def independent_rows(columns: Sequence[Sequence]) -> list[int]:
    """Indices of rows forming a basis of the row space of the matrix with these columns."""
    _, piv = rref(columns)  # pivots of the transpose are independent rows
    return piv


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Integer determinant by fraction-free Bareiss elimination."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def adjugate_int(m: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """``(adj, det)`` with ``m @ adj = det * I``, all integers."""
    n = len(m)
    det = det_int(m)
    if det == 0:
        raise ValueError("singular matrix")
    inv = inverse(m)
    adj = [[int(x * det) for x in row] for row in inv]
    return adj, det


def inverse(m: Sequence[Sequence]) -> Matrix:
    n = len(m)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    r, piv = rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in r]


def hermite_lower(columns: Sequence[Sequence[int]]) -> list[list[int]]:
    """Lower-triangular basis (as rows of a square matrix) of the lattice spanned by ``columns``.

    ``columns`` are k linearly independent vectors in Z^k.  The result ``H``
    satisfies ``H[i][j] = 0`` for ``j > i`` and ``H[i][i] > 0``; its columns
    generate the same lattice, so ``0 <= x_i < H[i][i]`` enumerates coset
    representatives of Z^k modulo it.
    """
    k = len(columns)
    cols = [list(map(int, c)) for c in columns]
    for i in range(k):
        # gcd-combine entries of row i across columns i..k-1 into column i
        for j in range(i + 1, k):
            while cols[j][i] != 0:
                q = cols[i][i] // cols[j][i]
                cols[i] = [x - q * y for x, y in zip(cols[i], cols[j])]
                cols[i], cols[j] = cols[j], cols[i]
        if cols[i][i] == 0:
            raise ValueError("columns are linearly dependent")
        if cols[i][i] < 0:
            cols[i] = [-x for x in cols[i]]
        # reduce entries right-of-diagonal are zero; reduce earlier columns modulo this one
        for j in range(i):
            q = cols[j][i] // cols[i][i]
            if q:
                cols[j] = [x - q * y for x, y in zip(cols[j], cols[i])]
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def nonneg_solution(columns: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Some ``x >= 0`` with ``sum_j x_j columns[j] = b``, or None if infeasible.

    Phase-one simplex with Bland's rule on exact rationals.
    """
    A = transpose(_frac_rows(columns)) if columns else [[] for _ in b]
    bb = [Fraction(x) for x in b]
    m, n = len(bb), len(columns)
    for i in range(m):
        if bb[i] < 0:
            A[i] = [-x for x in A[i]]
            bb[i] = -bb[i]
    # tableau rows: [A | I | b]; basis starts on the artificials
    T = [A[i] + [Fraction(int(i == j)) for j in range(m)] + [bb[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    ncol = n + m
    # objective: minimise the sum of artificials; reduced costs row
    cost = [Fraction(0)] * (ncol + 1)
    for i in range(m):
        cost = [c - t for c, t in zip(cost, T[i])]
    for j in range(n, ncol):
        cost[j] = Fraction(0)
    while True:
        enter = next((j for j in range(ncol) if cost[j] < 0), None)
        if enter is None:
            break
        best, leave = None, None
        for i in range(m):
            if T[i][enter] > 0:
                ratio = T[i][-1] / T[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # unbounded cannot occur in phase one
            break
        piv = T[leave][enter]
        T[leave] = [x / piv for x in T[leave]]
        for i in range(m):
            if i != leave and T[i][enter] != 0:
                f = T[i][enter]
                T[i] = [x - f * y for x, y in zip(T[i], T[leave])]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, T[leave])]
        basis[leave] = enter
    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * ncol
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    if any(x[j] != 0 for j in range(n, ncol)):
        return None
    return x[:n]


def content_gcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g
