"""Reference computations that share no code with the package.

LR multiplicities come from multiplying Schur polynomials written out as
monomials (via semistandard tableaux) and peeling off leading terms.
Dimensions come from the Weyl product formula.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import prod


def _ssyt_rows(shape, n):
    # fill row by row; each row weakly increasing, columns strictly increasing
    rows = [r for r in shape if r > 0]

    def fill(i, above):
        if i == len(rows):
            yield ()
            return
        for row in combinations_with_replacement(range(1, n + 1), rows[i]):
            if above is not None and any(row[j] <= above[j] for j in range(rows[i])):
                continue
            for rest in fill(i + 1, row):
                yield (row,) + rest

    yield from fill(0, None)


@lru_cache(maxsize=None)
def schur_poly(shape: tuple, n: int) -> dict:
    """Monomial expansion of s_shape(x_1..x_n) as {exponent: coefficient}."""
    out: Counter = Counter()
    if sum(1 for r in shape if r) > n:
        return {}
    for t in _ssyt_rows(shape, n):
        e = [0] * n
        for row in t:
            for x in row:
                e[x - 1] += 1
        out[tuple(e)] += 1
    return dict(out)


def poly_mul(p: dict, q: dict) -> dict:
    out: Counter = Counter()
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    return {e: c for e, c in out.items() if c}


def schur_expand(poly: dict, n: int) -> dict:
    """Write a symmetric polynomial as a combination of Schur polynomials."""
    poly = dict(poly)
    out = {}
    while poly:
        lead = max(poly)
        c = poly[lead]
        out[lead] = c
        for e, k in schur_poly(lead, n).items():
            v = poly.get(e, 0) - c * k
            if v:
                poly[e] = v
            else:
                poly.pop(e, None)
    return out


def lr_product(a, b, n: int) -> dict:
    """{c: multiplicity} for s_a * s_b in n variables (GL(n) truncation)."""
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return schur_expand(poly_mul(schur_poly(a[:n], n), schur_poly(b[:n], n)), n)


def weyl_dimension(a, n: int) -> int:
    a = list(a) + [0] * max(0, n - len(a))
    if any(a[n:]):
        return 0
    a = a[:n]
    num = prod(a[i] - a[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def horizontal_strips(a, k: int, d: int) -> set:
    """Partitions of length d obtained from a by adding k boxes, no two in a column."""
    out = set()

    def rec(i, left, acc):
        if i == d:
            if left == 0:
                out.add(tuple(acc))
            return
        cap = left if i == 0 else min(left, a[i - 1] - a[i])
        for x in range(cap + 1):
            rec(i + 1, left - x, acc + [a[i] + x])

    rec(0, k, [])
    return out


def vertical_strips(a, k: int, d: int) -> set:
    """Add k boxes to a, at most one per row, keeping a partition."""
    from itertools import combinations

    out = set()
    for rows in combinations(range(d), k):
        c = list(a)
        for r in rows:
            c[r] += 1
        if all(c[i] >= c[i + 1] for i in range(d - 1)):
            out.add(tuple(c))
    return out


def brute_power_support(a, m: int) -> set:
    """Support of a^{tensor m} in GL(len(a)) by iterated schur_expand."""
    n = len(a)
    p = schur_poly(tuple(a), n)
    acc = {(0,) * n: 1}
    for _ in range(m):
        acc = poly_mul(acc, p)
    return set(schur_expand(acc, n))


def is_convex_combination(v, others) -> bool:
    """Exact test over all supports of size <= dim + 1 (Caratheodory)."""
    from itertools import combinations

    d = len(v)
    pts = [tuple(Fraction(x) for x in o) for o in others]
    v = tuple(Fraction(x) for x in v)
    for r in range(1, min(len(pts), d + 1) + 1):
        for sub in combinations(pts, r):
            lam = _affine_solve(sub, v)
            if lam is not None and all(x >= 0 for x in lam):
                return True
    return False


def _affine_solve(pts, v):
    # solve sum lam_i p_i = v, sum lam_i = 1 by Gaussian elimination
    r = len(pts)
    rows = [[p[i] for p in pts] + [v[i]] for i in range(len(v))]
    rows.append([Fraction(1)] * r + [Fraction(1)])
    piv_cols = []
    row = 0
    for col in range(r):
        piv = next((i for i in range(row, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[row], rows[piv] = rows[piv], rows[row]
        pv = rows[row][col]
        rows[row] = [x / pv for x in rows[row]]
        for i in range(len(rows)):
            if i != row and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[row])]
        piv_cols.append(col)
        row += 1
    if any(all(x == 0 for x in rw[:-1]) and rw[-1] != 0 for rw in rows):
        return None
    if len(piv_cols) < r:
        return None
    return [rows[i][-1] for i in range(r)]
