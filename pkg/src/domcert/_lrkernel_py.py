"""Pure-Python Littlewood-Richardson tableau enumeration.

Fallback for the compiled ``_lrkernel`` extension; both expose the same two
functions and must return identical results.

The enumeration fills the skew shape ``c/a`` row by row.  A row is determined
by how many copies of each letter it holds, since rows weakly increase.  With
``P[r][k]`` the number of letters ``<= k`` in row ``r`` the constraints are

* columns strictly increase: ``a[r] + P[r][k] <= a[r-1] + P[r-1][k-1]``
* lattice reading word (rows right to left, top to bottom):
  ``used[k] + n[r][k] <= used[k-1]`` with ``used`` counted over earlier rows
* a letter ``k`` only occurs in rows ``r >= k - 1`` (0-based)
"""
from __future__ import annotations


def lr_expand(a, b, nrows, target=None):
    """Map ``c -> c^c_{a,b}`` over all ``c`` with at most ``nrows`` rows.

    ``a`` must have length ``<= nrows``; it is padded with zeros.  With
    ``target`` given only that shape is counted.
    """
    bs = [x for x in b if x > 0]
    nb = len(bs)
    av = list(a) + [0] * (nrows - len(a))
    if target is not None:
        tv = list(target) + [0] * (nrows - len(target))
        if len(tv) != nrows or sum(tv) != sum(av) + sum(bs):
            return {}
        if any(t < x for t, x in zip(tv, av)):
            return {}
    else:
        tv = None
    if nb == 0:
        key = tuple(av)
        if tv is not None and list(key) != tv:
            return {}
        return {key: 1}

    out = {}
    used = [0] * (nb + 1)
    # prefix[r][k]: letters <= k in row r; prefix[-1] unused for r = 0
    prefix = [[0] * (nb + 1) for _ in range(nrows)]
    shape = list(av)
    remaining = sum(bs)

    def finish_rows(r):
        # all letters placed: rows r.. keep their a-shape
        for i in range(r, nrows):
            shape[i] = av[i]
            if tv is not None and tv[i] != av[i]:
                return
        key = tuple(shape)
        out[key] = out.get(key, 0) + 1

    def fill(r, k, rowsum):
        nonlocal remaining
        kmax = min(r + 1, nb)
        if k > kmax:
            if tv is not None and av[r] + rowsum != tv[r]:
                return
            shape[r] = av[r] + rowsum
            if remaining == 0:
                finish_rows(r + 1)
            elif r + 1 < nrows:
                fill(r + 1, 1, 0)
            return
        prow = prefix[r]
        # bound from content still unplaced
        hi = bs[k - 1] - used[k]
        if k >= 2:
            # row r's own (k-1)'s are read after its k's
            lat = used[k - 1] - (prow[k - 1] - prow[k - 2]) - used[k]
            if lat < hi:
                hi = lat
        if r >= 1:
            col = av[r - 1] + prefix[r - 1][k - 1] - av[r] - prow[k - 1]
            if col < hi:
                hi = col
        if tv is not None:
            room = tv[r] - av[r] - rowsum
            if room < hi:
                hi = room
        if hi < 0:
            return
        for n in range(hi, -1, -1):
            prow[k] = prow[k - 1] + n
            used[k] += n
            remaining -= n
            fill(r, k + 1, rowsum + n)
            used[k] -= n
            remaining += n
        prow[k] = prow[k - 1]

    fill(0, 1, 0)
    return out


def lr_coefficient(a, b, c):
    """Single coefficient; all three sequences share the same length."""
    return lr_expand(a, b, len(c), c).get(tuple(c), 0)
