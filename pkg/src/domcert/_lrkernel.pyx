# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Littlewood-Richardson tableau enumeration.

Same algorithm and results as ``_lrkernel_py``; see that module for the
constraint derivation.  Counts are accumulated in C and only the finished
shapes touch the Python dict.
"""
from libc.stdlib cimport malloc, free


cdef struct Ctx:
    int nrows
    int nb
    int has_target
    long remaining
    int *av
    int *tv
    int *bs
    long *used
    long *prefix      # nrows x (nb + 1)
    int *shape


cdef inline long _min(long x, long y) nogil:
    return x if x < y else y


cdef int _finish(Ctx *c, int r, dict out) except -1:
    cdef int i
    for i in range(r, c.nrows):
        c.shape[i] = c.av[i]
        if c.has_target and c.tv[i] != c.av[i]:
            return 0
    key = tuple([c.shape[i] for i in range(c.nrows)])
    out[key] = out.get(key, 0) + 1
    return 0


cdef int _fill(Ctx *c, int r, int k, long rowsum, dict out) except -1:
    cdef int kmax = r + 1 if r + 1 < c.nb else c.nb
    cdef int w = c.nb + 1
    cdef long *prow = c.prefix + r * w
    cdef long *pprev
    cdef long hi, n
    if k > kmax:
        if c.has_target and c.av[r] + rowsum != c.tv[r]:
            return 0
        c.shape[r] = <int>(c.av[r] + rowsum)
        if c.remaining == 0:
            _finish(c, r + 1, out)
        elif r + 1 < c.nrows:
            _fill(c, r + 1, 1, 0, out)
        return 0
    hi = c.bs[k - 1] - c.used[k]
    if k >= 2:
        hi = _min(hi, c.used[k - 1] - (prow[k - 1] - prow[k - 2]) - c.used[k])
    if r >= 1:
        pprev = c.prefix + (r - 1) * w
        hi = _min(hi, c.av[r - 1] + pprev[k - 1] - c.av[r] - prow[k - 1])
    if c.has_target:
        hi = _min(hi, c.tv[r] - c.av[r] - rowsum)
    if hi < 0:
        return 0
    n = hi
    while n >= 0:
        prow[k] = prow[k - 1] + n
        c.used[k] += n
        c.remaining -= n
        _fill(c, r, k + 1, rowsum + n, out)
        c.used[k] -= n
        c.remaining += n
        n -= 1
    prow[k] = prow[k - 1]
    return 0


def lr_expand(a, b, int nrows, target=None):
    """Map ``c -> c^c_{a,b}`` over all ``c`` with at most ``nrows`` rows."""
    bs_list = [int(x) for x in b if x > 0]
    cdef int nb = len(bs_list)
    av_list = [int(x) for x in a] + [0] * (nrows - len(a))
    tv_list = None
    if target is not None:
        tv_list = [int(x) for x in target] + [0] * (nrows - len(target))
        if len(tv_list) != nrows or sum(tv_list) != sum(av_list) + sum(bs_list):
            return {}
        for t, x in zip(tv_list, av_list):
            if t < x:
                return {}
    if nb == 0:
        key = tuple(av_list)
        if tv_list is not None and list(key) != tv_list:
            return {}
        return {key: 1}

    cdef Ctx c
    cdef int i
    cdef dict out = {}
    c.nrows = nrows
    c.nb = nb
    c.has_target = tv_list is not None
    c.remaining = sum(bs_list)
    c.av = <int *>malloc(nrows * sizeof(int))
    c.tv = <int *>malloc(nrows * sizeof(int))
    c.shape = <int *>malloc(nrows * sizeof(int))
    c.bs = <int *>malloc(nb * sizeof(int))
    c.used = <long *>malloc((nb + 1) * sizeof(long))
    c.prefix = <long *>malloc(nrows * (nb + 1) * sizeof(long))
    if not (c.av and c.tv and c.shape and c.bs and c.used and c.prefix):
        free(c.av); free(c.tv); free(c.shape); free(c.bs); free(c.used); free(c.prefix)
        raise MemoryError()
    try:
        for i in range(nrows):
            c.av[i] = av_list[i]
            c.shape[i] = av_list[i]
            c.tv[i] = tv_list[i] if tv_list is not None else 0
        for i in range(nb):
            c.bs[i] = bs_list[i]
        for i in range(nb + 1):
            c.used[i] = 0
        for i in range(nrows * (nb + 1)):
            c.prefix[i] = 0
        _fill(&c, 0, 1, 0, out)
    finally:
        free(c.av); free(c.tv); free(c.shape); free(c.bs); free(c.used); free(c.prefix)
    return out


def lr_coefficient(a, b, c):
    """Single coefficient; all three sequences share the same length."""
    return lr_expand(a, b, len(c), c).get(tuple(c), 0)
