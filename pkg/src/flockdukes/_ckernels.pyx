# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the routines in ``_pykernels`` for graphs of <= 64 chickens."""

from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64


cdef inline int _ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef int _load(rows, uint64_t* buf) except -1:
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i
    if n > MAXN:
        raise OverflowError("compiled kernels handle at most 64 chickens")
    for i in range(n):
        buf[i] = <uint64_t>rows[i]
    return <int>n


def orientation_rows(int n, pair_u, pair_v, index):
    if n > MAXN:
        raise OverflowError("compiled kernels handle at most 64 chickens")
    cdef uint64_t rows[MAXN]
    cdef Py_ssize_t m = len(pair_u)
    cdef Py_ssize_t b
    cdef int u, v
    cdef uint64_t one = 1
    cdef object idx = index
    cdef uint64_t low_bits
    for b in range(n):
        rows[b] = 0
    if m > 64:
        # orientation index no longer fits a machine word
        for b in range(m):
            u = pair_u[b]
            v = pair_v[b]
            if (idx >> b) & 1:
                rows[v] |= one << u
            else:
                rows[u] |= one << v
    else:
        low_bits = <uint64_t>idx
        for b in range(m):
            u = pair_u[b]
            v = pair_v[b]
            if (low_bits >> b) & one:
                rows[v] |= one << u
            else:
                rows[u] |= one << v
    return [rows[b] for b in range(n)]


def bfs_distances(rows, int src):
    cdef uint64_t buf[MAXN]
    cdef int n = _load(rows, buf)
    cdef int dist[MAXN]
    cdef int i, d = 0
    cdef uint64_t one = 1
    cdef uint64_t seen, frontier, nxt, f
    for i in range(n):
        dist[i] = -1
    dist[src] = 0
    seen = one << src
    frontier = seen
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            nxt |= buf[_ctz(f)]
            f &= f - 1
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
        while nxt:
            dist[_ctz(nxt)] = d
            nxt &= nxt - 1
    return [dist[i] for i in range(n)]


cdef int _cover(const uint64_t* buf, int src, uint64_t want) noexcept nogil:
    cdef uint64_t one = 1
    cdef uint64_t seen = one << src
    cdef uint64_t frontier, nxt, f
    cdef int d = 0
    if want & ~seen == 0:
        return 0
    frontier = seen
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            nxt |= buf[_ctz(f)]
            f &= f - 1
        nxt &= ~seen
        seen |= nxt
        if want & ~seen == 0:
            return d
        frontier = nxt
    return -1


def cover_level_one(rows, int src, want):
    cdef uint64_t buf[MAXN]
    _load(rows, buf)
    return _cover(buf, src, <uint64_t>want)


def cover_levels(rows, targets):
    cdef uint64_t buf[MAXN]
    cdef uint64_t want_buf[MAXN]
    cdef int n = _load(rows, buf)
    _load(targets, want_buf)
    cdef int src
    return [_cover(buf, src, want_buf[src]) for src in range(n)]
