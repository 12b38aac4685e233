"""Pure-Python reachability kernels over bitmask adjacency rows.

``rows[u]`` is an int whose bit ``v`` is set iff ``u`` pecks ``v``.  These are
the reference implementations; ``_ckernels`` must agree with them exactly.
"""

from __future__ import annotations


def orientation_rows(n: int, pair_u, pair_v, index: int) -> list[int]:
    """Out-neighbour rows for orientation ``index`` of the given pair list.

    Bit ``b`` of ``index`` clear orients pair ``b`` as ``u -> v``; set orients
    it ``v -> u``.
    """
    rows = [0] * n
    for b in range(len(pair_u)):
        u = pair_u[b]
        v = pair_v[b]
        if (index >> b) & 1:
            rows[v] |= 1 << u
        else:
            rows[u] |= 1 << v
    return rows


def bfs_distances(rows, src: int) -> list[int]:
    """Shortest directed path lengths from ``src``; -1 where unreachable."""
    n = len(rows)
    dist = [-1] * n
    dist[src] = 0
    seen = 1 << src
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
        while nxt:
            low = nxt & -nxt
            dist[low.bit_length() - 1] = d
            nxt ^= low
    return dist


def cover_level_one(rows, src: int, want: int) -> int:
    """Least ``m`` whose m-ball from ``src`` covers ``want``, or -1."""
    seen = 1 << src
    if want & ~seen == 0:
        return 0
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= rows[low.bit_length() - 1]
            f ^= low
        nxt &= ~seen
        seen |= nxt
        if want & ~seen == 0:
            return d
        frontier = nxt
    return -1


def cover_levels(rows, targets) -> list[int]:
    """``cover_level_one`` for every chicken, with ``targets[c]`` as the set
    chicken ``c`` must cover.
    """
    return [cover_level_one(rows, src, targets[src]) for src in range(len(rows))]
