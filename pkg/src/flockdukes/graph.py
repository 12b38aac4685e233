"""Multi-flock chicken graphs (multipartite tournaments) and their vocabulary.

Chickens are dense 0-based indices assigned flock by flock in declared order.
The orientation is stored as one out-neighbour bitmask per chicken, which is
a dense direction table: ``u`` pecks ``v`` iff bit ``v`` of ``rows[u]`` is set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernels
from .errors import (
    DifferentFlocks,
    DuplicatePair,
    EmptyFlock,
    IntraFlockArc,
    MissingPair,
    SameChicken,
    SameFlock,
    UnknownChicken,
    UnknownFlock,
)


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(chickens: Iterable[int]) -> int:
    m = 0
    for c in chickens:
        m |= 1 << c
    return m


class MultiFlockGraph:
    """An immutable multipartite tournament.

    Build instances with :func:`build_graph` (validating) rather than calling
    the constructor, which trusts its ``rows`` argument.
    """

    __slots__ = ("sizes", "n", "flock_of", "flock_masks", "rows", "in_rows", "starts")

    def __init__(self, sizes: Sequence[int], rows: Sequence[int]):
        sizes = tuple(int(s) for s in sizes)
        starts = []
        flock_of = []
        flock_masks = []
        start = 0
        for f, s in enumerate(sizes):
            starts.append(start)
            flock_of.extend([f] * s)
            flock_masks.append(((1 << s) - 1) << start)
            start += s
        n = start
        in_rows = [0] * n
        for u in range(n):
            for v in iter_bits(rows[u]):
                in_rows[v] |= 1 << u
        setter = object.__setattr__
        setter(self, "sizes", sizes)
        setter(self, "n", n)
        setter(self, "starts", tuple(starts))
        setter(self, "flock_of", tuple(flock_of))
        setter(self, "flock_masks", tuple(flock_masks))
        setter(self, "rows", tuple(rows))
        setter(self, "in_rows", tuple(in_rows))

    def __setattr__(self, name, value):
        raise AttributeError("MultiFlockGraph is immutable")

    # -- basic structure ---------------------------------------------------

    @property
    def num_flocks(self) -> int:
        return len(self.sizes)

    def chickens(self, flock: int) -> range:
        self._check_flock(flock)
        s = self.starts[flock]
        return range(s, s + self.sizes[flock])

    def outside_mask(self, c: int) -> int:
        """Bitmask of every chicken not in ``c``'s flock."""
        return ((1 << self.n) - 1) & ~self.flock_masks[self.flock_of[c]]

    def out_degree(self, c: int) -> int:
        return self.rows[c].bit_count()

    def in_degree(self, c: int) -> int:
        return self.in_rows[c].bit_count()

    def pecks(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def out_set(self, c: int) -> list[int]:
        return list(iter_bits(self.rows[c]))

    def peckers(self, c: int) -> list[int]:
        return list(iter_bits(self.in_rows[c]))

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs ordered by (min endpoint, max endpoint)."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.pecks(u, v):
                    out.append((u, v))
                elif self.pecks(v, u):
                    out.append((v, u))
        return out

    def _check_chicken(self, c: int) -> None:
        if not isinstance(c, int) or not 0 <= c < self.n:
            raise UnknownChicken(f"chicken {c!r} out of range 0..{self.n - 1}")

    def _check_flock(self, f: int) -> None:
        if not isinstance(f, int) or not 0 <= f < len(self.sizes):
            raise UnknownFlock(f"flock {f!r} out of range 0..{len(self.sizes) - 1}")

    # -- derived graphs ----------------------------------------------------

    def induced(self, chickens: Iterable[int]) -> tuple["MultiFlockGraph", tuple[int, ...]]:
        """Sub-graph on ``chickens``; flocks left empty are dropped.

        Returns the sub-graph and the tuple mapping new indices to old ones.
        """
        keep = sorted(set(chickens))
        for c in keep:
            self._check_chicken(c)
        old_of_new = tuple(keep)
        new_of_old = {c: i for i, c in enumerate(old_of_new)}
        sizes = []
        last = None
        for c in old_of_new:
            f = self.flock_of[c]
            if f != last:
                sizes.append(0)
                last = f
            sizes[-1] += 1
        keep_mask = mask_of(keep)
        rows = []
        for c in old_of_new:
            row = 0
            for v in iter_bits(self.rows[c] & keep_mask):
                row |= 1 << new_of_old[v]
            rows.append(row)
        return MultiFlockGraph(sizes, rows), old_of_new

    def merged(self, flock: int) -> tuple["MultiFlockGraph", tuple[int, ...]]:
        """Bi-flock graph with ``flock`` first and every other chicken merged
        into a second flock; arcs inside the merged flock are discarded.
        """
        self._check_flock(flock)
        first = list(self.chickens(flock))
        rest = [c for c in range(self.n) if self.flock_of[c] != flock]
        old_of_new = tuple(first + rest)
        new_of_old = {c: i for i, c in enumerate(old_of_new)}
        first_mask = self.flock_masks[flock]
        rows = []
        for c in old_of_new:
            keep = (~first_mask if self.flock_of[c] == flock else first_mask) & self.rows[c]
            row = 0
            for v in iter_bits(keep):
                row |= 1 << new_of_old[v]
            rows.append(row)
        sizes = [len(first)] + ([len(rest)] if rest else [])
        return MultiFlockGraph(sizes, rows), old_of_new

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiFlockGraph):
            return NotImplemented
        return self.sizes == other.sizes and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.sizes, self.rows))

    def __repr__(self) -> str:
        arcs = " ".join(f"{u}>{v}" for u, v in self.arcs())
        return f"MultiFlockGraph(sizes={list(self.sizes)}, arcs=[{arcs}])"


def build_graph(sizes: Sequence[int], arcs: Iterable[tuple[int, int]]) -> MultiFlockGraph:
    """Validate ``sizes``/``arcs`` and return the graph.

    Every cross-flock pair must be covered by exactly one arc.
    """
    sizes = list(sizes)
    if not sizes:
        raise EmptyFlock("a graph needs at least one flock")
    for f, s in enumerate(sizes):
        if not isinstance(s, int) or s < 1:
            raise EmptyFlock(f"flock {f} has size {s!r}; every flock needs at least one chicken")
    n = sum(sizes)
    flock_of = [f for f, s in enumerate(sizes) for _ in range(s)]
    rows = [0] * n
    seen: dict[tuple[int, int], int] = {}
    for k, arc in enumerate(arcs):
        u, v = arc
        for c in (u, v):
            if not isinstance(c, int) or not 0 <= c < n:
                raise UnknownChicken(f"arc {u}->{v}: chicken {c!r} out of range 0..{n - 1}", k)
        if flock_of[u] == flock_of[v]:
            what = "self-arc" if u == v else f"both chickens in flock {flock_of[u]}"
            raise IntraFlockArc(f"arc {u}->{v}: {what}", k)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicatePair(f"arc {u}->{v}: pair {{{key[0]},{key[1]}}} already oriented", k)
        seen[key] = k
        rows[u] |= 1 << v
    for u in range(n):
        for v in range(u + 1, n):
            if flock_of[u] != flock_of[v] and (u, v) not in seen:
                raise MissingPair(f"pair {{{u},{v}}} has no arc")
    return MultiFlockGraph(sizes, rows)


def pecks(g: MultiFlockGraph, u: int, v: int) -> bool:
    g._check_chicken(u)
    g._check_chicken(v)
    return g.pecks(u, v)


def peck_distances(g: MultiFlockGraph, src: int) -> dict[int, int | None]:
    """Shortest peck-chain length from ``src`` to every chicken.

    Unreachable chickens map to ``None``.
    """
    g._check_chicken(src)
    dist = kernels.bfs_distances(g.rows, src)
    return {c: (d if d >= 0 else None) for c, d in enumerate(dist)}


def prominent_chickens(g: MultiFlockGraph, f: int) -> list[int]:
    """Chickens of flock ``f`` with the flock's maximum out-degree, ascending."""
    members = g.chickens(f)
    degrees = [g.out_degree(c) for c in members]
    top = max(degrees)
    return [c for c, d in zip(members, degrees) if d == top]


class RelationKind(enum.Enum):
    FIRST_DOMINATES_SECOND = "first-dominates-second"
    SECOND_DOMINATES_FIRST = "second-dominates-first"
    BALANCED = "balanced"


@dataclass(frozen=True)
class FlockRelation:
    kind: RelationKind
    dominating_witnesses: tuple[int, ...] = ()

    @property
    def balanced(self) -> bool:
        return self.kind is RelationKind.BALANCED


def dominating_chickens(g: MultiFlockGraph, i: int, j: int) -> list[int]:
    """Chickens of flock ``i`` that peck every chicken of flock ``j``."""
    target = g.flock_masks[j]
    return [c for c in g.chickens(i) if g.rows[c] & target == target]


def dominates(g: MultiFlockGraph, i: int, j: int) -> bool:
    target = g.flock_masks[j]
    return any(g.rows[c] & target == target for c in g.chickens(i))


def flock_relation(g: MultiFlockGraph, i: int, j: int) -> FlockRelation:
    g._check_flock(i)
    g._check_flock(j)
    if i == j:
        raise SameFlock(f"flock_relation needs two different flocks, got {i} twice")
    forward = dominating_chickens(g, i, j)
    backward = dominating_chickens(g, j, i)
    # mutual domination would need two chickens pecking each other
    assert not (forward and backward), "mutual domination is impossible"
    if forward:
        return FlockRelation(RelationKind.FIRST_DOMINATES_SECOND, tuple(forward))
    if backward:
        return FlockRelation(RelationKind.SECOND_DOMINATES_FIRST, tuple(backward))
    return FlockRelation(RelationKind.BALANCED)


def eclipses(g: MultiFlockGraph, e: int, d: int) -> bool:
    """True iff flock-mate ``e`` pecks a strict superset of what ``d`` pecks."""
    g._check_chicken(e)
    g._check_chicken(d)
    if e == d:
        raise SameChicken(f"a chicken cannot eclipse itself ({e})")
    if g.flock_of[e] != g.flock_of[d]:
        raise DifferentFlocks(f"chickens {e} and {d} are in different flocks")
    return _eclipses(g, e, d)


def _eclipses(g: MultiFlockGraph, e: int, d: int) -> bool:
    re, rd = g.rows[e], g.rows[d]
    return re != rd and rd & ~re == 0


def eclipsers(g: MultiFlockGraph, d: int) -> list[int]:
    """Flock-mates of ``d`` that eclipse it, ascending."""
    return [e for e in g.chickens(g.flock_of[d]) if e != d and _eclipses(g, e, d)]


def non_eclipsed(g: MultiFlockGraph, c: int) -> bool:
    g._check_chicken(c)
    return not any(e != c and _eclipses(g, e, c) for e in g.chickens(g.flock_of[c]))
