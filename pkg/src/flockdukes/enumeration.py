"""Raw enumeration of every orientation of a complete multipartite graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import kernels
from .errors import EmptyFlock, TooLarge
from .graph import MultiFlockGraph

DEFAULT_EDGE_CAP = 24


def _check_sizes(sizes: Sequence[int]) -> tuple[int, ...]:
    sizes = tuple(sizes)
    if not sizes:
        raise EmptyFlock("a graph needs at least one flock")
    for f, s in enumerate(sizes):
        if not isinstance(s, int) or s < 1:
            raise EmptyFlock(f"flock {f} has size {s!r}; every flock needs at least one chicken")
    return sizes


def edge_count(sizes: Sequence[int]) -> int:
    total = 0
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            total += sizes[i] * sizes[j]
    return total


def canonical_pairs(sizes: Sequence[int]) -> list[tuple[int, int]]:
    """Cross-flock pairs (u, v), u < v, in lexicographic order."""
    flock_of = [f for f, s in enumerate(sizes) for _ in range(s)]
    n = len(flock_of)
    return [(u, v) for u in range(n) for v in range(u + 1, n) if flock_of[u] != flock_of[v]]


@dataclass(frozen=True)
class EnumSpec:
    """One orientation of ``sizes``: bit b of ``orientation_index`` directs
    canonical pair b (clear: min -> max, set: max -> min).
    """

    sizes: tuple[int, ...]
    orientation_index: int

    def __post_init__(self):
        object.__setattr__(self, "sizes", _check_sizes(self.sizes))
        if not 0 <= self.orientation_index < 2**self.edge_count:
            raise ValueError(f"orientation index {self.orientation_index} out of range for sizes {self.sizes}")

    @property
    def edge_count(self) -> int:
        return edge_count(self.sizes)

    def graph(self) -> MultiFlockGraph:
        return graph_at(self.sizes, self.orientation_index)


def graph_at(sizes: Sequence[int], index: int) -> MultiFlockGraph:
    sizes = _check_sizes(sizes)
    pairs = canonical_pairs(sizes)
    pu = [u for u, _ in pairs]
    pv = [v for _, v in pairs]
    return MultiFlockGraph(sizes, kernels.orientation_rows(sum(sizes), pu, pv, index))


def enumerate_orientations(
    sizes: Sequence[int],
    *,
    cap: int = DEFAULT_EDGE_CAP,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[MultiFlockGraph]:
    """Yield the graphs for orientation indices ``start..stop-1`` (default: all
    ``2**edge_count`` of them) in ascending index order.
    """
    sizes = _check_sizes(sizes)
    m = edge_count(sizes)
    if m > cap:
        raise TooLarge(f"sizes {list(sizes)} have {m} cross-flock pairs, above the cap of {cap}")
    total = 1 << m
    stop = total if stop is None else min(stop, total)
    pairs = canonical_pairs(sizes)
    pu = [u for u, _ in pairs]
    pv = [v for _, v in pairs]
    n = sum(sizes)
    for k in range(start, stop):
        yield MultiFlockGraph(sizes, kernels.orientation_rows(n, pu, pv, k))
