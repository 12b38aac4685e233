"""splitmix64 and the seeded random graph generator built on it."""

from __future__ import annotations

from typing import Iterator, Sequence

from .enumeration import _check_sizes, canonical_pairs
from .graph import MultiFlockGraph

MASK64 = 0xFFFFFFFFFFFFFFFF
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(seed: int) -> Iterator[int]:
    """Infinite splitmix64 stream; the seed is reduced mod 2**64."""
    state = seed & MASK64
    while True:
        state = (state + GOLDEN_GAMMA) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def random_graph(sizes: Sequence[int], seed: int) -> MultiFlockGraph:
    """One splitmix64 draw per canonical pair; low bit 0 orients min -> max."""
    sizes = _check_sizes(sizes)
    stream = splitmix64(seed)
    rows = [0] * sum(sizes)
    for (u, v), z in zip(canonical_pairs(sizes), stream):
        if z & 1:
            rows[v] |= 1 << u
        else:
            rows[u] |= 1 << v
    return MultiFlockGraph(sizes, rows)
