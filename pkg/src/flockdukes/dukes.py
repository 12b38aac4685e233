"""Brute-force m-Duke / m-King oracle.

Everything here is computed directly from breadth-first reachability and is
the reference that the constructive witnesses are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .errors import NonPositiveM, TheoremViolation
from .graph import MultiFlockGraph

DEFAULT_MAX_M = 4


def _check_m(m: int) -> None:
    if not isinstance(m, int) or m < 1:
        raise NonPositiveM(f"m must be a positive integer, got {m!r}")


def duke_levels(g: MultiFlockGraph) -> list[int]:
    """Least m for which each chicken is an m-Duke; -1 if it never is.

    A level of 0 means the duke condition is vacuous (single-flock graph).
    """
    return kernels.cover_levels(g.rows, [g.outside_mask(c) for c in range(g.n)])


def king_levels(g: MultiFlockGraph) -> list[int]:
    """Least m for which each chicken is an m-King; -1 if it never is."""
    full = (1 << g.n) - 1
    return kernels.cover_levels(g.rows, [full & ~(1 << c) for c in range(g.n)])


def _at_most(levels: list[int], m: int) -> frozenset[int]:
    return frozenset(c for c, lv in enumerate(levels) if 0 <= lv <= m)


def is_m_duke(g: MultiFlockGraph, c: int, m: int) -> bool:
    g._check_chicken(c)
    _check_m(m)
    level = kernels.cover_level_one(g.rows, c, g.outside_mask(c))
    return 0 <= level <= m


def m_dukes(g: MultiFlockGraph, m: int) -> frozenset[int]:
    _check_m(m)
    return _at_most(duke_levels(g), m)


def is_m_king(g: MultiFlockGraph, c: int, m: int) -> bool:
    g._check_chicken(c)
    _check_m(m)
    level = kernels.cover_level_one(g.rows, c, ((1 << g.n) - 1) & ~(1 << c))
    return 0 <= level <= m


def m_kings(g: MultiFlockGraph, m: int) -> frozenset[int]:
    _check_m(m)
    return _at_most(king_levels(g), m)


def transmitters(g: MultiFlockGraph) -> frozenset[int]:
    return m_dukes(g, 1)


@dataclass(frozen=True)
class DukeProfile:
    max_m: int
    dukes_by_m: dict[int, frozenset[int]]
    kings_by_m: dict[int, frozenset[int]]
    transmitters: frozenset[int]
    duke_level: tuple[int, ...] = field(repr=False)

    def least_duke_level(self, c: int) -> int | None:
        """Smallest m <= max_m with ``c`` an m-Duke, else None."""
        lv = self.duke_level[c]
        if lv < 0 or lv > self.max_m:
            return None
        return max(lv, 1)


def duke_profile(g: MultiFlockGraph, max_m: int = DEFAULT_MAX_M) -> DukeProfile:
    _check_m(max_m)
    dl = duke_levels(g)
    kl = king_levels(g)
    dukes = {m: _at_most(dl, m) for m in range(1, max_m + 1)}
    kings = {m: _at_most(kl, m) for m in range(1, max_m + 1)}
    return DukeProfile(max_m, dukes, kings, dukes[1], tuple(dl))


@dataclass(frozen=True)
class OracleClassification:
    has_one_duke: bool
    one_dukes: frozenset[int]
    has_three_two_dukes: bool
    two_dukes: frozenset[int]
    has_four_three_dukes: bool
    three_dukes: frozenset[int]

    def holds(self, kind: str) -> bool:
        """Whether the oracle confirms an outcome named by a Classification kind."""
        return {
            "one_duke": self.has_one_duke,
            "three_two_dukes": self.has_three_two_dukes,
            "four_three_dukes": self.has_four_three_dukes,
        }[kind]


def oracle_classification(g: MultiFlockGraph) -> OracleClassification:
    """Evaluate the three alternatives of the 1-Duke / three 2-Dukes / four
    3-Dukes theorem directly.

    Raises TheoremViolation (carrying ``g``) if none of them holds.
    """
    dl = duke_levels(g)
    one, two, three = _at_most(dl, 1), _at_most(dl, 2), _at_most(dl, 3)
    result = OracleClassification(
        has_one_duke=bool(one),
        one_dukes=one,
        has_three_two_dukes=len(two) >= 3,
        two_dukes=two,
        has_four_three_dukes=len(three) >= 4,
        three_dukes=three,
    )
    if not (result.has_one_duke or result.has_three_two_dukes or result.has_four_three_dukes):
        raise TheoremViolation(
            f"no 1-Duke, fewer than three 2-Dukes and fewer than four 3-Dukes in {g!r}", g
        )
    return result
