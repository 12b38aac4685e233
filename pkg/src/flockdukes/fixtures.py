"""Small graphs drawn as figures in the literature on m-Dukes.

Chickens are numbered in reading order of the figure labels (a=0, b=1, ...).
Where a figure draws the bottom flock as an unlabeled blob, it is one chicken.
"""

from __future__ import annotations

import enum

from .graph import MultiFlockGraph, build_graph


class FixtureName(str, enum.Enum):
    FIG1 = "FIG1"
    FIG6 = "FIG6"
    FIG7 = "FIG7"
    FIG8 = "FIG8"
    FIG13 = "FIG13"


_FIXTURES = {
    # 5-tournament; chicken 0 is a 4-King that is not a 3-Duke
    FixtureName.FIG1: (
        [1, 1, 1, 1, 1],
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (3, 0), (2, 0), (4, 1), (4, 2), (3, 1)],
    ),
    # one transmitter, nothing else
    FixtureName.FIG6: ([1, 3], [(0, 1), (0, 2), (0, 3)]),
    # two flocks, exactly four 3-Dukes, no 1-Duke
    FixtureName.FIG7: (
        [2, 4],
        [(0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (2, 0), (5, 1)],
    ),
    # a 3-cycle over a bottom flock: exactly three 2-Dukes
    FixtureName.FIG8: ([1, 1, 1, 1], [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]),
    # four singleton flocks over a bottom flock: exactly four 3-Dukes
    FixtureName.FIG13: (
        [1, 1, 1, 1, 1],
        [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 0), (0, 4), (1, 4), (2, 4), (3, 4)],
    ),
}


def fixture(name: FixtureName | str) -> MultiFlockGraph:
    sizes, arcs = _FIXTURES[FixtureName(name)]
    return build_graph(sizes, arcs)
