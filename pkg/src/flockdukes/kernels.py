"""Backend selection for the reachability kernels.

The compiled ``_ckernels`` extension is used when it imported cleanly and the
graph fits in a 64-bit row; everything else goes through ``_pykernels``.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels as _compiled
except ImportError:  # extension not built
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_WORD = 64


def orientation_rows(n: int, pair_u, pair_v, index: int) -> list[int]:
    if _compiled is not None and n <= _WORD:
        return _compiled.orientation_rows(n, pair_u, pair_v, index)
    return _pykernels.orientation_rows(n, pair_u, pair_v, index)


def bfs_distances(rows, src: int) -> list[int]:
    if _compiled is not None and len(rows) <= _WORD:
        return _compiled.bfs_distances(rows, src)
    return _pykernels.bfs_distances(rows, src)


def cover_levels(rows, targets) -> list[int]:
    if _compiled is not None and len(rows) <= _WORD:
        return _compiled.cover_levels(rows, targets)
    return _pykernels.cover_levels(rows, targets)


def cover_level_one(rows, src: int, want: int) -> int:
    if _compiled is not None and len(rows) <= _WORD:
        return _compiled.cover_level_one(rows, src, want)
    return _pykernels.cover_level_one(rows, src, want)
