from hypothesis import given, settings
from hypothesis import strategies as st

from flockdukes import _pykernels, kernels
from flockdukes.enumeration import canonical_pairs
from flockdukes.rng import random_graph

import reference

sizes_st = st.lists(st.integers(1, 4), min_size=1, max_size=5)


def _rows(sizes, seed):
    return list(random_graph(sizes, seed).rows)


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


@settings(max_examples=150, deadline=None)
@given(sizes_st, st.integers(0, 2**64 - 1))
def test_backends_agree(sizes, seed):
    rows = _rows(sizes, seed)
    n = len(rows)
    targets = [((1 << n) - 1) & ~(1 << c) for c in range(n)]
    assert kernels.cover_levels(rows, targets) == _pykernels.cover_levels(rows, targets)
    for c in range(n):
        assert kernels.bfs_distances(rows, c) == _pykernels.bfs_distances(rows, c)
        assert kernels.cover_level_one(rows, c, targets[c]) == _pykernels.cover_level_one(rows, c, targets[c])


@settings(max_examples=100, deadline=None)
@given(sizes_st, st.integers(0, 2**30))
def test_orientation_rows_agree(sizes, index):
    pairs = canonical_pairs(sizes)
    index %= 1 << len(pairs)
    pu, pv = [u for u, _ in pairs], [v for _, v in pairs]
    n = sum(sizes)
    assert kernels.orientation_rows(n, pu, pv, index) == _pykernels.orientation_rows(n, pu, pv, index)


@settings(max_examples=60, deadline=None)
@given(sizes_st, st.integers(0, 2**32))
def test_bfs_matches_reference(sizes, seed):
    g = random_graph(sizes, seed)
    d = reference.distances(g.n, g.arcs())
    for c in range(g.n):
        got = kernels.bfs_distances(g.rows, c)
        assert got == [x if x != reference.INF else -1 for x in d[c]]


def test_cover_level_conventions():
    rows = [0b10, 0b100, 0]  # 0 -> 1 -> 2
    assert kernels.cover_level_one(rows, 0, 0) == 0
    assert kernels.cover_level_one(rows, 0, 0b110) == 2
    assert kernels.cover_level_one(rows, 2, 0b1) == -1


def test_wide_graph_falls_back_to_python():
    # 70 chickens: beyond one machine word
    rows = [1 << (i + 1) for i in range(69)] + [0]
    d = kernels.bfs_distances(rows, 0)
    assert d[69] == 69
    pairs = [(i, i + 1) for i in range(69)]
    assert kernels.orientation_rows(70, [p[0] for p in pairs], [p[1] for p in pairs], 0) == rows


def test_fallback_selected_without_extension(monkeypatch):
    import importlib
    import sys

    import flockdukes

    monkeypatch.setitem(sys.modules, "flockdukes._ckernels", None)
    monkeypatch.delattr(flockdukes, "_ckernels", raising=False)
    try:
        importlib.reload(kernels)
        assert kernels.BACKEND == "python"
        assert kernels.cover_level_one([0b10, 0], 0, 0b10) == 1
    finally:
        monkeypatch.undo()
        importlib.reload(kernels)
