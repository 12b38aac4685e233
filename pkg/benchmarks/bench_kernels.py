"""Compare the compiled and pure-Python reachability kernels.

    python3 benchmarks/bench_kernels.py [--graphs N] [--repeat R]
"""

import argparse
import timeit

from flockdukes import _pykernels, kernels
from flockdukes.enumeration import canonical_pairs
from flockdukes.rng import random_graph

SHAPES = [(2, 3), (2, 2, 2), (3, 3, 3), (4, 4, 4, 4), (8, 8, 8, 8)]


def _workload(backend, graphs, pairs):
    n_total = 0
    for rows in graphs:
        n = len(rows)
        targets = [((1 << n) - 1) & ~(1 << c) for c in range(n)]
        n_total += sum(backend.cover_levels(rows, targets))
    for n, pu, pv in pairs:
        for k in range(64):
            backend.orientation_rows(n, pu, pv, k)
    return n_total


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=300, help="random graphs per shape")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    compiled = getattr(kernels, "_compiled", None)
    print(f"selected backend: {kernels.BACKEND}")
    print(f"{'shape':>14} {'python ms':>11} {'compiled ms':>12} {'speedup':>8}")
    for shape in SHAPES:
        graphs = [list(random_graph(shape, s).rows) for s in range(args.graphs)]
        cp = canonical_pairs(shape)
        pairs = [(sum(shape), [u for u, _ in cp], [v for _, v in cp])]
        t_py = min(timeit.repeat(lambda: _workload(_pykernels, graphs, pairs), number=1, repeat=args.repeat))
        if compiled is None:
            print(f"{str(shape):>14} {t_py * 1e3:11.1f} {'n/a':>12} {'n/a':>8}")
            continue
        assert _workload(compiled, graphs, pairs) == _workload(_pykernels, graphs, pairs)
        t_c = min(timeit.repeat(lambda: _workload(compiled, graphs, pairs), number=1, repeat=args.repeat))
        print(f"{str(shape):>14} {t_py * 1e3:11.1f} {t_c * 1e3:12.1f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
