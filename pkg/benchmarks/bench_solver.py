"""Benchmark the compiled solver kernel against the pure-Python fallback.

Runs full-value searches from the empty board for both players on a small
corpus and prints one row per (instance, game) with both timings and the
speedup.  Both kernels must return identical values; the script exits
non-zero if they ever disagree.

Usage: python3 benchmarks/bench_solver.py [--repeat N]
"""

import argparse
import sys
import time

from mbrg import _kernel_py
from mbrg.graphs import parse_graph_expr
from mbrg.resolving import pair_separators

try:
    from mbrg import _kernel as compiled
except ImportError:
    compiled = None

CORPUS = [
    "cycle(6)",
    "petersen",
    "corona(path(2),path(3))",
    "corona(k1,petersen)",
    "corona(path(2),cycle(4))",
    "corona(path(2),path(5))",
    "corona(k1,path(7))",
]


def time_solver(mod, n, masks, turn, repeat):
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = mod.solve_value(n, masks, 0, 0, turn, False)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return value, best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per measurement (min is reported)")
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernel not built; nothing to compare", file=sys.stderr)
        return 1

    print(f"{'instance':34} {'game':8} {'python':>10} {'compiled':>10} {'speedup':>8}")
    mismatches = 0
    for expr in CORPUS:
        g = parse_graph_expr(expr)
        masks = pair_separators(g)
        for turn, label in ((0, "R-first"), (1, "S-first")):
            vc, tc = time_solver(compiled, g.n, masks, turn, args.repeat)
            vp, tp = time_solver(_kernel_py, g.n, masks, turn, args.repeat)
            mark = ""
            if vc != vp:
                mismatches += 1
                mark = "  VALUE MISMATCH"
            print(f"{expr:34} {label:8} {tp * 1e3:9.1f}ms {tc * 1e3:9.1f}ms "
                  f"{tp / tc:7.1f}x{mark}")
    if mismatches:
        print(f"{mismatches} value mismatches", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
