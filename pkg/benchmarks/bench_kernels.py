#!/usr/bin/env python3
"""Benchmark: compiled bitset kernels vs the pure-Python fallback.

Times the four hot kernels on representative workloads and prints a
table with the speedup. Both backends are driven directly (no dispatch),
so this runs regardless of which one the package selected at import.

Usage: python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import time

from forcing_lab._kernels import HAVE_COMPILED
from forcing_lab._kernels import pure
from forcing_lab.enumeration import enumerate_connected
from forcing_lab.graphs import Graph, complete_bipartite


def random_neighbor_masks(rng, n, p):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Graph(n, edges).neighbor_masks


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    rng = random.Random(2024)
    closure_cases = []
    for n in (10, 24, 48):
        nbrs = random_neighbor_masks(rng, n, 0.25)
        starts = [rng.getrandbits(n) for _ in range(200)]
        closure_cases.append((nbrs, starts))

    k44 = complete_bipartite(4, 4).neighbor_masks
    petersen = Graph(10, [(i, (i + 1) % 5) for i in range(5)]
                     + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                     + [(i, i + 5) for i in range(5)]).neighbor_masks
    seven = [g.neighbor_masks for g in enumerate_connected(7)]

    def closure_work(mod):
        total = 0
        for nbrs, starts in closure_cases:
            for s in starts:
                total ^= mod.closure(nbrs, 1, s)
        return total

    def exhaustive_work(mod):
        for _ in range(50):
            for size in range(1, 7):
                mod.search_level_exhaustive(k44, 1, size, 10**9)

    def pruned_work(mod):
        for _ in range(200):
            for size in range(1, 6):
                mod.search_level_pruned(petersen, 1, size, 10**9)

    def constrained_work(mod):
        for _ in range(100):
            for size in range(1, 6):
                mod.search_level_constrained(petersen, 1, size, 10**9)

    def canonical_work(mod):
        for nbrs in seven:
            mod.canonical_mask(nbrs)

    return [
        ("closure fixed point (600 calls, n<=48)", closure_work),
        ("exhaustive level scan (K_{4,4} x50)", exhaustive_work),
        ("pruned level search (Petersen x200)", pruned_work),
        ("constrained level scan (Petersen x100)", constrained_work),
        ("canonical certificates (853 graphs, n=7)", canonical_work),
    ]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if HAVE_COMPILED:
        from forcing_lab._kernels import _ckern as compiled
    else:
        compiled = None
        print("compiled extension not built; showing pure timings only\n")

    header = f"{'workload':<44} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, work in workloads():
        t_pure = bench(lambda: work(pure), args.repeat)
        if compiled is not None:
            t_c = bench(lambda: work(compiled), args.repeat)
            print(f"{name:<44} {t_pure * 1e3:>8.1f}ms {t_c * 1e3:>8.1f}ms "
                  f"{t_pure / t_c:>7.1f}x")
        else:
            print(f"{name:<44} {t_pure * 1e3:>8.1f}ms {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
