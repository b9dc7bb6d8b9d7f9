#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times subgroup enumeration and brute-force generating-pair counting on S4,
A5 and (with --full) L2(8).  Each backend is warmed up first so numba's
compilation time is excluded from the numbers.

Usage:
    python benchmarks/bench_backends.py [--full] [--repeat N]
"""

import argparse
import os
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import numpy as np

from conftest import l2_8_generators, warm_backend
from reemob.inversion import Target
from reemob.oracle import brute_force_phi, closure, enumerate_subgroups, lattice_mobius


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def run_backend(name, groups, repeat):
    os.environ["REEMOB_BACKEND"] = name
    warm_backend()
    rows = []
    for label, g in groups:
        t_enum, lat = bench(lambda: lattice_mobius(enumerate_subgroups(g)), repeat)
        t_pairs, phi = bench(lambda: brute_force_phi(g, Target.F2), repeat)
        rows.append((label, len(g), len(lat), t_enum, phi, t_pairs))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include L2(8), order 504")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions (best is kept)")
    args = parser.parse_args()

    groups = [
        ("S4", closure([(1, 0, 2, 3), (1, 2, 3, 0)])),
        ("A5", closure([(1, 2, 0, 3, 4), (1, 2, 3, 4, 0)])),
    ]
    if args.full:
        groups.append(("L2(8)", closure(l2_8_generators())))

    results = {}
    for name in ("numba", "numpy"):
        try:
            results[name] = run_backend(name, groups, args.repeat)
        except ImportError:
            print(f"backend {name} unavailable, skipping")

    header = f"{'group':8} {'|G|':>5} {'#sub':>5}   " + "   ".join(
        f"{name+' enum':>12} {name+' pairs':>12}" for name in results
    )
    print(header)
    print("-" * len(header))
    labels = [row[0] for row in next(iter(results.values()))]
    for i, label in enumerate(labels):
        base = next(iter(results.values()))[i]
        cells = []
        for name in results:
            row = results[name][i]
            assert row[4] == base[4], "backends disagree on phi"
            cells.append(f"{row[3]*1e3:>10.1f}ms {row[5]*1e3:>10.1f}ms")
        print(f"{label:8} {base[1]:>5} {base[2]:>5}   " + "   ".join(cells))

    if len(results) == 2:
        print("\nphi values agree between backends for every group.")


if __name__ == "__main__":
    main()
