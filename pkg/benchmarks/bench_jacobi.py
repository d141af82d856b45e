#!/usr/bin/env python3
"""Benchmark the exhaustive Jacobi kernels: numba triple loop vs numpy
matrix formulation.

Runs each available backend on E6 and E7 and prints wall times.  The first
numba call includes JIT compilation (cached on disk afterwards); a second
timed call shows the warm cost.

Usage:
    python benchmarks/bench_jacobi.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from e67lie.chevalley import build_chevalley
from e67lie.kernels import available_backends, jacobi_violations_exhaustive
from e67lie.roots import RootSystemType, build_root_system


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=2)
    args = parser.parse_args()

    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    for kind in RootSystemType:
        rs = build_root_system(kind)
        alg = build_chevalley(rs)
        dim = alg.dimension
        triples = dim**3
        print(f"\n{kind.label}: dim={dim}, ordered triples={triples}")
        for backend in backends:
            for attempt in range(args.repeat):
                t0 = time.perf_counter()
                bad, used = jacobi_violations_exhaustive(alg.tables, backend=backend)
                dt = time.perf_counter() - t0
                note = " (first call, may include JIT compile)" if (
                    backend == "numba" and attempt == 0
                ) else ""
                rate = triples / dt / 1e6
                print(
                    f"  {used:>5}: {dt:8.3f} s  ({rate:8.1f} M triples/s)"
                    f"  violations={bad}{note}"
                )
                if bad:
                    raise SystemExit("kernel reported Jacobi violations")


if __name__ == "__main__":
    main()
