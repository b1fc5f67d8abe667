#!/usr/bin/env python3
"""Benchmark the compiled spectral-sum kernels against the pure-Python
fallback, and confirm both backends agree.

Usage:
    python benchmarks/bench_kernels.py [--n 2] [--max 400] [--s 3.0]
"""

import argparse
import time

from rumin_sphere import kernels
from rumin_sphere.spectrum import all_families
from rumin_sphere.torsion import kappa_direct
from rumin_sphere.weights import Case


def best_of(fn, repeats=5):
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return value, best


def bench_pair_sums(n, N, s):
    rows = []
    pair_ij = [
        (f.i, f.j) for f in all_families(n) if f.case in (Case.II, Case.V)
    ]
    for backend in kernels.available_backends():
        mod = kernels.load(backend)

        def run():
            return [mod.pair_family_sum(n, i, j, N, s) for i, j in pair_ij]

        values, elapsed = best_of(run)
        rows.append((backend, values, elapsed))
    return rows


def bench_kappa(n, N, s):
    rows = []
    for backend in kernels.available_backends():
        value, elapsed = best_of(lambda: kappa_direct(n, s, N, backend=backend).value)
        rows.append((backend, value, elapsed))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--max", type=int, default=400)
    parser.add_argument("--s", type=float, default=3.0)
    args = parser.parse_args()

    print(f"available backends: {', '.join(kernels.available_backends())}")
    print(f"default backend:    {kernels.BACKEND}")
    print()

    print(f"pair family sums (n={args.n}, N={args.max}, s={args.s})")
    pair_rows = bench_pair_sums(args.n, args.max, args.s)
    for backend, _, elapsed in pair_rows:
        print(f"  {backend:<8} {elapsed * 1e3:10.2f} ms")
    if len(pair_rows) == 2:
        (b0, v0, t0), (b1, v1, t1) = pair_rows
        rel = max(
            abs(a - b) / max(1.0, abs(a)) for a, b in zip(v0, v1)
        )
        slow, fast = (t0, t1) if t0 > t1 else (t1, t0)
        print(f"  agreement: max rel diff {rel:.3e} (must be <= 1e-13)")
        print(f"  speedup:   {slow / fast:.1f}x")
        assert rel <= 1e-13

    print()
    print(f"kappa_direct (n={args.n}, N={args.max}, s={args.s})")
    kappa_rows = bench_kappa(args.n, args.max, args.s)
    for backend, value, elapsed in kappa_rows:
        print(f"  {backend:<8} {elapsed * 1e3:10.2f} ms   kappa = {value!r}")
    if len(kappa_rows) == 2:
        (_, v0, t0), (_, v1, t1) = kappa_rows
        rel = abs(v0 - v1) / max(1.0, abs(v0))
        slow, fast = (t0, t1) if t0 > t1 else (t1, t0)
        print(f"  agreement: rel diff {rel:.3e} (must be <= 1e-13)")
        print(f"  speedup:   {slow / fast:.1f}x")
        assert rel <= 1e-13


if __name__ == "__main__":
    main()
