#!/usr/bin/env python3
"""Benchmark the hot kernels under the numba and numpy backends.

Default mode re-runs itself in a subprocess per backend (NCED_BACKEND) and
prints a comparison table.  With --single it times the currently selected
backend only, which is what the subprocesses do.

Usage:
    python benchmarks/bench_backends.py             # compare both backends
    python benchmarks/bench_backends.py --single    # time current backend
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def timed(fn, *args, repeats=5, warmup=True):
    """Best-of wall time in seconds; one warmup call absorbs JIT compilation."""
    if warmup:
        fn(*args)
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_current():
    import nced
    from nced import algebra as alg
    from nced import constitutive as ct
    from nced import duality as du

    rng = np.random.default_rng(0)
    results = {"backend": nced.BACKEND}

    # chained biquaternion products (the inner loop of every sweep)
    n = 200_000
    qs = rng.normal(size=(n, 4)) + 1j * rng.normal(size=(n, 4))

    def chained_products(qs):
        acc = np.array([1.0 + 0j, 0, 0, 0])
        for i in range(qs.shape[0]):
            acc = alg.mul(acc, qs[i])
            if i % 64 == 0:  # keep magnitudes bounded
                acc = acc / np.sqrt(abs(alg.norm(acc)) + 1e-30)
        return acc

    results["mul_200k_chain_s"] = timed(chained_products, qs, repeats=3)

    # constitutive forward map over a batch of states
    m = 50_000
    fs = rng.normal(size=(m, 3)) + 1j * rng.normal(size=(m, 3))
    k = rng.normal(size=3) + 1j * rng.normal(size=3)

    def forward_batch(fs, k):
        out = 0.0j
        for i in range(fs.shape[0]):
            out += ct.h_from_f(fs[i], k)[0]
        return out

    results["constitutive_50k_s"] = timed(forward_batch, fs, k, repeats=3)

    # duality scan: 50 states x 720 grid points
    chis = 2.0 * np.pi * np.arange(720) / 720.0
    states = []
    for _ in range(50):
        f = rng.normal(size=3) + 1j * rng.normal(size=3)
        states.append((f + ct.h_from_f(f, k), f - ct.h_from_f(f, k)))

    def scan_all(states, k, chis):
        total = 0.0
        for G, R in states:
            total += du._scan_kernel(G, R, k, chis).sum()
        return total

    results["duality_scan_50x720_s"] = timed(scan_all, states, k, chis, repeats=3)
    return results


def compare():
    rows = []
    for backend in ("numba", "numpy"):
        env = dict(os.environ, NCED_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, __file__, "--single", "--json"],
            capture_output=True, text=True, env=env,
        )
        if proc.returncode != 0:
            print(proc.stderr, file=sys.stderr)
            raise SystemExit(f"benchmark subprocess failed for {backend}")
        rows.append(json.loads(proc.stdout.strip().splitlines()[-1]))

    keys = [k for k in rows[0] if k != "backend"]
    width = max(len(k) for k in keys)
    print(f"{'kernel':<{width}}  {'numba':>12}  {'numpy':>12}  {'speedup':>8}")
    for k in keys:
        a, b = rows[0][k], rows[1][k]
        print(f"{k:<{width}}  {a:>12.4f}  {b:>12.4f}  {b / a:>7.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--single", action="store_true",
                        help="time the currently selected backend only")
    parser.add_argument("--json", action="store_true",
                        help="emit machine-readable results")
    args = parser.parse_args()
    if args.single:
        results = bench_current()
        if args.json:
            print(json.dumps(results))
        else:
            for k, v in results.items():
                print(f"{k}: {v}")
    else:
        compare()


if __name__ == "__main__":
    main()
