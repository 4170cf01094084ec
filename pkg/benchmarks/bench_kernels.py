#!/usr/bin/env python3
"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--json] [--repeat 3]
"""

import argparse
import json
import time

import numpy as np

from fishburn_lab import _kernels

CASES = [
    # (label, kernel args)
    ("xi mod 5, limit 1004 (Frobenius)", dict(limit=1004, m=5, inverse=False, prime=True)),
    ("xi mod 47, limit 4793 (Frobenius)", dict(limit=4793, m=47, inverse=False, prime=True)),
    ("a mod 5, limit 204 (Frobenius)", dict(limit=204, m=5, inverse=True, prime=True)),
    ("xi mod 25, limit 524 (dense)", dict(limit=524, m=25, inverse=False, prime=False)),
    ("xi mod 2^31-1, limit 300 (dense)", dict(limit=300, m=(1 << 31) - 1, inverse=False, prime=False)),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    # compile once outside the timed region
    _kernels.pochhammer_sum_mod(10, 5, prime=True, backend="numba")
    _kernels.pochhammer_sum_mod(10, 5, inverse=True, prime=True, backend="numba")
    _kernels.pochhammer_sum_mod(10, 25, backend="numba")
    _kernels.convolve_mod([1, 2], [3, 4], 7, 3, backend="numba")

    rows = []
    for label, kw in CASES:
        t_nb, out_nb = best_of(lambda: _kernels.pochhammer_sum_mod(backend="numba", **kw), args.repeat)
        t_np, out_np = best_of(lambda: _kernels.pochhammer_sum_mod(backend="numpy", **kw), args.repeat)
        rows.append({"case": label, "numba_s": t_nb, "numpy_s": t_np,
                     "speedup": t_np / t_nb if t_nb else float("inf"),
                     "agree": bool(np.array_equal(out_nb, out_np))})

    rng = np.random.default_rng(0)
    a = rng.integers(0, 1_000_003, 4000)
    b = rng.integers(0, 1_000_003, 4000)
    t_nb, c_nb = best_of(lambda: _kernels.convolve_mod(a, b, 1_000_003, 7999, backend="numba"), args.repeat)
    t_np, c_np = best_of(lambda: _kernels.convolve_mod(a, b, 1_000_003, 7999, backend="numpy"), args.repeat)
    rows.append({"case": "convolve 4000x4000 mod 1000003", "numba_s": t_nb, "numpy_s": t_np,
                 "speedup": t_np / t_nb, "agree": bool(np.array_equal(c_nb, c_np))})

    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'case':40s} {'numba [s]':>10s} {'numpy [s]':>10s} {'speedup':>8s}  agree")
    for r in rows:
        print(f"{r['case']:40s} {r['numba_s']:10.4f} {r['numpy_s']:10.4f} {r['speedup']:8.1f}  {r['agree']}")


if __name__ == "__main__":
    main()
