"""Benchmark: compiled kernels vs pure-Python kernels.

Micro-benchmarks call both backend modules directly in one process;
the end-to-end rows re-run this script in a subprocess with
SIMPLESTFIELDS_PURE=1 so the import-time backend selection is exercised.

Usage: python benchmarks/bench_kernels.py [--end-to-end]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from simplestfields._kernels import pykernels

try:
    from simplestfields._kernels import _ckernels
except ImportError:
    _ckernels = None


def _timeit(fn, *args, repeat=200):
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - t0) / repeat


def micro():
    rng = random.Random(0)
    big = 1 << 60
    a = [rng.randint(-big, big) for _ in range(12)]
    b = [rng.randint(-big, big) for _ in range(12)]
    f = [rng.randint(-1000, 1000) for _ in range(12)] + [1]
    lattice = [[rng.randint(0, 10**12) if j < i else 0 for j in range(12)] for i in range(12)]
    for i in range(12):
        lattice[i][i] = rng.randint(1, 10**9)
    w = [sum(3 * row[j] for row in lattice) for j in range(12)]
    stack = [row[:] for row in lattice] + [[3 * x for x in row] for row in lattice]

    cases = [
        ("zx_mul (deg 11, 60-bit)", lambda k: k.zx_mul(a, b)),
        ("zx_mulmod (deg 11 monic)", lambda k: k.zx_mulmod(a, b, f)),
        ("zx_resultant (deg 11/10)", lambda k: k.zx_resultant(f, b[:-1])),
        ("solve_lower_coords (12x12)", lambda k: k.solve_lower_coords(lattice, w)),
        ("hnf_rows (24x12 stack)", lambda k: k.hnf_rows(stack, 12)),
    ]
    print(f"{'kernel':<30} {'python':>12} {'cython':>12} {'speedup':>9}", flush=True)
    for name, call in cases:
        t_py = _timeit(call, pykernels, repeat=50)
        if _ckernels is None:
            print(f"{name:<30} {t_py * 1e6:>10.1f}us {'n/a':>12} {'n/a':>9}", flush=True)
            continue
        t_cy = _timeit(call, _ckernels, repeat=50)
        print(f"{name:<30} {t_py * 1e6:>10.1f}us {t_cy * 1e6:>10.1f}us {t_py / t_cy:>8.2f}x", flush=True)


def _end_to_end_workload():
    from simplestfields import KERNEL_BACKEND
    from simplestfields.numberfield import number_field
    from simplestfields.orders import integral_basis, parameter_gate

    t0 = time.perf_counter()
    count = 0
    for n, bound in [(8, 30), (12, 10)]:
        for t in range(-bound, bound + 1):
            if parameter_gate(n, t)[0]:
                integral_basis(number_field(n, t))
                count += 1
    dt = time.perf_counter() - t0
    print(f"backend={KERNEL_BACKEND}: {count} integral bases (n=8,12 sweep) in {dt:.2f}s")


def end_to_end():
    print("\nend-to-end integral-basis sweep, both backend selections:")
    for pure in ("0", "1"):
        env = dict(os.environ, SIMPLESTFIELDS_PURE=pure)
        subprocess.run(
            [sys.executable, __file__, "--workload"], env=env, check=True
        )


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--end-to-end", action="store_true")
    parser.add_argument("--workload", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.workload:
        _end_to_end_workload()
    else:
        micro()
        if args.end_to_end:
            end_to_end()
