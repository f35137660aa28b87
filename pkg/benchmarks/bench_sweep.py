"""Time the compiled and pure-Python sweep kernels on the same rank range.

    python3 benchmarks/bench_sweep.py --n 9 --repeat 3
"""
import argparse
import statistics
import time
from math import factorial

from shapeinv import kernels


def time_backend(backend, n, count, repeat):
    runs = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = kernels.sweep_range(n, 0, count, backend=backend)
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--count", type=int, default=None, help="permutations to scan (default: all of S_n)")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    count = args.count or factorial(args.n)

    timings = {}
    results = {}
    for backend in kernels.BACKENDS:
        timings[backend], results[backend] = time_backend(backend, args.n, count, args.repeat)
        rate = count / timings[backend]
        print(f"{backend:>9}: {timings[backend]:8.3f} s  ({rate:,.0f} perm/s)")
    if len(results) == 2:
        same = results["compiled"] == results["python"]
        print(f"  speedup: {timings['python'] / timings['compiled']:.1f}x, outputs identical: {same}")
    else:
        print("  compiled kernel not available; only the fallback was timed")


if __name__ == "__main__":
    main()
