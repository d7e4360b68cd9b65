"""Compare the numba and numpy kernel backends on random integer inputs.

Usage: python benchmarks/bench_kernels.py [--repeats N] [--seed S]

Each kernel is timed after a warmup call, so numba's one-off compile
cost (cached across runs) stays out of the numbers. Both backends
receive identical inputs and their results are checked to agree.
"""

import argparse
import random
import time

import numpy as np

from ghgeo import kernels


def random_int_metric(rng, n, top=1000):
    d = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            w = rng.randint(1, top)
            d[i][j] = d[j][i] = w
    for k in range(n):
        for i in range(n):
            for j in range(n):
                via = d[i][k] + d[k][j]
                if i != j and via < d[i][j]:
                    d[i][j] = d[j][i] = via
    return np.ascontiguousarray(np.array(d, dtype=np.int64))


def timeit(fn, repeats):
    fn()
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_distortion(backend, rng, repeats):
    xd = random_int_metric(rng, 300)
    yd = random_int_metric(rng, 300)
    pi = np.array([rng.randrange(300) for _ in range(5000)], dtype=np.int64)
    pj = np.array([rng.randrange(300) for _ in range(5000)], dtype=np.int64)
    value = int(backend.distortion_pairs(xd, yd, pi, pj))
    best = timeit(lambda: backend.distortion_pairs(xd, yd, pi, pj), repeats)
    return value, best


def bench_brute(backend, rng, repeats):
    xd = random_int_metric(rng, 5)
    yd = random_int_metric(rng, 5)
    got = backend.brute_min_distortion(xd, yd)
    best = timeit(lambda: backend.brute_min_distortion(xd, yd), repeats)
    return int(got[0]), best


def bench_triangle(backend, rng, repeats):
    d = random_int_metric(rng, 400)
    got = backend.triangle_slack(d)
    best = timeit(lambda: backend.triangle_slack(d), repeats)
    return int(got[0]), best


BENCHES = (
    ("distortion_pairs (n=300, 5000 pairs)", bench_distortion),
    ("brute_min_distortion (5x5)", bench_brute),
    ("triangle_slack (n=400)", bench_triangle),
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5, help="timed repetitions per kernel")
    parser.add_argument("--seed", type=int, default=42)
    args = parser.parse_args()

    backends = {name: kernels.get(name) for name in ("numpy", "numba")}
    print(f"{'kernel':<40} {'numpy':>10} {'numba':>10} {'speedup':>8}")
    for label, bench in BENCHES:
        times = {}
        values = {}
        for name, backend in backends.items():
            rng = random.Random(args.seed)
            values[name], times[name] = bench(backend, rng, args.repeats)
        if values["numpy"] != values["numba"]:
            print(f"{label}: BACKEND MISMATCH {values}")
            return 1
        ratio = times["numpy"] / times["numba"]
        print(f"{label:<40} {times['numpy'] * 1e3:>8.2f}ms {times['numba'] * 1e3:>8.2f}ms {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
