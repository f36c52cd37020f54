"""Compare the compiled and numpy row-reduction kernels.

Run ``python3 benchmarks/bench_gfp.py``. Times random dense reductions
over GF(2) and GF(3) and a full oracle check of a larger fixture.
"""

import argparse
import time

import numpy as np

from gentlehom import fixtures
from gentlehom.oracle import check_equalities, gfp


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rref(sizes, primes, repeat):
    rng = np.random.default_rng(0)
    rows = []
    for n in sizes:
        for p in primes:
            M = rng.integers(0, p, size=(n, n + n // 2), dtype=np.int64)
            times = {}
            for backend in ("python", "cython"):
                gfp.use_backend(backend)
                times[backend] = _time(lambda: gfp.rref(M, p), repeat)
            ref_py = (gfp.use_backend("python"), gfp.rref(M, p))[1]
            ref_cy = (gfp.use_backend("cython"), gfp.rref(M, p))[1]
            assert np.array_equal(ref_py[0], ref_cy[0]) and ref_py[1] == ref_cy[1]
            rows.append((f"rref {n}x{n + n // 2} GF({p})", times["python"], times["cython"]))
    return rows


def bench_oracle(name, repeat):
    A = fixtures.load(name)
    times = {}
    for backend in ("python", "cython"):
        gfp.use_backend(backend)
        times[backend] = _time(lambda: check_equalities(A), repeat)
    return [(f"oracle check {name}", times["python"], times["cython"])]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    try:
        gfp.use_backend("cython")
    except ImportError:
        raise SystemExit("compiled kernel not available; build with pip install -e . --no-build-isolation")
    rows = bench_rref([8, 32, 128, 256], [2, 3], args.repeat)
    rows += bench_oracle("EX72", args.repeat) + bench_oracle("T9", args.repeat)
    print(f"{'case':32s} {'numpy (s)':>12s} {'cython (s)':>12s} {'speedup':>8s}")
    for name, py, cy in rows:
        print(f"{name:32s} {py:12.5f} {cy:12.5f} {py / cy:8.1f}x")


if __name__ == "__main__":
    main()
