"""Benchmark the two GF(p) row-reduction lanes.

Times rref_mod_p_numpy against rref_mod_p_numba on seeded random
matrices and checks that both lanes return identical output.  The
numba lane pays a one-time JIT cost, so it is warmed up before timing.

Usage: python3 benchmarks/bench_gfp.py [--sizes 64,128,256] [--prime P]
       [--repeats N] [--seed S]
"""

import argparse
import time

import numpy as np

from cellmac.gfp import active_lane, rref_mod_p_numba, rref_mod_p_numpy


def time_lane(fn, mats, p, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for a in mats:
            fn(a, p)
        best = min(best, time.perf_counter() - t0)
    return best / len(mats)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="32,64,128,256")
    ap.add_argument("--prime", type=int, default=32003)
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--batch", type=int, default=8, help="matrices per size")
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(args.seed)
    p = args.prime

    try:
        import numba

        numba_version = numba.__version__
    except ImportError:
        numba_version = None

    print(f"numpy {np.__version__}, numba {numba_version or 'not installed'}")
    print(f"configured lane: {active_lane()}, prime {p}, batch {args.batch}")
    print()
    print(f"{'size':>10} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")

    for n in sizes:
        mats = [rng.integers(0, p, size=(n, n), dtype=np.int64) for _ in range(args.batch)]
        t_np = time_lane(rref_mod_p_numpy, mats, p, args.repeats)
        if numba_version is None:
            print(f"{n:>7}x{n:<3} {t_np * 1e3:>10.3f} {'-':>10} {'-':>8}")
            continue
        rref_mod_p_numba(mats[0], p)  # JIT warm-up
        t_nb = time_lane(rref_mod_p_numba, mats, p, args.repeats)
        for a in mats:
            r1, p1 = rref_mod_p_numpy(a, p)
            r2, p2 = rref_mod_p_numba(a, p)
            assert p1 == p2 and np.array_equal(r1, r2), "lane outputs differ"
        print(f"{n:>7}x{n:<3} {t_np * 1e3:>10.3f} {t_nb * 1e3:>10.3f} {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
