"""Compare the numba and numpy sumset kernels, then time the dead-branch
analysis end to end under each backend.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import time

import numpy as np

from floorplan import kernels

CASES = [
    # (limit, density of a, density of b)
    (4096, 0.01, 0.5),
    (65536, 0.001, 0.5),
    (65536, 0.05, 0.05),
    (65536, 0.5, 0.5),
    (1 << 19, 0.0005, 0.3),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_sumset(repeat):
    rng = np.random.default_rng(7)
    print(f"{'limit':>8} {'dens a':>7} {'dens b':>7} {'numpy ms':>10} {'numba ms':>10} {'speedup':>8}")
    for limit, da, db in CASES:
        a = rng.random(limit + 1) < da
        b = rng.random(limit + 1) < db
        ref = kernels.sumset_numpy(a, b, limit)
        assert np.array_equal(ref, kernels.sumset_numba(a, b, limit))  # also warms the jit
        t_np = best_of(lambda: kernels.sumset_numpy(a, b, limit), repeat)
        t_nb = best_of(lambda: kernels.sumset_numba(a, b, limit), repeat)
        print(f"{limit:>8} {da:>7} {db:>7} {t_np * 1e3:>10.2f} {t_nb * 1e3:>10.2f} "
              f"{t_np / t_nb:>7.1f}x")


def bench_analysis(repeat):
    from floorplan import pipeline

    here = os.path.dirname(os.path.abspath(__file__))
    text = open(os.path.join(here, "..", "tests", "fixtures", "immix.flp")).read()
    print("\ndead-branch analysis of the immix spec (best of", repeat, "runs)")
    for choice in ("numpy", "numba"):
        os.environ["FLOORPLAN_KERNELS"] = choice
        pipeline.check(text)  # warm-up
        print(f"  {choice:>6}: {best_of(lambda: pipeline.check(text), repeat) * 1e3:8.1f} ms")
    os.environ.pop("FLOORPLAN_KERNELS", None)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    bench_sumset(args.repeat)
    bench_analysis(args.repeat)
