"""Time the numba kernels against the numpy fallback on identical inputs.

    python3 benchmarks/bench_backends.py --dim 5 --repeat 2000

Prints one line per kernel with the median time per call for each backend
and the max-abs disagreement between their outputs.
"""

import argparse
import statistics
import time

import numpy as np

from rot345.decomp import TAU_ISO, TAU_ZERO
from rot345.kernels import get_backend
from rot345.oracle import SERIES_TERMS, random_antisym, rng_from


def _cases(k, tau_zero=TAU_ZERO, tau_iso=TAU_ISO):
    return {
        "skew_split": lambda f: k.skew_split(f)[0],
        "invariants45": lambda f: np.array(k.invariants45(f)),
        "exp45": lambda f: k.exp45(f, tau_zero, tau_iso)[0],
        "series_exp": lambda f: k.series_exp(f, SERIES_TERMS),
        "orthogonality_residual": lambda f: np.array(k.orthogonality_residual(f)),
    }


def _median_us(fn, inputs):
    samples = []
    for f in inputs:
        t0 = time.perf_counter_ns()
        fn(f)
        samples.append((time.perf_counter_ns() - t0) * 1e-3)
    return statistics.median(samples)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dim", type=int, default=5, choices=(4, 5))
    ap.add_argument("--repeat", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    rng = rng_from(args.seed)
    inputs = [random_antisym(args.dim, 1.0, rng) for _ in range(args.repeat)]
    fast = _cases(get_backend("numba"))
    slow = _cases(get_backend("numpy"))

    print(f"dim={args.dim} repeat={args.repeat}")
    print(f"{'kernel':<24}{'numba us':>10}{'numpy us':>10}{'speedup':>9}{'max diff':>11}")
    for name in fast:
        fast[name](inputs[0])  # compile outside the timed loop
        t_fast = _median_us(fast[name], inputs)
        t_slow = _median_us(slow[name], inputs)
        diff = max(float(np.max(np.abs(fast[name](f) - slow[name](f)))) for f in inputs[:200])
        print(f"{name:<24}{t_fast:>10.2f}{t_slow:>10.2f}{t_slow / t_fast:>9.1f}{diff:>11.2e}")


if __name__ == "__main__":
    main()
