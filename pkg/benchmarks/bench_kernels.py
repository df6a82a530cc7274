#!/usr/bin/env python3
"""Compare the numba and pure-numpy kernel paths on a polydisk sweep.

Run twice to see both paths:

    python benchmarks/bench_kernels.py
    HANKELBODY_NO_NUMBA=1 python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from hankelbody.kernels import USE_NUMBA, phi_batch, phi_sigma2_max

N = 2_000_000
P = 2.5


def bench(label, fn, *args, repeats=5):
    fn(*args)  # warmup / jit compile
    best = min(
        (lambda t0: (fn(*args), time.perf_counter() - t0)[1])(time.perf_counter())
        for _ in range(repeats)
    )
    rate = N / best / 1e6
    print(f"{label:28s} {best*1e3:9.2f} ms   {rate:8.1f} Mevals/s")


def main():
    rng = np.random.default_rng(0)
    r = np.sqrt(rng.uniform(size=(N, 3)))
    th = rng.uniform(0, 2 * np.pi, size=(N, 3))
    s = r * np.exp(1j * th)
    path = "numba @njit" if USE_NUMBA else "pure numpy"
    print(f"kernel path: {path}, N = {N:,}")
    bench("phi_batch", phi_batch, P, s[:, 0], s[:, 1], s[:, 2])
    bench("phi_sigma2_max", phi_sigma2_max, P, s[:, 0], s[:, 1])


if __name__ == "__main__":
    main()
