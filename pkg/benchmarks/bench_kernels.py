"""Throughput comparison of the two frame-kernel backends.

Runs the same batched multiply workload through the numpy reference
kernel and (when built) the compiled kernel, checks that they agree to
round-off, and prints frames/second for a range of batch sizes.

    python3 benchmarks/bench_kernels.py [--frames N] [--repeats K]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from tdvmm._kernel import BACKEND, vmm_frames, vmm_frames_py
from tdvmm.crossbar import SIZE, TimingConfig
from tdvmm.env import fold_np, mix64


def workload(n_frames: int, seed: int = 11):
    rng = np.random.default_rng(seed)
    timing = TimingConfig()
    weights = rng.uniform(100.0, 4500.0, (SIZE, SIZE))
    codes = rng.integers(0, timing.max_code + 1, (n_frames, SIZE))
    durations = codes * timing.t_clk
    keys = fold_np(mix64(seed), np.arange(n_frames))
    return weights, durations, keys


def run(kernel, weights, durations, keys):
    return kernel(weights, durations, keys, sigma_read=0.005,
                  sigma_out=0.002, lo=-0.1, hi=1.2, knee=0.1)


def bench(kernel, weights, durations, keys, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        run(kernel, weights, durations, keys)
        best = min(best, time.perf_counter() - t0)
    return durations.shape[0] / best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--frames", type=int, default=0,
                    help="single batch size (default: sweep several)")
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    sizes = [args.frames] if args.frames else [256, 2048, 16384]
    backends = [("numpy", vmm_frames_py)]
    if BACKEND == "compiled":
        backends.append(("compiled", vmm_frames))
    else:
        print("compiled kernel not built; benchmarking numpy only")

    print(f"{'frames':>8s}" + "".join(f"{name + ' fr/s':>16s}"
                                      for name, _ in backends) + "   speedup")
    for n in sizes:
        weights, durations, keys = workload(n)
        ref = run(vmm_frames_py, weights, durations, keys)
        rates = []
        for name, kernel in backends:
            got = run(kernel, weights, durations, keys)
            err = float(np.max(np.abs(got - ref)))
            if err > 1e-12:
                raise AssertionError(
                    f"{name} disagrees with reference by {err:.3e} V")
            rates.append(bench(kernel, weights, durations, keys,
                               args.repeats))
        speedup = rates[-1] / rates[0] if len(rates) > 1 else 1.0
        print(f"{n:>8d}" + "".join(f"{r:>16,.0f}" for r in rates)
              + f"   {speedup:5.2f}x")


if __name__ == "__main__":
    main()
