"""Compare the numba and pure-numpy kernels on timing and agreement.

Usage::

    python3 benchmarks/bench_kernels.py [--n 200000] [--repeat 5] [--sweep]

``--sweep`` additionally times a full phase sweep under each backend in a
subprocess, selecting the backend with ``LATMIN_DISABLE_NUMBA``.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from latmin.kernels import _numba, _numpy


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def _max_diff(a, b):
    if isinstance(a, tuple):
        return max(float(np.max(np.abs(u - v))) for u, v in zip(a, b))
    return float(np.max(np.abs(a - b)))


def kernel_cases(n, rng):
    x = rng.uniform(-0.5, 0.5, n)
    y = rng.uniform(0.87, 3.0, n)
    s = rng.uniform(-0.5, 0.5, n)
    t = rng.uniform(-0.45, 0.45, n)
    return {
        "eta_logsum": lambda mod: mod.eta_logsum(x, y, 10),
        "grad_series(one)": lambda mod: mod.grad_series(x, y, False, 12),
        "grad_series(zero)": lambda mod: mod.grad_series(x, y, True, 24),
        "green_logsum": lambda mod: mod.green_logsum(s, t, 0.1, 0.95, 12),
    }


def sweep_time(disable):
    env = dict(os.environ, LATMIN_DISABLE_NUMBA="1" if disable else "0")
    code = ("import time; from latmin.minimizer import phase_diagram; "
            "phase_diagram(0, 1, 0.05); t = time.perf_counter(); "
            "phase_diagram(0, 1, 0.005); print(time.perf_counter() - t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200_000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--sweep", action="store_true")
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    cases = kernel_cases(args.n, rng)
    print(f"{'kernel':<20}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}{'max |diff|':>14}")
    for name, run in cases.items():
        run(_numba)  # compile outside the timed region
        t_np, out_np = best_of(lambda: run(_numpy), args.repeat)
        t_nb, out_nb = best_of(lambda: run(_numba), args.repeat)
        print(f"{name:<20}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>10.2f}{_max_diff(out_np, out_nb):>14.2e}")

    if args.sweep:
        t_np = sweep_time(disable=True)
        t_nb = sweep_time(disable=False)
        print(f"{'phase sweep 0.005':<20}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>10.2f}")


if __name__ == "__main__":
    main()
