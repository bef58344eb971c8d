"""Compare the compiled and pure-Python integral kernels.

    python benchmarks/bench_kernel.py [--points 2000]

Times one call of ``slater_values`` (the energy hot path) and a full
optimization of He..Ne with each available backend.
"""

import argparse
import time

import numpy as np

from slaterhf import kernel
from slaterhf.optimize import minimize


def time_values(mod, points):
    t0 = time.perf_counter()
    for a, b, g in points:
        mod.slater_values(a, b, g)
    return (time.perf_counter() - t0) / len(points)


def time_table(name):
    prev = kernel.set_backend(name)
    try:
        t0 = time.perf_counter()
        results = [minimize(z) for z in range(2, 11)]
        elapsed = time.perf_counter() - t0
    finally:
        kernel.set_backend(prev)
    return elapsed, sum(r.evaluations for r in results), results


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=2000)
    args = ap.parse_args()
    rng = np.random.default_rng(0)
    points = rng.uniform(0.2, 12.0, size=(args.points, 3)).tolist()

    rows = {}
    for name, mod in kernel.backends().items():
        per_call = time_values(mod, points)
        table, nfev, results = time_table(name)
        rows[name] = (per_call, table, nfev, results)
        print(f"{name:>7}: slater_values {per_call * 1e6:8.2f} us/call;"
              f" He..Ne optimization {table:6.3f} s ({nfev} energy evaluations)")

    if len(rows) == 2:
        py, cy = rows["python"], rows["cython"]
        print(f"speedup: {py[0] / cy[0]:.1f}x per call, {py[1] / cy[1]:.1f}x per table")
        worst = max(
            abs(a.energy - b.energy) for a, b in zip(py[3], cy[3])
        )
        print(f"max |E_python - E_cython| over the table: {worst:.2e} hartree")
    else:
        print("compiled kernel not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
