"""Timing comparison of the compiled and pure-python kernels.

Run as ``python -m movingwall.benchmark``. Integrates one eigenbasis
workload and one grid workload with both backends (when both are
available), reports steps per second and the speedup, and checks that the
final states agree.
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from . import _purekernels
from .basis import coupling, decompose_initial

try:
    from . import _core
except ImportError:
    _core = None


def _spectral_workload(k_max: int, n_steps: int):
    init = decompose_initial(2, 0.3 * math.pi**2, k_max)
    c0 = init.q.real.copy()
    d0 = init.q.imag.copy()
    g = coupling(k_max)
    # oscillating wall, the heaviest standard scenario
    args = (1, 1.0, 0.3, 4.0 * math.pi**2, 1e-5, n_steps)
    sample_idx = np.array([0, n_steps], dtype=np.int64)
    return (c0, d0, g) + args + (sample_idx,)


def _fd_workload(n_grid: int, n_steps: int):
    xs = np.arange(1, n_grid) / n_grid
    phi0 = (np.sqrt(2.0) * np.sin(2.0 * np.pi * xs)).astype(complex)
    phi0 *= np.exp(1j * 0.3 * math.pi**2 * xs**2)
    args = (1, 1.0, 0.3, 4.0 * math.pi**2, 1e-5, n_steps)
    sample_idx = np.array([0, n_steps], dtype=np.int64)
    return (phi0,) + args + (sample_idx,)


def _time(fn, args, repeat: int = 1):
    best = math.inf
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k-max", type=int, default=60)
    ap.add_argument("--n-grid", type=int, default=100)
    ap.add_argument("--steps", type=int, default=20000)
    args = ap.parse_args(argv)

    print(f"workloads: eigenbasis k_max={args.k_max}, grid N={args.n_grid}, {args.steps} RK4 steps")
    if _core is None:
        print("compiled backend: not built (pure-python timings only)")

    spec_args = _spectral_workload(args.k_max, args.steps)
    t_py, out_py = _time(_purekernels.spectral_evolve, spec_args)
    print(f"eigenbasis  python   : {t_py:8.3f} s  ({args.steps / t_py:10.0f} steps/s)")
    if _core is not None:
        t_c, out_c = _time(_core.spectral_evolve, spec_args)
        dc = max(
            np.max(np.abs(out_py[0][-1] - out_c[0][-1])),
            np.max(np.abs(out_py[1][-1] - out_c[1][-1])),
        )
        print(f"eigenbasis  compiled : {t_c:8.3f} s  ({args.steps / t_c:10.0f} steps/s)  "
              f"speedup x{t_py / t_c:.1f}  max|diff|={dc:.2e}")

    fd_args = _fd_workload(args.n_grid, args.steps)
    t_py, out_py = _time(_purekernels.fd_evolve, fd_args)
    print(f"grid        python   : {t_py:8.3f} s  ({args.steps / t_py:10.0f} steps/s)")
    if _core is not None:
        t_c, out_c = _time(_core.fd_evolve, fd_args)
        dg = np.max(np.abs(out_py[-1] - out_c[-1]))
        print(f"grid        compiled : {t_c:8.3f} s  ({args.steps / t_c:10.0f} steps/s)  "
              f"speedup x{t_py / t_c:.1f}  max|diff|={dg:.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
