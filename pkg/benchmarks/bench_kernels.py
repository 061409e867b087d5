"""Time the cyclic Jacobi kernel: numba vs numpy fallback, with LAPACK as a reference.

Usage: python benchmarks/bench_kernels.py [--sizes 8 16 32] [--repeat 5]
"""

import argparse
import time

import numpy as np

from signless_main._kernels import jacobi_cyclic_numba, jacobi_cyclic_numpy
from signless_main.enumerate import random_connected_graph
from signless_main.spectra import DEFAULT_JACOBI_TOL, signless_laplacian


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 12, 16, 24, 32])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    # compile once outside the timed region
    jacobi_cyclic_numba(np.eye(2), DEFAULT_JACOBI_TOL, 10)

    print(f"{'n':>4} {'numba ms':>10} {'numpy ms':>10} {'lapack ms':>10} {'speedup':>8} {'max |dw|':>10}")
    for n in args.sizes:
        q = np.array(signless_laplacian(random_connected_graph(n, 0.4, rng)), dtype=np.float64)
        sweeps = 100 * n * n
        t_nb = best_of(lambda: jacobi_cyclic_numba(q, DEFAULT_JACOBI_TOL, sweeps), args.repeat)
        t_np = best_of(lambda: jacobi_cyclic_numpy(q, DEFAULT_JACOBI_TOL, sweeps), args.repeat)
        t_la = best_of(lambda: np.linalg.eigvalsh(q), args.repeat)
        w_nb = np.sort(jacobi_cyclic_numba(q, DEFAULT_JACOBI_TOL, sweeps)[0])
        w_np = np.sort(jacobi_cyclic_numpy(q, DEFAULT_JACOBI_TOL, sweeps)[0])
        dw = float(np.max(np.abs(w_nb - w_np)))
        print(f"{n:>4} {t_nb * 1e3:>10.3f} {t_np * 1e3:>10.3f} {t_la * 1e3:>10.3f} {t_np / t_nb:>7.1f}x {dw:>10.1e}")


if __name__ == "__main__":
    main()
