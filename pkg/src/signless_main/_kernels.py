"""Floating-point hot loops, compiled with numba when available.

Set ``SIGNLESS_MAIN_BACKEND=numpy`` to force the pure-numpy path (useful for
debugging and for the benchmark); the default is ``numba`` if it imports.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

_requested = os.environ.get("SIGNLESS_MAIN_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"SIGNLESS_MAIN_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

# off-diagonal entries this small relative to their diagonal pair are zeroed
# instead of rotated; it also keeps the rotation angle finite
NEGLIGIBLE = 1e-18

BACKEND = "numba" if (_requested == "numba" and njit is not None) else "numpy"


def _rotation(app: float, aqq: float, apq: float) -> tuple[float, float]:
    theta = (aqq - app) / (2.0 * apq)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    elif theta >= 0.0:
        t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
    else:
        t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    return c, t * c


def _off_norm_np(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.sqrt(np.sum(off * off)))


def jacobi_cyclic_numpy(a: np.ndarray, tol: float, max_sweeps: int):
    """Cyclic Jacobi on a copy of symmetric ``a``; rows/columns updated with numpy slices.

    Returns ``(eigenvalues, eigenvectors, sweeps)``; ``sweeps == -1`` means the
    off-diagonal mass never dropped below ``tol * ||a||_F``.
    """
    a = np.array(a, dtype=np.float64, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    target = tol * float(np.sqrt(np.sum(a * a)))
    for sweep in range(max_sweeps):
        if _off_norm_np(a) <= target:
            return np.diag(a).copy(), v, sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(a[p, q])
                app, aqq = float(a[p, p]), float(a[q, q])
                if abs(apq) <= NEGLIGIBLE * (abs(app) + abs(aqq)):
                    a[p, q] = a[q, p] = 0.0
                    continue
                c, s = _rotation(app, aqq, apq)
                cp = a[:, p].copy()
                a[:, p] = c * cp - s * a[:, q]
                a[:, q] = s * cp + c * a[:, q]
                rp = a[p, :].copy()
                a[p, :] = c * rp - s * a[q, :]
                a[q, :] = s * rp + c * a[q, :]
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                v[:, p] = c * vp - s * v[:, q]
                v[:, q] = s * vp + c * v[:, q]
    return np.diag(a).copy(), v, -1


if njit is not None:

    @njit(cache=True)
    def _jacobi_cyclic_nb(a, tol, max_sweeps):
        n = a.shape[0]
        v = np.eye(n)
        total = 0.0
        for i in range(n):
            for j in range(n):
                total += a[i, j] * a[i, j]
        target = tol * math.sqrt(total)
        for sweep in range(max_sweeps):
            off = 0.0
            for i in range(n):
                for j in range(n):
                    if i != j:
                        off += a[i, j] * a[i, j]
            if math.sqrt(off) <= target:
                return np.diag(a).copy(), v, sweep
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if abs(apq) <= NEGLIGIBLE * (abs(a[p, p]) + abs(a[q, q])):
                        a[p, q] = 0.0
                        a[q, p] = 0.0
                        continue
                    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                    if abs(theta) > 1e150:
                        t = 0.5 / theta
                    elif theta >= 0.0:
                        t = 1.0 / (theta + math.sqrt(theta * theta + 1.0))
                    else:
                        t = -1.0 / (-theta + math.sqrt(theta * theta + 1.0))
                    c = 1.0 / math.sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(n):
                        akp = a[k, p]
                        akq = a[k, q]
                        a[k, p] = c * akp - s * akq
                        a[k, q] = s * akp + c * akq
                    for k in range(n):
                        apk = a[p, k]
                        aqk = a[q, k]
                        a[p, k] = c * apk - s * aqk
                        a[q, k] = s * apk + c * aqk
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    for k in range(n):
                        vkp = v[k, p]
                        vkq = v[k, q]
                        v[k, p] = c * vkp - s * vkq
                        v[k, q] = s * vkp + c * vkq
        return np.diag(a).copy(), v, -1

    def jacobi_cyclic_numba(a: np.ndarray, tol: float, max_sweeps: int):
        return _jacobi_cyclic_nb(np.array(a, dtype=np.float64, copy=True), float(tol), int(max_sweeps))

else:  # pragma: no cover
    jacobi_cyclic_numba = None


def jacobi_cyclic(a: np.ndarray, tol: float, max_sweeps: int):
    if BACKEND == "numba":
        return jacobi_cyclic_numba(a, tol, max_sweeps)
    return jacobi_cyclic_numpy(a, tol, max_sweeps)
