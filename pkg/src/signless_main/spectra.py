"""Signless Laplacian, walk matrix, and main-eigenvalue counting.

The exact count (rank of the walk matrix over the rationals) is authoritative.
The Jacobi eigensolver only locates the eigenvalues and cross-checks which
clusters carry a component of the all-ones vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _kernels
from .exact import bareiss_rank
from .graph import Graph

IntMatrix = tuple[tuple[int, ...], ...]

DEFAULT_JACOBI_TOL = 1e-14
DEFAULT_CLUSTER_TOL = 1e-8
DEFAULT_MAIN_TOL = 1e-8


class NoConvergence(RuntimeError):
    pass


@dataclass(frozen=True)
class WalkMatrix:
    """Columns ``j, Qj, Q^2 j, ...`` stored column by column."""

    columns: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.columns)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in zip(*self.columns)]


@dataclass(frozen=True)
class Cluster:
    value: float
    multiplicity: int
    is_main: bool
    projection_norm: float


@dataclass(frozen=True)
class MainSpectrum:
    clusters: tuple[Cluster, ...]
    exact_main_count: int
    residual: float  # ||M V - V diag(w)||_inf
    matrix_norm: float  # ||M||_inf

    @property
    def main_values(self) -> list[float]:
        return [c.value for c in self.clusters if c.is_main]

    @property
    def float_main_count(self) -> int:
        return sum(1 for c in self.clusters if c.is_main)

    def to_json(self) -> list[dict]:
        return [
            {"value": c.value, "mult": c.multiplicity, "main": c.is_main}
            for c in self.clusters
        ]


def signless_laplacian(g: Graph) -> IntMatrix:
    rows = []
    for v in range(g.n):
        row = [0] * g.n
        for w in g.adjacency[v]:
            row[w] = 1
        row[v] = len(g.adjacency[v])
        rows.append(tuple(row))
    return tuple(rows)


def krylov_columns(m: Sequence[Sequence[int]], count: int | None = None) -> WalkMatrix:
    """Columns ``j, Mj, ..., M^{count-1} j`` in exact integer arithmetic."""
    n = len(m)
    count = n if count is None else count
    col = [1] * n
    cols = []
    for _ in range(count):
        cols.append(tuple(col))
        col = [sum(mi[k] * col[k] for k in range(n) if mi[k]) for mi in m]
    return WalkMatrix(tuple(cols))


def walk_matrix(g: Graph) -> WalkMatrix:
    deg = g.degrees
    adj = g.adjacency
    col = [1] * g.n
    cols = []
    for _ in range(g.n):
        cols.append(tuple(col))
        col = [deg[v] * col[v] + sum(col[w] for w in adj[v]) for v in range(g.n)]
    return WalkMatrix(tuple(cols))


def main_count_of_matrix(m: Sequence[Sequence[int]]) -> int:
    """Number of main eigenvalues of a symmetric integer matrix."""
    return bareiss_rank(krylov_columns(m).rows())


def main_eigenvalue_count(g: Graph) -> int:
    return bareiss_rank(walk_matrix(g).rows())


def jacobi_eigh(m, tol: float = DEFAULT_JACOBI_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric matrix."""
    a = np.asarray(m, dtype=np.float64)
    n = a.shape[0]
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    w, v, sweeps = _kernels.jacobi_cyclic(a, tol, 100 * n * n)
    if sweeps < 0:
        raise NoConvergence(f"cyclic Jacobi did not converge in {100 * n * n} sweeps")
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def eigen_decompose(
    m: IntMatrix,
    tol: float = DEFAULT_JACOBI_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    main_tol: float = DEFAULT_MAIN_TOL,
    exact_main_count: int | None = None,
) -> MainSpectrum:
    """Float spectrum of ``m`` grouped into clusters with mainness flags.

    Eigenvalues closer than ``cluster_tol * max(1, ||m||_inf)`` merge; a cluster
    is main when the projection of the all-ones vector onto its eigenvectors has
    norm above ``main_tol * sqrt(n)``.
    """
    a = np.asarray(m, dtype=np.float64)
    n = a.shape[0]
    w, v = jacobi_eigh(a, tol)
    norm_inf = float(np.max(np.sum(np.abs(a), axis=1)))
    residual = float(np.max(np.sum(np.abs(a @ v - v * w), axis=1)))
    proj = v.T @ np.ones(n)
    gap = cluster_tol * max(1.0, norm_inf)
    groups: list[list[int]] = [[0]]
    for i in range(1, n):
        if w[i] - w[i - 1] <= gap:
            groups[-1].append(i)
        else:
            groups.append([i])
    clusters = []
    for grp in groups:
        pn = float(np.sqrt(np.sum(proj[grp] ** 2)))
        clusters.append(
            Cluster(
                value=float(np.mean(w[grp])),
                multiplicity=len(grp),
                is_main=pn > main_tol * math.sqrt(n),
                projection_norm=pn,
            )
        )
    if exact_main_count is None:
        exact_main_count = main_count_of_matrix(m)
    return MainSpectrum(tuple(clusters), exact_main_count, residual, norm_inf)


def graph_spectrum(g: Graph, **tols) -> MainSpectrum:
    return eigen_decompose(signless_laplacian(g), exact_main_count=main_eigenvalue_count(g), **tols)


def spectrum_json(g: Graph, spec: MainSpectrum) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "main_count_exact": spec.exact_main_count,
        "clusters": spec.to_json(),
    }
