import math
import os
import subprocess
import sys

import numpy as np
import pytest
import sympy
from hypothesis import given, settings

from signless_main import _kernels
from signless_main.families import make_family
from signless_main.graph import degree_profile, from_edges
from signless_main.spectra import (
    NoConvergence,
    eigen_decompose,
    graph_spectrum,
    jacobi_eigh,
    krylov_columns,
    main_count_of_matrix,
    main_eigenvalue_count,
    signless_laplacian,
    walk_matrix,
)

from conftest import graphs


def test_signless_laplacian_examples():
    assert signless_laplacian(make_family("path:3")) == ((1, 1, 0), (1, 2, 1), (0, 1, 1))
    assert signless_laplacian(make_family("complete:3")) == ((2, 1, 1), (1, 2, 1), (1, 1, 2))
    assert signless_laplacian(make_family("complete:2")) == ((1, 1), (1, 1))


@given(graphs(max_n=10))
def test_signless_laplacian_invariants(g):
    q = signless_laplacian(g)
    deg = g.degrees
    assert all(q[i][j] == q[j][i] for i in range(g.n) for j in range(g.n))
    assert sum(q[i][i] for i in range(g.n)) == 2 * g.m
    assert all(sum(q[v]) == 2 * deg[v] for v in range(g.n))


def test_walk_matrix_examples():
    w = walk_matrix(make_family("path:3"))
    assert w.columns[:3] == ((1, 1, 1), (2, 4, 2), (6, 12, 6))
    w = walk_matrix(make_family("cycle:4"))
    assert w.columns == ((1,) * 4, (4,) * 4, (16,) * 4, (64,) * 4)


@settings(max_examples=1000)
@given(graphs(max_n=10))
def test_walk_column_identities(g):
    cols = walk_matrix(g).columns
    prof = degree_profile(g)
    if g.n > 1:
        assert cols[1] == tuple(2 * d for d in prof.degrees)
    if g.n > 2:
        assert cols[2] == tuple(2 * (d * d + s) for d, s in zip(prof.degrees, prof.two_walk_sums))


@given(graphs(max_n=8))
def test_graph_walk_matrix_equals_generic_krylov(g):
    assert walk_matrix(g) == krylov_columns(signless_laplacian(g))


def test_main_count_examples():
    assert main_eigenvalue_count(make_family("cycle:4")) == 1
    assert main_eigenvalue_count(make_family("path:3")) == 2
    assert main_eigenvalue_count(make_family("G1")) == 2


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_main_count_matches_sympy_rank(g):
    w = sympy.Matrix(walk_matrix(g).rows())
    assert main_eigenvalue_count(g) == w.rank()


def test_k2_spectrum():
    spec = eigen_decompose(signless_laplacian(make_family("complete:2")))
    assert [round(c.value, 12) for c in spec.clusters] == [0.0, 2.0]
    assert [c.is_main for c in spec.clusters] == [False, True]
    assert spec.exact_main_count == 1


def test_p3_spectrum():
    spec = graph_spectrum(make_family("path:3"))
    assert [round(c.value, 12) for c in spec.clusters] == [0.0, 1.0, 3.0]
    assert [c.is_main for c in spec.clusters] == [True, False, True]
    assert spec.exact_main_count == 2


def test_bowtie_main_values():
    spec = graph_spectrum(make_family("G1"))
    expected = [(7 - math.sqrt(17)) / 2, (7 + math.sqrt(17)) / 2]
    assert spec.main_values == pytest.approx(expected, abs=1e-8)
    assert spec.exact_main_count == 2


def test_multiplicities_sum_to_n_and_trace():
    g = make_family("petersen")
    spec = graph_spectrum(g)
    assert sum(c.multiplicity for c in spec.clusters) == g.n
    assert sum(c.multiplicity * c.value for c in spec.clusters) == pytest.approx(2 * g.m, abs=1e-9)
    assert [c.multiplicity for c in spec.clusters] == [4, 5, 1]


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_jacobi_against_lapack_and_residual(g):
    q = np.array(signless_laplacian(g), dtype=float)
    w, v = jacobi_eigh(q)
    assert np.allclose(w, np.linalg.eigvalsh(q), atol=1e-10)
    assert np.allclose(v.T @ v, np.eye(g.n), atol=1e-12)
    norm = np.abs(q).sum(axis=1).max()
    assert np.abs(q @ v - v * w).sum(axis=1).max() <= 1e-9 * max(norm, 1.0)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_float_main_count_matches_exact(g):
    spec = graph_spectrum(g)
    assert spec.float_main_count == spec.exact_main_count >= 1


def test_main_count_of_matrix_generic():
    # diag(1, 2) has two main eigenvalues; the all-ones matrix has one
    assert main_count_of_matrix([[1, 0], [0, 2]]) == 2
    assert main_count_of_matrix([[1, 1], [1, 1]]) == 1


def test_no_convergence(monkeypatch):
    monkeypatch.setattr(_kernels, "jacobi_cyclic", lambda a, tol, sweeps: (np.zeros(2), np.eye(2), -1))
    with pytest.raises(NoConvergence):
        jacobi_eigh([[1.0, 1.0], [1.0, 1.0]])


def test_asymmetric_rejected():
    with pytest.raises(ValueError):
        jacobi_eigh([[1.0, 2.0], [0.0, 1.0]])


@pytest.mark.skipif(_kernels.jacobi_cyclic_numba is None, reason="numba not installed")
def test_numba_and_numpy_kernels_agree():
    rng = np.random.default_rng(3)
    for n in (1, 2, 5, 9, 14):
        a = rng.normal(size=(n, n))
        a = a + a.T
        w1, v1, s1 = _kernels.jacobi_cyclic_numpy(a, 1e-14, 100 * n * n)
        w2, v2, s2 = _kernels.jacobi_cyclic_numba(a, 1e-14, 100 * n * n)
        assert s1 == s2 >= 0
        assert np.allclose(np.sort(w1), np.sort(w2), atol=1e-11)
        assert np.allclose(a @ v1, v1 * w1, atol=1e-10)
        assert np.allclose(a @ v2, v2 * w2, atol=1e-10)


def test_backend_env_flag_selects_numpy():
    env = dict(os.environ, SIGNLESS_MAIN_BACKEND="numpy")
    code = (
        "from signless_main import _kernels; from signless_main.families import make_family;"
        "from signless_main.spectra import graph_spectrum;"
        "s = graph_spectrum(make_family('G1')); print(_kernels.BACKEND, s.float_main_count)"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "2"]


def test_backend_env_flag_rejects_garbage():
    env = dict(os.environ, SIGNLESS_MAIN_BACKEND="fortran")
    out = subprocess.run([sys.executable, "-c", "import signless_main._kernels"], env=env, capture_output=True, text=True)
    assert out.returncode != 0


def test_disconnected_graph_spectrum():
    g = from_edges(5, [(0, 1), (2, 3), (3, 4)])
    spec = graph_spectrum(g)
    assert spec.float_main_count == spec.exact_main_count
