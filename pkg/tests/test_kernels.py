"""Compiled and pure-Python integration kernels must be interchangeable."""

import os
import subprocess
import sys

import numpy as np
import pytest

from movingwall import _purekernels, kernels
from movingwall.basis import coupling
from movingwall.motion import KIND_IDS

try:
    from movingwall import _core
    HAVE_COMPILED = True
except ImportError:
    HAVE_COMPILED = False

needs_compiled = pytest.mark.skipif(not HAVE_COMPILED, reason="compiled kernel not built")

# (kind_id, p0, p1, p2): one workload per wall law
_CASES = [
    (KIND_IDS["uniform"], 1.0, -16.0, 0.0),
    (KIND_IDS["oscillatory"], 1.0, 0.3, 10.0),
    (KIND_IDS["sudden"], 2.0, 10.0, 0.0),
]


def _spectral_inputs(k_max=12, seed=5):
    rng = np.random.default_rng(seed)
    c0 = rng.standard_normal(k_max)
    d0 = rng.standard_normal(k_max)
    s = np.sqrt(np.sum(c0 * c0 + d0 * d0))
    return c0 / s, d0 / s, coupling(k_max)


def test_backend_reported():
    assert kernels.BACKEND in ("compiled", "python")
    assert _purekernels.BACKEND == "python"


@needs_compiled
@pytest.mark.parametrize("kind_id,p0,p1,p2", _CASES)
def test_spectral_backends_agree(kind_id, p0, p1, p2):
    c0, d0, g = _spectral_inputs()
    idx = np.array([0, 50, 100], dtype=np.int64)
    dt = 1e-5 if kind_id == KIND_IDS["uniform"] else 1e-4
    out_py = _purekernels.spectral_evolve(c0, d0, g, kind_id, p0, p1, p2, dt, 100, idx)
    out_c = _core.spectral_evolve(c0, d0, g, kind_id, p0, p1, p2, dt, 100, idx)
    for a, b in zip(out_py, out_c):
        assert np.allclose(a, b, atol=1e-13, rtol=0.0)


@needs_compiled
@pytest.mark.parametrize("kind_id,p0,p1,p2", _CASES)
def test_fd_backends_agree(kind_id, p0, p1, p2):
    rng = np.random.default_rng(9)
    n_grid = 32
    phi0 = rng.standard_normal(n_grid - 1) + 1j * rng.standard_normal(n_grid - 1)
    idx = np.array([0, 40, 80], dtype=np.int64)
    out_py = _purekernels.fd_evolve(phi0, kind_id, p0, p1, p2, 1e-6, 80, idx)
    out_c = _core.fd_evolve(phi0, kind_id, p0, p1, p2, 1e-6, 80, idx)
    assert np.allclose(out_py, out_c, atol=1e-13, rtol=0.0)


@pytest.mark.parametrize("mod", [_purekernels] + ([_core] if HAVE_COMPILED else []))
def test_sample_rows_match_shorter_runs(mod):
    # the row recorded at step s must equal the final state of an s-step run
    c0, d0, g = _spectral_inputs()
    kind_id, p0, p1, p2 = _CASES[1]
    idx = np.array([0, 37, 80], dtype=np.int64)
    C, D, TH = mod.spectral_evolve(c0, d0, g, kind_id, p0, p1, p2, 1e-4, 80, idx)
    assert np.array_equal(C[0], c0)
    assert np.array_equal(D[0], d0)
    assert TH[0] == 0.0
    C37, D37, TH37 = mod.spectral_evolve(c0, d0, g, kind_id, p0, p1, p2, 1e-4,
                                         37, np.array([37], dtype=np.int64))
    assert np.array_equal(C[1], C37[0])
    assert np.array_equal(D[1], D37[0])
    assert TH[1] == TH37[0]


def _run_with_backend(value):
    env = dict(os.environ, MOVINGWALL_BACKEND=value)
    code = "import movingwall; print(movingwall.BACKEND)"
    return subprocess.run([sys.executable, "-c", code], env=env,
                          capture_output=True, text=True)


def test_env_var_forces_python_backend():
    out = _run_with_backend("python")
    assert out.returncode == 0
    assert out.stdout.strip() == "python"


@needs_compiled
def test_env_var_forces_compiled_backend():
    out = _run_with_backend("compiled")
    assert out.returncode == 0
    assert out.stdout.strip() == "compiled"


def test_env_var_rejects_unknown_backend():
    out = _run_with_backend("fortran")
    assert out.returncode != 0
