"""Coefficient-space dynamics: right-hand side identities and the integrator."""

import math

import numpy as np
import pytest

from movingwall import (
    DomainError,
    IntegrationQualityError,
    coupling,
    decompose_initial,
    evolve,
    oscillatory,
    reconstruct,
    rhs,
    sudden_expansion,
    uniform,
)
from movingwall.basis import alpha_from_motion, phase
from movingwall.spectral import SpectralState


def _random_state(rng, k_max, m, t):
    c = rng.standard_normal(k_max)
    d = rng.standard_normal(k_max)
    s = math.sqrt(float(np.sum(c * c + d * d)))
    return SpectralState(t=t, theta=m.theta(t), c=c / s, d=d / s)


def test_rhs_static_wall_is_zero():
    m = uniform(1.0, 0.0)
    g = coupling(8)
    st = SpectralState(t=0.5, theta=0.5, c=np.ones(8) / math.sqrt(8.0), d=np.zeros(8))
    dc, dd, dth = rhs(st, m, g)
    assert np.all(dc == 0.0)
    assert np.all(dd == 0.0)
    assert dth == pytest.approx(1.0, rel=1e-15)


def test_rhs_hand_value():
    # two modes, pure mode 1, uniform compression a=-16 at t=0:
    # dc_2/dt = -g_21 * a / l0 * c_1 = -(-4/3)(-16) = -64/3
    m = uniform(1.0, -16.0)
    g = coupling(2)
    st = SpectralState(t=0.0, theta=0.0, c=np.array([1.0, 0.0]), d=np.zeros(2))
    dc, dd, dth = rhs(st, m, g)
    assert dc[1] == pytest.approx(-64.0 / 3.0, rel=1e-14)
    assert dc[0] == pytest.approx(0.0, abs=1e-14)
    assert np.all(dd == 0.0)
    assert dth == pytest.approx(1.0, rel=1e-15)


def test_rhs_matches_complex_formulation():
    # independent route: db_k/dt = -sum_n g_kn (l'/l) exp(i eta_kn) b_n
    rng = np.random.default_rng(23)
    for m, t in [
        (uniform(1.0, -16.0), 0.03),
        (oscillatory(1.0, 0.3, 10.0), 0.7),
        (sudden_expansion(2.0, 10.0), 0.2),
    ]:
        k_max = 12
        g = coupling(k_max)
        st = _random_state(rng, k_max, m, t)
        dc, dd, _ = rhs(st, m, g)
        b = st.c + 1j * st.d
        r = m.velocity(t) / m.length(t)
        eta = np.array([[phase(k, n, st.theta) for n in range(1, k_max + 1)]
                        for k in range(1, k_max + 1)])
        db = -r * (g * np.exp(1j * eta)) @ b
        assert np.allclose(dc, db.real, atol=1e-12)
        assert np.allclose(dd, db.imag, atol=1e-12)


def test_rhs_norm_identity():
    # antihermiticity of the coupling makes sum(c dc + d dd) vanish
    rng = np.random.default_rng(42)
    cases = [
        (uniform(1.0, -0.5), 0.03, 20),
        (oscillatory(1.0, 0.3, 1.0), 0.3, 40),
        (sudden_expansion(2.0, 10.0), 0.15, 30),
    ]
    for m, t, k_max in cases:
        g = coupling(k_max)
        for _ in range(10):
            st = _random_state(rng, k_max, m, t)
            dc, dd, _ = rhs(st, m, g)
            assert abs(float(np.sum(st.c * dc + st.d * dd))) <= 1e-14


def test_rhs_norm_identity_hard_compression():
    # same identity under l'/l ~ 30; the cancellation roundoff grows with
    # the derivative magnitudes, so the bound is scaled by them
    rng = np.random.default_rng(48)
    m = uniform(1.0, -16.0)
    g = coupling(20)
    for _ in range(10):
        st = _random_state(rng, 20, m, 0.03)
        dc, dd, _ = rhs(st, m, g)
        scale = float(np.linalg.norm(dc) + np.linalg.norm(dd))
        assert abs(float(np.sum(st.c * dc + st.d * dd))) <= 1e-14 * max(1.0, scale)


def test_evolve_static_wall_preserves_coefficients():
    m = uniform(1.0, 0.0)
    init = decompose_initial(1, 0.0, 6)
    traj = evolve(init, m, 1.0, 1e-3, n_samples=11)
    assert np.allclose(traj.c[-1], init.q.real, atol=1e-13)
    assert np.allclose(traj.d[-1], init.q.imag, atol=1e-13)
    assert traj.theta[-1] == pytest.approx(1.0, rel=1e-12)


def test_evolve_single_mode_tracks_theta():
    # with one mode there is no coupling; theta rides along as an extra ODE
    m = oscillatory(1.0, 0.3, 10.0)
    traj = evolve(np.array([1.0 + 0.0j]), m, 2.0, 1e-4, n_samples=5)
    assert traj.c[-1][0] == pytest.approx(1.0, abs=1e-14)
    assert traj.d[-1][0] == pytest.approx(0.0, abs=1e-14)
    assert traj.theta[-1] == pytest.approx(m.theta(2.0), rel=1e-9)


def test_evolve_samples_are_monotone_and_bracketed():
    m = oscillatory(1.0, 0.3, 1.0)
    init = decompose_initial(2, alpha_from_motion(m), 10)
    traj = evolve(init, m, 0.5, 1e-3, n_samples=37)
    assert traj.times[0] == 0.0
    assert traj.times[-1] == pytest.approx(0.5, rel=1e-12)
    assert np.all(np.diff(traj.times) > 0)
    assert len(traj) == len(traj.times) == traj.c.shape[0]
    st = traj.state(0)
    assert st.norm == pytest.approx(init.captured_norm, rel=1e-12)


def test_evolve_k_max_truncates_and_pads():
    m = oscillatory(1.0, 0.3, 1.0)
    init = decompose_initial(2, alpha_from_motion(m), 12)
    tr_trunc = evolve(init, m, 0.2, 1e-3, k_max=6, n_samples=3)
    assert tr_trunc.k_max == 6
    tr_pad = evolve(init, m, 0.2, 1e-3, k_max=20, n_samples=3)
    assert tr_pad.k_max == 20
    assert tr_pad.state(0).c[15] == 0.0


def test_evolve_norm_drift_gate():
    # deliberately coarse step on the hard compression: the quality gate
    # must refuse the run
    m = uniform(1.0, -16.0)
    init = decompose_initial(2, alpha_from_motion(m), 10)
    with pytest.raises(IntegrationQualityError) as err:
        evolve(init, m, 1.0 / 16.0 - 1e-3, 1e-5, n_samples=200)
    assert "dt" in str(err.value)
    # same run passes with the gate disabled
    traj = evolve(init, m, 1.0 / 16.0 - 1e-3, 1e-5, n_samples=200, drift_limit=None)
    assert traj.max_norm_drift > 1e-6


def test_evolve_converged_run_passes_gate():
    m = uniform(1.0, -16.0)
    init = decompose_initial(2, alpha_from_motion(m), 10)
    traj = evolve(init, m, 1.0 / 16.0 - 1e-3, 3e-7, n_samples=100)
    assert traj.max_norm_drift <= 1e-6


def test_evolve_rejects_bad_arguments():
    m = uniform(1.0, 2.0)
    init = decompose_initial(1, 0.5, 4)
    with pytest.raises(DomainError):
        evolve(init, m, -1.0, 1e-3)
    with pytest.raises(DomainError):
        evolve(init, m, 1.0, 0.0)
    with pytest.raises(DomainError):
        evolve(init, m, 1.0, 1e-3, n_samples=1)
    with pytest.raises(DomainError):
        evolve(init, m, 1.0, 1e-3, k_max=0)


def test_evolve_rejects_invalid_trajectory():
    m = uniform(1.0, -16.0)
    init = decompose_initial(1, -4.0, 4)
    with pytest.raises(DomainError):
        evolve(init, m, 0.07, 1e-4)


def test_step_halving_fourth_order():
    # successive halvings contract the final-coefficient difference ~16x
    m = oscillatory(1.0, 0.3, 10.0)
    init = decompose_initial(2, alpha_from_motion(m), 10)

    def final_vec(dt):
        tr = evolve(init, m, 0.1, dt, n_samples=2, drift_limit=None)
        return np.concatenate([tr.c[-1], tr.d[-1]])

    y1 = final_vec(4e-4)
    y2 = final_vec(2e-4)
    y3 = final_vec(1e-4)
    ratio = np.linalg.norm(y1 - y2) / np.linalg.norm(y2 - y3)
    assert 16.0 * 0.7 <= ratio <= 16.0 * 1.3


def test_reconstruct_examples():
    m = uniform(1.0, 0.0)
    init = decompose_initial(1, 0.0, 5)
    traj = evolve(init, m, 0.1, 1e-3, n_samples=3)
    st = traj.state(0)
    xs = np.array([0.0, 0.5, 1.0])
    psi = reconstruct(st, m, xs)
    assert abs(psi[0]) == pytest.approx(0.0, abs=1e-12)
    assert abs(psi[2]) == pytest.approx(0.0, abs=1e-12)
    assert psi[1] == pytest.approx(math.sqrt(2.0), rel=1e-12)
    # later state: same density, evolved phase exp(-i pi^2 t)
    st1 = traj.state(2)
    psi1 = reconstruct(st1, m, np.array([0.5]))
    assert abs(psi1[0]) == pytest.approx(math.sqrt(2.0), rel=1e-9)
    want = math.sqrt(2.0) * np.exp(-1j * math.pi**2 * 0.1)
    assert psi1[0] == pytest.approx(want, rel=1e-8)
