"""Wall-trajectory kinds: lengths, velocities, phase integral, validation."""

import numpy as np
import pytest
from scipy import integrate

from movingwall import DomainError, TrajectoryError, oscillatory, sudden_expansion, uniform
from movingwall.motion import KIND_IDS, OSCILLATORY, SUDDEN, UNIFORM


def test_kind_constants_registered():
    assert set(KIND_IDS) == {UNIFORM, OSCILLATORY, SUDDEN}
    assert uniform(1.0, -16.0).kind == UNIFORM
    assert oscillatory(1.0, 0.3, 1.0).kind == OSCILLATORY
    assert sudden_expansion(2.0, 10.0).kind == SUDDEN


def test_length_examples():
    assert uniform(1.0, -16.0).length(1.0 / 32.0) == pytest.approx(0.5, abs=1e-15)
    assert oscillatory(1.0, 0.3, 2.0).length(0.0) == pytest.approx(1.0, abs=1e-15)
    # a - 1/(1+b^2 t^2) starts at a-1
    assert sudden_expansion(2.0, 10.0).length(0.0) == pytest.approx(1.0, abs=1e-15)
    assert sudden_expansion(2.0, 10.0).length(10.0) == pytest.approx(2.0 - 1.0 / 10001.0, rel=1e-14)


def test_length_accepts_arrays():
    m = oscillatory(1.0, 0.3, 5.0)
    ts = np.linspace(0.0, 2.0, 7)
    got = m.length(ts)
    want = 1.0 + 0.3 * np.sin(5.0 * ts)
    assert got.shape == ts.shape
    assert np.allclose(got, want, atol=1e-15)


def test_velocity_examples():
    assert uniform(1.0, -16.0).velocity(0.123) == pytest.approx(-16.0, abs=1e-15)
    assert oscillatory(1.0, 0.3, 2.0).velocity(0.0) == pytest.approx(0.6, abs=1e-15)
    assert sudden_expansion(2.0, 10.0).velocity(0.0) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("make", [
    lambda: uniform(1.0, -16.0),
    lambda: oscillatory(1.0, 0.3, 10.0),
    lambda: sudden_expansion(2.0, 10.0),
])
def test_velocity_matches_centered_difference(make):
    m = make()
    rng = np.random.default_rng(7)
    t_hi = 0.06 if m.kind == UNIFORM else 2.0
    h = 1e-6
    for t in rng.uniform(h, t_hi - h, size=12):
        fd = (m.length(t + h) - m.length(t - h)) / (2.0 * h)
        assert m.velocity(t) == pytest.approx(fd, abs=1e-6)


def test_theta_uniform_closed_form():
    m = uniform(1.0, -16.0)
    assert m.theta(0.0) == 0.0
    # t/(l0 (l0 + a t)) at t=1/32, l0=1, a=-16
    assert m.theta(1.0 / 32.0) == pytest.approx(1.0 / 16.0, rel=1e-12)


@pytest.mark.parametrize("l0,a,t_hi", [(1.0, -16.0, 0.06), (1.0, 2.0, 3.0), (2.0, 0.5, 3.0)])
def test_theta_uniform_vs_quadrature(l0, a, t_hi):
    m = uniform(l0, a)
    rng = np.random.default_rng(11)
    for t in rng.uniform(0.001, t_hi, size=8):
        ref, _ = integrate.quad(lambda u: 1.0 / m.length(u) ** 2, 0.0, t, epsrel=1e-12, limit=200)
        assert m.theta(t) == pytest.approx(ref, rel=1e-9)


def test_theta_oscillatory_oracle():
    # frozen: adaptive quadrature of (1 + 0.3 sin u)^-2 on [0,1], cross-checked
    # against fixed-step Simpson with 1e6 panels
    m = oscillatory(1.0, 0.3, 1.0)
    frozen = 0.78246948919655458
    got = m.theta(1.0)
    assert got == pytest.approx(frozen, rel=1e-10)
    us = np.linspace(0.0, 1.0, 1_000_001)
    vals = 1.0 / (1.0 + 0.3 * np.sin(us)) ** 2
    simpson = integrate.simpson(vals, dx=us[1] - us[0])
    assert simpson == pytest.approx(frozen, rel=1e-10)


@pytest.mark.parametrize("make,t_hi", [
    (lambda: uniform(1.0, -16.0), 0.06),
    (lambda: oscillatory(1.0, 0.3, 10.0), 3.0),
    (lambda: sudden_expansion(2.0, 10.0), 5.0),
])
def test_theta_strictly_increasing(make, t_hi):
    m = make()
    rng = np.random.default_rng(3)
    for _ in range(6):
        t1, t2 = np.sort(rng.uniform(0.0, t_hi, size=2))
        if t1 == t2:
            continue
        assert m.theta(t2) > m.theta(t1)


def test_invalid_parameters_rejected():
    with pytest.raises(DomainError):
        uniform(-1.0, 2.0)
    with pytest.raises(DomainError):
        uniform(0.0, 2.0)
    with pytest.raises(DomainError):
        oscillatory(1.0, 1.0, 2.0)  # |a| >= l0 pinches the box
    with pytest.raises(DomainError):
        oscillatory(1.0, -1.5, 2.0)
    with pytest.raises(DomainError):
        sudden_expansion(1.0, 10.0)  # needs a > 1 so l(0) > 0


def test_validate_names_first_bad_time():
    m = uniform(1.0, -16.0)
    m.validate(0.06)  # wall still open: fine
    with pytest.raises(TrajectoryError) as err:
        m.validate(0.07)
    msg = str(err.value)
    assert "t =" in msg
    # wall closes at t = 1/16
    t_bad = float(msg.split("t =")[1].split()[0])
    assert 0.0625 <= t_bad <= 0.0701


def test_theta_refuses_collapsed_interval():
    with pytest.raises(TrajectoryError):
        uniform(1.0, -16.0).theta(0.07)


def test_negative_time_rejected():
    m = oscillatory(1.0, 0.3, 1.0)
    with pytest.raises(DomainError):
        m.theta(-0.5)
