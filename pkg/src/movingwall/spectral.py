"""Evolution of a state expanded over the instantaneous eigenbasis.

The wavefunction is written psi(x,t) = sum_k b_k(t) u_k(x,t)
exp(-i pi^2 k^2 theta(t)) and the complex coefficients obey

    db_k/dt = -sum_n Delta_kn(t) exp(i eta_kn(t)) b_n,

with Delta_kn = g_kn ell'/ell and eta_kn = pi^2 (k^2 - n^2) theta. Splitting
b = c + i d turns this into a real ODE system that conserves
P = sum(c^2 + d^2) exactly in the continuum; the fixed-step RK4 integrator
conserves it to its truncation order, and the measured drift is the
integration quality gate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .basis import InitialState, coupling
from .errors import DomainError, IntegrationQualityError
from .motion import WallMotion

__all__ = ["SpectralState", "SpectralTrajectory", "evolve", "reconstruct", "rhs"]

_PI2 = math.pi * math.pi

NORM_DRIFT_LIMIT = 1e-6


@dataclass(frozen=True)
class SpectralState:
    """Coefficient snapshot: real parts c, imaginary parts d, clock theta."""

    t: float
    theta: float
    c: np.ndarray
    d: np.ndarray

    @property
    def k_max(self) -> int:
        return len(self.c)

    @property
    def b(self) -> np.ndarray:
        """Complex coefficients b_k = c_k + i d_k."""
        return self.c + 1j * self.d

    @property
    def norm(self) -> float:
        return float(np.sum(self.c * self.c + self.d * self.d))


@dataclass(frozen=True)
class SpectralTrajectory:
    """Sampled trajectory of SpectralState rows."""

    motion: WallMotion
    times: np.ndarray
    theta: np.ndarray
    c: np.ndarray
    d: np.ndarray
    dt: float

    def __len__(self) -> int:
        return len(self.times)

    @property
    def k_max(self) -> int:
        return self.c.shape[1]

    def state(self, i: int) -> SpectralState:
        return SpectralState(
            t=float(self.times[i]), theta=float(self.theta[i]),
            c=self.c[i], d=self.d[i],
        )

    def norms(self) -> np.ndarray:
        return np.sum(self.c * self.c + self.d * self.d, axis=1)

    @property
    def max_norm_drift(self) -> float:
        p = self.norms()
        return float(np.max(np.abs(p / p[0] - 1.0)))


def rhs(state: SpectralState, m: WallMotion, g: np.ndarray):
    """Coefficient derivatives in the plain double-sum form.

    Returns (dc, dd, dtheta). This is the reference formulation; the
    integration kernels use an algebraically identical factored form and the
    two are pinned against each other in the tests.
    """
    k_max = state.k_max
    l = float(m.length(state.t))
    lp = float(m.velocity(state.t))
    k = np.arange(1, k_max + 1)
    eta = _PI2 * (k[:, None] ** 2 - k[None, :] ** 2) * state.theta
    delta = g * (lp / l)
    cos_eta = np.cos(eta)
    sin_eta = np.sin(eta)
    dc = -(delta * (cos_eta * state.c[None, :] - sin_eta * state.d[None, :])).sum(axis=1)
    dd = -(delta * (sin_eta * state.c[None, :] + cos_eta * state.d[None, :])).sum(axis=1)
    return dc, dd, 1.0 / (l * l)


def _sample_steps(n_steps: int, n_samples: int) -> np.ndarray:
    idx = np.round(np.linspace(0, n_steps, n_samples)).astype(np.int64)
    return np.unique(idx)


def evolve(
    init,
    m: WallMotion,
    t_max: float,
    dt: float,
    k_max: int | None = None,
    n_samples: int = 1000,
    drift_limit: float | None = NORM_DRIFT_LIMIT,
) -> SpectralTrajectory:
    """Integrate the coefficient system over [0, t_max] with fixed-step RK4.

    ``init`` is an InitialState or a complex coefficient vector; ``k_max``
    defaults to its length and otherwise truncates or zero-pads. The step
    actually used is t_max/n_steps with n_steps = ceil(t_max/dt), so it never
    exceeds the requested dt. Raises IntegrationQualityError when the
    relative norm drift over the sampled trajectory exceeds ``drift_limit``
    (pass None to disable, e.g. for timing runs).
    """
    if dt <= 0:
        raise DomainError(f"dt must be positive, got {dt}")
    if t_max <= 0:
        raise DomainError(f"t_max must be positive, got {t_max}")
    if n_samples < 2:
        raise DomainError(f"need at least 2 samples, got {n_samples}")
    m.validate(t_max)

    q = init.q if isinstance(init, InitialState) else np.asarray(init, dtype=complex)
    if k_max is None:
        k_max = len(q)
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")
    c0 = np.zeros(k_max)
    d0 = np.zeros(k_max)
    n_copy = min(k_max, len(q))
    c0[:n_copy] = q.real[:n_copy]
    d0[:n_copy] = q.imag[:n_copy]

    n_steps = max(1, int(math.ceil(t_max / dt - 1e-9)))
    dt_eff = t_max / n_steps
    sample_idx = _sample_steps(n_steps, n_samples)

    g = coupling(k_max)
    p0, p1, p2 = m.params
    C, D, TH = kernels.spectral_evolve(
        c0, d0, g, m.kind_id, p0, p1, p2, dt_eff, n_steps, sample_idx
    )
    traj = SpectralTrajectory(
        motion=m,
        times=sample_idx * dt_eff,
        theta=TH,
        c=C,
        d=D,
        dt=dt_eff,
    )
    if drift_limit is not None:
        drift = traj.max_norm_drift
        if drift > drift_limit:
            raise IntegrationQualityError(
                f"norm drifted by {drift:.3e} relative (limit {drift_limit:.1e}); "
                f"reduce dt below {dt_eff:.3e}"
            )
    return traj


def reconstruct(state: SpectralState, m: WallMotion, xs) -> np.ndarray:
    """Wavefunction samples psi(x, t) = sum_k b_k u_k(x) e^{-i pi^2 k^2 theta}."""
    l = float(m.length(state.t))
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if np.any(xs < 0) or np.any(xs > l * (1 + 1e-12)):
        raise DomainError(f"position outside [0, {l}]")
    k = np.arange(1, state.k_max + 1)
    weights = (state.b * np.exp(-1j * _PI2 * k * k * state.theta)) * math.sqrt(2.0 / l)
    return np.sin(np.outer(xs, k) * (math.pi / l)) @ weights
