"""Wall trajectories for the well with one moving boundary.

A trajectory is the law ell(t) for the position of the right wall (the left
wall stays at the origin), together with its time derivative and the
accumulated phase integral theta(t) = integral of 1/ell(tau)^2 from 0 to t.
Units are fixed to hbar = 1, m = 1/2 throughout the package, so the mode
energies are pi^2 n^2 / ell^2 and theta is the natural clock for all
dynamical phases.

Three laws are supported:

* uniform:       ell(t) = l0 + a*t
* oscillatory:   ell(t) = l0 + a*sin(omega*t)
* sudden:        ell(t) = a - 1/(1 + b^2 t^2), relaxing from a-1 toward a
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import DomainError, QuadratureError, TrajectoryError

UNIFORM = "uniform"
OSCILLATORY = "oscillatory"
SUDDEN = "sudden"

# integer tags used by the integration kernels
KIND_IDS = {UNIFORM: 0, OSCILLATORY: 1, SUDDEN: 2}

_THETA_RTOL = 1e-10


@dataclass(frozen=True)
class WallMotion:
    """Immutable wall trajectory.

    ``params`` always holds three floats; their meaning depends on ``kind``:
    uniform (l0, a, unused), oscillatory (l0, a, omega), sudden (a, b, unused).
    Use the factory functions below rather than the raw constructor.
    """

    kind: str
    params: tuple[float, float, float]

    def __post_init__(self) -> None:
        if self.kind not in KIND_IDS:
            raise DomainError(f"unknown motion kind {self.kind!r}")

    @property
    def kind_id(self) -> int:
        return KIND_IDS[self.kind]

    def length(self, t):
        """Wall position ell(t); accepts scalars or arrays."""
        p0, p1, p2 = self.params
        if self.kind == UNIFORM:
            return p0 + p1 * np.asarray(t, dtype=float)
        if self.kind == OSCILLATORY:
            return p0 + p1 * np.sin(p2 * np.asarray(t, dtype=float))
        t = np.asarray(t, dtype=float)
        return p0 - 1.0 / (1.0 + (p1 * t) ** 2)

    def velocity(self, t):
        """Wall velocity d ell/dt; accepts scalars or arrays."""
        p0, p1, p2 = self.params
        t = np.asarray(t, dtype=float)
        if self.kind == UNIFORM:
            return np.broadcast_to(np.float64(p1), t.shape).copy() if t.ndim else np.float64(p1)
        if self.kind == OSCILLATORY:
            return p1 * p2 * np.cos(p2 * t)
        w = 1.0 + (p1 * t) ** 2
        return 2.0 * p1 * p1 * t / (w * w)

    def theta(self, t: float) -> float:
        """Phase integral theta(t) = int_0^t dtau / ell(tau)^2.

        Uniform motion uses the closed form t / (l0 (l0 + a t)); the other
        laws fall back to adaptive quadrature at relative tolerance 1e-10.
        During time evolution theta is instead carried as an extra ODE
        variable; this standalone evaluation exists for initialization and
        cross-checks.
        """
        t = float(t)
        if t == 0.0:
            return 0.0
        self.validate(t)
        if self.kind == UNIFORM:
            l0, a, _ = self.params
            return t / (l0 * (l0 + a * t))
        val, abserr = integrate.quad(
            lambda tau: 1.0 / float(self.length(tau)) ** 2, 0.0, t,
            epsabs=0.0, epsrel=_THETA_RTOL, limit=500,
        )
        if abserr > 10.0 * _THETA_RTOL * abs(val):
            raise QuadratureError(
                f"theta({t}) quadrature achieved {abserr / abs(val):.2e} relative, "
                f"needed {_THETA_RTOL:.0e}"
            )
        return val

    def validate(self, t_max: float, n_check: int = 10_000) -> None:
        """Check ell(t) > 0 on [0, t_max] over a dense sample.

        Raises TrajectoryError naming the first invalid time.
        """
        if t_max < 0:
            raise TrajectoryError(f"t_max must be nonnegative, got {t_max}")
        ts = np.linspace(0.0, t_max, n_check)
        ls = np.asarray(self.length(ts))
        bad = np.flatnonzero(ls <= 0.0)
        if bad.size:
            i = bad[0]
            raise TrajectoryError(
                f"wall length {ls[i]:.6g} at t = {ts[i]:.9g} is not positive"
            )


def uniform(l0: float, a: float) -> WallMotion:
    """Wall moving at constant velocity: ell(t) = l0 + a*t."""
    if l0 <= 0:
        raise DomainError(f"initial length must be positive, got {l0}")
    return WallMotion(UNIFORM, (float(l0), float(a), 0.0))


def oscillatory(l0: float, a: float, omega: float) -> WallMotion:
    """Oscillating wall: ell(t) = l0 + a*sin(omega*t). Requires |a| < l0."""
    if l0 <= 0:
        raise DomainError(f"mean length must be positive, got {l0}")
    if abs(a) >= l0:
        raise DomainError(f"amplitude |{a}| must be below the mean length {l0}")
    return WallMotion(OSCILLATORY, (float(l0), float(a), float(omega)))


def sudden_expansion(a: float, b: float) -> WallMotion:
    """Rapid relaxation ell(t) = a - 1/(1 + b^2 t^2). Requires a > 1."""
    if a <= 1:
        raise DomainError(f"asymptotic length must exceed 1, got {a}")
    return WallMotion(SUDDEN, (float(a), float(b), 0.0))
