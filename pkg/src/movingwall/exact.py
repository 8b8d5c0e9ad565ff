"""Closed-form solution for the well with a uniformly moving wall.

For ell(t) = L0 + a t the time-dependent problem has exact solutions

    Psi_n(x,t) = sqrt(2/ell) exp[ i alpha xi (x/ell)^2
                 - i (n^2 pi^2 / 4 alpha)(1 - 1/xi) ] sin(n pi x / ell),

with xi = ell(t)/L0 and alpha = L0 a / 4 (units hbar = 1, m = 1/2). The
density |Psi_n|^2 is the instantaneous eigenmode density for every t, and
at t = 0 the phase reduces to alpha x^2 / L0^2, which is exactly the phased
initial state that ``basis.decompose_initial`` expands. The a = 0 limit is
singular in the written form and is served by the stationary-state branch
exp(-i E_n t) instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .motion import UNIFORM, WallMotion

__all__ = ["ExactUniformSolution"]

_PI2 = math.pi * math.pi


@dataclass(frozen=True)
class ExactUniformSolution:
    """Exact wavefunction Psi_n for a wall moving at constant velocity."""

    n: int
    l0: float
    a: float

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"mode index must be positive, got {self.n}")
        if self.l0 <= 0:
            raise DomainError(f"initial length must be positive, got {self.l0}")

    @classmethod
    def from_motion(cls, n: int, m: WallMotion) -> "ExactUniformSolution":
        if m.kind != UNIFORM:
            raise DomainError("closed-form solution exists only for uniform wall motion")
        l0, a, _ = m.params
        return cls(n=n, l0=l0, a=a)

    @property
    def alpha(self) -> float:
        """Quadratic-phase strength alpha = l0 a / 4."""
        return self.l0 * self.a / 4.0

    def length(self, t: float) -> float:
        return self.l0 + self.a * t

    def psi(self, xs, t: float) -> np.ndarray:
        """Complex amplitude Psi_n(x, t) for x in [0, ell(t)]."""
        l = self.length(t)
        if l <= 0:
            raise DomainError(f"wall length {l:.6g} at t = {t:.9g} is not positive")
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        if np.any(xs < 0) or np.any(xs > l * (1 + 1e-12)):
            raise DomainError(f"position outside [0, {l}]")
        amp = math.sqrt(2.0 / l) * np.sin(self.n * math.pi * xs / l)
        if self.a == 0.0:
            ph = -_PI2 * self.n * self.n / (self.l0 * self.l0) * t
            return amp * np.exp(1j * ph)
        xi = l / self.l0
        ph = self.alpha * xi * (xs / l) ** 2 - (self.n * self.n * _PI2 / (4.0 * self.alpha)) * (
            1.0 - 1.0 / xi
        )
        return amp * np.exp(1j * ph)

    def density(self, xs, t: float) -> np.ndarray:
        """|Psi_n|^2 = (2/ell) sin^2(n pi x / ell); the phase drops out."""
        l = self.length(t)
        if l <= 0:
            raise DomainError(f"wall length {l:.6g} at t = {t:.9g} is not positive")
        xs = np.atleast_1d(np.asarray(xs, dtype=float))
        return (2.0 / l) * np.sin(self.n * math.pi * xs / l) ** 2
