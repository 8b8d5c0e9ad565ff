"""Instantaneous eigenbasis of the well and initial-state decompositions.

At any instant the well of width ell has eigenfunctions
u_n(x) = sqrt(2/ell) sin(n pi x / ell) with energies E_n = pi^2 n^2 / ell^2
(units hbar = 1, m = 1/2). Expanding a solution over this moving basis
couples the modes through the geometry factor

    g_kn = (-1)^(k+n) * 2 k n / (k^2 - n^2),   g_kk = 0,

which multiplies ell'(t)/ell(t) to give the full coupling, and through the
accumulated phase eta_kn = pi^2 (k^2 - n^2) theta(t).

Two families of initial states are supported: the plain ground-type state
u_j of the initial well, and the same mode carrying the quadratic phase
exp(i alpha x^2 / ell(0)^2) that makes it the t=0 slice of the closed-form
solution for a uniformly moving wall. Its expansion coefficients

    q_jk = 2 int_0^1 exp(i alpha y^2) sin(j pi y) sin(k pi y) dy

are evaluated in closed form through Fresnel integrals, with a series branch
for small alpha where the closed form loses digits to cancellation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .motion import WallMotion
from .specfun import fresnel

__all__ = [
    "InitialState",
    "alpha_from_motion",
    "coupling",
    "decompose_initial",
    "eigenfunction",
    "energy",
    "phase",
]

ALPHA_SMALL = 1e-3

_PI2 = math.pi * math.pi


def eigenfunction(n: int, x, l: float):
    """u_n(x) = sqrt(2/l) sin(n pi x / l) for x in [0, l]."""
    if n < 1:
        raise DomainError(f"mode index must be >= 1, got {n}")
    if l <= 0:
        raise DomainError(f"well width must be positive, got {l}")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0) or np.any(x > l):
        raise DomainError(f"position outside [0, {l}]")
    out = math.sqrt(2.0 / l) * np.sin(n * math.pi * x / l)
    return float(out) if out.ndim == 0 else out


def energy(n: int, l: float) -> float:
    """E_n = pi^2 n^2 / l^2 in hbar = 1, m = 1/2 units."""
    if n < 1:
        raise DomainError(f"mode index must be >= 1, got {n}")
    if l <= 0:
        raise DomainError(f"well width must be positive, got {l}")
    return _PI2 * n * n / (l * l)


def coupling(k_max: int) -> np.ndarray:
    """Dense antisymmetric matrix of the geometry factors g_kn, 1-based modes.

    Entry [k-1, n-1] holds (-1)^(k+n) 2kn/(k^2-n^2); the diagonal is zero.
    The time-dependent coupling is g_kn * ell'(t)/ell(t).
    """
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")
    k = np.arange(1, k_max + 1, dtype=float)
    kk, nn = np.meshgrid(k, k, indexing="ij")
    with np.errstate(divide="ignore", invalid="ignore"):
        g = np.where(kk == nn, 0.0, ((-1.0) ** (kk + nn)) * 2.0 * kk * nn / (kk * kk - nn * nn))
    return g


def phase(k: int, n: int, theta: float) -> float:
    """Accumulated phase difference eta_kn = pi^2 (k^2 - n^2) theta."""
    return _PI2 * (k * k - n * n) * theta


def alpha_from_motion(m: WallMotion) -> float:
    """Quadratic-phase strength alpha = ell(0) ell'(0) / 4 in the fixed units."""
    return float(m.length(0.0)) * float(m.velocity(0.0)) / 4.0


@dataclass(frozen=True)
class InitialState:
    """Decomposition of an initial wavefunction over the t=0 eigenbasis.

    ``q[k-1]`` is the complex coefficient of mode k. The captured norm
    sum |q_jk|^2 approaches 1 from below as k_max grows; the shortfall is
    the truncation loss and is recorded in run manifests.
    """

    j: int
    alpha: float
    q: np.ndarray

    @property
    def k_max(self) -> int:
        return len(self.q)

    @property
    def captured_norm(self) -> float:
        return float(np.sum(np.abs(self.q) ** 2))


def _q_closed(j: int, k: int, alpha: float) -> complex:
    # four-Fresnel-term closed form; negative alpha by conjugation symmetry
    if alpha < 0.0:
        return _q_closed(j, k, -alpha).conjugate()
    rt = math.sqrt(2.0 * math.pi * alpha)
    pref = math.sqrt(0.5 * math.pi) / (2.0 * math.sqrt(alpha))

    def F(x: float) -> complex:
        c, s = fresnel(x)
        return complex(c, s)

    a_p = (math.pi * (j - k) + 2.0 * alpha) / rt
    a_m = (math.pi * (j - k) - 2.0 * alpha) / rt
    b_m = (math.pi * (j + k) - 2.0 * alpha) / rt
    b_p = (math.pi * (j + k) + 2.0 * alpha) / rt
    ph_m = _PI2 * (j - k) ** 2 / (4.0 * alpha)
    ph_p = _PI2 * (j + k) ** 2 / (4.0 * alpha)
    e_m = complex(math.cos(ph_m), -math.sin(ph_m))
    e_p = complex(math.cos(ph_p), -math.sin(ph_p))
    return pref * (e_m * (F(a_p) - F(a_m)) + e_p * (F(b_m) - F(b_p)))


def _q_series(j: int, k: int, alpha: float) -> complex:
    # leading orders in alpha: O(alpha^2) real error on the diagonal rule below
    # is O(alpha^4), imaginary O(alpha^3)
    if alpha < 0.0:
        return _q_series(j, k, -alpha).conjugate()
    if j == k:
        re = 1.0 + (-0.1 + (-3.0 + 2.0 * j * j * _PI2) / (4.0 * j**4 * _PI2 * _PI2)) * alpha * alpha
        im = (alpha / 6.0) * (2.0 - 3.0 / (j * j * _PI2))
        return complex(re, im)
    d2 = float(j * j - k * k) ** 2
    sgn = -1.0 if (j + k) % 2 else 1.0
    re = -sgn * 8.0 * j * k * (-12.0 * (j * j + k * k) + d2 * _PI2) * alpha * alpha / (d2 * d2 * _PI2 * _PI2)
    im = sgn * 8.0 * j * k * alpha / (d2 * _PI2)
    return complex(re, im)


def decompose_initial(j: int, alpha: float, k_max: int) -> InitialState:
    """Coefficients q_jk of mode j carrying the quadratic phase alpha.

    alpha = 0 returns the exact Kronecker delta; |alpha| below 1e-3 uses the
    small-alpha series (the Fresnel arguments scale like 1/sqrt(alpha) and
    the closed form cancels catastrophically there); otherwise the
    Fresnel-integral closed form. Negative alpha is the complex conjugate of
    the positive case.
    """
    if not 1 <= j <= k_max:
        raise DomainError(f"source mode {j} must lie in [1, k_max={k_max}]")
    alpha = float(alpha)
    q = np.zeros(k_max, dtype=complex)
    if alpha == 0.0:
        q[j - 1] = 1.0
        return InitialState(j=j, alpha=alpha, q=q)
    a = abs(alpha)
    if a < ALPHA_SMALL:
        vals = [_q_series(j, k, a) for k in range(1, k_max + 1)]
    else:
        vals = [_q_closed(j, k, a) for k in range(1, k_max + 1)]
    q[:] = vals
    if alpha < 0.0:
        q = np.conj(q)
    return InitialState(j=j, alpha=alpha, q=q)
