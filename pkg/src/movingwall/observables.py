"""Observables and cross-method error metrics.

Everything here evaluates immutable states produced by the solvers: total
probability, position and energy expectation values, probability densities,
and the two error metrics used to compare methods, the x-averaged squared
wavefunction difference and the pointwise relative error of <x> series.

Spectral states are reconstructed to x-space where an integral is needed;
grid states are mapped back to physical x on their own nodes and are never
renormalized (their drifting norm is part of what gets measured, so every
expectation value divides by the state's own current norm).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import energy
from .errors import DomainError
from .fdref import GridState, GridTrajectory
from .motion import WallMotion
from .quadrature import simpson_uniform
from .spectral import SpectralState, SpectralTrajectory, reconstruct

__all__ = [
    "TimeSeries",
    "average_error",
    "density",
    "mean_energy",
    "mean_position",
    "norm",
    "norm_series",
    "mean_energy_series",
    "mean_position_series",
    "occupation_series",
    "relative_x_error",
]

QUAD_POINTS = 2001


@dataclass(frozen=True)
class TimeSeries:
    """Named sampled observable; values may be a vector or a matrix of rows."""

    name: str
    times: np.ndarray
    values: np.ndarray

    def __post_init__(self) -> None:
        times = np.asarray(self.times, dtype=float)
        values = np.asarray(self.values)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)
        if len(times) != len(values):
            raise DomainError(
                f"{self.name}: {len(times)} times vs {len(values)} values"
            )
        if len(times) > 1 and not np.all(np.diff(times) > 0):
            raise DomainError(f"{self.name}: times must be strictly increasing")

    def __len__(self) -> int:
        return len(self.times)


def norm(state, m: WallMotion | None = None) -> float:
    """Total probability of a state.

    Spectral states sum |b_k|^2 directly. Grid states integrate |psi|^2 over
    [0, ell(t)] by Simpson on their own nodes and therefore need the motion.
    """
    if isinstance(state, SpectralState):
        return state.norm
    if isinstance(state, GridState):
        if m is None:
            raise DomainError("grid-state norm needs the wall motion for ell(t)")
        l = float(m.length(state.t))
        dens = np.zeros(state.n_grid + 1)
        dens[1:-1] = np.abs(state.phi) ** 2
        return simpson_uniform(dens, l / state.n_grid)
    raise DomainError(f"unsupported state type {type(state).__name__}")


def _grid_xs_psi(state: GridState, m: WallMotion):
    l = float(m.length(state.t))
    xs = np.arange(0, state.n_grid + 1) * (l / state.n_grid)
    psi = np.zeros(state.n_grid + 1, dtype=complex)
    psi[1:-1] = state.phi
    return l, xs, psi


def mean_position(state, m: WallMotion) -> float:
    """<x> = int x |psi|^2 dx / int |psi|^2 dx over the current well."""
    if isinstance(state, SpectralState):
        l = float(m.length(state.t))
        xs = np.linspace(0.0, l, QUAD_POINTS)
        dens = np.abs(reconstruct(state, m, xs)) ** 2
        dx = xs[1] - xs[0]
    elif isinstance(state, GridState):
        l, xs, psi = _grid_xs_psi(state, m)
        dens = np.abs(psi) ** 2
        dx = l / state.n_grid
    else:
        raise DomainError(f"unsupported state type {type(state).__name__}")
    p = simpson_uniform(dens, dx)
    if p <= 0.0:
        raise DomainError("state has zero norm")
    return simpson_uniform(xs * dens, dx) / p


def mean_energy(state, m: WallMotion) -> float:
    """<H> in the current well, normalized by the state's own norm.

    Spectral path: sum |b_k|^2 E_k(t) / sum |b_k|^2 (the instantaneous basis
    diagonalizes H). Grid path: int conj(psi)(-psi'') dx by central
    differences on the state's nodes, over int |psi|^2 dx.
    """
    if isinstance(state, SpectralState):
        l = float(m.length(state.t))
        occ = state.c**2 + state.d**2
        p = float(np.sum(occ))
        if p <= 0.0:
            raise DomainError("state has zero norm")
        es = np.array([energy(k, l) for k in range(1, state.k_max + 1)])
        return float(np.dot(occ, es) / p)
    if isinstance(state, GridState):
        l, xs, psi = _grid_xs_psi(state, m)
        dx = l / state.n_grid
        lap = np.zeros_like(psi)
        lap[1:-1] = (psi[2:] - 2.0 * psi[1:-1] + psi[:-2]) / (dx * dx)
        integrand = np.real(np.conj(psi) * (-lap))
        p = simpson_uniform(np.abs(psi) ** 2, dx)
        if p <= 0.0:
            raise DomainError("state has zero norm")
        return simpson_uniform(integrand, dx) / p
    raise DomainError(f"unsupported state type {type(state).__name__}")


def density(state, m: WallMotion, n_points: int = QUAD_POINTS):
    """|psi(x,t)|^2 on a uniform x-grid over [0, ell(t)]; returns (xs, values)."""
    l = float(m.length(state.t))
    xs = np.linspace(0.0, l, n_points)
    if isinstance(state, SpectralState):
        vals = np.abs(reconstruct(state, m, xs)) ** 2
    elif isinstance(state, GridState):
        _, nodes, psi = _grid_xs_psi(state, m)
        vals = np.interp(xs, nodes, np.abs(psi) ** 2)
    else:
        raise DomainError(f"unsupported state type {type(state).__name__}")
    return xs, vals


def average_error(approx, reference, t: float, m: WallMotion, n_points: int = QUAD_POINTS) -> float:
    """(1/ell) int |reference(x) - approx(x)|^2 dx at time t.

    ``approx`` and ``reference`` are callables returning complex amplitudes
    on arrays of positions in [0, ell(t)].
    """
    l = float(m.length(t))
    if l <= 0:
        raise DomainError(f"wall length {l:.6g} at t = {t:.9g} is not positive")
    xs = np.linspace(0.0, l, n_points)
    diff = np.abs(np.asarray(reference(xs)) - np.asarray(approx(xs))) ** 2
    return simpson_uniform(diff, xs[1] - xs[0]) / l


def relative_x_error(approx: TimeSeries, reference: TimeSeries) -> TimeSeries:
    """Pointwise |1 - approx/reference| of two <x> series on the same grid."""
    if len(approx) != len(reference) or not np.allclose(
        approx.times, reference.times, rtol=0.0, atol=1e-12
    ):
        raise DomainError("time grids of the two series do not match")
    vals = np.abs(1.0 - approx.values / reference.values)
    return TimeSeries(name="relative_x_error", times=reference.times, values=vals)


def _states(traj):
    if isinstance(traj, (SpectralTrajectory, GridTrajectory)):
        return traj.motion, [traj.state(i) for i in range(len(traj))]
    raise DomainError(f"unsupported trajectory type {type(traj).__name__}")


def norm_series(traj) -> TimeSeries:
    m, states = _states(traj)
    vals = np.array([norm(s, m) for s in states])
    return TimeSeries(name="norm", times=traj.times, values=vals)


def mean_position_series(traj) -> TimeSeries:
    m, states = _states(traj)
    vals = np.array([mean_position(s, m) for s in states])
    return TimeSeries(name="mean_position", times=traj.times, values=vals)


def mean_energy_series(traj, normalized: bool = False) -> TimeSeries:
    """<H>(t); with ``normalized`` the series is divided by its t=0 value."""
    m, states = _states(traj)
    vals = np.array([mean_energy(s, m) for s in states])
    name = "mean_energy"
    if normalized:
        vals = vals / vals[0]
        name = "mean_energy_normalized"
    return TimeSeries(name=name, times=traj.times, values=vals)


def occupation_series(traj: SpectralTrajectory, modes) -> TimeSeries:
    """|b_k|^2 over time for the requested modes; one column per mode."""
    if not isinstance(traj, SpectralTrajectory):
        raise DomainError("occupations exist only for eigenbasis trajectories")
    modes = list(modes)
    for k in modes:
        if not 1 <= k <= traj.k_max:
            raise DomainError(f"mode {k} outside [1, {traj.k_max}]")
    cols = [traj.c[:, k - 1] ** 2 + traj.d[:, k - 1] ** 2 for k in modes]
    return TimeSeries(name="occupation", times=traj.times, values=np.stack(cols, axis=1))
