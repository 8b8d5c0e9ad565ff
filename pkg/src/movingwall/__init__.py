"""Schrödinger dynamics in a 1D box whose right wall moves.

Three solvers over a shared set of wall-trajectory laws:

* ``spectral``  expansion over the instantaneous eigenbasis, the accurate path
* ``fdref``     finite differences on the scaled coordinate, the baseline
* ``exact``     closed form for a uniformly moving wall, the ground truth

plus ``observables`` for everything measured on the resulting states and a
``cli`` (entry point ``movingwall``) that packages the standard scenarios.
"""

from .basis import InitialState, alpha_from_motion, coupling, decompose_initial, eigenfunction, energy
from .errors import (
    DomainError,
    IntegrationQualityError,
    MovingWallError,
    QuadratureError,
    TrajectoryError,
    UsageError,
)
from .exact import ExactUniformSolution
from .fdref import GridState, GridTrajectory, fd_evolve, fd_rhs
from .kernels import BACKEND
from .motion import WallMotion, oscillatory, sudden_expansion, uniform
from .specfun import FresnelPair, fresnel
from .spectral import SpectralState, SpectralTrajectory, evolve, reconstruct, rhs

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "DomainError",
    "ExactUniformSolution",
    "FresnelPair",
    "GridState",
    "GridTrajectory",
    "InitialState",
    "IntegrationQualityError",
    "MovingWallError",
    "QuadratureError",
    "SpectralState",
    "SpectralTrajectory",
    "TrajectoryError",
    "UsageError",
    "WallMotion",
    "alpha_from_motion",
    "coupling",
    "decompose_initial",
    "eigenfunction",
    "energy",
    "evolve",
    "fd_evolve",
    "fd_rhs",
    "fresnel",
    "oscillatory",
    "reconstruct",
    "rhs",
    "sudden_expansion",
    "uniform",
]
