"""Exception types shared across the package."""


class MovingWallError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(MovingWallError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class TrajectoryError(DomainError):
    """The wall trajectory is invalid (non-positive length) on the requested interval."""


class QuadratureError(MovingWallError, RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class IntegrationQualityError(MovingWallError, RuntimeError):
    """Norm drift of an integration exceeded the configured limit."""


class UsageError(MovingWallError, ValueError):
    """A run configuration is inconsistent or incomplete."""
