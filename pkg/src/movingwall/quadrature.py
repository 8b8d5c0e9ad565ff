"""Composite Simpson quadrature on uniform grids."""

from __future__ import annotations

import numpy as np

from .errors import DomainError

__all__ = ["simpson_uniform"]


def simpson_uniform(values, dx: float) -> float:
    """Integrate samples on a uniform grid with spacing dx.

    Composite Simpson rule; an odd number of panels is handled by closing
    the last three with the 3/8 rule. Needs at least 3 samples.
    """
    v = np.asarray(values, dtype=float)
    n = len(v) - 1  # panels
    if n < 2:
        raise DomainError(f"need at least 3 samples for Simpson, got {len(v)}")
    if n % 2 == 0:
        w = np.ones(n + 1)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        return float(np.dot(w, v) * dx / 3.0)
    # even-panel head plus 3/8-rule tail
    head = 0.0
    if n > 3:
        w = np.ones(n - 2)
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        head = float(np.dot(w, v[: n - 2]) * dx / 3.0)
    tail = float((v[n - 3] + 3.0 * v[n - 2] + 3.0 * v[n - 1] + v[n]) * dx * 3.0 / 8.0)
    return head + tail
