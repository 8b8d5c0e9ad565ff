"""Pure-numpy fallback integration kernels.

Mirrors the compiled kernels in ``_core`` operation for operation: classic
fixed-step RK4 over either the real/imaginary coefficient system of the
eigenbasis method (plus the phase clock theta as one extra variable) or the
complex grid values of the finite-difference method. The wall law is
evaluated inline at every stage time from its integer kind tag and three
packed parameters, exactly as the compiled version does.

The coefficient derivative is evaluated in factored form. With
phi_k = pi^2 k^2 theta, u = c cos(phi) + d sin(phi), v = c sin(phi)
- d cos(phi) and r = ell'/ell, the mode-coupling equations become

    dc/dt = -r (cos(phi) * (G u) + sin(phi) * (G v))
    dd/dt = -r (sin(phi) * (G u) - cos(phi) * (G v))

which needs O(k) trigonometric calls per stage instead of O(k^2) for the
textbook double-sum form; both forms agree to roundoff.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND = "python"


def _len_vel(kind: int, p0: float, p1: float, p2: float, t: float) -> tuple[float, float]:
    if kind == 0:
        return p0 + p1 * t, p1
    if kind == 1:
        return p0 + p1 * math.sin(p2 * t), p1 * p2 * math.cos(p2 * t)
    w = 1.0 + (p1 * t) ** 2
    return p0 - 1.0 / w, 2.0 * p1 * p1 * t / (w * w)


def spectral_evolve(c0, d0, g, kind, p0, p1, p2, dt, n_steps, sample_idx):
    """Integrate the coefficient system and record states at sample steps.

    Returns (C, D, TH) with one row per entry of ``sample_idx``; entry i of
    ``sample_idx`` is a step count in [0, n_steps] (sorted, unique).
    """
    c = np.array(c0, dtype=float)
    d = np.array(d0, dtype=float)
    th = 0.0
    k_max = len(c)
    g = np.ascontiguousarray(g, dtype=float)
    k2 = (np.pi * np.pi) * np.arange(1, k_max + 1, dtype=float) ** 2
    sample_idx = np.asarray(sample_idx, dtype=np.int64)
    n_samp = len(sample_idx)
    C = np.empty((n_samp, k_max))
    D = np.empty((n_samp, k_max))
    TH = np.empty(n_samp)

    def rhs(cc, dd, tth, t):
        l, lp = _len_vel(kind, p0, p1, p2, t)
        r = lp / l
        ph = k2 * tth
        cs = np.cos(ph)
        sn = np.sin(ph)
        u = cc * cs + dd * sn
        v = cc * sn - dd * cs
        gu = g @ u
        gv = g @ v
        return -r * (cs * gu + sn * gv), -r * (sn * gu - cs * gv), 1.0 / (l * l)

    ptr = 0
    while ptr < n_samp and sample_idx[ptr] == 0:
        C[ptr] = c
        D[ptr] = d
        TH[ptr] = th
        ptr += 1
    half = 0.5 * dt
    sixth = dt / 6.0
    for step in range(n_steps):
        t = step * dt
        ac1, ad1, at1 = rhs(c, d, th, t)
        ac2, ad2, at2 = rhs(c + half * ac1, d + half * ad1, th + half * at1, t + half)
        ac3, ad3, at3 = rhs(c + half * ac2, d + half * ad2, th + half * at2, t + half)
        ac4, ad4, at4 = rhs(c + dt * ac3, d + dt * ad3, th + dt * at3, t + dt)
        c = c + sixth * (ac1 + 2.0 * (ac2 + ac3) + ac4)
        d = d + sixth * (ad1 + 2.0 * (ad2 + ad3) + ad4)
        th = th + sixth * (at1 + 2.0 * (at2 + at3) + at4)
        if ptr < n_samp and sample_idx[ptr] == step + 1:
            C[ptr] = c
            D[ptr] = d
            TH[ptr] = th
            ptr += 1
    return C, D, TH


def fd_evolve(phi0, kind, p0, p1, p2, dt, n_steps, sample_idx):
    """Integrate the scaled-coordinate grid system; record rows like above.

    ``phi0`` holds the N-1 interior values on y = x/ell(t); Dirichlet zeros
    at y = 0, 1 enter as ghost values in the difference stencils.
    """
    phi = np.array(phi0, dtype=complex)
    m = len(phi)
    n_grid = m + 1
    y = np.arange(1, n_grid, dtype=float) / n_grid
    sample_idx = np.asarray(sample_idx, dtype=np.int64)
    n_samp = len(sample_idx)
    out = np.empty((n_samp, m), dtype=complex)
    n2 = float(n_grid * n_grid)
    halfn = 0.5 * n_grid

    def rhs(p, t):
        l, lp = _len_vel(kind, p0, p1, p2, t)
        lap = np.empty_like(p)
        lap[1:-1] = p[2:] - 2.0 * p[1:-1] + p[:-2]
        lap[0] = p[1] - 2.0 * p[0]
        lap[-1] = p[-2] - 2.0 * p[-1]
        grad = np.empty_like(p)
        grad[1:-1] = p[2:] - p[:-2]
        grad[0] = p[1]
        grad[-1] = -p[-2]
        return (1j * n2 / (l * l)) * lap + (lp / l * halfn) * (y * grad)

    ptr = 0
    while ptr < n_samp and sample_idx[ptr] == 0:
        out[ptr] = phi
        ptr += 1
    half = 0.5 * dt
    sixth = dt / 6.0
    for step in range(n_steps):
        t = step * dt
        k1 = rhs(phi, t)
        k2 = rhs(phi + half * k1, t + half)
        k3 = rhs(phi + half * k2, t + half)
        k4 = rhs(phi + dt * k3, t + dt)
        phi = phi + sixth * (k1 + 2.0 * (k2 + k3) + k4)
        if ptr < n_samp and sample_idx[ptr] == step + 1:
            out[ptr] = phi
            ptr += 1
    return out
