# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
# cython: language_level=3
"""Compiled integration kernels.

Same contract as ``_purekernels``: fixed-step RK4 over the eigenbasis
coefficient system (factored trigonometric form, theta carried as one extra
variable) or the finite-difference grid system, with the wall law evaluated
inline from its kind tag. The loops run without the GIL so convergence
sweeps can fan out across threads.
"""

import numpy as np

cimport cython
from libc.math cimport cos, sin


cdef inline void _len_vel(int kind, double p0, double p1, double p2, double t,
                          double *l, double *lp) noexcept nogil:
    cdef double w
    if kind == 0:
        l[0] = p0 + p1 * t
        lp[0] = p1
    elif kind == 1:
        l[0] = p0 + p1 * sin(p2 * t)
        lp[0] = p1 * p2 * cos(p2 * t)
    else:
        w = 1.0 + p1 * p1 * t * t
        l[0] = p0 - 1.0 / w
        lp[0] = 2.0 * p1 * p1 * t / (w * w)


cdef void _spec_rhs(Py_ssize_t K, double *c, double *d, double th, double t,
                    int kind, double p0, double p1, double p2,
                    double *g, double *k2,
                    double *dc, double *dd, double *dth,
                    double *cs, double *sn, double *u, double *v) noexcept nogil:
    cdef double l, lp, r, ph, au, av
    cdef double *grow
    cdef Py_ssize_t k, n
    _len_vel(kind, p0, p1, p2, t, &l, &lp)
    r = lp / l
    dth[0] = 1.0 / (l * l)
    for k in range(K):
        ph = k2[k] * th
        cs[k] = cos(ph)
        sn[k] = sin(ph)
        u[k] = c[k] * cs[k] + d[k] * sn[k]
        v[k] = c[k] * sn[k] - d[k] * cs[k]
    for k in range(K):
        grow = g + k * K
        au = 0.0
        av = 0.0
        for n in range(K):
            au += grow[n] * u[n]
            av += grow[n] * v[n]
        dc[k] = -r * (cs[k] * au + sn[k] * av)
        dd[k] = -r * (sn[k] * au - cs[k] * av)


def spectral_evolve(double[::1] c0, double[::1] d0, double[:, ::1] g,
                    int kind, double p0, double p1, double p2,
                    double dt, Py_ssize_t n_steps, long long[::1] sample_idx):
    """Integrate the coefficient system; record states at the sample steps."""
    cdef Py_ssize_t K = c0.shape[0]
    cdef Py_ssize_t n_samp = sample_idx.shape[0]
    if g.shape[0] != K or g.shape[1] != K:
        raise ValueError("coupling matrix shape does not match the coefficients")

    C_out = np.empty((n_samp, K), dtype=np.float64)
    D_out = np.empty((n_samp, K), dtype=np.float64)
    TH_out = np.empty(n_samp, dtype=np.float64)
    k2_arr = (np.pi * np.pi) * np.arange(1, K + 1, dtype=np.float64) ** 2
    work = np.empty((16, K), dtype=np.float64)

    cdef double[:, ::1] C = C_out
    cdef double[:, ::1] D = D_out
    cdef double[::1] TH = TH_out
    cdef double[::1] k2 = k2_arr
    cdef double[:, ::1] W = work

    cdef double *c = &W[0, 0]
    cdef double *d = &W[1, 0]
    cdef double *ct = &W[2, 0]
    cdef double *dtm = &W[3, 0]
    cdef double *ac1 = &W[4, 0]
    cdef double *ad1 = &W[5, 0]
    cdef double *ac2 = &W[6, 0]
    cdef double *ad2 = &W[7, 0]
    cdef double *ac3 = &W[8, 0]
    cdef double *ad3 = &W[9, 0]
    cdef double *ac4 = &W[10, 0]
    cdef double *ad4 = &W[11, 0]
    cdef double *cs = &W[12, 0]
    cdef double *sn = &W[13, 0]
    cdef double *u = &W[14, 0]
    cdef double *v = &W[15, 0]
    cdef double *gp
    cdef double *k2p = &k2[0]

    cdef double th, at1, at2, at3, at4, t, half, sixth
    cdef Py_ssize_t step, k, ptr

    gp = &g[0, 0]

    for k in range(K):
        c[k] = c0[k]
        d[k] = d0[k]
    th = 0.0
    half = 0.5 * dt
    sixth = dt / 6.0
    ptr = 0

    with nogil:
        while ptr < n_samp and sample_idx[ptr] == 0:
            for k in range(K):
                C[ptr, k] = c[k]
                D[ptr, k] = d[k]
            TH[ptr] = th
            ptr += 1
        for step in range(n_steps):
            t = step * dt
            _spec_rhs(K, c, d, th, t, kind, p0, p1, p2, gp, k2p,
                      ac1, ad1, &at1, cs, sn, u, v)
            for k in range(K):
                ct[k] = c[k] + half * ac1[k]
                dtm[k] = d[k] + half * ad1[k]
            _spec_rhs(K, ct, dtm, th + half * at1, t + half, kind, p0, p1, p2,
                      gp, k2p, ac2, ad2, &at2, cs, sn, u, v)
            for k in range(K):
                ct[k] = c[k] + half * ac2[k]
                dtm[k] = d[k] + half * ad2[k]
            _spec_rhs(K, ct, dtm, th + half * at2, t + half, kind, p0, p1, p2,
                      gp, k2p, ac3, ad3, &at3, cs, sn, u, v)
            for k in range(K):
                ct[k] = c[k] + dt * ac3[k]
                dtm[k] = d[k] + dt * ad3[k]
            _spec_rhs(K, ct, dtm, th + dt * at3, t + dt, kind, p0, p1, p2,
                      gp, k2p, ac4, ad4, &at4, cs, sn, u, v)
            for k in range(K):
                c[k] = c[k] + sixth * (ac1[k] + 2.0 * (ac2[k] + ac3[k]) + ac4[k])
                d[k] = d[k] + sixth * (ad1[k] + 2.0 * (ad2[k] + ad3[k]) + ad4[k])
            th = th + sixth * (at1 + 2.0 * (at2 + at3) + at4)
            if ptr < n_samp and sample_idx[ptr] == step + 1:
                for k in range(K):
                    C[ptr, k] = c[k]
                    D[ptr, k] = d[k]
                TH[ptr] = th
                ptr += 1
    return C_out, D_out, TH_out


cdef void _fd_rhs(Py_ssize_t M, double complex *p, double t,
                  int kind, double p0, double p1, double p2,
                  double *y, double n2, double halfn,
                  double complex *dp) noexcept nogil:
    cdef double l, lp, r, il2
    cdef double complex lap, grad
    cdef Py_ssize_t n
    _len_vel(kind, p0, p1, p2, t, &l, &lp)
    il2 = n2 / (l * l)
    r = lp / l * halfn
    for n in range(M):
        if n == 0:
            lap = p[1] - 2.0 * p[0]
            grad = p[1]
        elif n == M - 1:
            lap = p[M - 2] - 2.0 * p[M - 1]
            grad = -p[M - 2]
        else:
            lap = p[n + 1] - 2.0 * p[n] + p[n - 1]
            grad = p[n + 1] - p[n - 1]
        dp[n] = 1j * il2 * lap + r * y[n] * grad


def fd_evolve(double complex[::1] phi0, int kind, double p0, double p1, double p2,
              double dt, Py_ssize_t n_steps, long long[::1] sample_idx):
    """Integrate the grid system; record rows at the sample steps."""
    cdef Py_ssize_t M = phi0.shape[0]
    cdef Py_ssize_t n_samp = sample_idx.shape[0]
    if M < 2:
        raise ValueError("need at least two interior grid points")

    out = np.empty((n_samp, M), dtype=np.complex128)
    work = np.empty((7, M), dtype=np.complex128)
    y_arr = np.arange(1, M + 1, dtype=np.float64) / (M + 1)

    cdef double complex[:, ::1] OUT = out
    cdef double complex[:, ::1] W = work
    cdef double[::1] yv = y_arr

    cdef double complex *phi = &W[0, 0]
    cdef double complex *pt = &W[1, 0]
    cdef double complex *k1 = &W[2, 0]
    cdef double complex *k2 = &W[3, 0]
    cdef double complex *k3 = &W[4, 0]
    cdef double complex *k4 = &W[5, 0]
    cdef double *y = &yv[0]

    cdef double n2 = <double>((M + 1) * (M + 1))
    cdef double halfn = 0.5 * (M + 1)
    cdef double t, half, sixth
    cdef Py_ssize_t step, n, ptr

    for n in range(M):
        phi[n] = phi0[n]
    half = 0.5 * dt
    sixth = dt / 6.0
    ptr = 0

    with nogil:
        while ptr < n_samp and sample_idx[ptr] == 0:
            for n in range(M):
                OUT[ptr, n] = phi[n]
            ptr += 1
        for step in range(n_steps):
            t = step * dt
            _fd_rhs(M, phi, t, kind, p0, p1, p2, y, n2, halfn, k1)
            for n in range(M):
                pt[n] = phi[n] + half * k1[n]
            _fd_rhs(M, pt, t + half, kind, p0, p1, p2, y, n2, halfn, k2)
            for n in range(M):
                pt[n] = phi[n] + half * k2[n]
            _fd_rhs(M, pt, t + half, kind, p0, p1, p2, y, n2, halfn, k3)
            for n in range(M):
                pt[n] = phi[n] + dt * k3[n]
            _fd_rhs(M, pt, t + dt, kind, p0, p1, p2, y, n2, halfn, k4)
            for n in range(M):
                phi[n] = phi[n] + sixth * (k1[n] + 2.0 * (k2[n] + k3[n]) + k4[n])
            if ptr < n_samp and sample_idx[ptr] == step + 1:
                for n in range(M):
                    OUT[ptr, n] = phi[n]
                ptr += 1
    return out
