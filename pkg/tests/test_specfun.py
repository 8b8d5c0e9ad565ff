"""Fresnel integral implementation against quadrature and known limits."""

import math
import warnings

import numpy as np
import pytest
from scipy import integrate

from movingwall import DomainError, fresnel


def _quad_pair(x, epsabs=1e-13):
    # roundoff-limited accuracy warnings are expected for the oscillatory
    # tail; the assertions comparing against fresnel() are the real guard
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        c, _ = integrate.quad(lambda t: math.cos(math.pi * t * t / 2.0), 0.0, x,
                              epsabs=epsabs, epsrel=1e-13, limit=400)
        s, _ = integrate.quad(lambda t: math.sin(math.pi * t * t / 2.0), 0.0, x,
                              epsabs=epsabs, epsrel=1e-13, limit=400)
    return c, s


def test_zero():
    got = fresnel(0.0)
    assert got.c == 0.0
    assert got.s == 0.0


def test_unit_argument_frozen_value():
    # frozen from 30-digit evaluation of the defining integrals
    got = fresnel(1.0)
    assert got.c == pytest.approx(0.779893400376822829, abs=1e-14)
    assert got.s == pytest.approx(0.438259147390354766, abs=1e-14)


@pytest.mark.parametrize("x", [0.3, 1.0, 1.9, 2.1, 3.0, 4.0, 5.5, 6.5, 9.0, 15.0])
def test_pointwise_vs_quadrature(x):
    c_ref, s_ref = _quad_pair(x)
    got = fresnel(x)
    assert got.c == pytest.approx(c_ref, abs=1e-12)
    assert got.s == pytest.approx(s_ref, abs=1e-12)


def test_odd_symmetry_is_exact():
    rng = np.random.default_rng(19)
    for x in rng.uniform(0.0, 20.0, size=200):
        plus = fresnel(x)
        minus = fresnel(-x)
        assert minus.c == -plus.c
        assert minus.s == -plus.s


def test_quadrature_agreement_random_sample():
    # 1000 seeded points across all three regimes
    rng = np.random.default_rng(101)
    xs = rng.uniform(-20.0, 20.0, size=1000)
    for x in xs:
        c_ref, s_ref = _quad_pair(float(x))
        got = fresnel(float(x))
        assert abs(got.c - c_ref) < 1e-11
        assert abs(got.s - s_ref) < 1e-11


def test_limits_at_large_argument():
    # at x=50 the phase pi x^2/2 is a multiple of 2 pi, so C sits on 1/2
    # while S carries the full 1/(pi x) envelope
    assert abs(fresnel(50.0).c - 0.5) < 1e-3
    assert abs(fresnel(50.0).s - 0.5) < 1e-2
    # the residual envelope decays like 1/x: sample on a doubling ladder
    resid = [max(abs(fresnel(x).c - 0.5), abs(fresnel(x).s - 0.5))
             for x in (10.0, 20.0, 40.0, 80.0)]
    assert all(a > b for a, b in zip(resid, resid[1:]))


def test_values_stay_bounded():
    xs = np.linspace(-8.0, 8.0, 4001)
    for x in xs:
        got = fresnel(float(x))
        assert abs(got.c) < 0.9
        assert abs(got.s) < 0.9


def test_continuity_at_regime_switches():
    for edge in (2.0, 6.0):
        lo = fresnel(edge - 1e-12)
        hi = fresnel(edge + 1e-12)
        assert abs(lo.c - hi.c) < 1e-11
        assert abs(lo.s - hi.s) < 1e-11


def test_rejects_non_finite():
    with pytest.raises(DomainError):
        fresnel(float("nan"))
    with pytest.raises(DomainError):
        fresnel(float("inf"))
