"""Self-contained Fresnel integrals in double precision.

C(x) = int_0^x cos(pi t^2 / 2) dt and S(x) = int_0^x sin(pi t^2 / 2) dt,
the normalized-argument convention. Three regimes are stitched together:

* |x| <= 2:        Maclaurin series of both integrals (alternating, well
                   conditioned this close to the origin).
* 2 < |x| <= 6:    auxiliary functions f, g with Chebyshev fits in 1/x^2,
                   where C = 1/2 + f sin z - g cos z, S = 1/2 - f cos z
                   - g sin z, z = pi x^2 / 2.
* |x| > 6:         asymptotic expansions of the same auxiliary functions.

The middle regime exists because the raw series loses digits to cancellation
once the largest term crosses ~1e8 (around x = 3.2) while the asymptotic
tail is not yet accurate; the fits keep the absolute error at or below
1e-13 everywhere, comfortably inside the 1e-12 contract. Odd symmetry is
applied structurally for negative arguments, so fresnel(-x) == -fresnel(x)
holds exactly.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import DomainError

__all__ = ["FresnelPair", "fresnel"]


class FresnelPair(NamedTuple):
    c: float
    s: float


_SERIES_CUT = 2.0
_ASYM_CUT = 6.0

# Chebyshev coefficients for pi*x*f(x) and pi^2*x^3*g(x) as functions of
# w = 1/x^2 on [1/36, 1/4], generated offline at 50-digit precision from the
# defining integrals; interpolation error is below 1e-20 on the interval.
_F_CHEB = (
    0.99314267753752358, -0.0080563485955224023, -0.0013361595295345574,
    9.8549759351848105e-5, 5.3529020116374005e-7, -1.0890360260953414e-6,
    1.5181306208438502e-7, -6.7685642686369673e-9, -1.9509416746348421e-9,
    6.0634633725493238e-10, -9.2200806207041207e-11, 4.9595775681753308e-12,
    1.8428253516819901e-12, -7.4351521024065743e-13, 1.5962089482958196e-13,
    -2.0301018766397251e-14, -4.1201761654909708e-16, 1.1450803011705647e-15,
    -4.0432862118925660e-16, 9.3312703309445848e-17, -1.4112781341492367e-17,
    2.7408550900164928e-19, 7.3954071603086532e-19, -3.3142899292833713e-19,
    9.3402105017697767e-20,
)
_G_CHEB = (
    0.96838864454776618, -0.036354814533267557, -0.0052178444132991285,
    0.00068307775188598319, -1.9040187312209464e-5, -7.6750433653702677e-6,
    1.6981578467721741e-6, -1.6204760536078296e-7, -9.2480858030147392e-9,
    7.2106379208313860e-9, -1.6158471927605973e-9, 1.9594669440804922e-10,
    5.2079882489390506e-12, -1.0105230504886098e-11, 3.1560789621326436e-12,
    -6.1505292223249448e-13, 6.2421965669111001e-14, 9.4524188881590653e-15,
    -7.1617767161654483e-15, 2.3116137194840237e-15, -5.1592444121519557e-16,
    7.2455213160261667e-17, 2.1221619731587885e-18, -5.7255312361071367e-18,
    2.2758179220485149e-18,
)

_WLO = 1.0 / (_ASYM_CUT * _ASYM_CUT)
_WHI = 1.0 / (_SERIES_CUT * _SERIES_CUT)


def _series(x: float) -> tuple[float, float]:
    # Maclaurin sums for C(x)/x and S(x)/x in the scaled variable z = pi x^2/2
    z = 0.5 * math.pi * x * x
    z2 = z * z
    term = 1.0
    c = 0.0
    n = 0
    while True:
        c += term / (4 * n + 1)
        term *= -z2 / ((2 * n + 1) * (2 * n + 2))
        n += 1
        if abs(term) < 1e-18:
            break
    term = z
    s = 0.0
    n = 0
    while True:
        s += term / (4 * n + 3)
        term *= -z2 / ((2 * n + 2) * (2 * n + 3))
        n += 1
        if abs(term) < 1e-18:
            break
    return c * x, s * x


def _clenshaw(coefs: tuple[float, ...], t: float) -> float:
    b0 = b1 = 0.0
    for c in coefs[:0:-1]:
        b0, b1 = 2.0 * t * b0 - b1 + c, b0
    return t * b0 - b1 + coefs[0]


def _aux_mid(x: float) -> tuple[float, float]:
    w = 1.0 / (x * x)
    t = (2.0 * w - (_WHI + _WLO)) / (_WHI - _WLO)
    f = _clenshaw(_F_CHEB, t) / (math.pi * x)
    g = _clenshaw(_G_CHEB, t) / (math.pi * math.pi * x * x * x)
    return f, g


def _aux_asym(x: float) -> tuple[float, float]:
    # f ~ (1/pi x) sum (-1)^m (4m-1)!! u^(2m), g ~ (u/pi x) sum (-1)^m (4m+1)!! u^(2m)
    u = 1.0 / (math.pi * x * x)
    u2 = u * u
    f = g = tf = tg = 1.0
    for m in range(12):
        tf *= -(4 * m + 1) * (4 * m + 3) * u2
        tg *= -(4 * m + 3) * (4 * m + 5) * u2
        f += tf
        g += tg
        if abs(tf) < 1e-17 and abs(tg) < 1e-17:
            break
    return f / (math.pi * x), g * u / (math.pi * x)


def fresnel(x: float) -> FresnelPair:
    """Evaluate (C(x), S(x)) for finite real x to 1e-12 absolute error."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"fresnel argument must be finite, got {x}")
    ax = abs(x)
    if ax <= _SERIES_CUT:
        c, s = _series(ax)
    else:
        if ax <= _ASYM_CUT:
            f, g = _aux_mid(ax)
        else:
            f, g = _aux_asym(ax)
        z = 0.5 * math.pi * ax * ax
        sn = math.sin(z)
        cs = math.cos(z)
        c = 0.5 + f * sn - g * cs
        s = 0.5 - f * cs - g * sn
    if x < 0.0:
        return FresnelPair(-c, -s)
    return FresnelPair(c, s)
