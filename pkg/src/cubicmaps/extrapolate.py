"""Growth-constant and exponent estimation from counting sequences.

The class sequences obey a_n ~ K n^(-5/2) rho^(-n), so plain ratios
converge like 1 + c/n; Richardson acceleration on the ratio sequence
removes the polynomial corrections order by order, with the level picked
by residual stability.
"""

from __future__ import annotations

import math

import numpy as np


def richardson(values, ns, levels=None):
    """Iterated Richardson extrapolation for sequences with asymptotic
    expansions in 1/n; returns the best accelerated value."""
    vals = [np.asarray(values, dtype=float)]
    ns = np.asarray(ns, dtype=float)
    levels = levels if levels is not None else min(6, len(values) - 2)
    cur = np.asarray(values, dtype=float)
    cur_ns = ns
    best = cur[-1]
    best_spread = abs(cur[-1] - cur[-2]) if len(cur) > 1 else math.inf
    for k in range(1, levels + 1):
        nxt = (cur_ns[1:] * cur[1:] - cur_ns[:-1] * cur[:-1]) / (
            cur_ns[1:] - cur_ns[:-1]
        )
        cur = nxt
        cur_ns = cur_ns[1:]
        if len(cur) < 2:
            break
        spread = abs(cur[-1] - cur[-2])
        if spread < best_spread:
            best = cur[-1]
            best_spread = spread
    return float(best)


def growth_constant(seq, scale=1.0, tail=60):
    """Limit of a_{n+1}/a_n via Richardson on the ratio sequence.

    ``seq`` holds a_n * scale^n (the float solver's rescaled output);
    the returned growth refers to the unscaled sequence.
    """
    arr = [float(x) for x in seq]
    idx = [n for n in range(1, len(arr)) if arr[n] > 0 and arr[n - 1] > 0]
    if len(idx) < 10:
        raise ValueError("insufficient positive terms")
    idx = idx[-tail:]
    ratios = [arr[n] / arr[n - 1] for n in idx]
    return richardson(ratios, idx) / scale


def exponent_estimate(seq, rho_scaled, tail=120):
    """Polynomial exponent from regressing log(a_n rho^n) on log n.

    ``rho_scaled`` is rho/scale when the sequence is solver-rescaled, so
    a_n * scale^n * rho_scaled^n = a_n rho^n.
    """
    arr = [float(x) for x in seq]
    ns = [n for n in range(1, len(arr)) if arr[n] > 0]
    ns = ns[-tail:]
    ys = [math.log(arr[n]) + n * math.log(rho_scaled) for n in ns]
    xs = [math.log(n) for n in ns]
    # weighted toward the tail, where the power law is cleanest
    slope, _ = np.polyfit(xs, ys, 1)
    return float(slope)


def prefactor_estimate(seq, rho_scaled, n):
    """a_n n^(5/2) rho^n at a given index (sequence solver-rescaled)."""
    return float(seq[n]) * n ** 2.5 * rho_scaled ** n
