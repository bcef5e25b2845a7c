"""Core composition schemes and core-size distributions, edge-indexed.

The 2-core of a map rooted away from an isthmus is what survives
iterated isthmus deletion: a 2-connected cubic skeleton whose edges may
be subdivided by degree-2 vertices, each carrying a pendant loop map.
With z marking all edges, w core edges and u core degree-2 vertices,

  C(z,w,u) = B(zw/(1-zwuL)) / (1-zwuL) + zwuL/(1-zwuL) + L(z)^2/(4z),

where B is edge-indexed 2-connected maps and L marks non-root edges of
loop-rooted maps.  Coefficient extraction factorizes: the scheme summand
of [z^n w^t u^m] is binom(t,m) * b_{t-m} * [z^{n-t}] L^m, the cycle
summand sits at m = t, and maps rooted at an isthmus carry (t,m) = (0,0).

The near-3-core scheme M(zw(1+zwuD))(1+2zwuD)/(1+zwuD) + zA(z) is stored
as transcribed.  Its A-term needs one more factor z on the series
product than displayed for z to count every edge (checked exactly at
small sizes), and the identity itself double-books a sparse family of
maps whose root path joins two polyhedral flanks (first at 12 edges, 10
of 4096 rooted maps); the enumeration oracle is the ground truth there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .catalog import RHO_FACES, SOLVER_GUARD, build_class
from .distributions import DistTable, table_from_weights
from .series import Series

EDGE_RHO = RHO_FACES["cubic"] ** (1 / 3)  # 2^(1/3) sqrt(3)/6

_cache = {}


# ---------------------------------------------------------------------------
# edge-indexed ingredient series
# ---------------------------------------------------------------------------


def _edge_ingredients(n_edges, backend):
    """Edge-indexed B, L, M, D, A and the total count sequence up to
    n_edges (+2 orders of headroom for the /4z shift)."""
    key = ("ing", n_edges, backend)
    if key in _cache:
        return _cache[key]
    T = n_edges + 2
    nf = n_edges // 3 + 2
    sol = build_class("cubic", nf, backend)
    solb = build_class("two_connected", nf, backend)
    solm = build_class("three_connected", nf, backend)
    scale = RHO_FACES["cubic"] if backend == "float" else None

    def efull(s):
        return s.reindex(T, 3, 0)

    def enoroot(s):
        return s.reindex(T, 3, -1)

    out = {
        "B": efull(solb["B"]),
        "M": efull(solm["M"]),
        "C": efull(sol["C"]),
        "L": enoroot(sol["L"]),
        "I": enoroot(sol["I"]),
        "P": enoroot(sol["P"]),
        "S": enoroot(sol["S"]),
        "H": enoroot(sol["H"]),
        "D": enoroot(sol["D"]),
    }
    # A(z): maps with no 3-core, without their root edge; the series
    # product needs an extra z so that z*A marks every edge
    DH = out["D"] - out["H"]
    DHS = DH - out["S"]
    out["A"] = out["L"] + out["I"] + out["P"] + (DH * DHS).shift(1)
    # full-edge-indexed isthmus-rooted maps (= L^2/4z with every edge
    # marked); computed from the faces series so float scaling stays
    # uniform across summands
    out["I_full"] = efull(sol["I"])
    _cache[key] = out
    return out


# ---------------------------------------------------------------------------
# full trivariate schemes (small sizes; exact backend)
# ---------------------------------------------------------------------------


@dataclass
class CoreScheme:
    which: str
    order: int
    series: Series  # markers (w, u)


def core_scheme_series(which, order, backend="exact"):
    """The trivariate scheme series to the given edge order.

    Exact and complete, so only sensible at desk sizes; the factorized
    path in core_joint is what large-n distributions use.
    """
    if order % 3 != 0:
        raise ValueError("edge counts of cubic maps are multiples of 3")
    key = (which, order, backend)
    if key in _cache:
        return _cache[key]
    ing = _edge_ingredients(order, backend)
    caps = (order, order)
    markers = ("w", "u")

    def lift(s):
        out = Series.zero(order, markers, caps, backend)
        zero = (0, 0)
        for n in range(order + 1):
            v = s[n]
            if backend == "float":
                out.c[(n, 0, 0)] = v
            elif v:
                out.c[n] = {zero: v}
        return out

    zwu = Series.zero(order, markers, caps, backend)
    if backend == "float":
        zwu.c[(1, 1, 1)] = 1.0
    else:
        zwu.c[1] = {(1, 1): 1}
    zw = Series.zero(order, markers, caps, backend)
    if backend == "float":
        zw.c[(1, 1, 0)] = 1.0
    else:
        zw.c[1] = {(1, 0): 1}
    one = Series.const(1, order, markers, caps, backend)

    if which == "two_core":
        L = lift(ing["L"].resize(order))
        q = zwu * L
        seq = one.divide(one - q)
        inner = zw * seq
        scheme = lift(ing["B"].resize(order)).subs_z(inner) * seq
        cycle = q * seq
        isth = lift((ing["L"] * ing["L"]).shift(-1).divide(4).resize(order))
        series = scheme + cycle + isth
    elif which == "three_core":
        D = lift(ing["D"].resize(order))
        q = zwu * D
        inner = zw * (one + q)
        scheme = lift(ing["M"].resize(order)).subs_z(inner) * (one + 2 * q).divide(
            one + q
        )
        noc = lift(ing["A"].resize(order)).shift(1)
        series = scheme + noc
    else:
        raise KeyError(which)
    out = CoreScheme(which, order, series)
    _cache[key] = out
    return out


# ---------------------------------------------------------------------------
# factorized joint coefficients
# ---------------------------------------------------------------------------


def _power_table(coeffs, maxpow, trunc):
    """rows[m][j] = [z^j] (series^m) for exact integer coefficient lists."""
    rows = [[1] + [0] * trunc]
    for _ in range(maxpow):
        prev = rows[-1]
        new = [0] * (trunc + 1)
        for i, a in enumerate(prev):
            if a:
                for j, b in enumerate(coeffs):
                    if b and i + j <= trunc:
                        new[i + j] += a * b
        rows.append(new)
    return rows


def _power_table_float(coeffs, maxpow, trunc):
    """Scaled float power table with per-row renormalization exponents:
    rows[m] = (array, log_scale) with series^m = array * exp(log_scale)."""
    arr = np.asarray(coeffs, dtype=float)
    rows = [(np.zeros(trunc + 1), 0.0)]
    rows[0][0][0] = 1.0
    cur, logs = rows[0]
    for _ in range(maxpow):
        cur = np.convolve(cur, arr)[: trunc + 1]
        mx = float(np.max(np.abs(cur)))
        if mx > 0:
            cur = cur / mx
            logs = logs + math.log(mx)
        rows.append((cur, logs))
    return rows


def _prefactor_g(m, k):
    """[q^m] (1+q)^k (1+2q)/(1+q) for the 3-core re-rooting factor."""
    tot = math.comb(k, m)
    for i in range(1, m + 1):
        tot += (1 if i % 2 == 1 else -1) * math.comb(k, m - i)
    return tot


def core_joint(which, n, backend=None):
    """Joint weights {(t, m): count} at n edges.

    two_core: t = core edges, m = core degree-2 vertices, exact counts
    (maps without a 2-core at (0,0)).  three_core: t = near-core edges,
    m = replaced core edges, from the transcribed scheme.  Weights are
    exact integers or (scaled-true) floats; both normalize against the
    same backend's total.
    """
    if n % 3 != 0 or n <= 0:
        raise ValueError("edge counts of cubic maps are multiples of 3")
    if backend is None:
        backend = "exact" if n <= 150 else "float"
    key = ("joint", which, n, backend)
    if key in _cache:
        return _cache[key]
    ing = _edge_ingredients(n, backend)
    T = n + 2
    if which == "two_core":
        base = ing["L"]
        outer = ing["B"]
    elif which == "three_core":
        base = ing["D"]
        outer = ing["M"]
    else:
        raise KeyError(which)
    weights = {}
    if backend == "exact":
        bc = base.scalar_coeffs()
        oc = outer.scalar_coeffs()
        pows = _power_table(bc, n, T)
        for t in range(n + 1):
            for m in range(t + 1):
                k = t - m
                w = 0
                if t >= 1 and 0 <= n - t:
                    if which == "two_core":
                        w += math.comb(t, m) * oc[k] * pows[m][n - t]
                        if m == t:
                            w += pows[t][n - t]
                    else:
                        w += oc[k] * _prefactor_g(m, k) * pows[m][n - t]
                if w:
                    weights[(t, m)] = w
        w0 = ing["I_full"][n] if which == "two_core" else ing["A"][n - 1]
        if w0:
            weights[(0, 0)] = w0
    else:
        bc = base.scalar_coeffs()
        oc = outer.scalar_coeffs()
        pows = _power_table_float(bc, n, T)
        lo = [math.log(x) if x > 0 else -math.inf for x in oc]
        for t in range(1, n + 1):
            for m in range(t + 1):
                k = t - m
                arr, logs = pows[m]
                w = 0.0
                if lo[k] > -math.inf and arr[n - t] > 0:
                    if which == "two_core":
                        lw = _log_comb(t, m) + lo[k] + math.log(arr[n - t]) + logs
                    else:
                        g = _prefactor_g(m, k)
                        lw = (math.log(g) + lo[k] + math.log(arr[n - t]) + logs
                              if g > 0 else -math.inf)
                    if lw > -math.inf:
                        w += math.exp(lw)
                if which == "two_core" and m == t:
                    arr_t, logs_t = pows[t]
                    if arr_t[n - t] > 0:
                        w += math.exp(math.log(arr_t[n - t]) + logs_t)
                if w:
                    weights[(t, m)] = w
        w0 = ing["I_full"][n] if which == "two_core" else ing["A"][n - 1]
        if w0 > 0:
            weights[(0, 0)] = w0
    _cache[key] = weights
    return weights


def _log_comb(n, k):
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def _total(weights):
    vals = list(weights.values())
    return sum(vals, Fraction(0)) if isinstance(vals[0], int) else float(sum(vals))


_PARAM_NAMES = {
    ("two_core", "core"): "two_core_edges",
    ("two_core", "residual"): "cubic_block_edges",
    ("three_core", "core"): "three_core_edges",
}


def core_size_distribution(which, n, backend=None):
    """Exact distribution of the root core size at n edges.

    which = 'two_core': size of the 2-core (t); 'cubic_block': edges of
    the root cubic block (t - m under the 2-core scheme); 'three_core':
    edges of the 3-core (t - m under the near-3-core scheme).  Maps
    without the core in question sit at 0.
    """
    scheme = "two_core" if which in ("two_core", "cubic_block") else "three_core"
    joint = core_joint(scheme, n, backend)
    agg = {}
    for (t, m), w in joint.items():
        key = t if which == "two_core" else t - m
        agg[key] = agg.get(key, 0) + w
    exact = isinstance(next(iter(agg.values())), int)
    notes = ""
    if scheme == "three_core":
        notes = ("from the transcribed near-3-core scheme; it double-books "
                 "a sparse family of two-flank maps (see cross_check)")
    return table_from_weights(agg, n, "edges", f"{which}_size", exact, notes)


def largest_component_distribution(which, n, backend=None):
    """Approximate law of the largest block / cubic block / 3-connected
    component via the root-core size-bias transfer.

    The double-counting relation says maps whose largest component has t
    edges are n/t times the maps whose root core has t edges, up to an
    exponentially small error valid in the central regime; the table is
    renormalized and flagged approximate accordingly.
    """
    scheme = "two_core" if which in ("two_core", "cubic_block") else "three_core"
    joint = core_joint(scheme, n, backend)
    exact = isinstance(next(iter(joint.values())), int)
    agg = {}
    for (t, m), w in joint.items():
        if t == 0:
            continue
        key = t if which == "two_core" else t - m
        if key <= 0:
            continue
        add = Fraction(n, t) * w if exact else (n / t) * w
        agg[key] = agg.get(key, 0) + add
    return table_from_weights(
        agg, n, "edges", f"largest_{which}", exact,
        notes="size-biased transfer n/t of the root-core law, renormalized; "
              "faithful only in the central regime",
    )
