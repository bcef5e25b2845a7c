"""Root-face degree: exact finite-size distributions and the limit law.

The bivariate system marks the root-face degree with u on top of the
cubic-maps decomposition.  The polyhedral part goes through the closed
form of the loopless-maps series (q the 4-ary tree series, positive
square-root branch):

    A(x,y) = (1+q)^2 / (2 q y^2) *
             (y + 3qy - (1+q)^2 + (1+q)(1+q-y) sqrt(1 - 4qy/(1+q)^2)),

composed at x = z (1 + D(z))^3, y = (1 + D(z,u))/(1 + D(z)); then the
degree-marked 3-connected series is M(x,y) = x y^2 (A - 1).  The square
root is an ordinary fixed-point unknown (R = 1 + r, r = (S-1-r^2)/2), so
everything stays inside plain series arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

from .catalog import RHO_FACES, SOLVER_GUARD, build_class
from .distributions import DistTable, table_from_weights
from .grammar import GrammarSystem, Known, Marker, MulMarker, DivMarker, Ref, SolveConfig, Z
from .minpoly import newton_solve_poly
from .records import PGF_CUBIC, PGF_PREFIX
from .scalars import Quad3
from .series import Series

_cache = {}


def degree_system(kn):
    """The u-marked system for cubic maps by root-face degree.

    Y = u (1 + D(z,u)) / (1 + D(z)): every external (root-face) edge of
    the polyhedral core contributes one root-face side itself plus the
    root-face arc of whatever replaces it, while internal replacements
    stay unmarked inside X.  The reciprocal of 1 + D(z,u) iterates as
    its own unknown (V = 1 - D V), and all purely univariate factors
    arrive as precomputed knowns, which keeps each pass down to plain
    multiplications.
    """
    z = Z()
    D, I = Ref("D"), Ref("I")
    L2, S, P = Ref("L2"), Ref("S"), Ref("P")
    V, Y, rt, alpha = Ref("V"), Ref("Y"), Ref("rt"), Ref("alpha")
    X, q = kn["X"], kn["q"]
    # rt = r/z, the square-root correction with its leading z stripped:
    # this keeps a strict z-order gain around the D -> Y -> alpha -> H
    # feedback loop.  With OPQ2 = (1+q)^2, KQ2 = 2q/z, G4Z = (4q/z)/(1+q)^2:
    #   num/z = OPQ2 (OPQ2 rt + Y (KQ2 - rt - q rt))
    #   alpha = (num/z) V^2 (1+D(z))^2 / (2q/z)
    numz = kn["OPQ2"] * (kn["OPQ2"] * rt + Y * (kn["KQ2"] - rt - q * rt))
    eqs = [
        ("L2", MulMarker(z * (1 + D + MulMarker(I, "u")), "u", 4)),
        ("I", DivMarker((L2 * L2) / z, "u", 4)),
        ("S", D * (D - S)),
        ("P", MulMarker(kn["zK"] * (1 + D), "u", 2)),
        ("V", 1 - D * V),
        ("Y", MulMarker((1 + D) * kn["inv1pD1"], "u")),
        ("rt", (-(kn["G4Z"] * Y) - z * (rt * rt)) / 2),
        # lenient: the sub-u^2 terms cancel only at convergence
        ("alpha", DivMarker(numz, "u", 2, strict=False) * (V * V) * kn["KK"] - 1),
        ("H", X * (Y * Y) * alpha * V),
        ("D", kn["L1"] + L2 + S + P + Ref("H")),
        ("C", D + I),
    ]
    return GrammarSystem(eqs, source="cubic maps by root-face degree")


def _univariate_knowns(order, backend, zscale):
    """Solve every purely univariate ingredient once, including the
    reciprocals the marked system needs each pass."""
    sol = build_class("cubic", order + 2 * SOLVER_GUARD + 2, backend)
    d1, i1 = sol["D"], sol["I"]
    # two orders above the solver's guarded target: the q/z shift and the
    # unit divisions below each cost one
    t = order + SOLVER_GUARD + 2
    aux = GrammarSystem(
        [
            ("X", Z() * (1 + Known(d1, "D1")) ** 3),
            ("q", Ref("X") * (1 + Ref("q")) ** 4),
        ],
        source="4-ary trees composed at the polyhedral substitution",
    ).solve(t, SolveConfig((), (), backend, zscale))
    x, q = aux["X"], aux["q"]
    one = Series.const(1, t, (), (), backend)
    opq = one + q.resize(t)
    opq2 = opq * opq
    d1t = d1.resize(t)
    i1t = i1.resize(t)
    inv1pD1 = one.divide(one + d1t)
    zser = Series.z(t, (), (), backend, scale=zscale)
    # q / z as a unit series, dividing by the *scaled* z so the z node in
    # the marked system stays consistent on the float backend
    qz = q.resize(t).divide(zser)
    kn = {
        "X": Known(x, "X"),
        "q": Known(q, "q"),
        "inv1pD1": Known(inv1pD1, "inv1pD1"),
        # L1 = z u (1 + D(z) + I(z)) is fully univariate
        "L1": MulMarker(Known(zser * (one + d1t + i1t), "L1u"), "u"),
        "zK": Known(zser * (one + d1t), "zK"),
        "OPQ2": Known(opq2, "OPQ2"),
        "KQ2": Known(2 * qz, "KQ2"),
        "G4Z": Known((4 * qz).divide(opq2), "G4Z"),
        # KK = (1 + D(z))^2 / (2 q / z)
        "KK": Known(((one + d1t) * (one + d1t)).divide(2 * qz), "KK"),
    }
    return kn


def solve_degree_system(order, backend="exact", ucap=None):
    """Solve the bivariate system.

    The root face of a map with n+2 faces has degree at most 5n-1 (6n
    edge sides minus at least one per other face), so the default marker
    cap is exhaustive; the slack covers the u-power down-shifts in the
    isthmus and loopless-series equations.  Capping also lets
    intermediate fixed-point divisions run in u-ascending (series) form.
    """
    if ucap is None:
        ucap = 5 * order + 4
    key = (order, backend, ucap)
    if key in _cache:
        return _cache[key]
    zscale = RHO_FACES["cubic"] if backend == "float" else 1
    kn = _univariate_knowns(order, backend, zscale)
    sysd = degree_system(kn)
    cfg = SolveConfig(("u",), (ucap,), backend, zscale)
    sol = sysd.solve(order, cfg)
    _cache[key] = sol
    return sol


def bivariate_m_series(order):
    """The degree-marked 3-connected series M(z,u), exact (used by tests
    against the displayed expansion)."""
    qsol = GrammarSystem(
        [("q", Z() * (1 + Ref("q")) ** 4)],
        source="4-ary trees",
    ).solve(order + SOLVER_GUARD, SolveConfig())
    zs = Series.z(order + SOLVER_GUARD)
    z, u = Known(zs, "z"), Marker("u")
    q = Known(qsol["q"], "q")
    opq = 1 + q
    r = Ref("r")
    num = opq * opq * (u + 3 * q * u - opq * opq + opq * (opq - u) * (1 + r))
    sysm = GrammarSystem(
        [
            ("r", (-4 * q * u / (opq * opq) - r * r) / 2),
            ("alpha", DivMarker(num, "u", 2) / (2 * q) - 1),
            ("M", MulMarker(z * Ref("alpha"), "u", 2)),
        ],
        source="3-connected maps by root-face degree",
    )
    return sysm.solve(order, SolveConfig(("u",), (order + 6,)))["M"]


def root_degree_distribution(n, backend=None, ucap=None):
    """Distribution of the root-face degree at faces-2 size n.

    Exact (Fractions) by default up to moderate n; float beyond.  The
    u=1 projection of the marked series reproduces the plain counting
    sequence, which is asserted on the exact path.
    """
    if backend is None:
        backend = "exact" if n <= 30 else "float"
    if backend == "float" and ucap is None:
        # degrees are bounded by 5n-1, but masses beyond ~350 are under
        # 1e-13 (geometric tail), far below the table's tolerance
        ucap = min(5 * n + 4, 360)
    sol = solve_degree_system(n, backend, ucap)
    c = sol["C"]
    if backend == "exact":
        cn = c[n]
        total = sum(cn.values())
        from .catalog import class_sequence
        assert total == class_sequence("cubic", n)[n], "u=1 projection mismatch"
        weights = {k[0]: v for k, v in cn.items()}
        return table_from_weights(weights, n, "faces-2", "root_face_degree", True)
    from .catalog import class_sequence
    row = c.c[n]
    total = float(row.sum())
    expected = class_sequence("cubic", n, backend="float")[n]
    if abs(total - expected) > 1e-8 * abs(expected):
        raise AssertionError("u=1 projection mismatch on the float backend")
    weights = {k: float(v) for k, v in enumerate(row) if v > 1e-14 * total}
    return table_from_weights(
        weights, n, "faces-2", "root_face_degree", False,
        notes="float backend; full marker support (cap exceeds the maximum "
              "attainable degree)",
    )


def limit_root_degree_pgf(K):
    """p_1..p_K of the limiting root-degree law, exact in Q(sqrt(3))."""
    prefix = Series.from_coeffs(list(PGF_PREFIX))
    p = newton_solve_poly(PGF_CUBIC, prefix, K)
    return [p[k] for k in range(1, K + 1)]


def limit_root_degree_pgf_float(K, qscale):
    """Float p_k to large K, solved on the rescaled variable u -> u/qscale
    so coefficients stay O(1); returns p_k * qscale^k."""
    rows = []
    for row in PGF_CUBIC.ycoeffs:
        w = 1.0
        out = []
        for c in row:
            out.append(float(c) * w)
            w *= qscale
        rows.append(tuple(out))
    from .minpoly import MinimalPolynomialRecord
    rec = MinimalPolynomialRecord("pgf_scaled", tuple(rows), "rescaled pgf cubic")
    pre = [0.0] + [float(PGF_PREFIX[k]) * qscale ** k for k in (1, 2, 3)]
    prefix = Series.from_coeffs(pre, backend="float")
    p = newton_solve_poly(rec, prefix, K)
    return [p[k] for k in range(1, K + 1)]
