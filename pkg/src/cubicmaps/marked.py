"""Cubic maps marked by isthmus and cut-vertex counts.

Marking rules, validated exhaustively against the enumeration oracle:

  * every loop-rooted map contributes its dumbbell neck (one isthmus);
  * replacing the second loop by an isthmus-rooted map splits it into
    two bridges while consuming the old root isthmus (net one extra);
  * a cut vertex is an isthmus endpoint whose other two darts are not a
    single loop, so the neck's outer endpoint becomes a cut vertex
    exactly when the loop is replaced, and the root vertex of any
    loop-rooted map flips from non-cut to cut when that map is
    substituted for an edge (its root loop is consumed by the surgery).

The flip is captured by using Dbar = (D - L) + w L wherever a map in D
is substituted or composed.
"""

from __future__ import annotations

from .catalog import RHO_FACES, SOLVER_GUARD, build_three_connected, TAU_3CONN
from .distributions import table_from_weights
from .grammar import Const, GrammarSystem, Known, Marker, Ref, SolveConfig, SubsZ, Z
from .series import Series

_cache = {}


def marked_cubic_system(m_known, mscale, v_expr, w_expr, cut_mode="vertices"):
    """The cubic-maps system with v per isthmus and w per cut vertex.

    The marker expressions are pluggable so the same grammar serves the
    exact joint distribution (v, w as markers) and expectation runs
    (markers evaluated at 1 + eps with a nilpotent eps).

    cut_mode selects what w counts: "vertices" marks each articulation
    vertex once; "incidences" marks every (isthmus, endpoint) pair whose
    endpoint is an articulation vertex (a vertex carrying three bridges
    weighs three); "touching" marks every vertex incident to at least
    one isthmus, articulation vertex or not (so loop-carrying dumbbell
    ends count too -- this is the count whose density approaches 3/4).
    """
    z = Z()
    D, I, L, S, P, H = (Ref("D"), Ref("I"), Ref("L"), Ref("S"), Ref("P"),
                        Ref("H"))
    Dbar = Ref("Dbar")
    v, w = v_expr, w_expr
    wI = w * w * w if cut_mode == "incidences" else w
    inner = z * (1 + Dbar) ** 3
    if mscale != 1:
        inner = inner * Const(1 / mscale)
    if cut_mode == "touching":
        # both neck endpoints touch an isthmus no matter what hangs off
        # them, and no substitution changes touching status
        bracket = w * (1 + D + v * I)
        eqs = [
            ("Dbar", D + 0 * z),
            ("L", 2 * z * v * w * bracket),
            ("I", z * v * bracket * bracket),
        ]
    else:
        bracket = 1 + w * Dbar + v * wI * I
        eqs = [
            ("Dbar", (D - L) + w * L),
            ("L", 2 * z * v * bracket),
            # I = L^2/(4zv), written division-free via L = 2zv * bracket
            ("I", z * v * bracket * bracket),
        ]
    eqs += [
        ("S", Dbar * (Dbar - S)),
        ("P", z * (1 + Dbar) ** 2),
        ("H", SubsZ(m_known, inner) / (1 + Dbar)),
        ("D", L + S + P + H),
        ("C", D + I),
    ]
    return GrammarSystem(eqs, source="cubic maps by isthmus and cut-vertex count")


def _solve_marked(order, backend, v_kind, w_kind, caps, cut_mode="vertices"):
    key = (order, backend, v_kind, w_kind, caps, cut_mode)
    if key in _cache:
        return _cache[key]
    zscale = RHO_FACES["cubic"] if backend == "float" else 1
    mscale = TAU_3CONN if backend == "float" else 1
    sol3 = build_three_connected(
        order + SOLVER_GUARD, backend, mscale if backend == "float" else 1
    )
    markers = tuple(
        name for name, kind in (("v", v_kind), ("w", w_kind)) if kind == "marker"
    )
    if any(kind == "dual" for kind in (v_kind, w_kind)):
        markers = markers + ("e",)

    def make(kind, name):
        if kind == "marker":
            return Marker(name)
        if kind == "one":
            return Const(1)
        if kind == "dual":
            return 1 + Marker("e")
        raise KeyError(kind)

    v_expr = make(v_kind, "v")
    w_expr = make(w_kind, "w")
    cfg = SolveConfig(markers, caps, backend, zscale)
    sysm = marked_cubic_system(Known(sol3["M"], "M"), mscale, v_expr, w_expr,
                               cut_mode)
    sol = sysm.solve(order, cfg)
    _cache[key] = sol
    return sol


def marked_joint_distribution(n, backend="exact", cut_mode="vertices"):
    """Exact joint law of (isthmus count, cut count) at size n."""
    sol = _solve_marked(n, backend, "marker", "marker", (None, None), cut_mode)
    row = sol["C"][n]
    weights = {key: val for key, val in row.items()}
    support = sorted(weights)
    # flatten to a dict keyed by (isthmuses, cut vertices)
    return {k: weights[k] for k in support}


def marked_distribution(n, which, backend="exact"):
    """Marginal law of the isthmus or cut-vertex count at size n."""
    joint = marked_joint_distribution(n, backend)
    idx = 0 if which == "isthmuses" else 1
    agg = {}
    for key, wgt in joint.items():
        agg[key[idx]] = agg.get(key[idx], 0) + wgt
    return table_from_weights(agg, n, "faces-2", which, backend == "exact")


def marked_expectations(n, backend=None):
    """Expected isthmus, cut-vertex and cut-incidence counts at size n.

    Uses nilpotent markers (1 + eps mod eps^2), so only the first
    derivative flows through the solve.  The incidence count is what the
    source's cut-vertex table tracks: its ratio to faces-2 approaches
    3/4 exactly, while distinct articulation vertices approach ~0.4615.
    """
    if backend is None:
        backend = "exact" if n <= 80 else "float"
    out = {}
    for which, kinds, mode in (
        ("isthmuses", ("dual", "one"), "vertices"),
        ("cut_vertices", ("one", "dual"), "vertices"),
        ("cut_incidences", ("one", "dual"), "incidences"),
        ("isthmus_touching_vertices", ("one", "dual"), "touching"),
    ):
        sol = _solve_marked(n, backend, kinds[0], kinds[1], (1,), mode)
        row = sol["C"][n]
        if backend == "float":
            total, deriv = float(row[0]), float(row[1])
        else:
            total = row.get((0,), 0)
            deriv = row.get((1,), 0)
        if backend == "float":
            out[which] = deriv / total
        else:
            from fractions import Fraction
            out[which] = Fraction(deriv, total)
    return out
