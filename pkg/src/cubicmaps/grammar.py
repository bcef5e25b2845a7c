"""Combinatorial grammar systems: expression DAGs solved by fixed point.

A system is an ordered list of equations ``name = expr`` over node kinds
constant / z / marker / unknown reference / known series / + / - / * /
exact divide / substitute-into-z / marker shifts.  Iteration starts from
the zero solution; every system here gains at least one z-order of
agreement per pass, so stabilization within ``N + 2`` full passes is
asserted rather than assumed.

The solver can rescale the size variable (z -> scale*z) so that float
solves keep coefficients inside double range; exact solves use scale 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .series import Series, SeriesError


class GrammarError(RuntimeError):
    pass


@dataclass(frozen=True)
class SolveConfig:
    markers: tuple = ()
    caps: tuple = None
    backend: str = "exact"
    zscale: object = 1

    def __post_init__(self):
        if self.caps is None:
            object.__setattr__(self, "caps", (None,) * len(self.markers))


class Expr:
    def eval(self, env, trunc, cfg):
        raise NotImplementedError

    def __add__(self, other):
        return Add(self, _lift(other))

    def __radd__(self, other):
        return Add(_lift(other), self)

    def __sub__(self, other):
        return Sub(self, _lift(other))

    def __rsub__(self, other):
        return Sub(_lift(other), self)

    def __mul__(self, other):
        return Mul(self, _lift(other))

    def __rmul__(self, other):
        return Mul(_lift(other), self)

    def __truediv__(self, other):
        return Div(self, _lift(other))

    def __rtruediv__(self, other):
        return Div(_lift(other), self)

    def __pow__(self, n):
        return Pow(self, n)

    def __neg__(self):
        return Sub(Const(0), self)


def _lift(x):
    if isinstance(x, Expr):
        return x
    return Const(x)


@dataclass
class Const(Expr):
    value: object

    def eval(self, env, trunc, cfg):
        return Series.const(self.value, trunc, cfg.markers, cfg.caps, cfg.backend)


class Z(Expr):
    def eval(self, env, trunc, cfg):
        return Series.z(trunc, cfg.markers, cfg.caps, cfg.backend, scale=cfg.zscale)


@dataclass
class Marker(Expr):
    name: str
    power: int = 1

    def eval(self, env, trunc, cfg):
        return Series.marker(
            self.name, trunc, cfg.markers, cfg.caps, cfg.backend, power=self.power
        )


@dataclass
class Ref(Expr):
    name: str

    def eval(self, env, trunc, cfg):
        try:
            return env[self.name].resize(trunc)
        except KeyError:
            raise GrammarError(f"unknown reference {self.name!r}")


@dataclass
class Known(Expr):
    """A previously solved series; it must cover the requested order."""

    series: Series
    label: str = ""

    def eval(self, env, trunc, cfg):
        s = self.series
        if s.trunc < trunc:
            raise GrammarError(
                f"known series {self.label!r} truncated at {s.trunc} < {trunc}"
            )
        out = s.resize(trunc)
        if out.markers != cfg.markers and not out.markers:
            out = _promote_markers(out, cfg)
        return out


def _promote_markers(s, cfg):
    """Embed a marker-free series into the solve's marker ring."""
    out = Series.zero(s.trunc, cfg.markers, cfg.caps, cfg.backend)
    if s.backend == "float":
        idx = (slice(None),) + (0,) * len(cfg.markers)
        out.c[idx] = s.c
        return out
    zero_exp = (0,) * len(cfg.markers)
    for n in range(s.trunc + 1):
        v = s.c[n]
        out.c[n] = {zero_exp: v} if v else {}
    return out


@dataclass
class Add(Expr):
    a: Expr
    b: Expr

    def eval(self, env, trunc, cfg):
        return self.a.eval(env, trunc, cfg) + self.b.eval(env, trunc, cfg)


@dataclass
class Sub(Expr):
    a: Expr
    b: Expr

    def eval(self, env, trunc, cfg):
        return self.a.eval(env, trunc, cfg) - self.b.eval(env, trunc, cfg)


@dataclass
class Mul(Expr):
    a: Expr
    b: Expr

    def eval(self, env, trunc, cfg):
        return self.a.eval(env, trunc, cfg) * self.b.eval(env, trunc, cfg)


@dataclass
class Div(Expr):
    a: Expr
    b: Expr

    def eval(self, env, trunc, cfg):
        return self.a.eval(env, trunc, cfg).divide(self.b.eval(env, trunc, cfg))


@dataclass
class Pow(Expr):
    a: Expr
    n: int

    def eval(self, env, trunc, cfg):
        return self.a.eval(env, trunc, cfg) ** self.n


@dataclass
class SubsZ(Expr):
    """outer(inner(z)); the outer is a known or unknown series reference."""

    outer: Expr
    inner: Expr

    def eval(self, env, trunc, cfg):
        outer = self.outer.eval(env, trunc, cfg)
        inner = self.inner.eval(env, trunc, cfg)
        return outer.subs_z(inner)


@dataclass
class MulMarker(Expr):
    a: Expr
    name: str
    power: int = 1

    def eval(self, env, trunc, cfg):
        return self.a.eval(env, trunc, cfg).mul_marker(self.name, self.power)


@dataclass
class DivMarker(Expr):
    a: Expr
    name: str
    power: int = 1
    strict: bool = True

    def eval(self, env, trunc, cfg):
        return self.a.eval(env, trunc, cfg).div_marker(
            self.name, self.power, self.strict
        )


@dataclass
class GrammarSystem:
    """Ordered equations ``name -> expr`` plus a provenance label."""

    equations: list  # list[(name, Expr)]
    source: str = ""
    unknowns: list = field(default_factory=list)

    def __post_init__(self):
        if not self.unknowns:
            self.unknowns = [name for name, _ in self.equations]

    def solve(self, order, cfg=None, knowns=None, guard=4):
        """Fixed-point solution modulo z^(order+1).

        Passes run Gauss-Seidel style in equation order, growing the
        working truncation by one per pass; once at full order, a pass
        that changes nothing ends the iteration.  Repeated passes with no
        new order of agreement is a hard error.

        Divisions by z-powers determine one order fewer than they
        consume, so the iteration works at ``order + guard`` internally
        and reports results truncated back to ``order``; known series
        must cover the guarded order.
        """
        cfg = cfg or SolveConfig()
        target = order + guard
        env = dict(knowns) if knowns else {}
        for name, _ in self.equations:
            env[name] = Series.zero(0, cfg.markers, cfg.caps, cfg.backend)
        passes = 0
        stalled = 0
        last_first_change = -1
        while True:
            passes += 1
            trunc = min(target, passes)
            first_change = None
            for name, expr in self.equations:
                try:
                    new = expr.eval(env, trunc, cfg)
                except (SeriesError, ZeroDivisionError) as exc:
                    raise GrammarError(
                        f"{self.source}: equation {name!r} failed at pass "
                        f"{passes}: {exc}"
                    ) from exc
                old = env[name].resize(new.trunc)
                if not _converged(new, old):
                    d = _first_difference(new, old)
                    if first_change is None or d < first_change:
                        first_change = d
                env[name] = new
            if trunc == target and first_change is None:
                break
            if trunc == target:
                if last_first_change >= 0 and first_change is not None and (
                    first_change <= last_first_change
                ):
                    stalled += 1
                else:
                    stalled = 0
                last_first_change = first_change if first_change is not None else -1
            if stalled > 2 or passes > 2 * target + 8:
                raise GrammarError(
                    f"{self.source}: fixed point not contracting "
                    f"(pass {passes}, first change at order {first_change})"
                )
        out = {}
        for name, _ in self.equations:
            s = env[name]
            if s.trunc < order:
                raise GrammarError(
                    f"{self.source}: {name!r} only determined to order "
                    f"{s.trunc} < {order}; increase the solver guard"
                )
            out[name] = s.resize(order)
        return out


def _first_difference(a, b):
    diff = a - b
    v = diff.valuation()
    return a.trunc + 1 if v is None else v


def _converged(new, old):
    """Termination test: exact equality, or float agreement a little
    looser than working precision so roundoff wobble cannot stall the
    iteration forever."""
    if new.backend != "float":
        return new == old
    import numpy as np
    a, b = new.c, old.c
    if a.shape != b.shape:
        return False
    scale = max(float(np.max(np.abs(a))), float(np.max(np.abs(b))), 1e-30)
    return bool(np.all(np.abs(a - b) <= 1e-11 * scale + 1e-8 * np.abs(b)))
