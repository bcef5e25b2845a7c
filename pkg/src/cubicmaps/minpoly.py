"""Stored bivariate annihilating polynomials and the Newton series solver.

A record holds P(y, z) as a list over y-powers of z-coefficient lists.
The combinatorial branch is pinned down by a short series prefix and
extended by Newton iteration; the Jacobian dP/dy evaluated at the branch
may have positive z-valuation (it does for the root-degree pgf cubic),
in which case the division is exact after stripping the common z-power
and each step still roughly doubles the verified order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import Series, SeriesError


class BranchError(RuntimeError):
    pass


@dataclass(frozen=True)
class MinimalPolynomialRecord:
    name: str
    ycoeffs: tuple  # ycoeffs[k][j] = coefficient of y^k z^j
    source: str = ""

    def __post_init__(self):
        if not any(any(c for c in row) for row in self.ycoeffs):
            raise ValueError("zero polynomial")
        if len(self.ycoeffs) < 2:
            raise ValueError("degree in y must be >= 1")

    @property
    def ydegree(self):
        return len(self.ycoeffs) - 1

    def zpoly(self, k, trunc, like):
        """Coefficient of y^k as a Series matching ``like``'s ring."""
        row = self.ycoeffs[k]
        s = Series.zero(trunc, like.markers, like.caps, like.backend)
        for j, c in enumerate(row):
            if j > trunc:
                break
            if c:
                if like.backend == "float":
                    s.c[(j,) + (0,) * (s.c.ndim - 1)] = float(c)
                elif like.markers:
                    s.c[j] = {(0,) * len(like.markers): c}
                else:
                    s.c[j] = c
        return s

    def evaluate(self, s):
        """P(s(z), z) to s's truncation order (Horner in y)."""
        t = s.trunc
        acc = self.zpoly(self.ydegree, t, s)
        for k in range(self.ydegree - 1, -1, -1):
            acc = acc * s + self.zpoly(k, t, s)
        return acc

    def derivative_y(self):
        rows = tuple(
            tuple(k * c for c in self.ycoeffs[k]) for k in range(1, len(self.ycoeffs))
        )
        return MinimalPolynomialRecord(self.name + "_dy", rows, self.source)


def verify_poly_residual(record, s):
    """True iff the stored polynomial annihilates s modulo z^(trunc+1)."""
    return record.evaluate(s).is_zero()


def newton_solve_poly(record, prefix, order):
    """Extend ``prefix`` to the unique branch of P(y(z), z) = 0 mod z^(order+1).

    The prefix must satisfy P to its own order and be long enough to
    separate branches: strictly longer than the z-valuation of dP/dy on
    the branch.
    """
    res = record.evaluate(prefix)
    if not res.is_zero():
        raise BranchError(
            f"{record.name}: prefix violates the polynomial at order {res.valuation()}"
        )
    dP = record.derivative_y()
    jac = dP.evaluate(prefix)
    dv = jac.valuation()
    if dv is None:
        raise BranchError(f"{record.name}: singular Jacobian on the given prefix")
    if prefix.trunc < dv + 1:
        raise BranchError(
            f"{record.name}: prefix order {prefix.trunc} too short for "
            f"Jacobian valuation {dv}"
        )
    y = prefix
    while y.trunc < order:
        # correct through m implies the next iterate is correct through
        # 2m + 1 - dv
        target = min(order, 2 * y.trunc + 1 - dv)
        if target <= y.trunc:
            raise BranchError(f"{record.name}: Newton iteration cannot advance")
        y = y.resize(target)
        try:
            step = record.evaluate(y).divide(dP.evaluate(y))
        except SeriesError as exc:
            raise BranchError(f"{record.name}: {exc}") from exc
        y = (y - step).resize(target)
    y = y.resize(order)
    if not verify_poly_residual(record, y):
        raise BranchError(f"{record.name}: residual check failed after Newton")
    return y
