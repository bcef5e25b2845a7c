"""Exact scalar arithmetic for series coefficients.

Counting series live over the integers or rationals; the limiting
root-degree pgf needs the real quadratic field Q(sqrt(3)).  ``Quad3``
represents a + b*sqrt(3) with Fraction components, with exact sign
determination so roots of Q(sqrt3)-polynomials can be isolated by
bisection.
"""

from __future__ import annotations

import math
from fractions import Fraction


class Quad3:
    """Element a + b*sqrt(3) of Q(sqrt(3)), exact."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    # -- ring/field operations ------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Quad3):
            return other
        if isinstance(other, (int, Fraction)):
            return Quad3(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Quad3(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad3(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quad3(self.a * o.a + 3 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # multiply by the conjugate; norm = a^2 - 3 b^2 is nonzero for o != 0
        norm = o.a * o.a - 3 * o.b * o.b
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(3))")
        return Quad3(
            (self.a * o.a - 3 * self.b * o.b) / norm,
            (self.b * o.a - self.a * o.b) / norm,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Quad3(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons ----------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def sign(self):
        """Exact sign of a + b*sqrt(3)."""
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with 3 b^2; sign decided by the larger term
        if a * a > 3 * b * b:
            return 1 if a > 0 else -1
        if a * a < 3 * b * b:
            return 1 if b > 0 else -1
        return 0  # unreachable: sqrt(3) irrational

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(3.0)

    def __repr__(self):
        if self.b == 0:
            return f"Quad3({self.a})"
        return f"Quad3({self.a}, {self.b})"


SQRT3 = Quad3(0, 1)


def exact_to_float(x):
    """float() that also accepts int/Fraction/Quad3."""
    if isinstance(x, Quad3):
        return float(x)
    return float(x)


def scalar_div(a, b):
    """Exact scalar division, keeping ints integral when possible.

    Intermediate fixed-point states may divide inexactly even when the
    converged series is integral, so inexact integer quotients fall back
    to Fractions instead of failing; integrality of final counting
    series is asserted downstream.
    """
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    if isinstance(b, Quad3) or isinstance(a, Quad3):
        if not isinstance(a, Quad3):
            a = Quad3(a)
        return a / b
    q = Fraction(a) / Fraction(b)
    if q.denominator == 1:
        return int(q)
    return q


def is_zero(x):
    if isinstance(x, float):
        return x == 0.0
    return not x
