"""Exact polynomial machinery: discriminants via Sylvester determinants
and certified real-root isolation with Sturm chains.

Polynomials are ascending coefficient lists over Fraction (or int); the
root-degree tail cubic lives over Q(sqrt(3)) and is isolated by plain
bisection on exact signs.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Quad3


def _trim(p):
    while p and not p[-1]:
        p = p[:-1]
    return p


def poly_eval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_derivative(p):
    return [i * c for i, c in enumerate(p)][1:]


def _poly_divmod(a, b):
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    while len(a) >= len(b) and any(a):
        if not a[-1]:
            a.pop()
            continue
        d = len(a) - len(b)
        f = a[-1] / b[-1]
        q[d] = f
        for i, c in enumerate(b):
            a[i + d] -= f * c
        a.pop()
    return _trim(q), _trim(a)


def sturm_chain(p):
    chain = [_trim([Fraction(c) for c in p])]
    chain.append(_trim([Fraction(c) for c in poly_derivative(chain[0])]))
    while chain[-1]:
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _sign_changes(chain, x):
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        s = (v > 0) - (v < 0)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p, lo, hi, chain=None):
    """Number of distinct real roots in (lo, hi]."""
    chain = chain or sturm_chain(p)
    return _sign_changes(chain, Fraction(lo)) - _sign_changes(chain, Fraction(hi))


def isolate_real_roots(p, lo, hi, tol=Fraction(1, 10 ** 14)):
    """Disjoint certified intervals, one per distinct real root in (lo, hi]."""
    chain = sturm_chain(p)
    lo, hi = Fraction(lo), Fraction(hi)
    out = []

    def recurse(a, b):
        k = count_roots(p, a, b, chain)
        if k == 0:
            return
        if k == 1 and b - a <= tol:
            out.append((a, b))
            return
        mid = (a + b) / 2
        if poly_eval(p, mid) == 0:
            out.append((mid, mid))
            left = count_roots(p, a, mid, chain) - 1
            if left:
                recurse(a, mid - tol / 2)
            if count_roots(p, mid, b, chain):
                recurse(mid + tol / 2, b)
            return
        recurse(a, mid)
        recurse(mid, b)

    recurse(lo, hi)
    return sorted(out)


def bisect_root(sign_at, lo, hi, tol=1e-14, max_iter=400):
    """Bisection on an exact sign oracle (e.g. Quad3 polynomial signs)."""
    slo = sign_at(lo)
    shi = sign_at(hi)
    if slo == 0:
        return lo, lo
    if shi == 0:
        return hi, hi
    if slo == shi:
        raise ValueError("no sign change on the bracket")
    for _ in range(max_iter):
        mid = (lo + hi) / 2
        sm = sign_at(mid)
        if sm == 0:
            return mid, mid
        if sm == slo:
            lo = mid
        else:
            hi = mid
        if float(hi - lo) <= tol * max(1.0, abs(float(lo))):
            break
    return lo, hi


# ---------------------------------------------------------------------------
# resultants of stored bivariate polynomials (exact, z-polynomial entries)
# ---------------------------------------------------------------------------


def _zp_mul(a, b):
    out = [0] * (len(a) + len(b) - 1 or 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out) or [0]


def _zp_sub(a, b):
    n = max(len(a), len(b))
    return _trim(
        [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    ) or [0]


def _zp_divexact(a, b):
    """Exact division in Z[z] (used by fraction-free elimination)."""
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    while len(_trim(a)) >= len(b):
        a = _trim(a)
        d = len(a) - len(b)
        c, r = divmod(a[-1], b[-1])
        if r:
            raise ArithmeticError("inexact polynomial division in Z[z]")
        out[d] = c
        for i, y in enumerate(b):
            a[i + d] -= c * y
        if _trim(a) == [] or len(_trim(a)) < len(b):
            break
    return out


def sylvester_resultant(record):
    """Resultant of P and dP/dy with respect to y, as an integer
    polynomial in z (Bareiss fraction-free elimination)."""
    p = [list(c) or [0] for c in record.ycoeffs]
    dp = [list(c) or [0] for c in record.derivative_y().ycoeffs]
    n, m = len(p) - 1, len(dp) - 1
    size = n + m
    mat = [[[0] for _ in range(size)] for _ in range(size)]
    for i in range(m):
        for j, c in enumerate(p):
            mat[i][i + j] = list(c) or [0]
    for i in range(n):
        for j, c in enumerate(dp):
            mat[m + i][i + j] = list(c) or [0]
    # Bareiss fraction-free elimination over Z[z]; a sign flip on row
    # swap keeps the determinant honest
    prev = [1]
    for k in range(size - 1):
        if _trim(mat[k][k]) == []:
            swap = next((r for r in range(k + 1, size) if _trim(mat[r][k])), None)
            if swap is None:
                return [0]
            mat[k], mat[swap] = [_zp_mul(c, [-1]) for c in mat[swap]], mat[k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = _zp_sub(
                    _zp_mul(mat[i][j], mat[k][k]), _zp_mul(mat[i][k], mat[k][j])
                )
                mat[i][j] = _zp_divexact(num, prev) if prev != [1] else num
            mat[i][k] = [0]
        prev = _trim(mat[k][k]) or [0]
    return _trim(mat[size - 1][size - 1]) or [0]


def locate_dominant_singularity(record_or_poly, window, tol=Fraction(1, 10 ** 14)):
    """Certified interval for the smallest real root inside the window.

    Accepts either a stored bivariate record (its y-discriminant is
    computed first) or an explicit univariate integer polynomial.
    """
    if hasattr(record_or_poly, "ycoeffs"):
        poly = sylvester_resultant(record_or_poly)
    else:
        poly = list(record_or_poly)
    lo, hi = Fraction(window[0]).limit_denominator(10 ** 12), Fraction(
        window[1]
    ).limit_denominator(10 ** 12)
    roots = isolate_real_roots(poly, lo, hi, tol)
    if not roots:
        raise ValueError("no root of the discriminant inside the window")
    return roots[0]
