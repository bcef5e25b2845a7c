"""Truncated formal power series in z with optional marker variables.

A series stores exactly ``trunc + 1`` coefficient slots.  Without markers
each slot is a scalar (int, Fraction or Quad3 on the exact backend, a
float on the float backend).  With markers, an exact slot is a sparse
polynomial ``{exponent-tuple: scalar}`` in the declared markers; a float
slot is a dense numpy block, so a float series with k markers is a
(k+1)-dimensional array.  Marker degrees are never truncated unless an
explicit per-marker cap is set (caps are mandatory on the float backend,
where storage is dense).

Arithmetic results report the minimum of the operands' truncation
orders.  All values are immutable by convention: operations return new
series and never mutate their inputs.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np
from scipy.signal import convolve as _scipy_convolve


def _nd_convolve(a, b, method="auto"):
    """FFT convolution with a relative snap of sub-roundoff entries:
    FFT leaves ~1e-19 junk in exactly-zero slots, which would otherwise
    defeat valuation detection on sparse early-iteration arrays.  Tiny
    operands use the exact direct method instead."""
    if a.size * b.size <= (1 << 16):
        return _scipy_convolve(a, b, method="direct")
    out = _scipy_convolve(a, b, method="fft")
    mx = float(np.max(np.abs(out)))
    if mx > 0.0:
        np.copyto(out, 0.0, where=np.abs(out) < 1e-15 * mx)
    return out

from .scalars import Quad3, is_zero, scalar_div

_SCALARS = (int, Fraction, Quad3)


class SeriesError(ValueError):
    pass


def _poly_mul(p, q, caps):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            if caps is not None and any(
                cap is not None and x > cap for x, cap in zip(e, caps)
            ):
                continue
            v = out.get(e)
            out[e] = c1 * c2 if v is None else v + c1 * c2
    return {e: c for e, c in out.items() if not is_zero(c)}


def _poly_add(p, q, sign=1):
    out = dict(p)
    for e, c in q.items():
        v = out.get(e)
        nv = (sign * c) if v is None else v + sign * c
        if is_zero(nv):
            out.pop(e, None)
        else:
            out[e] = nv
    return out


def _poly_scalar_div(p, s):
    return {e: scalar_div(c, s) for e, c in p.items()}


def _poly_divexact_1m(num, den, cap):
    """Exact ascending-power division of univariate marker polys (dicts).

    With a cap the tail check is skipped: the capped representation only
    promises coefficients up to the cap.  Without a cap the remainder
    must vanish identically.
    """
    if not num:
        return {}
    d0 = den.get((0,))
    if d0 is None or is_zero(d0):
        raise SeriesError("marker-polynomial divisor has zero constant term")
    ndeg = max(e[0] for e in num)
    ddeg = max(e[0] for e in den)
    limit = ndeg if cap is None else min(cap, ndeg + ddeg)
    q = {}
    rem = dict(num)
    for j in range(limit + 1):
        c = rem.get((j,))
        if c is None or is_zero(c):
            continue
        qc = scalar_div(c, d0)
        q[(j,)] = qc
        for e, dc in den.items():
            k = j + e[0]
            if cap is not None and k > cap:
                continue
            v = rem.get((k,))
            nv = -qc * dc if v is None else v - qc * dc
            if is_zero(nv):
                rem.pop((k,), None)
            else:
                rem[(k,)] = nv
    if cap is None and rem:
        raise SeriesError("inexact marker-polynomial division")
    return q


class Series:
    __slots__ = ("trunc", "markers", "caps", "backend", "c")

    def __init__(self, trunc, markers=(), caps=None, backend="exact", coeffs=None):
        if trunc < 0:
            raise SeriesError("truncation order must be >= 0")
        self.trunc = trunc
        self.markers = tuple(markers)
        if caps is None:
            caps = (None,) * len(self.markers)
        self.caps = tuple(caps)
        self.backend = backend
        if backend == "float":
            if any(c is None for c in self.caps) and self.markers:
                raise SeriesError("float backend requires marker caps")
            if coeffs is None:
                shape = (trunc + 1,) + tuple(c + 1 for c in self.caps)
                coeffs = np.zeros(shape)
            self.c = coeffs
        else:
            if coeffs is None:
                coeffs = [0 if not self.markers else {} for _ in range(trunc + 1)]
            self.c = coeffs

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, trunc, markers=(), caps=None, backend="exact"):
        return cls(trunc, markers, caps, backend)

    @classmethod
    def const(cls, value, trunc, markers=(), caps=None, backend="exact"):
        s = cls.zero(trunc, markers, caps, backend)
        if backend == "float":
            s.c[(0,) * s.c.ndim] = float(value)
        elif s.markers:
            s.c[0] = {(0,) * len(s.markers): value} if not is_zero(value) else {}
        else:
            s.c[0] = value
        return s

    @classmethod
    def z(cls, trunc, markers=(), caps=None, backend="exact", scale=1):
        """The series scale*z (``scale`` rescales the size variable)."""
        s = cls.zero(trunc, markers, caps, backend)
        if trunc >= 1:
            if backend == "float":
                s.c[(1,) + (0,) * (s.c.ndim - 1)] = float(scale)
            elif s.markers:
                s.c[1] = {(0,) * len(s.markers): scale}
            else:
                s.c[1] = scale
        return s

    @classmethod
    def marker(cls, name, trunc, markers, caps=None, backend="exact", power=1):
        s = cls.zero(trunc, markers, caps, backend)
        i = s.markers.index(name)
        e = tuple(power if j == i else 0 for j in range(len(s.markers)))
        if backend == "float":
            if power > s.caps[i]:
                return s
            s.c[(0,) + e] = 1.0
        else:
            if s.caps[i] is not None and power > s.caps[i]:
                return s
            s.c[0] = {e: 1}
        return s

    @classmethod
    def from_coeffs(cls, coeffs, markers=(), caps=None, backend="exact"):
        if backend == "float":
            arr = np.asarray(coeffs, dtype=float)
            return cls(arr.shape[0] - 1, markers, caps, backend, arr)
        return cls(len(coeffs) - 1, markers, caps, backend, list(coeffs))

    # -- views ------------------------------------------------------------

    def copy(self):
        if self.backend == "float":
            return Series(self.trunc, self.markers, self.caps, "float", self.c.copy())
        if self.markers:
            return Series(
                self.trunc, self.markers, self.caps, "exact", [dict(p) for p in self.c]
            )
        return Series(self.trunc, self.markers, self.caps, "exact", list(self.c))

    def resize(self, trunc):
        """Truncate or zero-pad to the given order."""
        if trunc == self.trunc:
            return self
        if self.backend == "float":
            if trunc < self.trunc:
                return Series(trunc, self.markers, self.caps, "float", self.c[: trunc + 1])
            pad = [(0, trunc - self.trunc)] + [(0, 0)] * (self.c.ndim - 1)
            return Series(trunc, self.markers, self.caps, "float", np.pad(self.c, pad))
        if trunc < self.trunc:
            return Series(trunc, self.markers, self.caps, "exact", self.c[: trunc + 1])
        filler = [{} if self.markers else 0 for _ in range(trunc - self.trunc)]
        return Series(trunc, self.markers, self.caps, "exact", list(self.c) + filler)

    def __getitem__(self, n):
        """Coefficient of z^n: a scalar, a dict, or a numpy block."""
        if n > self.trunc:
            raise IndexError(f"order {n} beyond truncation {self.trunc}")
        return self.c[n]

    def coeff(self, n, exps=()):
        """Scalar coefficient of z^n * markers^exps."""
        if n > self.trunc:
            raise IndexError(f"order {n} beyond truncation {self.trunc}")
        exps = tuple(exps)
        if len(exps) != len(self.markers):
            raise SeriesError("exponent tuple does not match markers")
        if self.backend == "float":
            return float(self.c[(n,) + exps])
        if self.markers:
            return self.c[n].get(exps, 0)
        return self.c[n]

    def valuation(self):
        """Smallest order with a nonzero coefficient; None for the zero series.

        On the float backend, entries below a relative threshold count as
        zero: valuation feeds division stripping, and roundoff junk in
        low orders must not masquerade as a leading coefficient.
        """
        if self.backend == "float":
            mx = float(np.max(np.abs(self.c)), )
            if mx == 0.0:
                return None
            thr = 1e-9 * mx
            for n in range(self.trunc + 1):
                if np.max(np.abs(self.c[n])) > thr:
                    return n
            return None
        for n in range(self.trunc + 1):
            if self.markers:
                if self.c[n]:
                    return n
            elif not is_zero(self.c[n]):
                return n
        return None

    def is_zero(self):
        return self.valuation() is None

    def scalar_coeffs(self):
        """Plain scalar list; requires no markers."""
        if self.markers:
            raise SeriesError("series has markers")
        if self.backend == "float":
            return [float(x) for x in self.c]
        return list(self.c)

    # -- marker helpers ---------------------------------------------------

    def _check_compatible(self, other):
        if self.markers != other.markers:
            raise SeriesError(
                f"marker mismatch: {self.markers} vs {other.markers}"
            )
        if self.backend != other.backend:
            raise SeriesError("backend mismatch")

    def _wrap_scalar(self, value):
        return Series.const(value, self.trunc, self.markers, self.caps, self.backend)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, _SCALARS) or isinstance(other, float):
            other = self._wrap_scalar(other)
        self._check_compatible(other)
        t = min(self.trunc, other.trunc)
        if self.backend == "float":
            return Series(t, self.markers, self.caps, "float",
                          self.c[: t + 1] + other.c[: t + 1])
        if self.markers:
            cs = [_poly_add(self.c[n], other.c[n]) for n in range(t + 1)]
        else:
            cs = [self.c[n] + other.c[n] for n in range(t + 1)]
        return Series(t, self.markers, self.caps, "exact", cs)

    __radd__ = __add__

    def __neg__(self):
        if self.backend == "float":
            return Series(self.trunc, self.markers, self.caps, "float", -self.c)
        if self.markers:
            cs = [{e: -v for e, v in p.items()} for p in self.c]
        else:
            cs = [-x for x in self.c]
        return Series(self.trunc, self.markers, self.caps, "exact", cs)

    def __sub__(self, other):
        if isinstance(other, _SCALARS) or isinstance(other, float):
            other = self._wrap_scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, _SCALARS) or isinstance(other, float):
            return self._scalar_mul(other)
        self._check_compatible(other)
        t = min(self.trunc, other.trunc)
        if self.backend == "float":
            full = _nd_convolve(self.c[: t + 1], other.c[: t + 1], method="auto")
            sl = tuple(
                slice(0, lim)
                for lim in (t + 1,) + tuple(c + 1 for c in self.caps)
            )
            return Series(t, self.markers, self.caps, "float", full[sl])
        if self.markers:
            cs = []
            for n in range(t + 1):
                acc = {}
                for i in range(n + 1):
                    p, q = self.c[i], other.c[n - i]
                    if p and q:
                        acc = _poly_add(acc, _poly_mul(p, q, self.caps))
                cs.append(acc)
            return Series(t, self.markers, self.caps, "exact", cs)
        a, b = self.c, other.c
        cs = []
        for n in range(t + 1):
            acc = 0
            for i in range(n + 1):
                x = a[i]
                if is_zero(x):
                    continue
                y = b[n - i]
                if is_zero(y):
                    continue
                acc = acc + x * y
            cs.append(acc)
        return Series(t, self.markers, self.caps, "exact", cs)

    __rmul__ = __mul__

    def _scalar_mul(self, s):
        if self.backend == "float":
            return Series(self.trunc, self.markers, self.caps, "float", self.c * float(s))
        if is_zero(s):
            return Series.zero(self.trunc, self.markers, self.caps, "exact")
        if self.markers:
            cs = [{e: v * s for e, v in p.items()} for p in self.c]
        else:
            cs = [x * s for x in self.c]
        return Series(self.trunc, self.markers, self.caps, "exact", cs)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise SeriesError("series powers must be nonnegative integers")
        result = Series.const(1, self.trunc, self.markers, self.caps, self.backend)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- division ---------------------------------------------------------

    def shift(self, k):
        """Multiply by z^k (k may be negative; digits below z^0 must vanish)."""
        if k == 0:
            return self
        t = self.trunc
        if k > 0:
            out = Series.zero(t, self.markers, self.caps, self.backend)
            if self.backend == "float":
                out.c[k:] = self.c[: t + 1 - k]
            else:
                out.c[k:] = [
                    dict(p) if self.markers else p for p in self.c[: t + 1 - k]
                ]
            return out
        k = -k
        if self.backend == "float":
            thr = 1e-9 * float(np.max(np.abs(self.c)))
        for n in range(min(k, t + 1)):
            if self.backend == "float":
                bad = float(np.max(np.abs(self.c[n]))) > thr
            elif self.markers:
                bad = bool(self.c[n])
            else:
                bad = not is_zero(self.c[n])
            if bad:
                raise SeriesError("negative shift hits a nonzero coefficient")
        out = Series.zero(t, self.markers, self.caps, self.backend)
        if self.backend == "float":
            out.c[: t + 1 - k] = self.c[k:]
        else:
            out.c[: t + 1 - k] = self.c[k:]
            out.c[t + 1 - k:] = [{} if self.markers else 0 for _ in range(k)]
        return out

    def divide(self, other):
        """Exact division.  The divisor needs a unit leading coefficient or
        a common z-power with the numerator; on the exact backend
        divisibility failures raise instead of rounding."""
        if isinstance(other, _SCALARS) or isinstance(other, float):
            if self.backend == "float":
                return self._scalar_mul(1.0 / float(other))
            if self.markers:
                cs = [_poly_scalar_div(p, other) for p in self.c]
            else:
                cs = [scalar_div(x, other) for x in self.c]
            return Series(self.trunc, self.markers, self.caps, "exact", cs)
        self._check_compatible(other)
        v = other.valuation()
        if v is None:
            # 0/0 arises transiently in fixed-point iteration from the
            # all-zero start; the zero continuation is the correct iterate
            if self.valuation() is None:
                return Series.zero(
                    min(self.trunc, other.trunc), self.markers, self.caps, self.backend
                )
            raise ZeroDivisionError("division by zero series")
        if v > 0:
            num = self.shift(-v)
            den = other.shift(-v)
            t = min(self.trunc, other.trunc) - v
            num = num.resize(t)
            den = den.resize(t)
        else:
            t = min(self.trunc, other.trunc)
            num = self.resize(t)
            den = other.resize(t)
        lead_unit = den._is_constant_one()
        if lead_unit:
            return num
        if self.backend == "float":
            return num * den._float_reciprocal()
        return num._exact_div_unit(den)

    def _is_constant_one(self):
        """True when the series is exactly the constant 1 (fast path for
        divisions whose denominator reduces to a stripped z-power)."""
        if self.backend == "float":
            arr = self.c
            if arr[(0,) * arr.ndim] != 1.0:
                return False
            first = arr.reshape(-1)
            return not np.any(first[1:])
        if self.markers:
            zero = (0,) * len(self.markers)
            if self.c[0].get(zero) != 1 or len(self.c[0]) != 1:
                return False
            return all(not p for p in self.c[1:])
        if self.c[0] != 1:
            return False
        return all(is_zero(x) for x in self.c[1:])

    def _float_reciprocal(self):
        """1/self by Newton doubling; self[0] must be invertible."""
        t = self.trunc
        lead = self.c[0]
        if self.markers:
            inv0 = _float_poly_inv(lead)
        else:
            if lead == 0:
                raise ZeroDivisionError("reciprocal of series with zero constant term")
            inv0 = 1.0 / lead
        r = Series.zero(0, self.markers, self.caps, "float")
        r.c[0] = inv0
        prec = 0
        while prec < t:
            prec = min(2 * prec + 1, t)
            r = r.resize(prec)
            b = self.resize(prec)
            r = r * (Series.const(2.0, prec, self.markers, self.caps, "float") - b * r)
        return r

    def _exact_div_unit(self, den):
        t = self.trunc
        lead = den.c[0]
        qs = []
        if self.markers:
            cap = self.caps[0] if len(self.caps) == 1 else None
            lead_items = list(lead.items())
            is_scalar_lead = len(lead) == 1 and (0,) * len(self.markers) in lead
            for n in range(t + 1):
                acc = dict(self.c[n])
                for j in range(1, n + 1):
                    p = den.c[j]
                    if p:
                        acc = _poly_add(acc, _poly_mul(p, qs[n - j], self.caps), sign=-1)
                if is_scalar_lead:
                    qs.append(_poly_scalar_div(acc, lead_items[0][1]))
                else:
                    if len(self.markers) != 1:
                        raise SeriesError(
                            "polynomial leading divisor only supported for one marker"
                        )
                    qs.append(_poly_divexact_1m(acc, lead, cap))
        else:
            for n in range(t + 1):
                acc = self.c[n]
                for j in range(1, n + 1):
                    y = den.c[j]
                    if not is_zero(y):
                        acc = acc - y * qs[n - j]
                qs.append(scalar_div(acc, lead))
        return Series(t, self.markers, self.caps, "exact", qs)

    def __truediv__(self, other):
        return self.divide(other)

    # -- substitution -------------------------------------------------------

    def subs_z(self, inner):
        """Compose self(inner(z)); the inner series needs valuation >= 1."""
        val = inner.valuation()
        if val is not None and val < 1:
            raise SeriesError("substitute-into-z needs inner valuation >= 1")
        t = inner.trunc
        one = Series.const(1, t, inner.markers, inner.caps, inner.backend)
        if val is None:
            deg = 0
        else:
            deg = min(self.trunc, t // val)
        coeffs = []
        for k in range(deg + 1):
            ck = self.c[k] if k <= self.trunc else None
            coeffs.append(ck)
        # Brent-Kung blocks: ~2*sqrt(deg) series multiplications
        r = max(1, int(deg ** 0.5) + 1)
        baby = [one]
        for _ in range(r - 1):
            baby.append(baby[-1] * inner)
        giant = baby[-1] * inner if deg >= r else None
        result = Series.zero(t, inner.markers, inner.caps, inner.backend)
        g = (deg // r)
        for blk in range(g, -1, -1):
            block = Series.zero(t, inner.markers, inner.caps, inner.backend)
            for i in range(r):
                k = blk * r + i
                if k > deg:
                    break
                ck = coeffs[k]
                if ck is None:
                    continue
                if self.backend == "float":
                    if not np.any(ck):
                        continue
                    term = _mixed_coeff_mul(baby[i], ck)
                elif self.markers:
                    if not ck:
                        continue
                    term = _mixed_coeff_mul(baby[i], ck)
                else:
                    if is_zero(ck):
                        continue
                    term = baby[i] * ck
                block = block + term
            if blk == g:
                result = block
            else:
                result = result * giant + block
        return result

    def subs_marker(self, name, value):
        """Substitute ``value`` (scalar or Series over the remaining markers)
        for the named marker."""
        i = self.markers.index(name)
        rest = self.markers[:i] + self.markers[i + 1:]
        rest_caps = self.caps[:i] + self.caps[i + 1:]
        if self.backend == "float":
            if isinstance(value, Series):
                raise SeriesError("series-valued marker substitution is exact-only")
            cap = self.caps[i]
            powers = np.array([float(value) ** k for k in range(cap + 1)])
            arr = np.tensordot(self.c, powers, axes=([i + 1], [0]))
            return Series(self.trunc, rest, rest_caps, "float", arr)
        if isinstance(value, Series):
            if value.markers != rest:
                raise SeriesError("marker mismatch in substitution value")
            maxdeg = 0
            for p in self.c:
                for e in p:
                    maxdeg = max(maxdeg, e[i])
            # Horner in the substituted series, over z-coefficient slices
            result = Series.zero(self.trunc, rest, rest_caps, value.backend)
            for d in range(maxdeg, -1, -1):
                slice_d = Series(
                    self.trunc,
                    rest,
                    rest_caps,
                    "exact",
                    [
                        {e[:i] + e[i + 1:]: v for e, v in p.items() if e[i] == d}
                        for p in self.c
                    ],
                )
                result = result * value + slice_d
            return result
        cs = []
        for p in self.c:
            acc = {}
            for e, v in p.items():
                re = e[:i] + e[i + 1:]
                term = v * value ** e[i]
                cur = acc.get(re)
                nv = term if cur is None else cur + term
                if is_zero(nv):
                    acc.pop(re, None)
                else:
                    acc[re] = nv
            cs.append(acc if rest else acc.get((), 0))
        return Series(self.trunc, rest, rest_caps, "exact", cs)

    def mul_marker(self, name, power=1):
        i = self.markers.index(name)
        cap = self.caps[i]
        if self.backend == "float":
            arr = np.zeros_like(self.c)
            src = [slice(None)] * self.c.ndim
            dst = [slice(None)] * self.c.ndim
            src[i + 1] = slice(0, cap + 1 - power) if power <= cap else slice(0, 0)
            dst[i + 1] = slice(power, cap + 1)
            arr[tuple(dst)] = self.c[tuple(src)]
            return Series(self.trunc, self.markers, self.caps, "float", arr)
        cs = []
        for p in self.c:
            q = {}
            for e, v in p.items():
                k = e[i] + power
                if cap is not None and k > cap:
                    continue
                q[e[:i] + (k,) + e[i + 1:]] = v
            cs.append(q)
        return Series(self.trunc, self.markers, self.caps, "exact", cs)

    def div_marker(self, name, power=1, strict=True):
        """Divide by a marker power; lower coefficients must vanish.

        With strict=False the low-degree terms are dropped instead:
        fixed-point iterations pass through transient states where the
        algebraic cancellation below the divisor power has not converged
        yet.
        """
        i = self.markers.index(name)
        if self.backend == "float":
            arr = np.zeros_like(self.c)
            idx_low = [slice(None)] * self.c.ndim
            idx_low[i + 1] = slice(0, power)
            if strict and np.max(
                np.abs(self.c[tuple(idx_low)]), initial=0.0
            ) > 1e-9 * max(1.0, float(np.max(np.abs(self.c)))):
                raise SeriesError("marker division hits nonzero low-degree terms")
            src = [slice(None)] * self.c.ndim
            dst = [slice(None)] * self.c.ndim
            src[i + 1] = slice(power, None)
            dst[i + 1] = slice(0, self.c.shape[i + 1] - power)
            arr[tuple(dst)] = self.c[tuple(src)]
            return Series(self.trunc, self.markers, self.caps, "float", arr)
        cs = []
        for p in self.c:
            q = {}
            for e, v in p.items():
                k = e[i] - power
                if k < 0:
                    if strict:
                        raise SeriesError(
                            "marker division hits nonzero low-degree terms"
                        )
                    continue
                q[e[:i] + (k,) + e[i + 1:]] = v
            cs.append(q)
        return Series(self.trunc, self.markers, self.caps, "exact", cs)

    # -- reindexing ---------------------------------------------------------

    def reindex(self, new_trunc, factor=3, offset=0):
        """Move the coefficient of z^n to z^(factor*n + offset).

        Offset -1 implements the edge-count convention that drops the root
        edge; it needs valuation >= 1.
        """
        if offset < 0 and (self.valuation() or 0) * factor + offset < 0:
            if not self.is_zero():
                raise SeriesError("reindex would create a negative exponent")
        out = Series.zero(new_trunc, self.markers, self.caps, self.backend)
        for n in range(self.trunc + 1):
            m = factor * n + offset
            if m < 0:
                continue
            if m > new_trunc:
                break
            if self.backend == "float":
                out.c[m] = self.c[n]
            elif self.markers:
                out.c[m] = dict(self.c[n])
            else:
                out.c[m] = self.c[n]
        return out

    # -- predicates and conversions ------------------------------------------

    def assert_nonnegative(self):
        if self.backend == "float":
            if float(np.min(self.c)) < -1e-9:
                raise SeriesError("negative coefficient in counting series")
            return
        for n, p in enumerate(self.c):
            vals = p.values() if self.markers else [p]
            for v in vals:
                neg = v.sign() < 0 if isinstance(v, Quad3) else v < 0
                if neg:
                    raise SeriesError(f"negative coefficient at order {n}")

    def assert_integral(self):
        if self.backend == "float":
            raise SeriesError("integrality is an exact-backend check")
        for n, p in enumerate(self.c):
            vals = p.values() if self.markers else [p]
            for v in vals:
                if isinstance(v, Fraction) and v.denominator != 1:
                    raise SeriesError(f"non-integer coefficient at order {n}")
                if isinstance(v, Quad3):
                    raise SeriesError(f"irrational coefficient at order {n}")

    def to_float(self, caps=None, scale=1.0):
        """Exact -> float conversion, optionally rescaling z by ``scale``."""
        if self.backend == "float":
            return self
        caps = caps if caps is not None else self.caps
        if any(c is None for c in caps) and self.markers:
            raise SeriesError("float conversion needs marker caps")
        out = Series.zero(self.trunc, self.markers, caps, "float")
        w = 1.0
        for n in range(self.trunc + 1):
            if self.markers:
                for e, v in self.c[n].items():
                    if all(x <= c for x, c in zip(e, caps)):
                        out.c[(n,) + e] = float(v) * w
            else:
                out.c[n] = float(self.c[n]) * w
            w *= scale
        return out

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        if self.markers != other.markers:
            return False
        t = min(self.trunc, other.trunc)
        for n in range(t + 1):
            if self.backend == "float" or other.backend == "float":
                a = np.asarray(self.c[n], dtype=float)
                b = np.asarray(other.c[n], dtype=float)
                if a.shape != b.shape or not np.allclose(a, b, rtol=1e-9, atol=1e-12):
                    return False
            elif self.markers:
                if _poly_add(self.c[n], other.c[n], sign=-1):
                    return False
            elif self.c[n] != other.c[n]:
                return False
        return True

    __hash__ = None

    def __repr__(self):
        shown = min(self.trunc, 6)
        body = ", ".join(repr(self.c[n]) for n in range(shown + 1))
        tail = ", ..." if self.trunc > shown else ""
        return f"Series[{self.backend}; O(z^{self.trunc + 1}); {body}{tail}]"


def _mixed_coeff_mul(series, coeff):
    """Multiply a series by a bare coefficient block (poly dict or ndarray)."""
    if series.backend == "float":
        block = np.asarray(coeff, dtype=float)
        if block.ndim == 0:
            return series._scalar_mul(float(block))
        full = _nd_convolve(series.c, block[np.newaxis, ...], method="auto")
        sl = tuple(
            slice(0, lim)
            for lim in (series.trunc + 1,) + tuple(c + 1 for c in series.caps)
        )
        return Series(series.trunc, series.markers, series.caps, "float", full[sl])
    if isinstance(coeff, dict):
        cs = [_poly_mul(p, coeff, series.caps) for p in series.c]
        return Series(series.trunc, series.markers, series.caps, "exact", cs)
    return series._scalar_mul(coeff)


def _float_poly_inv(block):
    """Reciprocal of a dense marker-polynomial block as a truncated
    multi-power-series (used for division leading coefficients)."""
    block = np.asarray(block, dtype=float)
    c0 = block[(0,) * block.ndim]
    if c0 == 0.0:
        raise ZeroDivisionError("marker polynomial with zero constant term")
    inv = np.zeros_like(block)
    inv[(0,) * block.ndim] = 1.0 / c0
    # Newton: r <- r*(2 - b*r), doubling accuracy in total marker degree
    total = sum(s - 1 for s in block.shape)
    prec = 1
    while prec <= total:
        sl = tuple(slice(0, s) for s in block.shape)
        br = _nd_convolve(block, inv, method="auto")[sl]
        two = np.zeros_like(block)
        two[(0,) * block.ndim] = 2.0
        inv = _nd_convolve(inv, two - br, method="auto")[sl]
        prec *= 2
    return inv
