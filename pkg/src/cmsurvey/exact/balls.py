"""Certified interval/ball arithmetic over MPFR via gmpy2.

RealBall is an endpoint interval [lo, hi]; ComplexBall is a midpoint disk
(re, im, radius).  All endpoint and radius computations use directed
rounding, so every returned enclosure is rigorous.  MPFR transcendentals are
correctly rounded, which keeps log/exp/sqrt enclosures tight.
"""

from __future__ import annotations

from fractions import Fraction

import gmpy2
from gmpy2 import mpfr

_PREC = 128


def set_precision(bits: int) -> int:
    """Set the module working precision; returns the previous value."""
    global _PREC
    old, _PREC = _PREC, max(32, int(bits))
    return old


def get_precision() -> int:
    return _PREC


def _dn():
    return gmpy2.context(precision=_PREC, round=gmpy2.RoundDown)


def _up():
    return gmpy2.context(precision=_PREC, round=gmpy2.RoundUp)


def _nr():
    return gmpy2.context(precision=_PREC, round=gmpy2.RoundToNearest)


class RealBall:
    """Closed interval [lo, hi] with mpfr endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        self.lo = lo
        self.hi = hi
        if not (gmpy2.is_finite(lo) and gmpy2.is_finite(hi)) or lo > hi:
            raise ValueError(f"bad interval [{lo}, {hi}]")

    @classmethod
    def exact(cls, x) -> "RealBall":
        if isinstance(x, Fraction):
            with _dn():
                lo = mpfr(x.numerator) / x.denominator
            with _up():
                hi = mpfr(x.numerator) / x.denominator
            return cls(lo, hi)
        with _dn():
            lo = mpfr(x)
        with _up():
            hi = mpfr(x)
        return cls(lo, hi)

    @classmethod
    def point(cls, x: mpfr) -> "RealBall":
        return cls(x, x)

    @classmethod
    def pi(cls) -> "RealBall":
        with _dn():
            lo = gmpy2.const_pi()
        with _up():
            hi = gmpy2.const_pi()
        return cls(lo, hi)

    def __repr__(self):
        return f"RealBall({self.lo!s}, {self.hi!s})"

    def mid(self) -> mpfr:
        with _nr():
            return (self.lo + self.hi) / 2

    def rad(self) -> mpfr:
        with _up():
            return (self.hi - self.lo) / 2

    def __add__(self, other: "RealBall") -> "RealBall":
        with _dn():
            lo = self.lo + other.lo
        with _up():
            hi = self.hi + other.hi
        return RealBall(lo, hi)

    def __sub__(self, other: "RealBall") -> "RealBall":
        with _dn():
            lo = self.lo - other.hi
        with _up():
            hi = self.hi - other.lo
        return RealBall(lo, hi)

    def __neg__(self) -> "RealBall":
        return RealBall(-self.hi, -self.lo)

    def __mul__(self, other: "RealBall") -> "RealBall":
        with _dn():
            lo = min(self.lo * other.lo, self.lo * other.hi,
                     self.hi * other.lo, self.hi * other.hi)
        with _up():
            hi = max(self.lo * other.lo, self.lo * other.hi,
                     self.hi * other.lo, self.hi * other.hi)
        return RealBall(lo, hi)

    def __truediv__(self, other: "RealBall") -> "RealBall":
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval divisor contains zero")
        with _dn():
            lo = min(self.lo / other.lo, self.lo / other.hi,
                     self.hi / other.lo, self.hi / other.hi)
        with _up():
            hi = max(self.lo / other.lo, self.lo / other.hi,
                     self.hi / other.lo, self.hi / other.hi)
        return RealBall(lo, hi)

    def scale(self, k) -> "RealBall":
        return self * RealBall.exact(k)

    def log(self) -> "RealBall":
        if self.lo <= 0:
            raise ValueError("log of interval touching (-inf, 0]")
        with _dn():
            lo = gmpy2.log(self.lo)
        with _up():
            hi = gmpy2.log(self.hi)
        return RealBall(lo, hi)

    def exp(self) -> "RealBall":
        with _dn():
            lo = gmpy2.exp(self.lo)
        with _up():
            hi = gmpy2.exp(self.hi)
        return RealBall(lo, hi)

    def sqrt(self) -> "RealBall":
        if self.lo < 0:
            raise ValueError("sqrt of negative interval")
        with _dn():
            lo = gmpy2.sqrt(self.lo)
        with _up():
            hi = gmpy2.sqrt(self.hi)
        return RealBall(lo, hi)

    def cos(self) -> "RealBall":
        return self._lipschitz_unit(gmpy2.cos)

    def sin(self) -> "RealBall":
        return self._lipschitz_unit(gmpy2.sin)

    def _lipschitz_unit(self, fn) -> "RealBall":
        # |f'| <= 1: f(mid) +- (rad + 2 ulp), clamped to [-1, 1]
        m = self.mid()
        with _nr():
            v = fn(m)
        with _up():
            slack = self.rad() + abs(v) * mpfr(2) ** (-_PREC + 2) + mpfr(2) ** (-_PREC + 2)
            hi = v + slack
        with _dn():
            lo = v - slack
        one = mpfr(1)
        return RealBall(max(lo, -one), min(hi, one))

    def contains(self, x) -> bool:
        if isinstance(x, Fraction):
            return self._contains_fraction(x)
        return bool(self.lo <= x <= self.hi)

    def _contains_fraction(self, x: Fraction) -> bool:
        # exact comparison: endpoints are dyadic rationals
        return _mpfr_to_fraction(self.lo) <= x <= _mpfr_to_fraction(self.hi)

    def width(self) -> mpfr:
        with _up():
            return self.hi - self.lo

    def abs_upper(self) -> mpfr:
        return max(abs(self.lo), abs(self.hi))


def _mpfr_to_fraction(x: mpfr) -> Fraction:
    m, e = x.as_mantissa_exp()
    m, e = int(m), int(e)
    return Fraction(m * 2**e) if e >= 0 else Fraction(m, 2**-e)


class ComplexBall:
    """Disk |z - (re + im*i)| <= rad with mpfr components."""

    __slots__ = ("re", "im", "rad")

    def __init__(self, re, im, rad=None):
        self.re = re
        self.im = im
        self.rad = rad if rad is not None else mpfr(0)
        if self.rad < 0 or not gmpy2.is_finite(self.rad):
            raise ValueError("bad radius")

    @classmethod
    def exact(cls, re, im=0) -> "ComplexBall":
        rre = RealBall.exact(re)
        rim = RealBall.exact(im)
        with _up():
            rad = (rre.hi - rre.lo) + (rim.hi - rim.lo)
        return cls(rre.mid(), rim.mid(), rad)

    def __repr__(self):
        return f"ComplexBall({self.re!s} + {self.im!s}j, rad={self.rad!s})"

    def _eps(self) -> mpfr:
        with _up():
            return (abs(self.re) + abs(self.im)) * mpfr(2) ** (-_PREC + 2)

    def conj(self) -> "ComplexBall":
        return ComplexBall(self.re, -self.im, self.rad)

    def __add__(self, other: "ComplexBall") -> "ComplexBall":
        with _nr():
            re = self.re + other.re
            im = self.im + other.im
        out = ComplexBall(re, im)
        with _up():
            rad = self.rad + other.rad + out._eps()
        out.rad = rad
        return out

    def __sub__(self, other: "ComplexBall") -> "ComplexBall":
        return self + (-other)

    def __neg__(self) -> "ComplexBall":
        return ComplexBall(-self.re, -self.im, self.rad)

    def __mul__(self, other: "ComplexBall") -> "ComplexBall":
        with _nr():
            re = self.re * other.re - self.im * other.im
            im = self.re * other.im + self.im * other.re
        out = ComplexBall(re, im)
        with _up():
            a = gmpy2.sqrt(self.re ** 2 + self.im ** 2)
            b = gmpy2.sqrt(other.re ** 2 + other.im ** 2)
            rad = a * other.rad + b * self.rad + self.rad * other.rad + 4 * out._eps()
        out.rad = rad
        return out

    def __truediv__(self, other: "ComplexBall") -> "ComplexBall":
        return self * other.reciprocal()

    def reciprocal(self) -> "ComplexBall":
        with _dn():
            mlow = gmpy2.sqrt(self.re ** 2 + self.im ** 2)  # lower bound on |mid|
            wlow = mlow - self.rad                          # lower bound on min |z|
        if wlow <= 0:
            raise ZeroDivisionError("ball contains zero")
        with _nr():
            d = self.re ** 2 + self.im ** 2
            re = self.re / d
            im = -self.im / d
        out = ComplexBall(re, im)
        with _dn():
            denom = mlow * wlow
        with _up():
            rad = self.rad / denom + 4 * out._eps()
        out.rad = rad
        return out

    def pow_int(self, k: int) -> "ComplexBall":
        if k < 0:
            return self.reciprocal().pow_int(-k)
        result = ComplexBall.exact(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def abs_lower(self) -> mpfr:
        with _dn():
            m = gmpy2.sqrt(self.re ** 2 + self.im ** 2) * (1 - mpfr(2) ** (-_PREC + 3))
        with _dn():
            v = m - self.rad
        return v if v > 0 else mpfr(0)

    def abs_upper(self) -> mpfr:
        with _up():
            return gmpy2.sqrt(self.re ** 2 + self.im ** 2) + self.rad

    def abs_ball(self) -> RealBall:
        return RealBall(self.abs_lower(), self.abs_upper())

    def contains_zero(self) -> bool:
        return self.abs_lower() <= 0

    def disjoint(self, other: "ComplexBall") -> bool:
        with _dn():
            d2 = (self.re - other.re) ** 2 + (self.im - other.im) ** 2
            dist = gmpy2.sqrt(d2) * (1 - mpfr(2) ** (-_PREC + 3))
        with _up():
            rr = self.rad + other.rad
        return bool(dist > rr)

    def overlaps(self, other: "ComplexBall") -> bool:
        return not self.disjoint(other)


def ball_poly_eval(coeffs, z: ComplexBall) -> ComplexBall:
    """Horner evaluation of an integer-coefficient polynomial on a disk."""
    acc = ComplexBall.exact(0)
    for c in reversed(list(coeffs)):
        acc = acc * z + ComplexBall.exact(c)
    return acc


def exp_ball(z: ComplexBall) -> ComplexBall:
    """exp of a complex disk: exp(mid) with radius |exp(mid)| * (e^rad - 1)."""
    with _nr():
        er = gmpy2.exp(z.re)
        re = er * gmpy2.cos(z.im)
        im = er * gmpy2.sin(z.im)
    out = ComplexBall(re, im)
    with _up():
        mag = gmpy2.exp(z.re) * (1 + mpfr(2) ** (-_PREC + 4))
        growth = gmpy2.expm1(z.rad)
        rad = mag * growth + 4 * out._eps()
    out.rad = rad
    return out
