"""Certified complex root isolation for squarefree integer polynomials.

Approximations come from simultaneous iteration (mpmath.polyroots) and are
polished by Newton steps; each approximation z is then certified by exact
ball arithmetic: the disk around z of radius n*|f(z)|/|f'(z)| contains at
least one root of f (log-derivative bound), so n pairwise-disjoint disks for
a degree-n squarefree polynomial isolate exactly one root each.  Working
precision doubles on failure up to 16x the requested output precision.
"""

from __future__ import annotations

import mpmath

from ..errors import NotSquarefree, PrecisionExhausted
from . import balls
from .balls import ComplexBall, ball_poly_eval
from .polys import IntPolynomial, is_squarefree

import gmpy2
from gmpy2 import mpfr


def complex_roots(f: IntPolynomial, precision: int = 64) -> list:
    """Isolating disks for all complex roots of squarefree f.

    Returns deg(f) pairwise-disjoint ComplexBalls, each containing exactly
    one root, radii <= 2^-precision, in canonical (re, im) order.
    """
    n = f.degree
    if n < 1:
        return []
    if n > 16:
        raise ValueError("degree beyond the supported range")
    if not is_squarefree(f):
        raise NotSquarefree("defining polynomial has repeated roots")
    if n == 1:
        from fractions import Fraction
        old = balls.set_precision(precision + 16)
        try:
            b = ComplexBall.exact(Fraction(-f[0], f[1]), 0)
        finally:
            balls.set_precision(old)
        return [b]

    deriv = f.derivative()
    wp = max(64, 2 * precision + 32)
    cap = max(wp, 16 * precision)
    while wp <= cap:
        result = _try_isolate(f, deriv, n, precision, wp)
        if result is not None:
            return result
        wp *= 2
    raise PrecisionExhausted(f"could not isolate roots of {f} at <= {cap} bits")


def _try_isolate(f, deriv, n, precision, wp):
    try:
        with mpmath.workprec(wp):
            approx = mpmath.polyroots([mpmath.mpf(c) for c in reversed(f.coefficients)],
                                      maxsteps=200, extraprec=wp // 2)
    except (mpmath.libmp.NoConvergence, ZeroDivisionError):
        return None

    old = balls.set_precision(wp)
    try:
        ctx = gmpy2.context(precision=wp)
        with ctx:
            pts = [(_mpf_to_mpfr(r.real), _mpf_to_mpfr(r.imag)) for r in approx]
            if any(not (gmpy2.is_finite(re) and gmpy2.is_finite(im)) for re, im in pts):
                return None
            pts = [_newton_polish(f, deriv, re, im, steps=3) for (re, im) in pts]

        disks = []
        for re, im in pts:
            z = ComplexBall(re, im, mpfr(0))
            fz = ball_poly_eval(f.coefficients, z)
            dfz = ball_poly_eval(deriv.coefficients, z)
            dlow = dfz.abs_lower()
            if dlow <= 0:
                return None
            with gmpy2.context(precision=wp, round=gmpy2.RoundUp):
                r = n * fz.abs_upper() / dlow
            disks.append(ComplexBall(re, im, r))

        bound = mpfr(2) ** (-precision)
        if any(d.rad > bound for d in disks):
            return None
        for i in range(n):
            for j in range(i + 1, n):
                if not disks[i].disjoint(disks[j]):
                    return None
        return sort_balls_canonical(disks)
    finally:
        balls.set_precision(old)


def _mpf_to_mpfr(x) -> mpfr:
    """Exact mpmath.mpf -> gmpy2.mpfr conversion at the active precision."""
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return mpfr(0) if not exp else mpfr("nan")
    v = mpfr(man) * mpfr(2) ** exp
    return -v if sign else v


def _newton_polish(f, deriv, re, im, steps=3):
    coeffs = list(reversed(f.coefficients))
    dcoeffs = list(reversed(deriv.coefficients))
    for _ in range(steps):
        fr, fi = _horner(coeffs, re, im)
        dr, di = _horner(dcoeffs, re, im)
        den = dr * dr + di * di
        if den == 0:
            break
        qr = (fr * dr + fi * di) / den
        qi = (fi * dr - fr * di) / den
        re, im = re - qr, im - qi
    return re, im


def _horner(coeffs_desc, re, im):
    ar, ai = mpfr(0), mpfr(0)
    for c in coeffs_desc:
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def sort_balls_canonical(disks: list) -> list:
    """Sort by (re, im) with interval comparisons; overlapping axes tie
    deterministically by midpoint comparison."""
    import functools

    def cmp(a: ComplexBall, b: ComplexBall) -> int:
        if a is b:
            return 0
        # re axis
        with gmpy2.context(precision=balls.get_precision(), round=gmpy2.RoundUp):
            a_re_hi, b_re_hi = a.re + a.rad, b.re + b.rad
            a_im_hi, b_im_hi = a.im + a.rad, b.im + b.rad
        with gmpy2.context(precision=balls.get_precision(), round=gmpy2.RoundDown):
            a_re_lo, b_re_lo = a.re - a.rad, b.re - b.rad
            a_im_lo, b_im_lo = a.im - a.rad, b.im - b.rad
        if a_re_hi < b_re_lo:
            return -1
        if b_re_hi < a_re_lo:
            return 1
        if a_im_hi < b_im_lo:
            return -1
        if b_im_hi < a_im_lo:
            return 1
        if a.re != b.re:
            return -1 if a.re < b.re else 1
        if a.im != b.im:
            return -1 if a.im < b.im else 1
        return 0

    return sorted(disks, key=functools.cmp_to_key(cmp))


def conjugate_pairing(disks: list) -> list:
    """pairing[i] = j with disk j the complex conjugate partner of disk i;
    self-paired indices are certified real roots.  Requires the disks to be
    pairwise disjoint enclosures of all roots of a real polynomial."""
    pairing = [-1] * len(disks)
    for i, d in enumerate(disks):
        dc = d.conj()
        matches = [j for j, e in enumerate(disks) if not dc.disjoint(e)]
        if len(matches) != 1:
            raise PrecisionExhausted("conjugate pairing ambiguous at this precision")
        pairing[i] = matches[0]
    for i, j in enumerate(pairing):
        if pairing[j] != i:
            raise PrecisionExhausted("conjugate pairing inconsistent")
    return pairing
