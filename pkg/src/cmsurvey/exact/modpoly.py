"""Univariate polynomial factorization over prime fields F_p.

Distinct-degree decomposition followed by Cantor-Zassenhaus equal-degree
splitting, driven by a deterministic seeded generator so runs are
reproducible.  Polynomials are ascending coefficient lists over Z/p.
"""

from __future__ import annotations

import random

import gmpy2

from ..errors import CompositeModulus
from .polys import IntPolynomial


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mul(a: list, b: list, p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _rem(a: list, b: list, p: int) -> list:
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        q = a[-1] * inv % p
        k = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[k + i] = (a[k + i] - q * bc) % p
        a.pop()
    return _trim(a)


def _gcd(a: list, b: list, p: int) -> list:
    a, b = _trim(a[:]), _trim(b[:])
    while b:
        a, b = b, _rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _powmod(base: list, e: int, mod: list, p: int) -> list:
    result = [1]
    base = _rem(base[:], mod, p)
    while e:
        if e & 1:
            result = _rem(_mul(result, base, p), mod, p)
        base = _rem(_mul(base, base, p), mod, p)
        e >>= 1
    return result


def _monic(a: list, p: int) -> list:
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _derivative(a: list, p: int) -> list:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _add(a: list, b: list, p: int) -> list:
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def distinct_degree_decomposition(f: list, p: int) -> list:
    """[(product of irreducible factors of degree d, d)] for squarefree monic f."""
    out = []
    h = [0, 1]  # x
    v = f[:]
    d = 0
    while len(v) - 1 > 0:
        d += 1
        if 2 * d > len(v) - 1:
            out.append((v, len(v) - 1))
            break
        h = _powmod(h, p, v, p)
        hx = h + [0] * max(0, 2 - len(h))
        hx = _trim([(c - 1) % p if i == 1 else c for i, c in enumerate(hx)])
        g = _gcd(hx, v, p)
        if len(g) - 1 > 0:
            out.append((g, d))
            v = _monic(_exact_div(v, g, p), p)
            h = _rem(h, v, p)
    return out


def _exact_div(a: list, b: list, p: int) -> list:
    a = a[:]
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    quo = [0] * (len(a) - db)
    while len(a) - 1 >= db and a:
        if a[-1] == 0:
            a.pop()
            continue
        q = a[-1] * inv % p
        k = len(a) - 1 - db
        quo[k] = q
        for i, bc in enumerate(b):
            a[k + i] = (a[k + i] - q * bc) % p
        a.pop()
    assert not _trim(a), "inexact division"
    return _trim(quo)


def _equal_degree_split(f: list, d: int, p: int, rng: random.Random) -> list:
    """Split monic squarefree f, all of whose irreducible factors have degree d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)] + [1]
        a = _trim([c % p for c in a])
        if len(a) - 1 < 1:
            continue
        g = _gcd(a, f, p)
        if 0 < len(g) - 1 < n:
            pass
        elif p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1)) splits over F_2
            t: list = []
            acc = _rem(a[:], f, 2)
            for _ in range(d):
                t = _add(t, acc, 2)
                acc = _rem(_mul(acc, acc, 2), f, 2)
            g = _gcd(t, f, 2)
            if not (0 < len(g) - 1 < n):
                continue
        else:
            b = _powmod(a, (p**d - 1) // 2, f, p)
            b = _trim([(c - (1 if i == 0 else 0)) % p for i, c in enumerate(b)] or [p - 1])
            g = _gcd(b, f, p)
            if not (0 < len(g) - 1 < n):
                continue
        other = _monic(_exact_div(f, g, p), p)
        return _equal_degree_split(_monic(g, p), d, p, rng) + _equal_degree_split(other, d, p, rng)


def factor_mod_p(f: IntPolynomial, p: int, seed: int = 0) -> list:
    """Factor f over F_p.

    Returns a list of (IntPolynomial, multiplicity) with monic irreducible
    factors, sorted by (degree, coefficients) for reproducibility.  The
    product over all factors reproduces f mod p up to the leading unit.
    """
    if not gmpy2.is_prime(p):
        raise CompositeModulus(f"{p} is not prime")
    fp = _trim([c % p for c in f.coefficients])
    if not fp:
        raise ValueError("polynomial vanishes mod p")
    rng = random.Random((seed << 20) ^ (p << 4) ^ len(fp))
    fp = _monic(fp, p)

    factors: dict = {}

    def record(g: list, mult: int):
        key = tuple(g)
        factors[key] = factors.get(key, 0) + mult

    def work(g: list, mult: int):
        if len(g) - 1 == 0:
            return
        der = _derivative(g, p)
        if not der:
            # g = h(x^p) = h(x)^p
            h = [g[i] for i in range(0, len(g), p)]
            work(h, mult * p)
            return
        sqf = _gcd(g, der, p)
        if len(sqf) - 1 > 0:
            work(_monic(_exact_div(g, sqf, p), p), mult)
            work(sqf, mult)
            return
        for part, d in distinct_degree_decomposition(g, p):
            for irr in _equal_degree_split(part, d, p, rng):
                record(irr, mult)

    work(fp, 1)
    # merge repeated irreducible factors found along different square-free branches
    out = [(IntPolynomial(list(k)), m) for k, m in factors.items()]
    out.sort(key=lambda t: (t[0].degree, t[0].coefficients))
    return out


def degree_pattern_mod_p(f: IntPolynomial, p: int) -> list:
    """Residue degrees (with multiplicity by count, not exponent) of the
    irreducible factors of squarefree-part(f) mod p, cheap DDF-only path.
    Used by analytic class-number estimates, which only need the pattern of
    an unramified prime."""
    fp = _trim([c % p for c in f.coefficients])
    if not fp or len(fp) - 1 < 1:
        return []
    fp = _monic(fp, p)
    der = _derivative(fp, p)
    if der:
        g = _gcd(fp, der, p)
        if len(g) - 1 > 0:
            fp = _monic(_exact_div(fp, g, p), p)
            # ramified or inseparable part ignored by callers for estimates
    degrees = []
    for part, d in distinct_degree_decomposition(fp, p):
        degrees.extend([d] * ((len(part) - 1) // d))
    return sorted(degrees)
