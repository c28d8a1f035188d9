"""Dense univariate polynomials with arbitrary-precision integer or rational
coefficients, stored as ascending coefficient tuples.

Everything here is exact. Degrees stay small (survey fields are quartic, their
normal closures degree 8), so classical algorithms are used throughout.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


class IntPolynomial:
    """Integer polynomial; ``coefficients[i]`` multiplies x^i, no trailing zeros."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[int]):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial reports -1."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"IntPolynomial({list(self.coefficients)})"

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntPolynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return IntPolynomial([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coefficients])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coefficients])
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial([])
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coefficients)][1:])

    def evaluate(self, x):
        """Horner evaluation; exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        from math import gcd
        g = 0
        for c in self.coefficients:
            g = gcd(g, c)
        return g

    def primitive_part(self) -> "IntPolynomial":
        g = self.content()
        if g <= 1:
            return self if (self.leading() >= 0) else IntPolynomial([-c for c in self.coefficients])
        sign = -1 if self.leading() < 0 else 1
        return IntPolynomial([sign * c // g for c in self.coefficients])


def poly_divmod_exact(a: IntPolynomial, b: IntPolynomial):
    """Euclidean division assuming b monic (or that the division is exact over Z)."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    lc = b.leading()
    rem = list(a.coefficients)
    quo = [0] * max(0, len(rem) - len(b.coefficients) + 1)
    db = b.degree
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        q, r = divmod(rem[-1], lc)
        if r != 0:
            raise ValueError("inexact polynomial division over Z")
        k = len(rem) - 1 - db
        quo[k] = q
        for i, bc in enumerate(b.coefficients):
            rem[k + i] -= q * bc
        rem.pop()
    return IntPolynomial(quo), IntPolynomial(rem)


def sylvester_resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Resultant of f and g via fraction-free Gaussian elimination (Bareiss)
    of the Sylvester matrix. Exact integer output."""
    n, m = f.degree, g.degree
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return f.coefficients[0] ** m
    if m == 0:
        return g.coefficients[0] ** n
    size = n + m
    mat = [[0] * size for _ in range(size)]
    fc = list(reversed(f.coefficients))
    gc = list(reversed(g.coefficients))
    for i in range(m):
        for j, c in enumerate(fc):
            mat[i][i + j] = c
    for i in range(n):
        for j, c in enumerate(gc):
            mat[m + i][i + j] = c
    return _bareiss_det(mat)


def _bareiss_det(mat) -> int:
    """Fraction-free determinant; mutates its argument."""
    n = len(mat)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = mat[k][k]
        for i in range(k + 1, n):
            mik = mat[i][k]
            row_i = mat[i]
            row_k = mat[k]
            for j in range(k + 1, n):
                row_i[j] = (pk * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * mat[n - 1][n - 1]


def poly_discriminant(f: IntPolynomial) -> int:
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = sylvester_resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    d, r = divmod(sign * res, f.leading())
    assert r == 0
    return d


def rational_poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    """Monic gcd over Q, classic Euclid on Fraction coefficient lists (ascending)."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(a), trim(b)
    while b:
        # a mod b
        while len(a) >= len(b) and a:
            q = a[-1] / b[-1]
            k = len(a) - len(b)
            for i, c in enumerate(b):
                a[k + i] -= q * c
            trim(a)
        a, b = b, a
    if a:
        lc = a[-1]
        a = [c / lc for c in a]
    return a


def is_squarefree(f: IntPolynomial) -> bool:
    if f.degree < 1:
        return not f.is_zero()
    g = rational_poly_gcd([Fraction(c) for c in f.coefficients],
                          [Fraction(c) for c in f.derivative().coefficients])
    return len(g) == 1


def sturm_real_root_count(f: IntPolynomial) -> int:
    """Number of distinct real roots, by Sturm's theorem over Q (squarefree input)."""
    chain = [[Fraction(c) for c in f.coefficients],
             [Fraction(c) for c in f.derivative().coefficients]]
    while True:
        a, b = chain[-2][:], chain[-1]
        if not b:
            chain.pop()
            break
        # a mod b
        while len(a) >= len(b) and a:
            q = a[-1] / b[-1]
            k = len(a) - len(b)
            for i, c in enumerate(b):
                a[k + i] -= q * c
            while a and a[-1] == 0:
                a.pop()
        if not a:
            break
        chain.append([-c for c in a])

    def sign_changes(at_pinf: bool) -> int:
        signs = []
        for p in chain:
            lc = p[-1]
            s = 1 if lc > 0 else -1
            if not at_pinf and (len(p) - 1) % 2 == 1:
                s = -s
            signs.append(s)
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    return sign_changes(at_pinf=False) - sign_changes(at_pinf=True)


def rational_roots(f: IntPolynomial) -> list:
    """All rational roots (as Fractions), by the rational root theorem."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    coeffs = list(f.coefficients)
    shift = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        shift += 1
    roots = [Fraction(0)] if shift else []
    if len(coeffs) == 1:
        return roots
    a0, an = abs(coeffs[0]), abs(coeffs[-1])
    p_divs = _divisors(a0)
    q_divs = _divisors(an)
    g = IntPolynomial(coeffs)
    seen = set()
    for q in q_divs:
        for p in p_divs:
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in seen:
                    continue
                seen.add(cand)
                if g.evaluate(cand) == 0:
                    roots.append(cand)
    return roots


def _divisors(n: int) -> list:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def is_irreducible_q(f: IntPolynomial) -> bool:
    """Irreducibility over Q for monic integer f.

    Degrees <= 3 use the rational root theorem; degree 4 adds the complete
    integer quadratic-splitting search (Gauss); higher degrees defer to sympy.
    """
    n = f.degree
    if n <= 0:
        return False
    if not f.is_monic():
        raise ValueError("monic polynomial expected")
    if n == 1:
        return True
    if rational_roots(f):
        return False
    if n <= 3:
        return True
    if n == 4:
        return not _quartic_splits_quadratic(f)
    import sympy
    x = sympy.Symbol("x")
    expr = sum(int(c) * x**i for i, c in enumerate(f.coefficients))
    return bool(sympy.Poly(expr, x).is_irreducible)


def _quartic_splits_quadratic(f: IntPolynomial) -> bool:
    # monic quartic with no rational root: reducible iff
    # f = (x^2+ax+b)(x^2+cx+d) with integers a,b,c,d (Gauss's lemma).
    e3, e2, e1, e0 = f[3], f[2], f[1], f[0]
    if e0 == 0:
        return True
    for b in _signed_divisors(e0):
        if b == 0:
            continue
        if e0 % b != 0:
            continue
        d = e0 // b
        # a + c = e3 ; b + d + a*c = e2 ; a*d + b*c = e1
        # from the first two: a*c = e2 - b - d; a and c are roots of
        # t^2 - e3 t + (e2 - b - d)
        disc = e3 * e3 - 4 * (e2 - b - d)
        if disc < 0:
            continue
        s = _isqrt_exact(disc)
        if s is None:
            continue
        for a in {(e3 + s) // 2, (e3 - s) // 2} if (e3 + s) % 2 == 0 else set():
            c = e3 - a
            if a * c == e2 - b - d and a * d + b * c == e1:
                return True
    return False


def _signed_divisors(n: int):
    for d in _divisors(n):
        yield d
        yield -d


def _isqrt_exact(n: int):
    from math import isqrt
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None
