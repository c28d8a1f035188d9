"""Number fields of small degree: construction with certified maximal orders
(Dedekind criterion plus radical-multiplier enlargement), exact element
arithmetic over the integral basis, embeddings as certified balls, and CM
detection with the complex-conjugation automorphism and real subfield.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Sequence

import gmpy2

from .errors import NotCM, PrecisionExhausted, RecognitionFailure, Reducible, UnsupportedIndex
from .exact import balls
from .exact.balls import ComplexBall, ball_poly_eval
from .exact.matrices import IntMatrix, hnf, nonzero_columns, solve_triangular_membership
from .exact.modpoly import factor_mod_p
from .exact.polys import (IntPolynomial, is_irreducible_q, poly_discriminant,
                          poly_divmod_exact, sturm_real_root_count,
                          sylvester_resultant)


def _factorint(n: int) -> dict:
    import sympy
    return {int(p): int(e) for p, e in sympy.factorint(int(n)).items()}


class NumberField:
    """Number field Q[x]/(f) with its maximal order.

    The integral basis is stored as (den, W): column j of the integer matrix
    W holds den * b_j in power-basis coordinates, in column HNF with b_0 = 1.
    Element coordinates throughout the toolkit refer to this basis.
    """

    def __init__(self, defining_poly: IntPolynomial, den: int, basis_mat: IntMatrix,
                 discriminant: int, signature: tuple):
        self.defining_poly = defining_poly
        self.degree = defining_poly.degree
        self.den = den
        self.basis_mat = basis_mat      # n x n integer, columns = den * b_j in power coords
        self.discriminant = discriminant
        self.signature = signature
        self._mult_table = None
        self._power_sums = None
        self._to_integral_cache = None
        self._embeddings = {}
        self._cm_data = None
        self._cm_tried = False

    # -- conversions ------------------------------------------------------

    def _to_integral_data(self):
        # exact inverse of basis_mat: basis_mat^{-1} = adj / det
        if self._to_integral_cache is None:
            w = self.basis_mat
            n = self.degree
            det = w.det()
            adj = _adjugate(w)
            self._to_integral_cache = (adj, det)
        return self._to_integral_cache

    def power_to_integral(self, pow_coords: Sequence[Fraction]) -> tuple:
        """Power-basis coordinates -> integral-basis coordinates (Fractions)."""
        adj, det = self._to_integral_data()
        v = [Fraction(c) for c in pow_coords]
        out = []
        for i in range(self.degree):
            s = sum(Fraction(adj.data[i][j]) * v[j] for j in range(self.degree))
            out.append(s * self.den / det)
        return tuple(out)

    def integral_to_power(self, coords: Sequence[Fraction]) -> tuple:
        """Integral-basis coordinates -> power-basis coordinates (Fractions)."""
        w = self.basis_mat
        n = self.degree
        return tuple(sum(Fraction(w.data[i][j]) * Fraction(coords[j]) for j in range(n)) / self.den
                     for i in range(n))

    # -- multiplication ----------------------------------------------------

    def mult_table(self):
        """t[i][j] = integer integral-basis coordinates of b_i * b_j."""
        if self._mult_table is None:
            n = self.degree
            f = self.defining_poly
            cols = self.basis_mat
            table = [[None] * n for _ in range(n)]
            for i in range(n):
                pi = [cols.data[r][i] for r in range(n)]
                for j in range(i, n):
                    pj = [cols.data[r][j] for r in range(n)]
                    prod = _polymul_mod(pi, pj, f)
                    coords = self.power_to_integral([Fraction(c, self.den * self.den) for c in prod])
                    vec = []
                    for c in coords:
                        assert c.denominator == 1, "order not closed under multiplication"
                        vec.append(int(c))
                    table[i][j] = vec
                    table[j][i] = vec
            self._mult_table = table
        return self._mult_table

    def mul_int_vecs(self, x: Sequence[int], y: Sequence[int]) -> list:
        """Product of two elements given by integer integral coordinates."""
        t = self.mult_table()
        n = self.degree
        out = [0] * n
        for i in range(n):
            xi = x[i]
            if not xi:
                continue
            ti = t[i]
            for j in range(n):
                yj = y[j]
                if not yj:
                    continue
                tij = ti[j]
                c = xi * yj
                for k in range(n):
                    out[k] += c * tij[k]
        return out

    def mul_frac_vecs(self, x, y) -> tuple:
        nx = [Fraction(c) for c in x]
        ny = [Fraction(c) for c in y]
        dx = _lcm_all(c.denominator for c in nx)
        dy = _lcm_all(c.denominator for c in ny)
        xi = [int(c * dx) for c in nx]
        yi = [int(c * dy) for c in ny]
        prod = self.mul_int_vecs(xi, yi)
        return tuple(Fraction(c, dx * dy) for c in prod)

    # -- invariants of elements ---------------------------------------------

    def power_sums(self):
        """Traces of theta^k for k = 0..2n-1, by Newton's identities."""
        if self._power_sums is None:
            f = self.defining_poly
            n = self.degree
            e = [Fraction((-1) ** k) * f[n - k] for k in range(n + 1)]  # signed elem. sym.
            s = [Fraction(n)]
            for k in range(1, 2 * n):
                acc = Fraction(0)
                for i in range(1, min(k, n) + 1):
                    acc += Fraction((-1) ** (i - 1)) * e[i] * s[k - i]
                if k <= n:
                    acc += Fraction((-1) ** (k - 1)) * e[k] * k
                s.append(acc)
            self._power_sums = s
        return self._power_sums

    def element_trace(self, coords) -> Fraction:
        p = self.integral_to_power(coords)
        s = self.power_sums()
        return sum(Fraction(p[i]) * s[i] for i in range(self.degree))

    def element_norm(self, coords) -> Fraction:
        """Norm via the resultant of the defining polynomial and the element."""
        p = self.integral_to_power(coords)
        den = _lcm_all(c.denominator for c in map(Fraction, p))
        g = IntPolynomial([int(Fraction(c) * den) for c in p])
        if g.is_zero():
            return Fraction(0)
        res = sylvester_resultant(self.defining_poly, g)
        return Fraction(res, den ** self.degree)

    def element_minpoly(self, coords) -> tuple:
        """Monic minimal polynomial over Q, ascending Fraction coefficients."""
        n = self.degree
        powers = [tuple([Fraction(1)] + [Fraction(0)] * (n - 1))]
        cur = tuple(Fraction(c) for c in coords)
        for _ in range(n):
            powers.append(cur)
            cur = self.mul_frac_vecs(cur, coords)
        for d in range(1, n + 1):
            sol = _solve_linear_fraction([list(powers[i]) for i in range(d)], list(powers[d]))
            if sol is not None:
                return tuple([-c for c in sol] + [Fraction(1)])
        raise AssertionError("minimal polynomial not found")

    def element_inverse(self, coords) -> tuple:
        n = self.degree
        mat = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            unit = [0] * n
            unit[j] = 1
            col = self.mul_frac_vecs(coords, unit)
            for i in range(n):
                mat[i][j] = col[i]
        one = self.one_coords()
        sol = _solve_square_fraction(mat, [Fraction(c) for c in one])
        if sol is None:
            raise ZeroDivisionError("element is zero")
        return tuple(sol)

    def one_coords(self) -> tuple:
        # b_0 = 1 by construction
        return tuple([1] + [0] * (self.degree - 1))

    def theta_coords(self) -> tuple:
        return self.power_to_integral([Fraction(0), Fraction(1)] + [Fraction(0)] * (self.degree - 2))

    # -- embeddings ---------------------------------------------------------

    def embeddings(self, precision: int = 128) -> "EmbeddingSet":
        if precision not in self._embeddings:
            self._embeddings[precision] = EmbeddingSet(self, precision)
        return self._embeddings[precision]

    # -- CM structure ---------------------------------------------------------

    def cm_structure(self):
        """Returns CMFieldData or None (cached)."""
        if not self._cm_tried:
            self._cm_tried = True
            self._cm_data = detect_cm(self)
        return self._cm_data

    def is_cm(self) -> bool:
        return self.cm_structure() is not None

    def key(self) -> str:
        """Canonical serialization: defining polynomial coefficients."""
        return "x" + ";".join(str(c) for c in self.defining_poly.coefficients)

    def __repr__(self):
        return f"NumberField({list(self.defining_poly.coefficients)}, disc={self.discriminant})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.defining_poly == other.defining_poly

    def __hash__(self):
        return hash(self.defining_poly)


class FieldElement:
    """Element of a NumberField by integral-basis coordinates (Fractions)."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        self.field = field
        self.coords = tuple(Fraction(c) for c in coords)
        if len(self.coords) != field.degree:
            raise ValueError("coordinate length mismatch")

    def __add__(self, other):
        return FieldElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return FieldElement(self.field, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return FieldElement(self.field, self.field.mul_frac_vecs(self.coords, other.coords))
        return FieldElement(self.field, [a * other for a in self.coords])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, FieldElement) and self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.field, self.coords))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.element_inverse(self.coords))

    def norm(self) -> Fraction:
        return self.field.element_norm(self.coords)

    def trace(self) -> Fraction:
        return self.field.element_trace(self.coords)

    def minpoly(self) -> tuple:
        return self.field.element_minpoly(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def int_coords(self) -> list:
        assert self.is_integral()
        return [int(c) for c in self.coords]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __repr__(self):
        return f"FieldElement({self.coords})"


class EmbeddingSet:
    """All complex embeddings of a field as certified root balls of the
    defining polynomial, canonically ordered by (re, im), with the
    conjugation pairing."""

    def __init__(self, field: NumberField, precision: int):
        from .exact.roots import complex_roots, conjugate_pairing
        self.field = field
        self.precision = precision
        self.roots = complex_roots(field.defining_poly, precision)
        old = balls.set_precision(max(precision, 64))
        try:
            self.pairing = conjugate_pairing(self.roots)
        finally:
            balls.set_precision(old)
        r1 = sum(1 for i, j in enumerate(self.pairing) if i == j)
        r2 = (len(self.roots) - r1) // 2
        if (r1, r2) != field.signature:
            raise PrecisionExhausted("embedding pairing disagrees with exact signature")
        self._theta_powers = None

    def count(self) -> int:
        return len(self.roots)

    def theta_powers(self):
        if self._theta_powers is None:
            old = balls.set_precision(max(self.precision, 64))
            try:
                n = self.field.degree
                out = []
                for r in self.roots:
                    powers = [ComplexBall.exact(1)]
                    for _ in range(n - 1):
                        powers.append(powers[-1] * r)
                    out.append(powers)
            finally:
                balls.set_precision(old)
            self._theta_powers = out
        return self._theta_powers

    def value(self, k: int, coords) -> ComplexBall:
        """Ball image of the element with given integral coords under embedding k."""
        old = balls.set_precision(max(self.precision, 64))
        try:
            pw = self.theta_powers()[k]
            p = self.field.integral_to_power(coords)
            acc = ComplexBall.exact(0)
            for i, c in enumerate(p):
                if c != 0:
                    acc = acc + ComplexBall.exact(c) * pw[i]
            return acc
        finally:
            balls.set_precision(old)


# -- construction -----------------------------------------------------------


def construct_field(f: IntPolynomial) -> NumberField:
    """Build the field Q[x]/(f) with a certified maximal order.

    Dedekind's criterion handles each prime whose square divides disc(f);
    where it fails, the order is enlarged (Dedekind step, then
    radical-multiplier rounds) until p-maximality is certified.
    """
    if not f.is_monic():
        raise Reducible("monic defining polynomial required")
    n = f.degree
    if n < 1:
        raise Reducible("constant polynomial")
    if not is_irreducible_q(f):
        raise Reducible(f"{f} is reducible over Q")

    disc_f = poly_discriminant(f)
    # signature by Sturm (exact)
    r1 = sturm_real_root_count(f)
    sig = (r1, (n - r1) // 2)

    den = 1
    w = IntMatrix.identity(n)
    index_sq = 1

    bad = [p for p, e in _factorint(abs(disc_f)).items() if e >= 2]
    for p in sorted(bad):
        den, w, gained = _p_maximalize(f, den, w, p)
        index_sq *= gained ** 2

    disc_k = disc_f // index_sq
    field = NumberField(f, den, w, disc_k, sig)
    field.mult_table()  # validates closure
    return field


def _polymul_mod(a: Sequence[int], b: Sequence[int], f: IntPolynomial) -> list:
    """Product of power-coordinate vectors reduced mod the monic f; int in/out."""
    n = f.degree
    out = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    # reduce degree >= n terms
    fc = f.coefficients
    for k in range(len(out) - 1, n - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            for i in range(n):
                out[k - n + i] -= c * fc[i]
    return out[:n]


def _adjugate(m: IntMatrix) -> IntMatrix:
    n = m.rows
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[m.data[r][c] for c in range(n) if c != i] for r in range(n) if r != j]
            from .exact.polys import _bareiss_det
            sign = -1 if (i + j) % 2 else 1
            out[i][j] = sign * (_bareiss_det(sub) if n > 1 else 1)
    return IntMatrix(out)


def _lcm_all(it) -> int:
    out = 1
    for d in it:
        out = out * d // gcd(out, d)
    return out


def _solve_linear_fraction(rows, target):
    """Solve sum_i x_i rows[i] = target over Q; returns list or None."""
    k = len(rows)
    if k == 0:
        return [] if all(c == 0 for c in target) else None
    n = len(target)
    aug = [[Fraction(rows[i][j]) for i in range(k)] + [Fraction(target[j])] for j in range(n)]
    # gaussian elimination on n x (k+1)
    pr = 0
    piv_cols = []
    for col in range(k):
        sel = None
        for r in range(pr, n):
            if aug[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        aug[pr], aug[sel] = aug[sel], aug[pr]
        pv = aug[pr][col]
        aug[pr] = [c / pv for c in aug[pr]]
        for r in range(n):
            if r != pr and aug[r][col] != 0:
                fac = aug[r][col]
                aug[r] = [a - fac * b for a, b in zip(aug[r], aug[pr])]
        piv_cols.append(col)
        pr += 1
    # consistency
    for r in range(pr, n):
        if aug[r][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for idx, col in enumerate(piv_cols):
        sol[col] = aug[idx][k]
    # verify (guards against free variables silently set to zero)
    for j in range(n):
        if sum(sol[i] * Fraction(rows[i][j]) for i in range(k)) != Fraction(target[j]):
            return None
    return sol


def _solve_square_fraction(mat, rhs):
    n = len(rhs)
    aug = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(rhs[i])] for i in range(n)]
    for col in range(n):
        sel = None
        for r in range(col, n):
            if aug[r][col] != 0:
                sel = r
                break
        if sel is None:
            return None
        aug[col], aug[sel] = aug[sel], aug[col]
        pv = aug[col][col]
        aug[col] = [c / pv for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                fac = aug[r][col]
                aug[r] = [a - fac * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def _p_maximalize(f: IntPolynomial, den: int, w: IntMatrix, p: int):
    """Certified p-maximal order containing (den, w); returns (den, w, gained_index).

    The Dedekind test on Z[theta] settles p-maximality outright for most
    primes; otherwise its enlargement seeds radical-multiplier rounds that
    run to the certified fixed point.
    """
    before = _index_gain(f, den, w, p)
    maximal, extra = _dedekind_step(f, p)
    if maximal:
        return den, w, 1
    if extra is not None:
        den, w = _enlarge_with_vectors(f, den, w, p, extra)
    while True:
        den2, w2, grew = _radical_multiplier_round(f, den, w, p)
        if not grew:
            break
        den, w = den2, w2
    return den, w, _index_gain(f, den, w, p) // before


def _p_val(n: int, p: int) -> int:
    v = 0
    n = abs(n)
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def _order_index_from(f, den, w) -> int:
    # index of Z[theta] in the order (den, w) = den^n / |det w|
    n = f.degree
    d = abs(w.det())
    num = den ** n
    assert num % d == 0
    return num // d


def _index_gain(f, den, w, p) -> int:
    return p ** _p_val(_order_index_from(f, den, w), p)


def _dedekind_step(f: IntPolynomial, p: int):
    """Dedekind criterion at p for Z[theta].
    Returns (is_p_maximal, enlargement_vectors or None)."""
    facs = factor_mod_p(f, p)
    gstar = IntPolynomial([1])
    hstar = IntPolynomial([1])
    for g, e in facs:
        gstar = gstar * g
        if e > 1:
            pw = g
            for _ in range(e - 2):
                pw = pw * g
            hstar = hstar * pw
    # lift product g*h* and form F = (g*h* - f)/p
    gh = gstar * hstar
    diff = gh - f
    fcap = IntPolynomial([c // p for c in diff.coefficients])
    assert all(c % p == 0 for c in diff.coefficients)
    dbar = _gcd_mod_p([fcap, gstar, hstar], p)
    if dbar.degree <= 0:
        return True, None
    # enlargement by (1/p) * (f_bar / d_bar)(theta) * Z[theta]
    ubar = _div_mod_p(f, dbar, p)
    n = f.degree
    vecs = []
    for i in range(n):
        shifted = _polymul_mod(list(ubar.coefficients), [0] * i + [1], f)
        vecs.append(shifted)
    return False, vecs


def _gcd_mod_p(polys, p) -> IntPolynomial:
    from .exact.modpoly import _gcd as gcd_fp, _trim
    acc = None
    for q in polys:
        cur = _trim([c % p for c in q.coefficients])
        acc = cur if acc is None else gcd_fp(acc, cur, p)
    return IntPolynomial(acc if acc else [])


def _div_mod_p(a: IntPolynomial, b: IntPolynomial, p: int) -> IntPolynomial:
    from .exact.modpoly import _exact_div, _trim
    q = _exact_div(_trim([c % p for c in a.coefficients]), _trim([c % p for c in b.coefficients]), p)
    return IntPolynomial(q)


def _enlarge_with_vectors(f, den, w, p, power_vecs):
    """Adjoin (1/p) * elements (given in power coords, integer over den) to the order."""
    n = f.degree
    # lattice in coordinates of (1/(den*p)) Z^n over power basis
    cols = []
    for j in range(n):
        cols.append([p * w.data[i][j] for i in range(n)])
    for v in power_vecs:
        cols.append([den * c for c in v])  # (1/p)*v in den*p scaling
    m = IntMatrix([[cols[j][i] for j in range(len(cols))] for i in range(n)])
    h = nonzero_columns(hnf(m)[0])
    den2 = den * p
    # normalize gcd
    g = den2
    for row in h.data:
        for c in row:
            g = gcd(g, c)
    if g > 1:
        h = IntMatrix([[c // g for c in row] for row in h.data])
        den2 //= g
    return den2, h


def _radical_multiplier_round(f: IntPolynomial, den: int, w: IntMatrix, p: int):
    """One Pohst-Zassenhaus round: multiplier ring of the p-radical.
    Returns (den', w', grew)."""
    n = f.degree
    field = NumberField(f, den, w, 0, (0, 0))
    t = field.mult_table()

    # Frobenius matrix of x -> x^(p^m) on O/pO
    m_exp = 1
    while p ** m_exp < n:
        m_exp += 1
    frob_cols = []
    for j in range(n):
        e = [0] * n
        e[j] = 1
        acc = e
        for _ in range(m_exp):
            acc = _pow_p_mod(field, acc, p)
        frob_cols.append([c % p for c in acc])
    # kernel of Frobenius over F_p
    ker = _nullspace_mod_p([[frob_cols[j][i] for j in range(n)] for i in range(n)], p)

    # radical lattice R (in O-coordinates): span(ker lifts) + p*O
    cols = [[p if i == j else 0 for i in range(n)] for j in range(n)]
    for v in ker:
        cols.append(v)
    rmat = IntMatrix([[cols[j][i] for j in range(len(cols))] for i in range(n)])
    rh = nonzero_columns(hnf(rmat)[0])  # n x n, radical basis in O-coords

    # multiplier condition: y s.t. y * r_k in p*R for all k  <=>  (1/p) y in O'
    rows = []
    rbasis = [[rh.data[i][k] for i in range(n)] for k in range(n)]
    for rk in rbasis:
        prods = []
        for j in range(n):
            e = [0] * n
            e[j] = 1
            prods.append(field.mul_int_vecs(e, rk))  # b_j * r_k in O-coords
        # coordinates w.r.t. R basis:  solve rh * z = prod (integer since R is an ideal)
        for j in range(n):
            z = solve_triangular_membership(rh, prods[j])
            assert z is not None, "radical is not an ideal?"
            prods[j] = z
        # condition on y-coords: sum_j y_j * prods[j] == 0 mod p, per coordinate
        for coord in range(n):
            rows.append([prods[j][coord] % p for j in range(n)])
    sols = _nullspace_mod_p(rows, p)
    if not sols:
        return den, w, False
    # O' = O + (1/p) * span(sols)
    cols = [[p * w.data[i][j] for i in range(n)] for j in range(n)]
    for y in sols:
        # y in O-coords -> power coords numerator over den
        vec = [0] * n
        for j, yj in enumerate(y):
            if yj:
                for i in range(n):
                    vec[i] += yj * w.data[i][j]
        cols.append(vec)
    m = IntMatrix([[cols[j][i] for j in range(len(cols))] for i in range(n)])
    h = nonzero_columns(hnf(m)[0])
    den2 = den * p
    g = den2
    for row in h.data:
        for c in row:
            g = gcd(g, c)
    if g > 1:
        h = IntMatrix([[c // g for c in row] for row in h.data])
        den2 //= g
    grew = (den2 != den) or (h != w)
    return den2, h, grew


def _pow_p_mod(field: NumberField, coords: list, p: int) -> list:
    """coords^p mod p in O/pO via square-and-multiply."""
    result = None
    base = [c % p for c in coords]
    e = p
    while e:
        if e & 1:
            result = base if result is None else [c % p for c in field.mul_int_vecs(result, base)]
        e >>= 1
        if e:
            base = [c % p for c in field.mul_int_vecs(base, base)]
    return result


def _nullspace_mod_p(rows, p) -> list:
    """Nullspace basis of the given matrix over F_p (list of int vectors)."""
    if not rows:
        return []
    ncols = len(rows[0])
    mat = [[c % p for c in row] for row in rows]
    nrows = len(mat)
    piv_of_col = [-1] * ncols
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if mat[i][c]:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                fac = mat[i][c]
                mat[i] = [(a - fac * b) % p for a, b in zip(mat[i], mat[r])]
        piv_of_col[c] = r
        r += 1
    basis = []
    for c in range(ncols):
        if piv_of_col[c] == -1:
            v = [0] * ncols
            v[c] = 1
            for c2 in range(ncols):
                pr = piv_of_col[c2]
                if pr != -1:
                    v[c2] = (-mat[pr][c]) % p
            basis.append(v)
    return basis


# -- CM detection ------------------------------------------------------------


class CMFieldData:
    """Complex conjugation and the totally real subfield of a CM field."""

    __slots__ = ("field", "conj_matrix", "real_subfield", "real_embed", "real_gen_coords")

    def __init__(self, field, conj_matrix, real_subfield, real_embed, real_gen_coords):
        self.field = field
        self.conj_matrix = conj_matrix          # IntMatrix-like: Fractions on integral basis
        self.real_subfield = real_subfield      # NumberField E0
        self.real_embed = real_embed            # rows: E0 integral basis -> E integral coords (Fractions)
        self.real_gen_coords = real_gen_coords  # coords in E of E0's theta

    def conj_coords(self, coords):
        n = self.field.degree
        return tuple(sum(self.conj_matrix[i][j] * Fraction(coords[j]) for j in range(n)) for i in range(n))

    def embed_real(self, coords0):
        n0 = self.real_subfield.degree
        n = self.field.degree
        return tuple(sum(Fraction(coords0[k]) * self.real_embed[k][i] for k in range(n0)) for i in range(n))

    def restrict_to_real(self, coords):
        """Inverse of embed_real on its image; raises if not in the subfield."""
        rows = [list(self.real_embed[k]) for k in range(self.real_subfield.degree)]
        sol = _solve_linear_fraction(rows, [Fraction(c) for c in coords])
        if sol is None:
            raise ValueError("element not in the real subfield")
        return tuple(sol)


def detect_cm(field: NumberField) -> Optional[CMFieldData]:
    """CM test for degree 2 and 4: totally imaginary with a totally real
    subfield of index 2; returns the conjugation and the subfield or None."""
    n = field.degree
    if n not in (2, 4):
        return None
    if field.signature[0] != 0:
        return None
    if n == 2:
        # conjugation theta -> -theta - a1 (the other root)
        a1 = field.defining_poly[1]
        theta = field.theta_coords()
        img = tuple(-Fraction(c) for c in theta)
        img = tuple(a - (Fraction(a1) if i == 0 else 0) for i, a in enumerate(img))
        conj = _automorphism_matrix(field, img)
        rational = rational_field()
        embed = [tuple(Fraction(c) for c in field.one_coords())]
        return CMFieldData(field, conj, rational, embed, field.one_coords())

    # quartic: find the conjugation automorphism
    conj_img = _find_conjugation_quartic(field)
    if conj_img is None:
        return None
    conj = _automorphism_matrix(field, conj_img)
    # real subfield generator: theta + conj(theta), or theta*conj(theta) if degenerate
    theta = field.theta_coords()
    cand1 = tuple(Fraction(a) + b for a, b in zip(theta, conj_img))
    cands = [cand1, field.mul_frac_vecs(theta, conj_img)]
    for u in cands:
        mp = field.element_minpoly(u)
        if len(mp) - 1 == 2:
            den = _lcm_all(c.denominator for c in mp)
            mp_int = IntPolynomial([int(c * den) for c in mp])
            if den == 1 and mp_int.is_monic():
                e0 = construct_field(mp_int)
            else:
                # scale generator to an algebraic integer: den*u has monic integer minpoly
                u = tuple(c * den for c in u)
                mp2 = field.element_minpoly(u)
                e0 = construct_field(IntPolynomial([int(c) for c in mp2]))
            if e0.signature != (2, 0):
                continue
            embed = _subfield_embedding(field, e0, u)
            return CMFieldData(field, conj, e0, embed, u)
    return None


def _automorphism_matrix(field: NumberField, image_of_theta):
    """Matrix (rows) of the automorphism sending theta to the given element,
    acting on integral-basis coordinates; verified to fix the basis ring."""
    n = field.degree
    # powers of the image in integral coords
    powers = [tuple(Fraction(c) for c in field.one_coords())]
    for _ in range(n - 1):
        powers.append(field.mul_frac_vecs(powers[-1], image_of_theta))
    # basis element b_j = (1/den) sum_i W[i][j] theta^i  ->  image
    mat = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        img = [Fraction(0)] * n
        for i in range(n):
            cij = field.basis_mat.data[i][j]
            if cij:
                img = [a + Fraction(cij) * b for a, b in zip(img, powers[i])]
        img = [a / field.den for a in img]
        for i in range(n):
            mat[i][j] = img[i]
    for row in mat:
        for c in row:
            if c.denominator != 1:
                raise RecognitionFailure("automorphism does not preserve the maximal order")
    return mat


def _find_conjugation_quartic(field: NumberField):
    """Integral coords of conj(theta) as an element of the field, or None."""
    f = field.defining_poly
    # fast path: even defining polynomial whose roots certifiably satisfy
    # conj(r) = -r (ball overlap + disjointness make the matching rigorous)
    if all(f[i] == 0 for i in (1, 3)):
        es = field.embeddings(96)
        old = balls.set_precision(96)
        try:
            ok = all(not es.roots[k].conj().disjoint(-es.roots[k]) for k in range(4))
        finally:
            balls.set_precision(old)
        if ok:
            theta = field.theta_coords()
            return tuple(-Fraction(c) for c in theta)
    # general path: roots of f in the field; conjugation numerically matched
    roots = roots_in_field(f, field)
    if len(roots) < 2:
        return None
    es = field.embeddings(128)
    k0 = 0
    target = es.roots[k0].conj()
    for y in roots:
        val = es.value(k0, y)
        if not val.disjoint(target):
            # candidate conjugation; must be an involution and not identity
            theta = field.theta_coords()
            if tuple(Fraction(c) for c in y) == tuple(Fraction(c) for c in theta):
                continue
            try:
                mat = _automorphism_matrix(field, y)
            except RecognitionFailure:
                continue
            # involution check: applying twice fixes theta
            twice = tuple(sum(mat[i][j] * Fraction(y[j]) for j in range(field.degree))
                          for i in range(field.degree))
            if twice == tuple(Fraction(c) for c in theta):
                return tuple(Fraction(c) for c in y)
    return None


def _subfield_embedding(field: NumberField, sub: NumberField, gen_coords):
    """Rows: images of sub's integral basis inside field (Fraction coords)."""
    n0 = sub.degree
    # powers of gen in field coords
    powers = [tuple(Fraction(c) for c in field.one_coords())]
    for _ in range(n0 - 1):
        powers.append(field.mul_frac_vecs(powers[-1], gen_coords))
    rows = []
    for j in range(n0):
        img = [Fraction(0)] * field.degree
        for i in range(n0):
            cij = Fraction(sub.basis_mat.data[i][j], sub.den)
            if cij:
                img = [a + cij * b for a, b in zip(img, powers[i])]
        rows.append(tuple(img))
    return rows


def roots_in_field(g: IntPolynomial, field: NumberField, precision: int = 192) -> list:
    """All y in the field with g(y) = 0, as integral-coordinate tuples.

    Embedding-assignment enumeration: candidate coordinate vectors are read
    off a ball linear solve against the embedding matrix and then verified
    exactly; g must have integral roots (monic integer g), which covers
    defining polynomials and cyclotomics.
    """
    n = field.degree
    if not g.is_monic():
        raise ValueError("monic integer polynomial expected")
    from .exact.roots import complex_roots
    for prec in (precision, 2 * precision, 4 * precision):
        try:
            groots = complex_roots(g, prec)
        except PrecisionExhausted:
            continue
        es = field.embeddings(prec)
        old = balls.set_precision(prec)
        try:
            found = _roots_by_assignment(g, field, es, groots)
        except RecognitionFailure:
            found = None
        finally:
            balls.set_precision(old)
        if found is not None:
            return found
    raise RecognitionFailure("could not certify root recognition")


def _roots_by_assignment(g, field, es, groots):
    n = field.degree
    pairing = es.pairing
    groot_conj = [None] * len(groots)
    for i, r in enumerate(groots):
        rc = r.conj()
        matches = [j for j, s in enumerate(groots) if not rc.disjoint(s)]
        if len(matches) != 1:
            raise RecognitionFailure("conjugate matching ambiguous")
        groot_conj[i] = matches[0]

    # free embedding indices: one per conjugate pair + all real
    free = []
    seen = set()
    for k in range(n):
        if k in seen:
            continue
        free.append(k)
        seen.add(k)
        seen.add(pairing[k])

    # embedding matrix V[k][j] = value of basis b_j under embedding k
    v = [[es.value(k, _unit(n, j)) for j in range(n)] for k in range(n)]

    results = []
    seen_results = set()
    import itertools
    for choice in itertools.product(range(len(groots)), repeat=len(free)):
        assign = [None] * n
        ok = True
        for idx, k in enumerate(free):
            assign[k] = choice[idx]
            kk = pairing[k]
            cc = groot_conj[choice[idx]]
            if kk == k:
                if cc != choice[idx]:
                    ok = False
                    break
            else:
                if assign[kk] is not None and assign[kk] != cc:
                    ok = False
                    break
                assign[kk] = cc
        if not ok:
            continue
        rhs = [groots[assign[k]] for k in range(n)]
        coords = _ball_solve_integer(v, rhs)
        if coords is None:
            continue
        key = tuple(coords)
        if key in seen_results:
            continue
        # exact verification: g(y) == 0 in the field
        y = tuple(Fraction(c) for c in coords)
        acc = tuple(Fraction(0) for _ in range(n))
        one = tuple(Fraction(c) for c in field.one_coords())
        for c in reversed(g.coefficients):
            acc = field.mul_frac_vecs(acc, y)
            acc = tuple(a + Fraction(c) * o for a, o in zip(acc, one))
        if all(c == 0 for c in acc):
            seen_results.add(key)
            results.append(y)
    return results


def _unit(n, j):
    v = [0] * n
    v[j] = 1
    return v


def _ball_solve_integer(v, rhs):
    """Solve V x = rhs by ball Gaussian elimination; return integer vector if
    every solution ball certifies a unique integer, else None."""
    n = len(rhs)
    aug = [[v[i][j] for j in range(n)] + [rhs[i]] for i in range(n)]
    try:
        for col in range(n):
            sel = max(range(col, n), key=lambda r: float(aug[r][col].abs_lower()))
            if aug[sel][col].abs_lower() <= 0:
                return None
            aug[col], aug[sel] = aug[sel], aug[col]
            pivinv = aug[col][col].reciprocal()
            aug[col] = [c * pivinv for c in aug[col]]
            for r in range(n):
                if r != col:
                    fac = aug[r][col]
                    if fac.abs_upper() != 0:
                        aug[r] = [a - fac * b for a, b in zip(aug[r], aug[col])]
    except ZeroDivisionError:
        return None
    out = []
    for i in range(n):
        ball = aug[i][n]
        if float(ball.rad) > 0.25 or abs(float(ball.im)) - float(ball.rad) > 0:
            return None
        cand = int(round(float(ball.re)))
        with gmpy2.context(precision=64, round=gmpy2.RoundUp):
            err = abs(ball.re - cand) + ball.rad
        if not err < 0.5:
            return None
        if not abs(float(ball.im)) + float(ball.rad) < 0.5:
            return None
        out.append(cand)
    return out


def is_isomorphic(k1: NumberField, k2: NumberField) -> bool:
    if k1.degree != k2.degree:
        return False
    if k1.discriminant != k2.discriminant:
        return False
    if k1.defining_poly == k2.defining_poly:
        return True
    return bool(roots_in_field(k1.defining_poly, k2))


_RATIONAL_FIELD = None


def rational_field() -> NumberField:
    """Q represented as Q[x]/(x - 1); disc 1, class number 1."""
    global _RATIONAL_FIELD
    if _RATIONAL_FIELD is None:
        _RATIONAL_FIELD = construct_field(IntPolynomial([-1, 1]))
    return _RATIONAL_FIELD


def quadratic_field(d_fund: int) -> NumberField:
    """Field of fundamental discriminant D, with the monogenic generator."""
    if d_fund % 4 == 1:
        f = IntPolynomial([(1 - d_fund) // 4, -1, 1])
    elif d_fund % 4 == 0:
        f = IntPolynomial([-d_fund // 4, 0, 1])
    else:
        raise ValueError("discriminant must be 0 or 1 mod 4")
    k = construct_field(f)
    assert k.discriminant == d_fund, (k.discriminant, d_fund)
    return k


def is_fundamental_discriminant(d: int) -> bool:
    if d == 0 or d == 1:
        return False
    m = d % 4
    if m == 1:
        return _is_squarefree_int(d)
    if m == 0:
        q = d // 4
        qm = q % 4
        return _is_squarefree_int(q) and (qm == 2 or qm == 3)
    return False


def _is_squarefree_int(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    for p, e in _factorint(n).items():
        if e >= 2:
            return False
    return True
