"""Exact integer matrices: column-style Hermite normal form with unimodular
transform, Smith normal form with optional transforms, determinants, kernels,
and lattice utilities used by ideal arithmetic and class-group linear algebra.
"""

from __future__ import annotations

from typing import Sequence


class IntMatrix:
    """Dense integer matrix. ``data`` is a list of row lists."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[int]]):
        self.data = [[int(x) for x in row] for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @property
    def entries(self) -> list:
        """Row-major flat entry list."""
        return [x for row in self.data for x in row]

    def copy(self) -> "IntMatrix":
        return IntMatrix([row[:] for row in self.data])

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash((self.rows, self.cols) + tuple(self.entries))

    def __repr__(self):
        return f"IntMatrix({self.data})"

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = other.transpose().data
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.data])

    def mul_vec(self, v: Sequence[int]) -> list:
        return [sum(a * b for a, b in zip(row, v)) for row in self.data]

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        from .polys import _bareiss_det
        return _bareiss_det([row[:] for row in self.data])


def hnf(m: IntMatrix) -> tuple:
    """Column-style Hermite normal form.

    Returns (H, U) with U unimodular and m*U = H.  H is in column echelon
    form: pivot rows strictly increase across the leading nonzero columns,
    pivots are positive, entries left of a pivot in its row lie in
    [0, pivot), and entries right of a pivot in its row are zero.  Zero
    columns, if any, end up rightmost.  Total on all inputs.
    """
    nrows, ncols = m.rows, m.cols
    cols = [[m.data[i][j] for i in range(nrows)] for j in range(ncols)]
    u = [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]  # columns of U

    def sub_col(j, jsrc, q, row_start):
        # col_j -= q * col_jsrc, tracked in U
        cj, cs = cols[j], cols[jsrc]
        for r in range(row_start, nrows):
            cj[r] -= q * cs[r]
        uj, us = u[j], u[jsrc]
        for r in range(ncols):
            uj[r] -= q * us[r]

    piv = 0
    for i in range(nrows):
        if piv == ncols:
            break
        # invariant: columns piv.. have zeros in all rows < i
        while True:
            j_nz = [j for j in range(piv, ncols) if cols[j][i] != 0]
            if not j_nz:
                break
            jmin = min(j_nz, key=lambda j: abs(cols[j][i]))
            if jmin != piv:
                cols[piv], cols[jmin] = cols[jmin], cols[piv]
                u[piv], u[jmin] = u[jmin], u[piv]
            a = cols[piv][i]
            reduced_all = True
            for j in range(piv + 1, ncols):
                cji = cols[j][i]
                if cji:
                    q = cji // a
                    if q:
                        sub_col(j, piv, q, i)
                    if cols[j][i]:
                        reduced_all = False
            if reduced_all:
                break
        if cols[piv][i] == 0:
            continue  # no pivot in this row
        if cols[piv][i] < 0:
            cols[piv] = [-x for x in cols[piv]]
            u[piv] = [-x for x in u[piv]]
        # canonical reduction of earlier pivot columns at this row
        p = cols[piv][i]
        for j in range(piv):
            q = cols[j][i] // p
            if q:
                sub_col(j, piv, q, i)
        piv += 1

    h = IntMatrix([[cols[j][i] for j in range(ncols)] for i in range(nrows)])
    ut = IntMatrix([[u[j][i] for j in range(ncols)] for i in range(ncols)])
    return h, ut


def hnf_only(m: IntMatrix) -> IntMatrix:
    return hnf(m)[0]


def nonzero_columns(h: IntMatrix) -> IntMatrix:
    """Drop zero columns of an HNF result (keeps order)."""
    keep = [j for j in range(h.cols) if any(h.data[i][j] for i in range(h.rows))]
    return IntMatrix([[h.data[i][j] for j in keep] for i in range(h.rows)])


def snf(m: IntMatrix) -> list:
    """Smith normal form diagonal: d1 | d2 | ... | dr positive, then zeros."""
    diag, _ = smith_normal_form(m, want_transform=False)
    return diag


def smith_normal_form(m: IntMatrix, want_transform: bool = True):
    """Returns (diag, U) where U is unimodular (rows x rows) and U*m*V is
    diag for some unimodular V.  U carries cokernel coordinates: the class of
    e_i in Z^rows / col-span(m) has coordinates (U e_i) mod diag.
    """
    a = [row[:] for row in m.data]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)] if want_transform else None
    n = min(nrows, ncols)

    def row_sub(i1, i2, q):
        r1, r2 = a[i1], a[i2]
        for k in range(ncols):
            r1[k] -= q * r2[k]
        if u is not None:
            w1, w2 = u[i1], u[i2]
            for k in range(nrows):
                w1[k] -= q * w2[k]

    def row_swap(i1, i2):
        a[i1], a[i2] = a[i2], a[i1]
        if u is not None:
            u[i1], u[i2] = u[i2], u[i1]

    t = 0
    while t < n:
        best = None
        for i in range(t, nrows):
            ri = a[i]
            for j in range(t, ncols):
                v = ri[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if abs(v) == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            for r in a:
                r[t], r[bj] = r[bj], r[t]
        while True:
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    row_sub(i, t, q)
                    if a[i][t]:
                        row_swap(t, i)
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for r in a:
                        r[j] -= q * r[t]
                    if a[t][j]:
                        for r in a:
                            r[t], r[j] = r[j], r[t]
                        dirty = True
            if not dirty:
                break
        # keep the divisibility chain: pivot must divide the rest of the block
        p = a[t][t]
        ok = True
        for i in range(t + 1, nrows):
            ri = a[i]
            for j in range(t + 1, ncols):
                if ri[j] % p != 0:
                    row_sub(t, i, -1)  # fold row i into row t, redo this pivot
                    ok = False
                    break
            if not ok:
                break
        if ok:
            if a[t][t] < 0:
                for j in range(ncols):
                    a[t][j] = -a[t][j]
                if u is not None:
                    for j in range(nrows):
                        u[t][j] = -u[t][j]
            t += 1

    diag = [abs(a[i][i]) if i < n else 0 for i in range(n)]
    return diag, (IntMatrix(u) if want_transform else None)


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of {x in Z^cols : m x = 0}, as columns of the returned matrix."""
    h, u = hnf(m)
    zero_cols = [j for j in range(h.cols) if all(h.data[i][j] == 0 for i in range(h.rows))]
    return IntMatrix([[u.data[i][j] for j in zero_cols] for i in range(u.rows)])


def solve_triangular_membership(h: IntMatrix, v: Sequence[int]):
    """Solve H x = v in integers for H of full column rank in column-HNF.
    Returns the coordinate list or None when v is outside the column span."""
    nrows, ncols = h.rows, h.cols
    piv_rows = []
    r = 0
    for j in range(ncols):
        while r < nrows and h.data[r][j] == 0:
            r += 1
        if r == nrows:
            raise ValueError("matrix not of full column rank")
        piv_rows.append(r)
    x = [0] * ncols
    rem = [int(t) for t in v]
    for j in range(ncols):
        pr = piv_rows[j]
        q, rmd = divmod(rem[pr], h.data[pr][j])
        if rmd != 0:
            return None
        x[j] = q
        if q:
            for i in range(pr, nrows):
                rem[i] -= q * h.data[i][j]
    if any(rem):
        return None
    return x


def lattice_index(h: IntMatrix) -> int:
    """|det| of a square column-HNF basis, i.e. the sublattice index."""
    if h.rows != h.cols:
        raise ValueError("square matrix expected")
    out = 1
    for i in range(h.rows):
        out *= h.data[i][i]
    return abs(out)
