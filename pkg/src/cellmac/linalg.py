"""Exact dense linear algebra over the rationals and over GF(p).

Matrices store rows as Python lists: Fraction entries for the rationals,
ints in 0..p-1 for GF(p).  All eliminations use first-nonzero pivoting
scanned row-major, so every derived object (rref, pivots, kernel and
image bases, solutions) is deterministic.

Rank queries on integer rational matrices take a fraction-free integer
elimination path; GF(p) reductions are delegated to the kernels in gfp.
"""

from fractions import Fraction
from math import gcd

import numpy as np

from . import gfp
from .fields import QQ, Field


class Matrix:
    def __init__(self, rows, field=QQ, ncols=None):
        self.field = field
        self.rows = [[field(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            assert all(len(r) == self.ncols for r in self.rows)
            assert ncols is None or ncols == self.ncols
        else:
            self.ncols = 0 if ncols is None else ncols

    @classmethod
    def zeros(cls, nrows, ncols, field=QQ):
        z = field.zero
        return cls([[z] * ncols for _ in range(nrows)], field, ncols=ncols)

    @classmethod
    def identity(cls, n, field=QQ):
        m = cls.zeros(n, n, field)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, cols, nrows, field=QQ):
        m = cls.zeros(nrows, len(cols), field)
        for j, c in enumerate(cols):
            assert len(c) == nrows
            for i in range(nrows):
                m.rows[i][j] = field(c[i])
        return m

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def copy(self):
        m = Matrix.__new__(Matrix)
        m.field = self.field
        m.rows = [row[:] for row in self.rows]
        m.nrows = self.nrows
        m.ncols = self.ncols
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, v):
        i, j = ij
        self.rows[i][j] = self.field(v)

    def column(self, j):
        return [row[j] for row in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self):
        t = Matrix.__new__(Matrix)
        t.field = self.field
        t.rows = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        t.nrows = self.ncols
        t.ncols = self.nrows
        return t

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self.rows == other.rows
        )

    def is_zero(self):
        z = self.field.zero
        return all(x == z for row in self.rows for x in row)

    def __add__(self, other):
        assert self.shape == other.shape and self.field == other.field
        f = self.field
        return Matrix(
            [[f.add(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            f,
            ncols=self.ncols,
        )

    def __sub__(self, other):
        assert self.shape == other.shape and self.field == other.field
        f = self.field
        return Matrix(
            [[f.sub(a, b) for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
            f,
            ncols=self.ncols,
        )

    def __neg__(self):
        f = self.field
        return Matrix([[f.neg(a) for a in row] for row in self.rows], f, ncols=self.ncols)

    def scale(self, c):
        f = self.field
        c = f(c)
        return Matrix([[f.mul(c, a) for a in row] for row in self.rows], f, ncols=self.ncols)

    def __matmul__(self, other):
        assert self.ncols == other.nrows and self.field == other.field
        f = self.field
        out = Matrix.zeros(self.nrows, other.ncols, f)
        for i, row in enumerate(self.rows):
            orow = out.rows[i]
            for k, a in enumerate(row):
                if a == f.zero:
                    continue
                brow = other.rows[k]
                for j, b in enumerate(brow):
                    if b != f.zero:
                        orow[j] = f.add(orow[j], f.mul(a, b))
        return out

    def apply(self, vec):
        """Matrix-vector product."""
        f = self.field
        assert len(vec) == self.ncols
        out = []
        for row in self.rows:
            s = f.zero
            for a, x in zip(row, vec):
                if a != f.zero and x != f.zero:
                    s = f.add(s, f.mul(a, x))
            out.append(s)
        return out

    def is_integral(self):
        return self.field.char == 0 and all(
            x.denominator == 1 for row in self.rows for x in row
        )

    # ---- elimination ----

    def rref(self):
        """Returns (rref Matrix, pivot column list)."""
        if self.field.char != 0:
            arr = np.array([[int(x) for x in row] for row in self.rows], dtype=np.int64)
            arr = arr.reshape(self.nrows, self.ncols)
            red, pivots = gfp.rref_mod_p(arr, self.field.char)
            out = Matrix.__new__(Matrix)
            out.field = self.field
            out.rows = [[int(v) for v in red[i]] for i in range(self.nrows)]
            out.nrows, out.ncols = self.nrows, self.ncols
            return out, pivots
        return self._rref_fraction()

    def _rref_fraction(self):
        r = [row[:] for row in self.rows]
        m, n = self.nrows, self.ncols
        pivots = []
        row = 0
        for col in range(n):
            if row == m:
                break
            sel = -1
            for i in range(row, m):
                if r[i][col] != 0:
                    sel = i
                    break
            if sel < 0:
                continue
            if sel != row:
                r[sel], r[row] = r[row], r[sel]
            pv = r[row][col]
            if pv != 1:
                inv = 1 / pv
                r[row] = [x * inv for x in r[row]]
            prow = r[row]
            for i in range(m):
                if i != row and r[i][col] != 0:
                    f = r[i][col]
                    r[i] = [x - f * y for x, y in zip(r[i], prow)]
            pivots.append(col)
            row += 1
        out = Matrix.__new__(Matrix)
        out.field = self.field
        out.rows = r
        out.nrows, out.ncols = m, n
        return out, pivots

    def rank(self):
        if self.nrows == 0 or self.ncols == 0:
            return 0
        if self.field.char != 0:
            return len(self.rref()[1])
        # scaling rows to integers preserves rank
        rows = []
        for row in self.rows:
            lcm = 1
            for x in row:
                d = x.denominator
                if d != 1:
                    lcm = lcm * d // gcd(lcm, d)
            rows.append([int(x * lcm) for x in row] if lcm != 1 else [x.numerator for x in row])
        return _int_rank(rows, self.ncols)

    def pivot_columns(self):
        return self.rref()[1]

    def kernel_basis(self):
        """Basis vectors of the right kernel, one per free column."""
        red, pivots = self.rref()
        f = self.field
        pivset = set(pivots)
        basis = []
        for free in range(self.ncols):
            if free in pivset:
                continue
            v = [f.zero] * self.ncols
            v[free] = f.one
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(red.rows[i][free])
            basis.append(v)
        return basis

    def image_basis(self):
        """Original columns at the pivot positions."""
        return [self.column(j) for j in self.pivot_columns()]

    def solve(self, b):
        """One solution of A x = b (free coordinates zero), or None."""
        sol = self.solve_many(Matrix.from_columns([b], self.nrows, self.field))
        return sol.column(0) if sol is not None else None

    def solve_many(self, B):
        """Solve A X = B columnwise; returns X as a Matrix, or None."""
        assert B.nrows == self.nrows and B.field == self.field
        f = self.field
        aug = Matrix.__new__(Matrix)
        aug.field = f
        aug.rows = [self.rows[i] + B.rows[i] for i in range(self.nrows)]
        aug.nrows = self.nrows
        aug.ncols = self.ncols + B.ncols
        red, pivots = aug.rref()
        for p in pivots:
            if p >= self.ncols:
                return None
        X = Matrix.zeros(self.ncols, B.ncols, f)
        for i, p in enumerate(pivots):
            X.rows[p] = red.rows[i][self.ncols :]
        return X

    def cokernel_representatives(self):
        """Row indices i whose basis vectors e_i span k^m modulo the column space."""
        f = self.field
        aug = Matrix.__new__(Matrix)
        aug.field = f
        eye = Matrix.identity(self.nrows, f)
        aug.rows = [self.rows[i] + eye.rows[i] for i in range(self.nrows)]
        aug.nrows = self.nrows
        aug.ncols = self.ncols + self.nrows
        pivots = aug.rref()[1]
        return [p - self.ncols for p in pivots if p >= self.ncols]

    def __repr__(self):
        return f"Matrix({self.nrows}x{self.ncols} over {self.field})"


def hstack(a, b):
    assert a.nrows == b.nrows and a.field == b.field
    m = Matrix.__new__(Matrix)
    m.field = a.field
    m.rows = [ra + rb for ra, rb in zip(a.rows, b.rows)]
    m.nrows = a.nrows
    m.ncols = a.ncols + b.ncols
    return m


def vstack(a, b):
    assert a.ncols == b.ncols and a.field == b.field
    m = Matrix.__new__(Matrix)
    m.field = a.field
    m.rows = [r[:] for r in a.rows] + [r[:] for r in b.rows]
    m.nrows = a.nrows + b.nrows
    m.ncols = a.ncols
    return m


def extend_basis(base, candidates, nrows, field):
    """Indices of candidate columns extending base to a basis of the joint span.

    base and candidates are lists of column vectors of length nrows.
    """
    m = Matrix.from_columns(list(base) + list(candidates), nrows, field)
    pivots = m.rref()[1]
    nb = len(base)
    return [p - nb for p in pivots if p >= nb]


def _int_rank(rows, ncols):
    """Rank of an integer matrix by fraction-free elimination."""
    live = [row for row in rows if any(row)]
    rank = 0
    top = 0
    for col in range(ncols):
        if top == len(live):
            break
        sel = -1
        for i in range(top, len(live)):
            if live[i][col]:
                sel = i
                break
        if sel < 0:
            continue
        live[top], live[sel] = live[sel], live[top]
        prow = live[top]
        pv = prow[col]
        nxt = top + 1
        for i in range(top + 1, len(live)):
            r = live[i]
            lv = r[col]
            if lv:
                r = [x * pv - y * lv for x, y in zip(r, prow)]
                g = 0
                for x in r:
                    if x:
                        g = gcd(g, x)
                        if g == 1:
                            break
                if g > 1:
                    r = [x // g for x in r]
                if g == 0:
                    continue
            live[nxt] = r
            nxt += 1
        del live[nxt:]
        rank += 1
        top += 1
    return rank
