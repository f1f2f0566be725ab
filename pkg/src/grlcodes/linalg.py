"""Dense exact linear algebra over a FieldCtx.

Matrices are immutable-by-convention: operations return new objects.
Entries are log-form ints as in :mod:`grlcodes.gf`.
"""

from __future__ import annotations

from .gf import ZERO, FieldCtx, NotASquareField


class ShapeMismatch(ValueError):
    pass


class FieldMismatch(ValueError):
    pass


class Matrix:
    __slots__ = ("ctx", "rows", "cols", "data")

    def __init__(self, ctx: FieldCtx, data):
        data = [list(row) for row in data]
        cols = len(data[0]) if data else 0
        for row in data:
            if len(row) != cols:
                raise ShapeMismatch("ragged rows")
        self.ctx = ctx
        self.rows = len(data)
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, ctx, rows, cols):
        return cls(ctx, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, ctx, k):
        m = cls.zeros(ctx, k, k)
        for i in range(k):
            m.data[i][i] = 0
        return m

    @classmethod
    def from_strs(cls, ctx, rows):
        return cls(ctx, [[ctx.parse(s) for s in row] for row in rows])

    def to_strs(self):
        fmt = self.ctx.fmt
        return [[fmt(a) for a in row] for row in self.data]

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.ctx is other.ctx
                and self.data == other.data)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over GF({self.ctx.q}))"

    def copy(self):
        return Matrix(self.ctx, self.data)

    def col(self, j):
        return [row[j] for row in self.data]


def _check_same_field(a: Matrix, b: Matrix):
    if a.ctx is not b.ctx:
        raise FieldMismatch("matrices over different field contexts")


def transpose(m: Matrix) -> Matrix:
    return Matrix(m.ctx, [[m.data[i][j] for i in range(m.rows)]
                          for j in range(m.cols)])


def conj_transpose(m: Matrix) -> Matrix:
    """Transpose with entrywise x -> x^q; needs a square field."""
    if m.ctx.m % 2 != 0:
        raise NotASquareField("conjugate transpose needs GF(q^2)")
    frob = m.ctx.frob
    return Matrix(m.ctx, [[frob(m.data[i][j]) for i in range(m.rows)]
                          for j in range(m.cols)])


def conjugate(m: Matrix) -> Matrix:
    """Entrywise x -> x^q; needs a square field."""
    if m.ctx.m % 2 != 0:
        raise NotASquareField("conjugation needs GF(q^2)")
    frob = m.ctx.frob
    return Matrix(m.ctx, [[frob(a) for a in row] for row in m.data])


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _check_same_field(a, b)
    if a.cols != b.rows:
        raise ShapeMismatch(f"{a.rows}x{a.cols} times {b.rows}x{b.cols}")
    ctx = a.ctx
    n = ctx.n
    zech = ctx.zech
    bt = [[b.data[i][j] for i in range(b.rows)] for j in range(b.cols)]
    out = []
    for arow in a.data:
        orow = []
        for bcol in bt:
            acc = ZERO
            for x, y in zip(arow, bcol):
                if x >= 0 and y >= 0:
                    t = (x + y) % n
                    if acc < 0:
                        acc = t
                    else:
                        z = zech[(t - acc) % n]
                        acc = ZERO if z < 0 else (acc + z) % n
            orow.append(acc)
        out.append(orow)
    return Matrix(ctx, out)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form with first-nonzero pivoting.

    Deterministic, so RREFs are canonical and comparable.
    """
    ctx = m.ctx
    n, half, zech = ctx.n, ctx.half, ctx.zech
    R = [row[:] for row in m.data]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if R[i][c] >= 0:
                pr = i
                break
        if pr < 0:
            continue
        R[r], R[pr] = R[pr], R[r]
        prow = R[r]
        pv = prow[c]
        if pv:  # scale so pivot becomes gamma^0
            s = n - pv
            for j in range(c, ncols):
                if prow[j] >= 0:
                    prow[j] = (prow[j] + s) % n
        for i in range(nrows):
            if i == r:
                continue
            f = R[i][c]
            if f < 0:
                continue
            fneg = (f + half) % n
            mrow = R[i]
            for j in range(c, ncols):
                pj = prow[j]
                if pj >= 0:
                    t = (fneg + pj) % n
                    a = mrow[j]
                    if a < 0:
                        mrow[j] = t
                    else:
                        z = zech[(t - a) % n]
                        mrow[j] = ZERO if z < 0 else (a + z) % n
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return Matrix(ctx, R), tuple(pivots)


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: Matrix) -> Matrix:
    """Rows span the right null space {x : M x^T = 0}."""
    ctx = m.ctx
    R, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in pivots]
    rows = []
    for fc in free:
        vec = [ZERO] * m.cols
        vec[fc] = 0
        for i, pc in enumerate(pivots):
            vec[pc] = ctx.neg(R.data[i][fc])
        rows.append(vec)
    return Matrix(ctx, rows)


def stack(a: Matrix, b: Matrix) -> Matrix:
    _check_same_field(a, b)
    if a.cols != b.cols:
        raise ShapeMismatch("stack needs equal column counts")
    return Matrix(a.ctx, a.data + b.data)
