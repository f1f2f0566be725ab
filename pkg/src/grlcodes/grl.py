"""GRL code construction and the power-sum identities behind it.

A GRL code is spanned by words (v_1 f(a_1), ..., v_n f(a_n), beta) where
f ranges over polynomials of degree < k and beta mixes the top-l
coefficients of f through an invertible l x l matrix A.  Row r of the
generator matrix carries the monomial x^r, so the tail block holds A in
the last l rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import ZERO, FieldCtx, NotADivisor
from .linalg import Matrix, rank


class InvariantViolation(ValueError):
    def __init__(self, reasons):
        self.reasons = list(reasons)
        super().__init__("; ".join(self.reasons))


class DistinctnessViolation(ValueError):
    pass


@dataclass
class GrlSpec:
    """Evaluation points alpha, column multipliers v, tail matrix A, dim k."""

    ctx: FieldCtx
    alpha: list[int]
    v: list[int]
    a: Matrix
    k: int

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def l(self) -> int:
        return self.a.rows

    @property
    def length(self) -> int:
        return self.n + self.l

    def validate(self) -> None:
        reasons = []
        l, k, n, q = self.l, self.k, self.n, self.ctx.q
        if self.a.rows != self.a.cols:
            reasons.append("A must be square")
        if not (2 <= l <= k <= n <= q):
            reasons.append(f"need 2 <= l <= k <= n <= q, got l={l} k={k} n={n} q={q}")
        if len(set(self.alpha)) != n:
            reasons.append("alpha entries must be pairwise distinct")
        if len(self.v) != n:
            reasons.append("v must have length n")
        if any(x == ZERO for x in self.v):
            reasons.append("v entries must be nonzero")
        if self.a.rows == self.a.cols and rank(self.a) != l:
            reasons.append("A must be invertible (A in GL_l)")
        if reasons:
            raise InvariantViolation(reasons)

    def to_json_dict(self) -> dict:
        fmt = self.ctx.fmt
        return {
            "field": self.ctx.field_str(),
            "k": self.k,
            "l": self.l,
            "alpha": [fmt(a) for a in self.alpha],
            "v": [fmt(x) for x in self.v],
            "A": self.a.to_strs(),
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "GrlSpec":
        from .gf import field_from_str
        ctx = field_from_str(d["field"])
        alpha = [ctx.parse(s) for s in d["alpha"]]
        v = [ctx.parse(s) for s in d.get("v") or ["g^0"] * len(alpha)]
        a = Matrix.from_strs(ctx, d["A"])
        spec = cls(ctx=ctx, alpha=alpha, v=v, a=a, k=int(d["k"]))
        if a.rows != int(d["l"]):
            raise InvariantViolation([f"A is {a.rows}x{a.cols} but l={d['l']}"])
        return spec

    def with_unit_v(self) -> "GrlSpec":
        return GrlSpec(ctx=self.ctx, alpha=self.alpha, v=[0] * self.n,
                       a=self.a, k=self.k)


def build_generator(spec: GrlSpec) -> Matrix:
    """k x (n+l) generator: Vandermonde-type block, then the A tail."""
    spec.validate()
    ctx, k, l, n = spec.ctx, spec.k, spec.l, spec.n
    rows = []
    for r in range(k):
        row = [ctx.mul(spec.v[j], ctx.pow(spec.alpha[j], r)) for j in range(n)]
        if r < k - l:
            row.extend([ZERO] * l)
        else:
            row.extend(spec.a.data[r - (k - l)])
        rows.append(row)
    return Matrix(ctx, rows)


def power_sum(ctx: FieldCtx, beta: int, s: int, t: int) -> int:
    """Sum of (beta * w)^t over the s-th roots of unity w.

    Equals beta^t * s when s | t and 0 otherwise; s must divide the
    multiplicative group order.
    """
    if beta == ZERO:
        raise ValueError("beta must be nonzero")
    if s < 1 or ctx.n % s:
        raise NotADivisor(f"{s} does not divide the group order {ctx.n}")
    if t % s:
        return ZERO
    return ctx.mul(ctx.pow(beta, t), ctx.from_int(s))


def build_M(ctx2: FieldCtx, k: int, t: int) -> Matrix:
    """The k x k Hermitian structure matrix with entries
    sum_i (gamma^t a_i)^{r + c*q} over the k-th roots a_i, for a square
    field of size q^2.  Exactly one entry per row and column is nonzero.
    """
    q = ctx2.base_q
    if ctx2.n % k:
        raise NotADivisor(f"{k} does not divide {ctx2.n}")
    g = ctx2.gen()
    beta = ctx2.pow(g, t)
    rows = []
    for r in range(k):
        rows.append([power_sum(ctx2, beta, k, r + c * q) for c in range(k)])
    return Matrix(ctx2, rows)


def alpha_distinct(alpha) -> bool:
    return len(set(alpha)) == len(alpha)


def two_block_distinct(group_order: int, k: int, s: int, t: int) -> bool:
    """Whether the shifted blocks gamma^s*a and gamma^t*a stay disjoint:
    true iff (group_order/k) does not divide s - t."""
    if group_order % k:
        raise NotADivisor(f"{k} does not divide {group_order}")
    return (s - t) % (group_order // k) != 0


def monomial_diag(spec: GrlSpec) -> Matrix:
    """diag(v, 1_l): build_generator(alpha,v,A) = build_generator(alpha,1,A) . D."""
    ctx = spec.ctx
    d = Matrix.zeros(ctx, spec.length, spec.length)
    for j in range(spec.n):
        d.data[j][j] = spec.v[j]
    for j in range(spec.n, spec.length):
        d.data[j][j] = 0
    return d
