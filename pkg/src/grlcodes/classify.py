"""Minimum distance, dual distance, Singleton defect, MDS/AMDS/NMDS labels.

Three exact distance paths with different cost profiles:

* min_distance: smallest number of linearly dependent parity-check
  columns, found by depth-first search over independent column subsets
  in colex order with incremental elimination.  Cost is governed by the
  number of subsets below the answer, so it suits small redundancy.
* grl_min_distance: for evaluation codes with a coefficient tail, the
  minimum weight equals length minus the largest achievable zero set
  (roots among the points plus forced tail zeros), searched over root
  subsets.  This handles long small-dimension codes the subset method
  cannot touch.
* enum_min_distance: full codeword enumeration, the oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .gf import ZERO
from .grl import GrlSpec, build_generator
from .hull import EUCLIDEAN, HERMITIAN, dual_generator, hull_report
from .linalg import Matrix, rank

DEFAULT_BUDGET = 10 ** 7


class BudgetExceeded(RuntimeError):
    def __init__(self, lower_bound: int, budget: int):
        self.lower_bound = lower_bound
        self.budget = budget
        super().__init__(
            f"distance search exceeded budget {budget}; d >= {lower_bound}")


class TooLarge(ValueError):
    pass


class _Counter:
    __slots__ = ("left", "completed")

    def __init__(self, budget):
        self.left = budget
        self.completed = 0

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(self.completed + 1, 0)


def _reduce(ctx, vec, basis):
    """Eliminate vec against an echelon basis (sorted by pivot)."""
    n, half, zech = ctx.n, ctx.half, ctx.zech
    v = vec[:]
    for piv, b in basis:
        f = v[piv]
        if f < 0:
            continue
        fneg = (f + half) % n
        for i in range(piv, len(v)):
            bi = b[i]
            if bi >= 0:
                t = (fneg + bi) % n
                a = v[i]
                if a < 0:
                    v[i] = t
                else:
                    z = zech[(t - a) % n]
                    v[i] = ZERO if z < 0 else (a + z) % n
    return v


def _first_nonzero(v):
    for i, x in enumerate(v):
        if x >= 0:
            return i
    return -1


def _normalized(ctx, v, piv):
    s = (ctx.n - v[piv]) % ctx.n
    if s == 0:
        return v
    return [x if x < 0 else (x + s) % ctx.n for x in v]


def _insert(basis, piv, vec):
    nb = list(basis)
    at = len(nb)
    for i, (p, _) in enumerate(nb):
        if p > piv:
            at = i
            break
    nb.insert(at, (piv, vec))
    return nb


def _dfs_exact(ctx, cols, basis, start, remaining, counter):
    """True iff some `remaining` columns from cols[start:] complete a
    dependency on top of basis."""
    for j in range(start, len(cols) - remaining + 1):
        counter.tick()
        r = _reduce(ctx, cols[j], basis)
        p = _first_nonzero(r)
        if p < 0:
            return True
        if remaining > 1:
            nb = _insert(basis, p, _normalized(ctx, r, p))
            if _dfs_exact(ctx, cols, nb, j + 1, remaining - 1, counter):
                return True
    return False


def _min_dependent_columns(ctx, cols, nrows, budget):
    """Smallest w with w dependent columns; nrows+1 if none at w <= nrows."""
    counter = _Counter(budget)
    for w in range(1, nrows + 1):
        try:
            if _dfs_exact(ctx, cols, [], 0, w, counter):
                return w
        except BudgetExceeded:
            raise BudgetExceeded(counter.completed + 1, budget) from None
        counter.completed = w
    return nrows + 1


def min_distance(g: Matrix, budget: int = DEFAULT_BUDGET) -> int:
    """Exact minimum distance of the code generated by g, as the size of
    the smallest linearly dependent column set of a parity-check matrix."""
    h = dual_generator(g, EUCLIDEAN)
    cols = [h.col(j) for j in range(h.cols)]
    return _min_dependent_columns(h.ctx, cols, h.rows, budget)


def enum_min_distance(g: Matrix, limit: int = 2 * 10 ** 5) -> int:
    """Oracle: minimum weight over all q^k - 1 nonzero codewords."""
    ctx, k = g.ctx, g.rows
    if ctx.q ** k - 1 > limit:
        raise TooLarge(f"q^k = {ctx.q ** k} beyond enumeration limit")
    cols = [g.col(j) for j in range(g.cols)]
    best = g.cols
    for msg in product(list(ctx.elements()), repeat=k):
        if all(x == ZERO for x in msg):
            continue
        w = 0
        for col in cols:
            if ctx.dot(msg, col) != ZERO:
                w += 1
                if w >= best:
                    break
        best = min(best, w)
        if best == 1:
            break
    return best


def _mul_linear(ctx, poly, a):
    """poly * (x - a), ascending coefficients."""
    na = ctx.neg(a)
    out = [ctx.mul(poly[0], na)]
    for i in range(1, len(poly)):
        out.append(ctx.add(poly[i - 1], ctx.mul(poly[i], na)))
    out.append(poly[-1])
    return out


def grl_min_distance(spec: GrlSpec) -> int:
    """Exact minimum distance from the maximal zero pattern.

    A nonzero word is (v_j f(a_j), beta) with deg f < k; its zeros are
    roots of f among alpha plus tail coordinates killed through A.  Only
    root counts m in [k-l, k-1] can beat the trivial m = k-1 pattern.
    """
    spec.validate()
    ctx, k, l, n = spec.ctx, spec.k, spec.l, spec.n
    best = k - 1
    top = min(k - 1, n)
    for m in range(top, max(k - l, 0) - 1, -1):
        if m + l <= best:
            break
        km = k - m
        for roots in combinations(range(n), m):
            poly = [ctx.one()]
            for idx in roots:
                poly = _mul_linear(ctx, poly, spec.alpha[idx])
            # map from the k-m free coefficients of g to the tail vector
            coeff = [[poly[k - l + u - i] if 0 <= k - l + u - i <= m else ZERO
                      for u in range(l)] for i in range(km)]
            from .linalg import mat_mul
            w = mat_mul(Matrix(ctx, coeff), spec.a)
            for t in range(l, max(best - m, 0), -1):
                hit = False
                for cols in combinations(range(l), t):
                    sub = Matrix(ctx, [[w.data[i][u] for u in cols]
                                       for i in range(km)])
                    if rank(sub) < km:
                        hit = True
                        break
                if hit:
                    best = m + t
                    break
    return spec.length - best


def dual_min_distance(spec: GrlSpec, budget: int = DEFAULT_BUDGET) -> int:
    """Exact dual distance: smallest dependent column set of the
    generator.  Any <= k evaluation columns are independent (scaled
    Vandermonde on distinct points), so every dependent set of size
    <= k must use a tail column; tail parts are enumerated exactly."""
    g = build_generator(spec)
    ctx, k, l, n = spec.ctx, spec.k, spec.l, spec.n
    acols = [g.col(j) for j in range(n)]
    tcols = [g.col(n + u) for u in range(l)]
    counter = _Counter(budget)
    for w in range(1, k + 1):
        for b in range(max(1, w - n), min(l, w) + 1):
            for tails in combinations(range(l), b):
                basis = []
                dep_at = None
                for i, u in enumerate(tails):
                    r = _reduce(ctx, tcols[u], basis)
                    p = _first_nonzero(r)
                    if p < 0:
                        dep_at = i + 1
                        break
                    basis = _insert(basis, p, _normalized(ctx, r, p))
                if dep_at is not None:
                    if dep_at == w:
                        return w
                    continue
                if b == w:
                    continue
                try:
                    if _dfs_exact(ctx, acols, basis, 0, w - b, counter):
                        return w
                except BudgetExceeded:
                    raise BudgetExceeded(counter.completed + 1, budget) from None
        counter.completed = w
    return k + 1


@dataclass
class CodeReport:
    n: int
    k: int
    d: int
    d_dual: int
    defect: int
    defect_dual: int
    label: str
    field: str
    modulus: list[int]
    hull_e: object = None
    hull_h: object = None
    eaqecc: dict = field(default_factory=dict)
    nongrs: object = None

    @property
    def params(self):
        return (self.n, self.k, self.d)

    def to_json_dict(self):
        out = {
            "n": self.n, "k": self.k, "d": self.d, "d_dual": self.d_dual,
            "defect": self.defect, "defect_dual": self.defect_dual,
            "label": self.label, "field": self.field, "modulus": self.modulus,
        }
        if self.hull_e is not None:
            out["hull_euclidean"] = self.hull_e.to_json_dict()
        if self.hull_h is not None:
            out["hull_hermitian"] = self.hull_h.to_json_dict()
        if self.eaqecc:
            out["eaqecc"] = {
                inner: [t.to_json_dict() for t in pair]
                for inner, pair in sorted(self.eaqecc.items())
            }
        if self.nongrs is not None:
            out["nongrs"] = self.nongrs.to_json_dict()
        return out

    def csv_row(self):
        he = self.hull_e.hull_dim if self.hull_e else ""
        hh = self.hull_h.hull_dim if self.hull_h else ""
        return f"{self.n},{self.k},{self.d},{self.label},{he},{hh}"


def _label(defect, defect_dual):
    if defect == 0:
        return "MDS"
    if defect == 1 and defect_dual == 1:
        return "NMDS"
    if defect == 1:
        return "AMDS"
    return "other"


def classify(spec: GrlSpec, with_nongrs: bool = False,
             budget: int = DEFAULT_BUDGET) -> CodeReport:
    """Full report: distances, defect labels, hulls, EAQECC parameters."""
    spec.validate()
    g = build_generator(spec)
    nn = spec.length
    d = grl_min_distance(spec)
    dd = dual_min_distance(spec, budget)
    defect = nn + 1 - spec.k - d
    defect_dual = spec.k + 1 - dd
    rep = CodeReport(
        n=nn, k=spec.k, d=d, d_dual=dd, defect=defect,
        defect_dual=defect_dual, label=_label(defect, defect_dual),
        field=spec.ctx.field_str(), modulus=list(spec.ctx.modulus),
    )
    rep.hull_e = hull_report(g, EUCLIDEAN)
    if spec.ctx.m % 2 == 0:
        rep.hull_h = hull_report(g, HERMITIAN)
    from . import eaqecc
    rep.eaqecc[EUCLIDEAN] = eaqecc.derive(rep, EUCLIDEAN)
    if rep.hull_h is not None:
        rep.eaqecc[HERMITIAN] = eaqecc.derive(rep, HERMITIAN)
    if with_nongrs:
        from .nongrs import nongrs_certificate
        rep.nongrs = nongrs_certificate(spec)
    return rep
