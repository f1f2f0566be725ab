"""Counting solutions of x_1^2 + ... + x_k^2 = c over GF(q).

Closed forms use the quadratic character; the all-nonzero counts are
evaluated exactly in the quadratic ring Z[w] with w^2 = q or -q before
an exact division, so no floating point enters the pipeline.  A literal
enumeration oracle arbitrates the semantics.
"""

from __future__ import annotations

from itertools import product

from .gf import (ZERO, FieldCtx, NotADivisor, divisor_count,
                 quadratic_character)


class NonIntegerResult(ArithmeticError):
    pass


class TooLarge(ValueError):
    pass


def _v(ctx: FieldCtx, c: int) -> int:
    return ctx.q - 1 if c == ZERO else -1


def _eta_minus_one_power(ctx: FieldCtx, e: int) -> int:
    """quadratic character of (-1)^e."""
    return quadratic_character(ctx, ctx.pow(ctx.neg(ctx.one()), e))


def count_nf(ctx: FieldCtx, k: int, c: int) -> int:
    """Total number of k-tuples over GF(q) with sum of squares c.

    Includes the all-zero tuple (a solution exactly when c = 0); use
    count_nf_excluding_zero for the count over F_q^k minus the origin.
    """
    q = ctx.q
    if k % 2 == 0:
        eta = _eta_minus_one_power(ctx, k // 2)
        return q ** (k - 1) + _v(ctx, c) * q ** (k // 2 - 1) * eta
    sign = ctx.pow(ctx.neg(ctx.one()), (k - 1) // 2)
    eta = quadratic_character(ctx, ctx.mul(sign, c))
    return q ** (k - 1) + q ** ((k - 1) // 2) * eta


def count_nf_excluding_zero(ctx: FieldCtx, k: int, c: int) -> int:
    return count_nf(ctx, k, c) - (1 if c == ZERO else 0)


# -- exact arithmetic in Z[w], w^2 = w2 --

def _qmul(x, y, w2):
    a, b = x
    c, d = y
    return (a * c + b * d * w2, a * d + b * c)


def _qpow(x, e, w2):
    out = (1, 0)
    while e:
        if e & 1:
            out = _qmul(out, x, w2)
        x = _qmul(x, x, w2)
        e >>= 1
    return out


def _surd_pair_sum(k: int, w2: int) -> int:
    """(w - 1)^k + (-1 - w)^k as an exact integer (w-part cancels)."""
    a = _qpow((-1, 1), k, w2)
    b = _qpow((-1, -1), k, w2)
    tot = (a[0] + b[0], a[1] + b[1])
    if tot[1] != 0:
        raise NonIntegerResult(f"surd part {tot[1]} did not cancel")
    return tot[0]


def count_nf_star(ctx: FieldCtx, k: int, c: int) -> int:
    """Number of k-tuples with all coordinates nonzero and sum of squares c."""
    q = ctx.q
    w2 = q if q % 4 == 1 else -q
    base = 2 * (q - 1) ** k
    if c == ZERO:
        num = base + (q - 1) * _surd_pair_sum(k, w2)
    elif quadratic_character(ctx, c) == 1:
        if q % 4 == 1:
            num = base + _surd_pair_sum(k + 1, w2)
        else:
            num = base + (q + 1) * _surd_pair_sum(k - 1, w2)
    else:
        if q % 4 == 1:
            num = base + (1 - q) * _surd_pair_sum(k - 1, w2)
        else:
            num = base + _surd_pair_sum(k + 1, w2)
    if num % (2 * q):
        raise NonIntegerResult(f"{num} not divisible by 2q = {2 * q}")
    return num // (2 * q)


def brute_quadric_count(ctx: FieldCtx, k: int, c: int,
                        nonzero_only: bool = False) -> int:
    """Literal enumeration of solution tuples; oracle for the closed forms."""
    if ctx.q ** k > 10 ** 7:
        raise TooLarge(f"q^k = {ctx.q ** k} beyond enumeration guard")
    pool = list(ctx.nonzero_elements()) if nonzero_only else list(ctx.elements())
    count = 0
    for tup in product(pool, repeat=k):
        acc = ZERO
        for x in tup:
            acc = ctx.add(acc, ctx.mul(x, x))
        if acc == c:
            count += 1
    return count


def hull1_count_bound(ctx: FieldCtx, delta: int, l: int,
                      variant: str = "all") -> int:
    """Upper bound on the number of one-dimensional-hull GRL codes with
    k = 2l dividing q-1, for first rows ranging over F_q^l \\ {0}
    (variant 'all') or (F_q^*)^l (variant 'nonzero')."""
    q = ctx.q
    k = 2 * l
    if (q - 1) % k:
        raise NotADivisor(f"k = 2l = {k} must divide q-1 = {q - 1}")
    c = ctx.mul(ctx.from_int(k), ctx.element(delta * k + (q - 1) // 2))
    if variant == "all":
        nf = count_nf_excluding_zero(ctx, l, c)
    elif variant == "nonzero":
        nf = count_nf_star(ctx, l, c)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    prod = 1
    for i in range(1, l):
        prod *= q ** l - q ** i
    return (divisor_count((q - 1) // 2) - 1) * nf * prod
