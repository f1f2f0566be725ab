#!/usr/bin/env python3
"""Telling GRL codes apart from (generalized) Reed-Solomon codes.

Three certificates, strongest first: the Schur square dimension (a
monomial-equivalence invariant: GRS codes of dimension k >= 3 with
2k-1 < n give exactly 2k-1), the Cauchy column test on a standard form
(fixed coordinate presentation), and, for tiny parameters, exhaustive
comparison with every GRS row space.
"""

from grlcodes.gf import field_new
from grlcodes.grl import GrlSpec, build_generator
from grlcodes.linalg import Matrix
from grlcodes.nongrs import (cauchy_column_test, exhaustive_grs_check,
                             nongrs_certificate, schur_square_dim,
                             standard_form)

# A genuinely non-GRS code: k > l tail.
ctx = field_new(3, 4)
spec = GrlSpec(ctx=ctx,
               alpha=[ctx.element(20 * i) for i in range(1, 5)] +
                     [ctx.element(20 * i + 32) for i in range(1, 5)],
               v=[ctx.one()] * 8,
               a=Matrix.from_strs(ctx, [["g^1", "g^2"], ["g^3", "g^5"]]),
               k=4)
g = build_generator(spec)
dim = schur_square_dim(g)
print(f"[10,4,7] code: dim(C^2) = {dim} > 2k-1 = 7 -> non-GRS")
print("certificate:", nongrs_certificate(spec).to_json_dict())

# Watching the Cauchy test fail on an appended column.
b, info, rest = standard_form(g)
info_alpha = [spec.alpha[j] for j in info]
for j, col in enumerate(rest):
    res = cauchy_column_test(ctx, info_alpha, spec.alpha, b.col(j))
    kind = "appended" if col >= spec.n else "evaluation"
    print(f"  column {col} ({kind}): {res[0]}"
          + (f" -> recovered {ctx.fmt(res[1])}" if res[0] == 'consistent'
             else f" ({res[1]['reason']})"))

# A k = l construction with a Vandermonde tail IS Reed-Solomon.
c7 = field_new(7)
pts = [c7.parse(s) for s in ("0", "1", "g^1", "g^2")]
beta = [c7.element(3), c7.element(4)]
a = Matrix(c7, [[c7.pow(x, r) for x in beta] for r in range(2)])
rs = GrlSpec(ctx=c7, alpha=pts, v=[c7.one()] * 4, a=a, k=2)
grs = build_generator(rs)
verdict, ev = exhaustive_grs_check(grs)
print(f"\nk = l Vandermonde tail over GF(7): exhaustive verdict {verdict} "
      f"(dim(C^2) = {schur_square_dim(grs)} = 2k-1)")
print("certificate:", nongrs_certificate(rs).to_json_dict())
