import random

import pytest

from grlcodes.families import (FamilyParams, NoClaim, audit, build_spec,
                               delta_conditions, diag_powers, family_ctx,
                               make_alpha, predict, sample_first_row_sum,
                               sample_invertible, sweep)
from grlcodes.gf import ZERO
from grlcodes.grl import DistinctnessViolation, build_generator
from grlcodes.hull import HERMITIAN, gram
from grlcodes.linalg import Matrix


def a22(ctx):
    return Matrix.from_strs(ctx, [["g^1", "g^2"], ["g^3", "g^5"]])


def test_make_alpha_e1_example_a1():
    ctx = family_ctx("E1", 81)
    p = FamilyParams(family="E1", q=81, k=5, l=2, a=a22(ctx), delta=2)
    assert make_alpha(p) == [ctx.element(e) for e in (18, 34, 50, 66, 82)]


def test_make_alpha_e3_example_a5():
    ctx = family_ctx("E3", 31)
    p = FamilyParams(family="E3", q=31, k=5, l=2, a=a22(ctx), s=1, t=9)
    want = [7, 13, 19, 25, 31, 15, 21, 27, 33, 39]
    assert make_alpha(p) == [ctx.element(e) for e in want]


def test_make_alpha_h4_multiblock():
    ctx = family_ctx("H4", 11)
    p = FamilyParams(family="H4", q=11, k=5, l=2, a=a22(ctx), delta=1)
    want = [24, 48, 72, 96, 120, 25, 49, 73, 97, 121]
    assert make_alpha(p) == [ctx.element(e) for e in want]


def test_make_alpha_h2_prepends_zero():
    ctx = family_ctx("H2", 5)
    p = FamilyParams(family="H2", q=5, k=4, l=2, a=a22(ctx), delta=1)
    alpha = make_alpha(p)
    assert alpha[0] == ZERO and len(alpha) == 5


def test_make_alpha_distinctness_violation():
    ctx = family_ctx("E3", 31)
    p = FamilyParams(family="E3", q=31, k=5, l=2, a=a22(ctx), s=7, t=1)
    with pytest.raises(DistinctnessViolation):
        make_alpha(p)  # 6 | 6


def test_distinctness_matches_literal_comparison():
    ctx = family_ctx("E3", 25)
    step = 24 // 4
    for s in range(1, 25):
        for t in range(1, s):
            p = FamilyParams(family="E3", q=25, k=4, l=2, a=a22(ctx), s=s, t=t)
            try:
                alpha = make_alpha(p)
                ok = True
                assert len(set(alpha)) == len(alpha)
            except DistinctnessViolation:
                ok = False
            assert ok == ((s - t) % step != 0)


def test_predict_e1_clauses():
    ctx = family_ctx("E1", 81)
    p = FamilyParams(family="E1", q=81, k=5, l=2, a=a22(ctx), delta=2)
    pred = predict(p)
    assert pred.claim == "lcd" and "corner" in pred.witnesses
    # l = k/2 with corner forced to zero: hull_eq 1
    ctx25 = family_ctx("E1", 25)
    rng = random.Random(1)
    k, l, delta = 8, 4, 1
    target = ctx25.neg(ctx25.mul(ctx25.from_int(k), ctx25.element(delta * k)))
    a = sample_first_row_sum(ctx25, l, target, rng, hermitian=False)
    assert a is not None
    p2 = FamilyParams(family="E1", q=25, k=k, l=l, a=a, delta=delta)
    pred2 = predict(p2)
    assert pred2.claim == "hull_eq" and pred2.value == 1
    rec = audit(p2)
    assert rec.passed and rec.computed_hull == 1


def test_predict_h1_diagonal_regime_bound():
    ctx = family_ctx("H1", 9)
    a = diag_powers(ctx, (2, 3, 4))
    p = FamilyParams(family="H1", q=9, k=5, l=3, a=a, delta=1)
    pred = predict(p)
    assert pred.claim == "hull_le" and pred.value == 3
    rec = audit(p)
    assert rec.passed and rec.computed_hull == 3  # bound attained


def test_predict_no_claim_cases():
    ctx = family_ctx("E1", 25)
    # l > k/2 for a single-block family: nothing applies
    p = FamilyParams(family="E1", q=25, k=4, l=3,
                     a=sample_invertible(ctx, 3, random.Random(0)), delta=1)
    assert predict(p).claim == "none"
    with pytest.raises(NoClaim):
        audit(p)


def test_delta_conditions_example_values():
    # q = 81, k = 4: v2(80) = 4, v2(4) = 2
    assert 2 in delta_conditions(81, 4, 1)  # delta = 2^{4-2-2} = 1
    assert 4 in delta_conditions(81, 4, 32)  # delta = 2^{v2(q-1)+1}
    assert 5 in delta_conditions(81, 4, 1)  # delta = 5^{1-0-1} = 1
    # q = 25, k = 8: v2(24) = 3 = v2(8): condition (1) with delta = 2
    assert 1 in delta_conditions(25, 8, 2)
    # q = 49, k = 6: v2(48)-v2(6) = 3, v3(48) = 1 = v3(6), delta = 9 = 3^{1+1}
    assert 3 in delta_conditions(49, 6, 9)
    assert delta_conditions(25, 8, 3) == []


def test_five_condition_triples_keep_theta_nonzero():
    # generated (q, k, delta) triples satisfy 1 + gamma^{delta k} != 0
    for q in (25, 49, 81, 121, 169):
        ctx = family_ctx("E3", q)
        for k in range(4, 17):
            if (q - 1) % k:
                continue
            for delta in range(1, q):
                conds = delta_conditions(q, k, delta)
                if not conds:
                    continue
                val = ctx.add(ctx.one(), ctx.element(delta * k))
                assert val != ZERO, (q, k, delta, conds)
                # and the blocks stay distinct
                assert delta % ((q - 1) // k) != 0, (q, k, delta, conds)


def test_h3_t_set_controls_antidiagonal_entries():
    # for v2(s-t) outside T every anti-diagonal Gram entry is nonzero
    q, k, l = 13, 6, 2
    ctx = family_ctx("H3", q)
    for s, t in ((4, 1), (5, 2), (10, 1), (11, 2), (28, 1)):
        p = FamilyParams(family="H3", q=q, k=k, l=l, a=a22(ctx), s=s, t=t)
        pred = predict(p)
        assert pred.claim == "lcd", (s, t, pred.clause)
        g = gram(build_generator(build_spec(p)), HERMITIAN)
        for i in range(1, k):
            assert g.data[i][(k - i) % k] != ZERO or (k - i) % k >= k - l


def test_audit_example_a3_parameters():
    ctx = family_ctx("E2", 25)
    a = Matrix.from_strs(ctx, [["g^2", "g^4", "g^6"],
                               ["g^2", "g^5", "g^7"],
                               ["g^5", "g^8", "g^9"]])
    p = FamilyParams(family="E2", q=25, k=12, l=3, a=a, delta=2)
    pred = predict(p)
    assert pred.claim == "lcd"
    rec = audit(p)
    assert rec.passed and rec.computed_hull == 0


def test_audit_refuses_without_claim():
    ctx = family_ctx("H4", 9)
    rng = random.Random(3)
    # q=9, k=8, delta=4: S_1 = {1,3,5,7} nonempty -> no claim
    p = FamilyParams(family="H4", q=9, k=8, l=2,
                     a=sample_invertible(ctx, 2, rng), delta=4)
    pred = predict(p)
    assert pred.claim == "none"
    assert pred.witnesses["S_1"] == [1, 3, 5, 7]
    with pytest.raises(NoClaim):
        audit(p)


def test_e2_hull_branches():
    # q = 25, k = 4, p | k+1 = 5: exact hull dims 1 and 2
    ctx = family_ctx("E2", 25)
    rng = random.Random(8)
    k, l, delta = 4, 2, 1
    p1 = FamilyParams(family="E2", q=25, k=k, l=l,
                      a=sample_invertible(ctx, l, rng), delta=delta)
    pred1 = predict(p1)
    assert pred1.claim == "hull_eq"
    rec1 = audit(p1)
    assert rec1.passed
    target = ctx.neg(ctx.mul(ctx.from_int(k), ctx.element(delta * k)))
    a2 = sample_first_row_sum(ctx, l, target, rng, hermitian=False)
    assert a2 is not None
    p2 = FamilyParams(family="E2", q=25, k=k, l=l, a=a2, delta=delta)
    pred2 = predict(p2)
    assert (pred2.claim, pred2.value) == ("hull_eq", 2)
    assert audit(p2).passed


def test_e4_p3_hull_branch():
    ctx = family_ctx("E4", 81)
    rng = random.Random(5)
    p = FamilyParams(family="E4", q=81, k=5, l=2,
                     a=sample_invertible(ctx, 2, rng))
    pred = predict(p)
    assert (pred.claim, pred.value) == ("hull_eq", 1)
    assert audit(p).passed


def test_sweep_small_deterministic():
    recs, exhausted = sweep("E1", qs=(25,), samples=2, seed=7)
    assert recs and not exhausted
    assert all(r.passed for r in recs)
    recs2, _ = sweep("E1", qs=(25,), samples=2, seed=7)
    assert [r.to_json_dict() for r in recs] == [r.to_json_dict() for r in recs2]


def test_sweep_empty_range():
    recs, exhausted = sweep("E1", qs=(), samples=1, seed=0)
    assert recs == [] and not exhausted


def test_sweep_budget_marker():
    recs, exhausted = sweep("E1", qs=(25, 49), samples=2, seed=1, budget=5)
    assert exhausted and len(recs) == 5


@pytest.mark.parametrize("family", ["E1", "E2", "E3", "E4"])
def test_family_audits_all_pass_euclidean(family):
    recs, _ = sweep(family, qs=(25, 81), samples=2, seed=11)
    assert recs, family
    bad = [r for r in recs if not r.passed]
    assert not bad, bad[:3]


@pytest.mark.parametrize("family", ["H1", "H2", "H3", "H4"])
def test_family_audits_all_pass_hermitian(family):
    recs, _ = sweep(family, qs=(3, 5, 9), samples=2, seed=13)
    assert recs, family
    bad = [r for r in recs if not r.passed]
    assert not bad, bad[:3]
