import random

import pytest
from hypothesis import given, settings, strategies as st

from semigroup_reg.apery import apery_classes, apery_set
from semigroup_reg.lattice import SemigroupPresentation, degree, is_member, residue, sub
from semigroup_reg.sequences import (
    CapExceeded,
    CrossCertificate,
    StarSequence,
    are_crossless,
    check_conjecture,
    check_pair,
    conjecture_pairs,
    count_full,
    delta,
    delta_max,
    delta_min,
    delta_min_bruteforce,
    delta_set,
    enumerate_full,
    find_crosses,
    first_full,
    glue_crosses,
    h_min,
    is_adjacent,
    is_crossless,
    is_full,
    is_star_sequence,
    maximal_cross,
    partial_point,
    reverse,
    sample_sequences,
    third_element,
)

from oracles import NaiveSemigroup, naive_delta, naive_delta_min, partial_points

CHAIN30 = SemigroupPresentation(2, 30, [(3, 27), (23, 7)])
CROSSED79 = SemigroupPresentation(2, 79, [(77, 2), (34, 45)])
CURVE12 = SemigroupPresentation(2, 12, [(11, 1), (9, 3), (4, 8), (1, 11)])
TINY = SemigroupPresentation(2, 2, [(1, 1)])
# found by the all-pairs search: delta = 2 but deg h - 1 = 1
COUNTER = SemigroupPresentation(2, 14, [(13, 1), (4, 10)])


def only(P, x):
    seqs = enumerate_full(P, x)
    assert len(seqs) == 1
    return seqs[0]


def test_crossless_pair_sequences():
    lam = only(CHAIN30, (27, 243))
    nu = only(CHAIN30, (207, 63))
    assert lam.steps == ((3, 27),) * 9
    assert nu.steps == ((23, 7),) * 9
    assert partial_point(lam, 3) == (18, 162)
    assert partial_point(lam, 0) == (27, 243)
    assert partial_point(lam, 9) == (0, 0)
    assert delta_set(lam, nu, 30) == [(0, 0), (3, 3), (6, 6), (9, 9)]
    assert delta(lam, nu, 30) == 2
    assert is_crossless(lam, nu, 30) and find_crosses(lam, nu, 30) == []
    assert h_min((27, 243), (207, 63)) == (27, 63)


def test_crossed_pair_sequences():
    x, y = (1232, 32), (442, 585)
    lam, nu = only(CROSSED79, x), only(CROSSED79, y)
    assert nu.steps == ((34, 45),) * 13
    assert len(lam) == 16
    assert delta_set(lam, nu, 79) == [(0, 0), (5, 9), (11, 4), (16, 13)]
    assert not is_crossless(lam, nu, 79)
    crosses = find_crosses(lam, nu, 79)
    assert [c.indices for c in crosses] == [(5, 11, 4, 9)]
    assert crosses[0].height == (6, 5)
    assert maximal_cross(crosses).indices == (5, 11, 4, 9)
    assert h_min(x, y) == (442, 32) and degree((442, 32), 79) == 6


def test_crossed_pair_third_element():
    x, y = (1232, 32), (442, 585)
    cross = find_crosses(only(CROSSED79, x), only(CROSSED79, y), 79)[0]
    z = third_element(CROSSED79, cross)
    ba = apery_set(CROSSED79)
    assert z in ba and residue(z, 79) == residue(x, 79) and z not in (x, y)
    assert (521, 190) in ba and residue((521, 190), 79) == residue(x, 79)


def test_unit_vector_sequences():
    assert [s.steps for s in enumerate_full(CHAIN30, (30, 0))] == [((30, 0),)]
    assert enumerate_full(CHAIN30, (0, 0)) == []
    e1, e2 = StarSequence((30, 0), ((30, 0),)), StarSequence((0, 30), ((0, 30),))
    assert delta_set(e1, e2, 30) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert delta(e1, e2, 30) == 2


def test_partial_point_range():
    lam = only(CHAIN30, (27, 243))
    with pytest.raises(IndexError):
        partial_point(lam, 10)


def test_reverse():
    lam = only(CHAIN30, (27, 243))
    assert reverse(lam) == lam
    two = StarSequence((33, 27), ((30, 0), (3, 27)))
    assert is_full(CHAIN30, two) and is_full(CHAIN30, reverse(two))
    lam = only(CROSSED79, (1232, 32))
    assert sub(lam.base, partial_point(lam, 5)) == partial_point(reverse(lam), len(lam) - 5)


def test_cap():
    x = (60, 60)  # deg 4 with many orderings
    n = count_full(CHAIN30, x)
    assert n == len(enumerate_full(CHAIN30, x)) > 3
    with pytest.raises(CapExceeded) as err:
        enumerate_full(CHAIN30, x, cap=3)
    assert err.value.cap == 3
    res = delta_min(CHAIN30, x, x, max_seqs=1)
    assert res.capped and res.value is None and res.bound is not None


def test_delta_self_bound():
    for P in (CHAIN30, CURVE12, CROSSED79):
        for x in apery_set(P):
            if any(x):
                assert delta_min(P, x, x).value <= degree(x, P.alpha) - 1


def test_example_conjecture_verdicts():
    v = check_pair(CHAIN30, (27, 243), (207, 63))
    assert v.verdict == "holds" and v.value == 2 and v.deg_h == 3
    v = check_pair(CROSSED79, (1232, 32), (442, 585))
    assert v.verdict == "holds" and v.value == 2 and v.deg_h == 6
    rep = check_conjecture(CROSSED79, "strong", classes=[c for c in apery_classes(CROSSED79) if (1232, 32) in c.elements])
    assert rep.violations == []


def test_counterexample_pair():
    # not adjacent: (34, 22) lies strictly between the two points
    x, y = (104, 8), (20, 50)
    lam, nu = only(COUNTER, x), only(COUNTER, y)
    assert delta_set(lam, nu, 14) == [(0, 0), (2, 3), (6, 2), (8, 5)]
    v = check_pair(COUNTER, x, y)
    assert v.verdict == "violated" and v.value == 2 and v.deg_h == 2
    assert v.witness == (lam, nu)
    cls = [c for c in apery_classes(COUNTER) if x in c.elements][0]
    assert (34, 22) in cls.elements and not is_adjacent(cls, x, y)
    S = NaiveSemigroup(2, 14, COUNTER.extras)
    assert naive_delta_min(S, x, y) == 2


def test_adjacency_p5_curve():
    cls = [c for c in apery_classes(CURVE12) if len(c) == 3][0]
    assert is_adjacent(cls, (31, 5), (19, 17))
    assert is_adjacent(cls, (19, 17), (7, 41))
    assert not is_adjacent(cls, (31, 5), (7, 41))
    pair = [c for c in apery_classes(CURVE12) if len(c) == 2][0]
    assert is_adjacent(pair, *pair.elements)
    with pytest.raises(ValueError):
        is_adjacent(cls, (31, 5), (31, 5))
    with pytest.raises(ValueError):
        is_adjacent(cls, (1, 2, 3), (3, 2, 1))
    adj = list(conjecture_pairs(CURVE12, "adjacent-only"))
    assert ((31, 5), (7, 41)) not in adj and ((31, 5), (19, 17)) in adj


def test_adjacent_scope_rejects_d3():
    P = SemigroupPresentation(3, 3, [(1, 1, 1)])
    with pytest.raises(ValueError):
        list(conjecture_pairs(P, "adjacent-only"))
    with pytest.raises(ValueError):
        list(conjecture_pairs(P, "sometimes"))


def test_glue_disjoint_unit_crosses():
    lam = StarSequence((0, 8), ((0, 2),) * 4)
    lam2, nu2, cert = glue_crosses(lam, lam, (0, 1, 0, 1), (2, 3, 2, 3), 2)
    assert cert.height == (2, 2) and cert.is_valid(2)
    assert is_full(TINY, lam2) and is_full(TINY, nu2)


def test_glue_shared_corner():
    lam = StarSequence((0, 4), ((0, 2), (0, 2)))
    _, _, cert = glue_crosses(lam, lam, (0, 1, 0, 1), (1, 2, 1, 2), 2)
    assert cert.indices == (0, 2, 0, 2) and cert.is_valid(2)


def test_glue_unequal_bases():
    lam = StarSequence((0, 4), ((0, 2), (0, 2)))
    nu = StarSequence((0, 6), ((0, 2),) * 3)
    _, _, cert = glue_crosses(lam, nu, (0, 1, 0, 1), (1, 2, 2, 3), 2)
    assert cert.height == (2, 2) and cert.is_valid(2)


def test_glue_precondition():
    lam = StarSequence((0, 8), ((0, 2),) * 4)
    with pytest.raises(ValueError):
        glue_crosses(lam, lam, (2, 3, 2, 3), (0, 1, 0, 1), 2)
    with pytest.raises(ValueError):
        glue_crosses(lam, lam, (0, 1, 0, 0), (2, 3, 2, 3), 2)


def test_sampling_is_seeded():
    a = sample_sequences(CURVE12, (48, 24), 5, seed=3)
    assert a == sample_sequences(CURVE12, (48, 24), 5, seed=3)
    assert all(is_full(CURVE12, s) for s in a)


# randomized properties against brute force


def presentation(a, ks):
    return SemigroupPresentation(2, a, [(k, a - k) for k in ks])


small_2d = st.integers(3, 13).flatmap(
    lambda a: st.lists(st.integers(1, a - 1), min_size=1, max_size=4, unique=True).map(
        lambda ks: presentation(a, ks)
    )
)


def class_pairs(P):
    for cls in apery_classes(P):
        els = [e for e in cls.elements if any(e)]
        for a in range(len(els)):
            for b in range(a, len(els)):
                yield cls, els[a], els[b]


@given(small_2d)
@settings(max_examples=40, deadline=None)
def test_sequences_match_bruteforce(P):
    S = NaiveSemigroup(2, P.alpha, P.extras)
    for x in sorted(apery_set(P))[:6]:
        if any(x):
            got = sorted(s.steps for s in enumerate_full(P, x))
            assert got == sorted(S.sequences(x))
            assert count_full(P, x) == len(got)


@given(small_2d)
@settings(max_examples=40, deadline=None)
def test_delta_min_matches_bruteforce(P):
    S = NaiveSemigroup(2, P.alpha, P.extras)
    for _, x, y in class_pairs(P):
        if count_full(P, x) * count_full(P, y) > 400:
            continue
        want = naive_delta_min(S, x, y)
        res = delta_min(P, x, y)
        assert res.value == want == delta_min_bruteforce(P, x, y)
        lam, nu = res.witness
        assert delta(lam, nu, P.alpha) == want
        assert naive_delta(x, lam.steps, y, nu.steps, P.alpha) == want
        best = max(naive_delta(x, l, y, n, P.alpha) for l in S.sequences(x) for n in S.sequences(y))
        assert delta_max(P, x, y).value == best


@given(small_2d)
@settings(max_examples=40, deadline=None)
def test_crossless_existence_matches_bruteforce(P):
    for _, x, y in class_pairs(P):
        lams, nus = enumerate_full(P, x), enumerate_full(P, y)
        if len(lams) * len(nus) > 400:
            continue
        want = any(is_crossless(l, n, P.alpha) for l in lams for n in nus)
        res = are_crossless(P, x, y)
        assert res.value == want
        if want:
            assert is_crossless(*res.witness, P.alpha)


@given(small_2d, st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_crossed_pairs_yield_third_element(P, rnd):
    ba = apery_set(P)
    for cls, x, y in class_pairs(P):
        if x == y:
            continue
        lam, nu = first_full(P, x), first_full(P, y)
        crosses = find_crosses(lam, nu, P.alpha)
        if len(cls) == 2:
            assert crosses == []
        for c in crosses:
            assert c.is_valid(P.alpha)
            assert c.i >= 2 and c.l >= 2 and c.j <= len(lam) - 2 and c.k <= len(nu) - 2
            z = third_element(P, c)
            assert z in ba and z in cls.elements and z not in (x, y)


def crossed_pairs(alpha_max=16, max_product=200):
    """Every crossed sequence pair of two-extra curves with small Lambda products."""
    for a in range(3, alpha_max + 1):
        for k1 in range(1, a):
            for k2 in range(k1 + 1, a):
                P = presentation(a, [k1, k2])
                for cls, x, y in class_pairs(P):
                    lams, nus = enumerate_full(P, x), enumerate_full(P, y)
                    if x == y or len(lams) * len(nus) > max_product:
                        continue
                    for lam in lams:
                        for nu in nus:
                            crosses = find_crosses(lam, nu, a)
                            if crosses:
                                yield P, cls, lam, nu, crosses


def test_cross_invariants_on_scanned_pairs():
    seen = 0
    for P, cls, lam, nu, crosses in crossed_pairs():
        seen += 1
        assert find_crosses(reverse(lam), reverse(nu), P.alpha)
        assert len(cls) >= 3
        for c in crosses:
            xi, xj = lam.point(c.i), lam.point(c.j)
            yl, yk = nu.point(c.l), nu.point(c.k)
            up = [t for t in range(P.d) if yk[t] > xi[t]]
            down = [t for t in range(P.d) if xj[t] > yl[t]]
            assert up and down and any(n != m for n in up for m in down)
            assert all(yl[n] > xj[n] for n in up)
            assert all(xi[m] > yk[m] for m in down)
            assert c.i >= 2 and c.l >= 2 and c.j <= len(lam) - 2 and c.k <= len(nu) - 2
            z = third_element(P, c)
            assert z in cls.elements and z not in (lam.base, nu.base)
    assert seen >= 20


@given(st.integers(2, 5), st.integers(1, 6), st.integers(1, 6), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_permutations_stay_valid(alpha, a, b, rnd):
    P = SemigroupPresentation(2, alpha, [(1, alpha - 1)])
    x = (a * alpha + 1, b * alpha + alpha - 1)
    lam = first_full(P, x)
    steps = list(lam.steps)
    rnd.shuffle(steps)
    assert is_star_sequence(P, StarSequence(x, tuple(steps)))


@given(*[st.lists(st.integers(0, 30), min_size=3, max_size=3) for _ in range(4)])
def test_h_superadditive(x1, y1, x2, y2):
    lhs = [a + b for a, b in zip(h_min(x1, y1), h_min(x2, y2))]
    rhs = h_min([a + b for a, b in zip(x1, x2)], [a + b for a, b in zip(y1, y2)])
    assert all(p <= q for p, q in zip(lhs, rhs))


def test_partial_points_agree_with_oracle():
    lam = only(CROSSED79, (1232, 32))
    assert lam.points() == partial_points(lam.base, lam.steps)
    assert all(is_member(CROSSED79, p) for p in lam.points())
