import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from semigroup_reg.lattice import (
    SemigroupPresentation,
    add,
    class_count,
    degree,
    is_member,
    residue,
    validate,
)

from oracles import NaiveSemigroup

CHAIN30 = SemigroupPresentation(2, 30, [(3, 27), (23, 7)])
CURVE12 = SemigroupPresentation(2, 12, [(11, 1), (9, 3), (4, 8), (1, 11)])


def test_validate_paper_example():
    rep = validate(CHAIN30)
    assert rep.valid and rep.gcd_ok


def test_validate_negative_coordinate():
    rep = validate(SemigroupPresentation(2, 5, [(6, -1)]))
    assert not rep.valid
    assert any("negative" in e for e in rep.errors)


def test_validate_gcd_is_only_a_warning():
    rep = validate(SemigroupPresentation(2, 4, [(2, 2)]))
    assert rep.valid
    assert not rep.gcd_ok
    assert "gcd 2" in rep.warnings[0]


@pytest.mark.parametrize(
    "alpha, extras, fragment",
    [
        (3, [], "c >= 1"),
        (4, [(4, 0)], "unit"),
        (3, [(2, 1), (2, 1)], "repeated"),
        (3, [(2, 1, 1)], "length"),
        (3, [(2, 2)], "sum"),
    ],
)
def test_validate_structural_errors(alpha, extras, fragment):
    rep = validate(SemigroupPresentation(2, alpha, extras))
    assert not rep.valid
    assert any(fragment in e for e in rep.errors)


def test_degree():
    assert degree((27, 243), 30) == 9
    assert degree((0, 0, 0), 7) == 0
    assert degree((1, 1), 30) == Fraction(1, 15)


def test_membership_examples():
    assert is_member(CHAIN30, (27, 243))
    assert is_member(CHAIN30, (0, 0))
    assert not is_member(CHAIN30, (3, 26))


def test_residue_examples():
    assert residue((27, 243), 30) == (27, 3)
    assert residue((207, 63), 30) == (27, 3)
    assert residue((30, 0), 30) == (0, 0)


def test_class_count_examples():
    assert class_count(CURVE12) == 12
    assert class_count(CHAIN30) == 30
    assert class_count(SemigroupPresentation(4, 6, [(0, 2, 0, 4), (3, 0, 2, 1), (0, 2, 2, 2)])) == 18


@pytest.mark.parametrize(
    "d, alpha, extras",
    [
        (2, 7, [(3, 4)]),
        (2, 9, [(8, 1), (5, 4), (2, 7)]),
        (3, 3, [(1, 1, 1), (2, 1, 0)]),
        (3, 4, [(2, 1, 1), (0, 3, 1)]),
    ],
)
def test_membership_and_count_against_enumeration(d, alpha, extras):
    P = SemigroupPresentation(d, alpha, extras)
    S = NaiveSemigroup(d, alpha, extras, max_degree=6)
    box = range(0, 3 * alpha + 1)
    for x in itertools.product(box, repeat=d):
        if sum(x) % alpha == 0 and sum(x) // alpha <= 6:
            assert is_member(P, x) == (x in S), x
    assert class_count(P) == len(S.residues())


presentations_2d = st.integers(3, 25).flatmap(
    lambda a: st.lists(st.integers(1, a - 1), min_size=1, max_size=6, unique=True).map(
        lambda ks: SemigroupPresentation(2, a, [(k, a - k) for k in ks])
    )
)


@given(presentations_2d)
def test_class_count_is_alpha_in_dimension_two(P):
    if validate(P).gcd_ok:
        assert class_count(P) == P.alpha


@given(presentations_2d, st.data())
@settings(max_examples=50)
def test_membership_closed_under_generators(P, data):
    k = data.draw(st.integers(0, 3 * P.alpha))
    x = (k, 3 * P.alpha - k)
    if is_member(P, x):
        for g in P.generators:
            assert is_member(P, add(x, g))


@given(
    st.lists(st.integers(-50, 50), min_size=3, max_size=3),
    st.lists(st.integers(-50, 50), min_size=3, max_size=3),
    st.integers(1, 20),
)
def test_residue_and_degree_are_additive(x, y, alpha):
    s = add(x, y)
    assert residue(s, alpha) == residue(add(residue(x, alpha), residue(y, alpha)), alpha)
    assert degree(s, alpha) == degree(x, alpha) + degree(y, alpha)
