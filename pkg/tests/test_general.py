from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sweepmap.general import (
    Content,
    DyckParams,
    IntWord,
    arrangements,
    dyck_words,
    is_dyck,
    lift,
    modulus_bound,
    sweep_int,
    sweep_int_lifted,
    unsweep_int,
    unzeta,
    zeta,
    zeta_direct,
)


def test_content_parse():
    c = Content.parse("-2:3,3:2")
    assert c.pairs == ((3, 2), (-2, 3))
    assert str(c) == "3:2,-2:3"
    assert c.length == 5 and c.total == 0
    with pytest.raises(ValueError):
        Content.parse("3")
    with pytest.raises(ValueError):
        Content(((1, 1), (1, 2)))


def test_word_must_match_content():
    with pytest.raises(ValueError):
        IntWord(Content.parse("3:2,-2:3"), (3, -2))


def test_sweep_example():
    w = IntWord.of((3, -2, 3, -2, -2))
    assert sweep_int(w).letters == (3, 3, -2, -2, -2)
    assert modulus_bound(w.content) == 13
    assert lift(w).letters == (3, 11, 3, 11, 11)


def test_negative_levels_first():
    assert sweep_int(IntWord.of((-1, 2))).letters == (-1, 2)


def test_arrangements_are_distinct_and_sorted():
    c = Content.parse("1:2,-1:2")
    got = list(arrangements(c))
    assert got == sorted(set(permutations((1, 1, -1, -1))))


def test_dyck_counts():
    assert [len(list(dyck_words(DyckParams(a, b)))) for a, b in [(1, -1), (3, -2), (3, -5), (2, -2)]] == [1, 2, 7, 2]
    assert DyckParams(3, -5).catalan() == 7
    with pytest.raises(ValueError):
        DyckParams(-1, 2)


def test_zeta_swaps_for_3_2():
    P = DyckParams(3, -2)
    a, b = (3, -2, 3, -2, -2), (3, 3, -2, -2, -2)
    assert zeta(a, P).letters == b and zeta(b, P).letters == a


def test_zeta_rejects_non_dyck():
    with pytest.raises(ValueError):
        zeta((-2, 3, 3, -2, -2), DyckParams(3, -2))


@pytest.mark.parametrize("ab", [(2, -2), (4, -6), (3, -3)])
def test_zeta_direct_non_coprime(ab):
    P = DyckParams(*ab)
    for w in dyck_words(P):
        assert zeta_direct(w, P) == zeta(w, P)
        assert unzeta(zeta(w, P), P) == w


@st.composite
def int_words(draw):
    vals = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=3, unique=True))
    letters = draw(st.lists(st.sampled_from(vals), max_size=7))
    return IntWord.of(letters)


@given(int_words())
def test_lifted_sweep_agrees(w):
    assert sweep_int_lifted(w) == sweep_int(w)
    assert unsweep_int(sweep_int(w)) == w


@given(int_words())
def test_sweep_keeps_dyck(w):
    if is_dyck(w):
        assert is_dyck(sweep_int(w))


def test_zero_content():
    c = Content.parse("0:3")
    assert modulus_bound(c) == 1
    assert modulus_bound(Content.parse("1:5")) == 6
    w = IntWord(c, (0, 0, 0))
    assert sweep_int(w) == unsweep_int(w) == w
    assert is_dyck(())
    assert zeta_direct((1, -1), DyckParams(1, -1)).letters == (1, -1)


def test_dyck_examples():
    assert is_dyck((3, -2, 3, -2, -2))
    assert not is_dyck((3, -2, -2, 3, -2))
