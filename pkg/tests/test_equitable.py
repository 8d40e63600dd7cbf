import pytest
from hypothesis import given
from hypothesis import strategies as st

from sweepmap.equitable import (
    EQUITABLE,
    LESS,
    MORE,
    balancing_array,
    column_status,
    column_targets,
    is_equitable,
    is_successful,
    rightmost,
    rightmost_trace,
    succ_tree_children,
    succ_tree_level,
    successful,
    successful_from,
    successful_from_trace,
)
from sweepmap.lattice import leftmost
from sweepmap.modular import presweep
from sweepmap.words import ModWord, block_vector, empty_partition, from_block_vector, parse_partition, parse_word

U = parse_word("1331421", 5)


def test_targets():
    assert column_targets(U) == (3, 3, 3, 3, 3)
    assert column_targets(ModWord(5, (3, 1, 1, 3))) == (1, 2, 2, 2, 1)


def test_array_wraps_downward():
    arr = balancing_array(parse_partition("13|31|4|2|1", 5))
    assert arr.filled(2) == (4, 3, 2)
    assert arr.filled(5) == (4, 2, 1, 0)  # 4 in block 2 wraps from column 0 to 4
    assert arr.render(ascii=True, header=False).splitlines()[1] == "2 # # # . ."


def test_zero_letters_fill_nothing():
    arr = balancing_array(parse_partition("0|0|", 3))
    assert arr.filled(1) == arr.filled(2) == ()


def test_column_status():
    p = parse_partition("||||1331421", 5)
    assert column_status(p, 0).status == MORE
    assert column_status(p, 1).status == LESS
    q = parse_partition("13|31|4|2|1", 5)
    assert column_status(q, 3).status == EQUITABLE
    with pytest.raises(IndexError):
        column_status(q, 5)


def test_rightmost_is_successful():
    p = rightmost(U)
    assert str(p) == "1|33||1|421"
    assert is_equitable(p) and is_successful(p)
    assert not is_successful(parse_partition("13|31|4|2|1", 5))


def test_rightmost_moves():
    _, steps = rightmost_trace(U)
    assert [s.index for s in steps] == [1, 2, 3, 1, 4, 2, 1, 3, 2, 1, 3]


def test_successful_from_rounds():
    p, rounds = successful_from_trace(parse_partition("13|31|4|2|1", 5))
    assert str(p) == "1|33||1|421"
    assert [str(r.partition) for r in rounds] == ["13|31|4|2|1", "1|33|1|4|21"]
    assert rounds[1].failure.visited == (6, 2, 7, 1, 3)


def test_successful_from_rejects_non_equitable():
    with pytest.raises(ValueError):
        successful_from(parse_partition("||||1331421", 5))


def test_successful_default_start():
    assert successful(U) == rightmost(U)
    with pytest.raises(ValueError):
        successful(U, start=parse_partition("1|1|||", 5))


def test_tree_children():
    kids = succ_tree_children(empty_partition(3))
    assert [str(k) for k in kids] == ["||0", "|1|", "2||"]
    assert all(is_successful(k) for k in kids)
    with pytest.raises(ValueError):
        succ_tree_children(parse_partition("13|31|4|2|1", 5))


def test_tree_level_words_distinct():
    level = list(succ_tree_level(2, 4))
    assert len({p.word for p in level}) == 16


@st.composite
def words(draw):
    m = draw(st.integers(1, 5))
    return ModWord(m, draw(st.lists(st.integers(0, m - 1), max_size=6)))


@given(words())
def test_rightmost_equals_presweep(w):
    from sweepmap.modular import sweep_mod

    u = sweep_mod(w)
    assert rightmost(u) == presweep(w)


@given(words())
def test_leftmost_is_below_rightmost(u):
    lo, hi = block_vector(leftmost(u)), block_vector(rightmost(u))
    assert all(a >= b for a, b in zip(lo, hi))
    assert successful_from(leftmost(u)) == rightmost(u)


def test_short_column():
    p = from_block_vector(U, (4, 3, 3, 2, 2, 0, 0))
    assert str(p) == "1|33|14||21"
    st = column_status(p, 3)
    assert (st.count, st.status) == (2, LESS)
    assert not is_equitable(p)


def test_trivial_tree_and_words():
    assert [str(c) for c in succ_tree_children(empty_partition(1))] == ["0"]
    assert rightmost(ModWord(3, (0, 0, 0))).pretty() == "·|·|000"
    assert is_equitable(empty_partition(4))
