from hypothesis import given
from hypothesis import strategies as st

from sweepmap.modular import (
    PresweepFailure,
    inverse_presweep,
    inverse_presweep_trace,
    presweep,
    sweep_mod,
    unsweep_mod,
)
from sweepmap.words import ModWord, parse_partition, parse_word


@st.composite
def words(draw, max_m=7, max_len=9):
    m = draw(st.integers(1, max_m))
    letters = draw(st.lists(st.integers(0, m - 1), max_size=max_len))
    return ModWord(m, letters)


def test_presweep_example():
    w = parse_word("3113214", 5)
    assert str(presweep(w)) == "1|33||1|421"
    assert str(sweep_mod(w)) == "1331421"


def test_empty_and_trivial():
    assert sweep_mod(ModWord(5, ())) == ModWord(5, ())
    assert sweep_mod(ModWord(1, (0, 0, 0))) == ModWord(1, (0, 0, 0))
    assert unsweep_mod(ModWord(5, ())) == ModWord(5, ())


def test_inverse_of_leftmost_fails():
    res = inverse_presweep(parse_partition("13|31|4|2|1", 5))
    assert isinstance(res, PresweepFailure)
    assert str(res.residue) == "3|1|4|2|"
    assert res.positions == (2, 4, 5, 6)
    assert res.visited == (7, 1, 3)


def test_trace_visit_order():
    res, steps = inverse_presweep_trace(parse_partition("1|33||1|421", 5))
    assert res == parse_word("3113214", 5)
    assert [s.next_index for s in steps] == [5, 4, 6, 2, 7, 1, 3, None]


@given(words())
def test_unsweep_inverts_sweep(w):
    assert unsweep_mod(sweep_mod(w)) == w


@given(words())
def test_presweep_inverse(w):
    assert inverse_presweep(presweep(w)) == w


@given(words())
def test_sweep_is_a_rearrangement(w):
    assert sorted(sweep_mod(w).letters) == sorted(w.letters)


def test_small_cases():
    # levels (0, 1): block 1 holds the 1, block 0 the 0
    assert str(presweep(parse_word("01", 2))) == "1|0"
    assert str(sweep_mod(parse_word("01", 2))) == "10"
    assert presweep(ModWord(4, (2,))).pretty() == "·|2|·|·"
    assert presweep(ModWord(3, (0, 0, 0))).pretty() == "·|·|000"


def test_all_empty_partition_inverts_to_empty():
    assert inverse_presweep(parse_partition("||", 3)) == ModWord(3, ())
