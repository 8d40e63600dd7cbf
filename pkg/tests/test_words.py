import pytest

from sweepmap.words import (
    ModWord,
    PartitionedWord,
    block_of,
    block_vector,
    empty_partition,
    format_partition,
    format_word,
    from_block_vector,
    levels_int,
    levels_mod,
    parse_partition,
    parse_word,
)

U = ModWord(5, (1, 3, 3, 1, 4, 2, 1))


def test_letters_must_be_residues():
    with pytest.raises(ValueError):
        ModWord(5, (1, 5))
    with pytest.raises(ValueError):
        ModWord(0, ())


def test_total_and_residue():
    assert U.total == 15
    assert U.residue == 0
    assert ModWord(5, (3, 1, 1, 3)).residue == 3


def test_levels():
    assert tuple(levels_mod(ModWord(5, (3, 1, 1, 3, 2, 1, 4)))) == (3, 4, 0, 3, 0, 1, 0)
    assert tuple(levels_int((3, -2, 3, -2, -2))) == (3, 1, 4, 2, 0)


def test_blocks_in_display_order():
    p = parse_partition("1|33||1|421", 5)
    assert p.sizes == (1, 2, 0, 1, 3)
    assert p.block(4) == (1,)
    assert p.block(2) == ()
    assert p.block(0) == (4, 2, 1)
    assert block_vector(p) == (4, 3, 3, 1, 0, 0, 0)
    assert [block_of(p, i) for i in (1, 2, 4, 7)] == [4, 3, 1, 0]


def test_block_vector_roundtrip():
    p = parse_partition("13|31|4|2|1", 5)
    assert from_block_vector(p.word, block_vector(p)) == p


@pytest.mark.parametrize("bv", [(0, 1, 0, 0, 0, 0, 0), (5,) * 7, (1,) * 6])
def test_bad_block_vectors(bv):
    with pytest.raises(ValueError):
        from_block_vector(U, bv)


def test_from_blocks_checks_count():
    with pytest.raises(ValueError):
        PartitionedWord.from_blocks(5, [[1], [2]])


@pytest.mark.parametrize("text", ["1|33||1|421", "1|33|·|1|421", "1|33|∅|1|421", "1|3,3||1|4,2,1"])
def test_parse_partition_forms(text):
    assert block_vector(parse_partition(text, 5)) == (4, 3, 3, 1, 0, 0, 0)


def test_format():
    p = parse_partition("1|33||1|421", 5)
    assert str(p) == "1|33||1|421"
    assert p.pretty() == "1|33|·|1|421"
    assert format_partition(p, compact=False) == "1|3,3||1|4,2,1"
    assert format_word(ModWord(12, (3, 11))) == "3,11"
    assert str(empty_partition(3)) == "||"


def test_parse_word_forms():
    assert parse_word("3113214", 5) == parse_word("3,1,1,3,2,1,4", 5)
    assert parse_word("", 5) == ModWord(5, ())
    assert parse_word("11", 12).letters == (11,)
    with pytest.raises(ValueError):
        parse_word("3a", 5)


def test_levels_of_swept_word():
    assert tuple(levels_mod(U)) == (1, 4, 2, 3, 2, 4, 0)
