"""Words over Z/m, partitioned words, and modular levels.

Block indices are always the mathematical ones: a partitioned word is
displayed and stored as ``u*_{m-1} | u*_{m-2} | ... | u*_0``, so the first
stored block has index ``m - 1`` and the last has index ``0``.  Letter
positions in the public API are 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Sequence

EMPTY_BLOCK_MARKS = ("·", "∅", ".")


@dataclass(frozen=True)
class ModWord:
    modulus: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if not 0 <= x < self.modulus:
                raise ValueError(f"letter {x} not in [0, {self.modulus})")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self) -> str:
        return format_word(self)

    @property
    def total(self) -> int:
        """|u|, the plain letter sum."""
        return sum(self.letters)

    @property
    def residue(self) -> int:
        """|u|_m, the letter sum reduced mod m."""
        return self.total % self.modulus


@dataclass(frozen=True)
class LevelSequence:
    """Prefix sums of a word; ``modulus`` is None for integer levels."""

    levels: tuple[int, ...]
    modulus: int | None = None

    @property
    def modular(self) -> bool:
        return self.modulus is not None

    def __len__(self) -> int:
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)

    def __getitem__(self, i):
        return self.levels[i]


def levels_mod(w: ModWord) -> LevelSequence:
    m = w.modulus
    return LevelSequence(tuple(s % m for s in accumulate(w.letters)), m)


def levels_int(letters: Sequence[int]) -> LevelSequence:
    return LevelSequence(tuple(accumulate(letters)), None)


@dataclass(frozen=True)
class PartitionedWord:
    """A word cut into m consecutive (possibly empty) blocks.

    ``sizes`` lists block lengths in display order, i.e. ``sizes[0]`` is the
    length of block ``m - 1`` and ``sizes[-1]`` the length of block 0.
    """

    word: ModWord
    sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if len(sizes) != self.word.modulus:
            raise ValueError(f"need {self.word.modulus} block sizes, got {len(sizes)}")
        if any(s < 0 for s in sizes):
            raise ValueError("block sizes must be nonnegative")
        if sum(sizes) != len(self.word):
            raise ValueError(f"block sizes sum to {sum(sizes)}, word has {len(self.word)} letters")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def from_blocks(cls, modulus: int, blocks: Sequence[Sequence[int]]) -> PartitionedWord:
        """Build from blocks given in display order m-1, ..., 0."""
        letters = [x for b in blocks for x in b]
        return cls(ModWord(modulus, letters), tuple(len(b) for b in blocks))

    @classmethod
    def from_block_vector(cls, w: ModWord, v: Sequence[int]) -> PartitionedWord:
        return from_block_vector(w, v)

    @property
    def modulus(self) -> int:
        return self.word.modulus

    @property
    def letters(self) -> tuple[int, ...]:
        return self.word.letters

    def __len__(self) -> int:
        return len(self.word)

    def size(self, k: int) -> int:
        """Length of block k."""
        return self.sizes[self.modulus - 1 - k]

    def _start(self, k: int) -> int:
        # 0-based offset of the first letter of block k
        return sum(self.sizes[: self.modulus - 1 - k])

    def block(self, k: int) -> tuple[int, ...]:
        if not 0 <= k < self.modulus:
            raise IndexError(f"block index {k} out of range for m={self.modulus}")
        s = self._start(k)
        return self.letters[s : s + self.size(k)]

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """All blocks in display order (block m-1 first)."""
        out, s = [], 0
        for n in self.sizes:
            out.append(self.letters[s : s + n])
            s += n
        return tuple(out)

    def block_of(self, i: int) -> int:
        return block_of(self, i)

    def block_vector(self) -> tuple[int, ...]:
        return block_vector(self)

    def __str__(self) -> str:
        return format_partition(self)

    def pretty(self) -> str:
        return format_partition(self, empty="·")


def block_of(p: PartitionedWord, i: int) -> int:
    """Block index of the i-th letter (1-based)."""
    if not 1 <= i <= len(p):
        raise IndexError(f"letter index {i} out of range 1..{len(p)}")
    seen = 0
    for pos, n in enumerate(p.sizes):
        seen += n
        if i <= seen:
            return p.modulus - 1 - pos
    raise AssertionError("unreachable")


def block_vector(p: PartitionedWord) -> tuple[int, ...]:
    m = p.modulus
    return tuple(m - 1 - pos for pos, n in enumerate(p.sizes) for _ in range(n))


def from_block_vector(w: ModWord, v: Sequence[int]) -> PartitionedWord:
    v = tuple(v)
    m = w.modulus
    if len(v) != len(w):
        raise ValueError(f"block vector has length {len(v)}, word has {len(w)}")
    if any(not 0 <= k < m for k in v):
        raise ValueError(f"block indices must lie in [0, {m})")
    if any(a < b for a, b in zip(v, v[1:])):
        raise ValueError("block vector must be nonincreasing")
    sizes = [0] * m
    for k in v:
        sizes[m - 1 - k] += 1
    return PartitionedWord(w, tuple(sizes))


def empty_partition(m: int) -> PartitionedWord:
    return PartitionedWord(ModWord(m, ()), (0,) * m)


# -- text forms -------------------------------------------------------------

def _letters_str(letters: Iterable[int], m: int, compact: bool | None = None) -> str:
    """Digit string when ``compact`` (default: m <= 10), else comma-separated."""
    letters = list(letters)
    if compact is None:
        compact = m <= 10
    if compact and m <= 10:
        return "".join(map(str, letters))
    return ",".join(map(str, letters))


def format_word(w: ModWord, compact: bool | None = None) -> str:
    return _letters_str(w.letters, w.modulus, compact)


def format_partition(p: PartitionedWord, empty: str = "", compact: bool | None = None) -> str:
    return "|".join(_letters_str(b, p.modulus, compact) or empty for b in p.blocks)


def parse_letters(text: str, m: int | None = None) -> list[int]:
    """Comma-separated integers, or a compact digit string when m <= 10."""
    text = text.strip()
    if text in ("",) + EMPTY_BLOCK_MARKS + ("ε",):
        return []
    if "," in text:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    if m is not None and m <= 10:
        if not text.isdigit():
            raise ValueError(f"cannot read {text!r} as a digit string")
        return [int(c) for c in text]
    return [int(text)]


def parse_word(text: str, m: int) -> ModWord:
    return ModWord(m, parse_letters(text, m))


def parse_partition(text: str, m: int) -> PartitionedWord:
    parts = text.strip().split("|")
    if len(parts) != m:
        raise ValueError(f"expected {m} blocks separated by '|', got {len(parts)}")
    return PartitionedWord.from_blocks(m, [parse_letters(t, m) for t in parts])
