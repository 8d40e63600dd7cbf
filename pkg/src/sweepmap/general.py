"""The sweep map on integer words, Dyck words, and the zeta map.

The integer sweep is inverted by lifting letters to residues modulo a
modulus larger than ``sum(e_j * |a_j|)``; at that size distinct letters
and distinct levels stay distinct, so the modular sweep reproduces the
integer sweep letter for letter.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import accumulate
from math import comb, gcd
from typing import Iterator, Sequence

from .errors import InvariantViolation
from .modular import sweep_mod, unsweep_mod
from .words import ModWord


@dataclass(frozen=True)
class Content:
    """Letter values with multiplicities, as ``((a_1, e_1), ..., (a_n, e_n))``.

    Pairs are kept sorted by decreasing letter value so equal contents compare equal.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted(((int(a), int(e)) for a, e in self.pairs), reverse=True))
        values = [a for a, _ in pairs]
        if len(set(values)) != len(values):
            raise ValueError(f"letter values must be distinct: {values}")
        if any(e < 1 for _, e in pairs):
            raise ValueError("multiplicities must be >= 1")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, letters: Sequence[int]) -> Content:
        return cls(tuple(Counter(letters).items()))

    @classmethod
    def parse(cls, text: str) -> Content:
        """``"3:2,-2:3"`` means two 3s and three -2s."""
        pairs = []
        for item in text.split(","):
            a, _, e = item.strip().partition(":")
            if not e:
                raise ValueError(f"content entry {item!r} is not value:multiplicity")
            pairs.append((int(a), int(e)))
        return cls(tuple(pairs))

    @property
    def length(self) -> int:
        return sum(e for _, e in self.pairs)

    @property
    def total(self) -> int:
        return sum(a * e for a, e in self.pairs)

    def counter(self) -> Counter:
        return Counter(dict(self.pairs))

    def __str__(self):
        return ",".join(f"{a}:{e}" for a, e in self.pairs)


@dataclass(frozen=True)
class IntWord:
    content: Content
    letters: tuple[int, ...]

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        if Counter(letters) != self.content.counter():
            raise ValueError(f"letters {letters} do not realize content {self.content}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, letters: Sequence[int]) -> IntWord:
        return cls(Content.of(letters), tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return ",".join(map(str, self.letters))

    def levels(self) -> tuple[int, ...]:
        return tuple(accumulate(self.letters))

    def reversed(self) -> IntWord:
        return IntWord(self.content, self.letters[::-1])

    def negated(self) -> IntWord:
        return IntWord(Content(tuple((-a, e) for a, e in self.content.pairs)), tuple(-x for x in self.letters))


@dataclass(frozen=True)
class DyckParams:
    """Rational Dyck words: ``-b`` copies of ``a`` and ``a`` copies of ``b``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a <= 0 or self.b >= 0:
            raise ValueError(f"need a > 0 > b, got a={self.a}, b={self.b}")

    @property
    def content(self) -> Content:
        return Content(((self.a, -self.b), (self.b, self.a)))

    @property
    def coprime(self) -> bool:
        return gcd(self.a, -self.b) == 1

    def catalan(self) -> int:
        """Rational Catalan number; only meaningful when a and -b are coprime."""
        n = self.a - self.b
        return comb(n, self.a) // n


def _int_word(w) -> IntWord:
    return w if isinstance(w, IntWord) else IntWord.of(w)


def sweep_int(w: IntWord) -> IntWord:
    """Levels -1, -2, ... first, then the nonnegative levels from the top down
    to 0; letters sharing a level are read right to left."""
    w = _int_word(w)
    lv = w.levels()
    present = set(lv)
    order = sorted((k for k in present if k < 0), reverse=True)
    order += sorted((k for k in present if k >= 0), reverse=True)
    out = []
    for k in order:
        out.extend(w.letters[j] for j in range(len(w) - 1, -1, -1) if lv[j] == k)
    return IntWord(w.content, tuple(out))


def modulus_bound(c: Content) -> int:
    return 1 + sum(e * abs(a) for a, e in c.pairs)


def lift(w: IntWord, m: int | None = None) -> ModWord:
    m = modulus_bound(w.content) if m is None else m
    return ModWord(m, tuple(x % m for x in w.letters))


def _project(u: ModWord, c: Content) -> tuple[int, ...]:
    back = {a % u.modulus: a for a, _ in c.pairs}
    if len(back) != len(c.pairs):
        raise InvariantViolation(f"letters of {c} collide modulo {u.modulus}")
    try:
        return tuple(back[x] for x in u.letters)
    except KeyError as e:
        raise InvariantViolation(f"residue {e.args[0]} matches no letter of {c}") from None


def sweep_int_lifted(w: IntWord) -> IntWord:
    """The integer sweep computed through the modular one."""
    w = _int_word(w)
    return IntWord(w.content, _project(sweep_mod(lift(w)), w.content))


def unsweep_int(u: IntWord) -> IntWord:
    u = _int_word(u)
    return IntWord(u.content, _project(unsweep_mod(lift(u)), u.content))


def is_dyck(w) -> bool:
    letters = w.letters if isinstance(w, IntWord) else w
    return all(s >= 0 for s in accumulate(letters))


def arrangements(c: Content) -> Iterator[tuple[int, ...]]:
    """Every word realizing the content, in lexicographic order."""
    counts = c.counter()
    values = sorted(counts)
    word: list[int] = []

    def rec():
        if len(word) == c.length:
            yield tuple(word)
            return
        for a in values:
            if counts[a]:
                counts[a] -= 1
                word.append(a)
                yield from rec()
                word.pop()
                counts[a] += 1

    yield from rec()


def dyck_words(c: Content | DyckParams) -> Iterator[IntWord]:
    """All Dyck words of a content, filtered from the full arrangement list."""
    if isinstance(c, DyckParams):
        c = c.content
    for letters in arrangements(c):
        if is_dyck(letters):
            yield IntWord(c, letters)


def _as_dyck(w, p: DyckParams) -> IntWord:
    letters = w.letters if isinstance(w, IntWord) else tuple(w)
    if Counter(letters) != p.content.counter():
        raise ValueError(f"{','.join(map(str, letters))} does not have the content of D_{{{p.a},{p.b}}}")
    if not is_dyck(letters):
        raise ValueError(f"{','.join(map(str, letters))} is not a Dyck word")
    return IntWord(p.content, letters)


def zeta(w, p: DyckParams) -> IntWord:
    """zeta(w) = -(rev . sweep . rev)(-w)."""
    w = _as_dyck(w, p)
    return sweep_int(w.negated().reversed()).reversed().negated()


def zeta_direct(w, p: DyckParams) -> IntWord:
    """Sort letters by the level *before* each step: 0, 1, 2, ... then the
    negative levels from the lowest up; ties are read right to left."""
    w = _as_dyck(w, p)
    start = (0,) + w.levels()[:-1]
    present = set(start)
    order = sorted(k for k in present if k >= 0) + sorted(k for k in present if k < 0)
    out = []
    for k in order:
        out.extend(w.letters[j] for j in range(len(w) - 1, -1, -1) if start[j] == k)
    return IntWord(w.content, tuple(out))


def unzeta(u, p: DyckParams) -> IntWord:
    u = _as_dyck(u, p)
    return unsweep_int(u.negated().reversed()).reversed().negated()
