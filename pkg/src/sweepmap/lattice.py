"""The distributive lattice of equitable partitions of a fixed word.

Order convention: ``p <= q`` iff every letter of ``q`` sits weakly to the
right of where it sits in ``p``, i.e. ``block(p, i) >= block(q, i)`` for all
i.  Moving right is moving up; the leftmost partition is the bottom, the
rightmost (= successful) partition the top, join takes componentwise minima
of block indices and meet takes maxima.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import product

from .equitable import (
    MoveStep,
    _counts,
    _loop_bound,
    column_targets,
    is_equitable,
    rightmost,
)
from .errors import InvariantViolation
from .words import ModWord, PartitionedWord, block_vector, from_block_vector


@dataclass(frozen=True)
class SuffixVector:
    """Suffix lengths per block, stored in display order (block m-1 first)."""

    lengths: tuple[int, ...]

    def length(self, k: int) -> int:
        return self.lengths[len(self.lengths) - 1 - k]

    def __bool__(self):
        return any(self.lengths)

    def positions(self, host: PartitionedWord) -> tuple[int, ...]:
        """1-based letter indices selected in ``host``."""
        out, start = [], 0
        for n, t in zip(host.sizes, self.lengths):
            out.extend(range(start + n - t + 1, start + n + 1))
            start += n
        return tuple(out)

    def letter_sum(self, host: PartitionedWord) -> int:
        return sum(host.letters[i - 1] for i in self.positions(host))

    def meet(self, other: SuffixVector) -> SuffixVector:
        return SuffixVector(tuple(map(min, self.lengths, other.lengths)))

    def union(self, other: SuffixVector) -> SuffixVector:
        return SuffixVector(tuple(map(max, self.lengths, other.lengths)))

    def format(self, host: PartitionedWord) -> str:
        """Host partition with unselected letters shown as '_'."""
        sel = set(self.positions(host))
        out, i = [], 1
        for b in host.blocks:
            cell = ""
            for x in b:
                cell += str(x) if i in sel else "_"
                i += 1
            out.append(cell)
        return "|".join(out)


def _check_suffix(p: PartitionedWord, s: SuffixVector):
    if len(s.lengths) != p.modulus:
        raise ValueError(f"suffix vector needs {p.modulus} entries")
    if any(not 0 <= t <= n for t, n in zip(s.lengths, p.sizes)):
        raise ValueError(f"suffix lengths {s.lengths} exceed block sizes {p.sizes}")


def is_balanced(p: PartitionedWord, s: SuffixVector) -> bool:
    """True if the selected letters, left in their blocks, fill every column
    of the balancing array equally often.

    This forces the letter sum to vanish mod m, but is stronger: 1|33|1|4|21
    has the suffix {1, 3, 4} with sum 5 that is not balanced.
    """
    _check_suffix(p, s)
    pos = s.positions(p)
    bv = block_vector(p)
    counts = _counts([p.letters[i - 1] for i in pos], [bv[i - 1] for i in pos], p.modulus)
    return len(set(counts)) == 1


def left_bbs_all(p: PartitionedWord) -> list[SuffixVector]:
    """Every nonempty left balanced block-suffix, by exhaustive enumeration."""
    m = p.modulus
    ranges = [range(n + 1) for n in p.sizes[:-1]] + [range(1)]
    out = []
    for lengths in product(*ranges):
        s = SuffixVector(lengths)
        if s and s.letter_sum(p) % m == 0 and is_balanced(p, s):
            out.append(s)
    return out


def minimal_left_bbs(p: PartitionedWord) -> list[SuffixVector]:
    """Left balanced block-suffixes meeting every other one in itself or nothing."""
    allb = left_bbs_all(p)
    out = []
    for s in allb:
        if all(t == s or s.meet(t) in (s, SuffixVector((0,) * p.modulus)) for t in allb):
            out.append(s)
    return out


def shift_right(p: PartitionedWord, s: SuffixVector) -> PartitionedWord:
    _check_suffix(p, s)
    if not s:
        raise ValueError("cannot shift an empty block-suffix")
    if s.length(0):
        raise ValueError("block-suffix meets block 0; it cannot move right")
    if not is_balanced(p, s):
        raise ValueError("block-suffix is not balanced")
    bv = list(block_vector(p))
    for i in s.positions(p):
        bv[i - 1] -= 1
    return from_block_vector(p.word, bv)


def covers(p: PartitionedWord) -> list[PartitionedWord]:
    """Upper covers of an equitable partition."""
    if not is_equitable(p):
        raise ValueError(f"{p} is not an equitable partition")
    ups = {shift_right(p, s) for s in minimal_left_bbs(p)}
    return sorted(ups, key=block_vector)


# -- the leftmost partition --------------------------------------------------

def _leftmost(u: ModWord, steps: list | None) -> PartitionedWord:
    m, n = u.modulus, len(u)
    bv = [m - 1] * n
    targets = column_targets(u)
    for _ in range(_loop_bound(n, m)):
        counts = _counts(u.letters, bv, m)
        if counts == list(targets):
            return from_block_vector(u, bv)
        if counts[0] > targets[0]:
            raise InvariantViolation(f"column 0 overfull during leftmost({u}) at {bv}")
        j = max(c for c in range(m) if counts[c] > targets[c])
        if j == 0:
            raise InvariantViolation("leftmost tried to move a letter out of block 0")
        idx = [i for i, b in enumerate(bv) if b == j]
        if not idx:
            raise InvariantViolation(f"block {j} empty while column {j} is overfull")
        i = idx[-1]
        if steps is not None:
            steps.append(MoveStep(j, i + 1, j, j - 1, from_block_vector(u, bv)))
        bv[i] = j - 1
    raise InvariantViolation(f"leftmost({u}) did not terminate")


def leftmost(u: ModWord) -> PartitionedWord:
    """The equitable partition with every letter as far left as possible."""
    return _leftmost(u, None)


def leftmost_trace(u: ModWord) -> tuple[PartitionedWord, list[MoveStep]]:
    steps: list[MoveStep] = []
    return _leftmost(u, steps), steps


# -- meet and join -------------------------------------------------------------

def _pair(p: PartitionedWord, q: PartitionedWord):
    if p.word != q.word:
        raise ValueError(f"{p} and {q} partition different words")
    for x in (p, q):
        if not is_equitable(x):
            raise ValueError(f"{x} is not an equitable partition")
    return block_vector(p), block_vector(q)


def join(p: PartitionedWord, q: PartitionedWord) -> PartitionedWord:
    a, b = _pair(p, q)
    return from_block_vector(p.word, tuple(map(min, a, b)))


def meet(p: PartitionedWord, q: PartitionedWord) -> PartitionedWord:
    a, b = _pair(p, q)
    return from_block_vector(p.word, tuple(map(max, a, b)))


def leq(p: PartitionedWord, q: PartitionedWord) -> bool:
    return all(a >= b for a, b in zip(block_vector(p), block_vector(q)))


# -- the whole lattice ---------------------------------------------------------

@dataclass(frozen=True)
class EqLattice:
    word: ModWord
    nodes: tuple[PartitionedWord, ...]
    covers: tuple[tuple[int, int], ...]
    bottom: int
    top: int

    def __len__(self):
        return len(self.nodes)

    def index(self, p: PartitionedWord) -> int:
        return self.nodes.index(p)

    def upper_covers(self, i: int) -> list[int]:
        return [b for a, b in self.covers if a == i]

    def is_chain(self) -> bool:
        if len(self.covers) != len(self.nodes) - 1:
            return False
        return all(len(self.upper_covers(i)) == (0 if i == self.top else 1) for i in range(len(self)))

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "modulus": self.word.modulus,
            "nodes": [str(p) for p in self.nodes],
            "covers": [list(c) for c in self.covers],
            "bottom": self.bottom,
            "top": self.top,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        return hasse_dot(self)


def enumerate_lattice(u: ModWord) -> EqLattice:
    start = leftmost(u)
    seen = {start: None}
    edges = set()
    todo = deque([start])
    while todo:
        p = todo.popleft()
        for q in covers(p):
            edges.add((p, q))
            if q not in seen:
                seen[q] = None
                todo.append(q)
    nodes = tuple(sorted(seen, key=block_vector))
    where = {p: i for i, p in enumerate(nodes)}
    cov = tuple(sorted((where[a], where[b]) for a, b in edges))
    top = rightmost(u)
    if top not in where:
        raise InvariantViolation(f"rightmost({u}) not reached from leftmost({u})")
    return EqLattice(u, nodes, cov, where[start], where[top])


def hasse_dot(L: EqLattice) -> str:
    lines = [
        "digraph equitable_partitions {",
        "  rankdir=BT;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for i, p in enumerate(L.nodes):
        attrs = f'label="{p.pretty()}"'
        if i == L.bottom:
            attrs += ", style=bold"
        if i == L.top:
            attrs += ", peripheries=2"
        lines.append(f"  n{i} [{attrs}];")
    for a, b in L.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
