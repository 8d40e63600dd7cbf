"""Balancing arrays, equitable partitions, and the successful partition.

A letter of value ``x`` sitting in block ``b`` fills the ``x`` columns
``b, b-1, ..., b-x+1`` (mod m) of the balancing array: the fill runs to the
right in display order and wraps from column 0 back to column m-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvariantViolation
from .modular import PresweepFailure, inverse_presweep
from .words import ModWord, PartitionedWord, block_vector, empty_partition, from_block_vector

LESS, EQUITABLE, MORE = "less", "equitable", "more"


def column_targets(u: ModWord) -> tuple[int, ...]:
    """Equitable fill count of each column, indexed by column number."""
    q, r = divmod(u.total, u.modulus)
    return tuple(q + 1 if 1 <= j <= r else q for j in range(u.modulus))


def _counts(letters: Sequence[int], bv: Sequence[int], m: int) -> list[int]:
    counts = [0] * m
    for x, b in zip(letters, bv):
        for t in range(x):
            counts[(b - t) % m] += 1
    return counts


def _status(count: int, target: int) -> str:
    if count < target:
        return LESS
    return MORE if count > target else EQUITABLE


@dataclass(frozen=True)
class BalancingArray:
    """N x m grid; ``cells[i][j]`` is row i+1, column j (column index, not position)."""

    rows: int
    cols: int
    cells: tuple[tuple[bool, ...], ...]

    def filled(self, i: int) -> tuple[int, ...]:
        """Filled column indices of row i (1-based), descending."""
        return tuple(j for j in range(self.cols - 1, -1, -1) if self.cells[i - 1][j])

    def column_count(self, j: int) -> int:
        return sum(row[j] for row in self.cells)

    def render(self, ascii: bool = False, header: bool = True) -> str:
        full, empty = ("#", ".") if ascii else ("■", "·")
        cols = range(self.cols - 1, -1, -1)
        width = max(len(str(self.cols - 1)), 1)
        lines = []
        if header:
            lines.append(" " * (len(str(self.rows)) + 1) + " ".join(str(j).rjust(width) for j in cols))
        for i, row in enumerate(self.cells, 1):
            cells = " ".join((full if row[j] else empty).rjust(width) for j in cols)
            lines.append(f"{str(i).rjust(len(str(self.rows)))} {cells}")
        return "\n".join(lines)

    def __str__(self):
        return self.render()


def balancing_array(p: PartitionedWord) -> BalancingArray:
    m = p.modulus
    rows = []
    for x, b in zip(p.letters, block_vector(p)):
        on = {(b - t) % m for t in range(x)}
        rows.append(tuple(j in on for j in range(m)))
    return BalancingArray(len(p), m, tuple(rows))


@dataclass(frozen=True)
class ColumnStatus:
    column: int
    count: int
    target: int
    status: str


def column_statuses(p: PartitionedWord) -> tuple[ColumnStatus, ...]:
    counts = _counts(p.letters, block_vector(p), p.modulus)
    targets = column_targets(p.word)
    return tuple(ColumnStatus(j, c, t, _status(c, t)) for j, (c, t) in enumerate(zip(counts, targets)))


def column_status(p: PartitionedWord, j: int) -> ColumnStatus:
    if not 0 <= j < p.modulus:
        raise IndexError(f"column {j} out of range for m={p.modulus}")
    return column_statuses(p)[j]


def is_equitable(p: PartitionedWord) -> bool:
    return _counts(p.letters, block_vector(p), p.modulus) == list(column_targets(p.word))


def is_successful(p: PartitionedWord) -> bool:
    return not isinstance(inverse_presweep(p), PresweepFailure)


def _loop_bound(n: int, m: int) -> int:
    return max(n, 1) * m * m + 1


# -- the rightmost partition ------------------------------------------------

@dataclass(frozen=True)
class MoveStep:
    """One move of a greedy construction: letter ``index`` (1-based) went
    from block ``source`` to block ``target``; ``column`` is the column that
    triggered the move and ``before`` the partition prior to it."""

    column: int
    index: int
    source: int
    target: int
    before: PartitionedWord


def _rightmost(u: ModWord, steps: list | None):
    m, n = u.modulus, len(u)
    bv = [0] * n
    targets = column_targets(u)
    for _ in range(_loop_bound(n, m)):
        counts = _counts(u.letters, bv, m)
        if counts == list(targets):
            return from_block_vector(u, bv)
        if counts[0] <= targets[0]:
            raise InvariantViolation(f"column 0 not overfull during rightmost({u}) at {bv}")
        j = min(c for c in range(m) if counts[c] < targets[c])
        try:
            i = bv.index(j - 1)
        except ValueError:
            raise InvariantViolation(f"block {j - 1} empty while column {j} is underfull") from None
        if steps is not None:
            steps.append(MoveStep(j, i + 1, j - 1, j, from_block_vector(u, bv)))
        bv[i] = j
    raise InvariantViolation(f"rightmost({u}) did not terminate")


def rightmost(u: ModWord) -> PartitionedWord:
    """The equitable partition with every letter as far right as possible."""
    return _rightmost(u, None)


def rightmost_trace(u: ModWord) -> tuple[PartitionedWord, list[MoveStep]]:
    steps: list[MoveStep] = []
    return _rightmost(u, steps), steps


# -- converging to the successful partition ----------------------------------

@dataclass(frozen=True)
class ShiftRound:
    partition: PartitionedWord
    failure: PresweepFailure


def shift_residue(p: PartitionedWord, failure: PresweepFailure) -> PartitionedWord:
    """Move every unvisited letter one block to the right."""
    bv = list(block_vector(p))
    for i in failure.positions:
        if bv[i - 1] == 0:
            raise InvariantViolation(f"residue of {p} meets block 0")
        bv[i - 1] -= 1
    return from_block_vector(p.word, bv)


def _successful_from(p: PartitionedWord, rounds: list | None) -> PartitionedWord:
    if not is_equitable(p):
        raise ValueError(f"{p} is not an equitable partition")
    for _ in range(_loop_bound(len(p), p.modulus)):
        res = inverse_presweep(p)
        if not isinstance(res, PresweepFailure):
            return p
        if rounds is not None:
            rounds.append(ShiftRound(p, res))
        p = shift_residue(p, res)
    raise InvariantViolation("successful_from did not terminate")


def successful_from(p: PartitionedWord) -> PartitionedWord:
    return _successful_from(p, None)


def successful_from_trace(p: PartitionedWord) -> tuple[PartitionedWord, list[ShiftRound]]:
    rounds: list[ShiftRound] = []
    return _successful_from(p, rounds), rounds


def successful(u: ModWord, start: PartitionedWord | None = None) -> PartitionedWord:
    if start is None:
        from .lattice import leftmost

        start = leftmost(u)
    elif start.word != u:
        raise ValueError("start partition is for a different word")
    return successful_from(start)


# -- the tree of successful partitions ---------------------------------------

def succ_tree_children(p: PartitionedWord) -> tuple[PartitionedWord, ...]:
    """Child i prepends letter i to block (i + |u|_m) mod m."""
    if not is_successful(p):
        raise ValueError(f"{p} is not successful")
    m = p.modulus
    r = p.word.residue
    children = []
    for i in range(m):
        blocks = [list(b) for b in p.blocks]
        k = (i + r) % m
        blocks[m - 1 - k].insert(0, i)
        children.append(PartitionedWord.from_blocks(m, blocks))
    return tuple(children)


def succ_tree_level(m: int, depth: int) -> Iterator[PartitionedWord]:
    """All partitions at the given depth of the tree rooted at the empty partition."""
    level = [empty_partition(m)]
    for _ in range(depth):
        level = [c for p in level for c in succ_tree_children(p)]
    yield from level
