"""Modular presweep, its inverse, and the modular sweep map."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .words import ModWord, PartitionedWord, levels_mod


@dataclass(frozen=True)
class PresweepFailure:
    """Returned when the inverse presweep hits an empty block.

    ``residue`` holds the unvisited letters, each kept in its block.
    ``positions`` are their 1-based indices in the input, and
    ``visited_order`` lists ``(index, level)`` pairs in the order they were
    read (``level`` is the block the letter was taken from).
    """

    residue: PartitionedWord
    positions: tuple[int, ...]
    visited_order: tuple[tuple[int, int], ...]

    @property
    def visited(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.visited_order)


@dataclass(frozen=True)
class TraceStep:
    """State of the inverse presweep after ``step`` letters were removed."""

    step: int
    remaining: PartitionedWord
    level: int
    recovered: tuple[int, ...]
    next_index: int | None = None  # 1-based index about to be read, if any


def presweep(w: ModWord) -> PartitionedWord:
    m = w.modulus
    lv = levels_mod(w)
    blocks = [[] for _ in range(m)]
    for j in range(len(w) - 1, -1, -1):
        blocks[lv[j]].append(w[j])
    return PartitionedWord.from_blocks(m, blocks[::-1])


def forget(p: PartitionedWord) -> ModWord:
    return p.word


def sweep_mod(w: ModWord) -> ModWord:
    return forget(presweep(w))


def _run_inverse(p: PartitionedWord, trace: list | None = None):
    m = p.modulus
    # per block: list of 1-based letter indices, front = leftmost
    queues = {k: [] for k in range(m)}
    pos = 0
    for d, n in enumerate(p.sizes):
        k = m - 1 - d
        queues[k] = list(range(pos + 1, pos + n + 1))
        pos += n
    heads = dict.fromkeys(range(m), 0)
    letters = p.letters

    def remaining():
        keep = [queues[m - 1 - d][heads[m - 1 - d]:] for d in range(m)]
        return PartitionedWord.from_blocks(m, [[letters[i - 1] for i in b] for b in keep]), keep

    level = p.word.residue
    out: list[int] = []  # recovered letters, last letter first
    visited: list[tuple[int, int]] = []
    for step in range(len(p) + 1):
        q = queues[level]
        nxt = q[heads[level]] if heads[level] < len(q) else None
        if trace is not None:
            trace.append(TraceStep(step, remaining()[0], level, tuple(reversed(out)), nxt))
        if step == len(p):
            break
        if nxt is None:
            residue, keep = remaining()
            return PresweepFailure(residue, tuple(i for b in keep for i in b), tuple(visited))
        heads[level] += 1
        x = letters[nxt - 1]
        out.append(x)
        visited.append((nxt, level))
        level = (level - x) % m
    return ModWord(m, out[::-1])


def inverse_presweep(p: PartitionedWord) -> ModWord | PresweepFailure:
    """Undo presweep, or return a :class:`PresweepFailure` if p is not successful."""
    return _run_inverse(p)


def inverse_presweep_trace(p: PartitionedWord) -> tuple[ModWord | PresweepFailure, list[TraceStep]]:
    steps: list[TraceStep] = []
    return _run_inverse(p, steps), steps


def unsweep_mod(u: ModWord) -> ModWord:
    from .equitable import rightmost

    res = inverse_presweep(rightmost(u))
    if isinstance(res, PresweepFailure):
        raise InvariantViolation(f"rightmost partition of {u} is not successful")
    return res
