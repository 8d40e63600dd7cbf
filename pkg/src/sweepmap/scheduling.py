"""Daily task scheduling in terms of equitable partitions.

A day has ``m`` hours numbered 1..m; task ``i`` takes ``lengths[i]`` hours
and starts at hour ``starts[i]``.  Hour ``h`` corresponds to block ``m - h``,
so the latest start hour is the rightmost block.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .equitable import is_equitable, rightmost
from .lattice import enumerate_lattice
from .modular import PresweepFailure, inverse_presweep_trace
from .words import ModWord, PartitionedWord, block_vector, from_block_vector


@dataclass(frozen=True)
class Schedule:
    hours: int
    lengths: tuple[int, ...]
    starts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(self.lengths))
        object.__setattr__(self, "starts", tuple(self.starts))
        if len(self.starts) != len(self.lengths):
            raise ValueError("need one start hour per task")
        _check_lengths(self.hours, self.lengths)
        if any(not 1 <= h <= self.hours for h in self.starts):
            raise ValueError(f"start hours must lie in 1..{self.hours}")
        if any(a > b for a, b in zip(self.starts, self.starts[1:])):
            raise ValueError("start hours must be nondecreasing")

    @classmethod
    def from_partition(cls, p: PartitionedWord) -> Schedule:
        m = p.modulus
        return cls(m, p.letters, tuple(m - b for b in block_vector(p)))

    def partition(self) -> PartitionedWord:
        m = self.hours
        return from_block_vector(ModWord(m, self.lengths), [m - h for h in self.starts])

    def load(self) -> tuple[int, ...]:
        """Number of tasks running during each hour 1..m."""
        m = self.hours
        out = [0] * m
        for x, h in zip(self.lengths, self.starts):
            for t in range(x):
                out[(h - 1 + t) % m] += 1
        return tuple(out)

    def to_dict(self, successful: bool | None = None) -> dict:
        d = {"hours": self.hours, "lengths": list(self.lengths), "starts": list(self.starts)}
        if successful is not None:
            d["successful"] = successful
        return d


def _check_lengths(m: int, lengths: Sequence[int]):
    if m < 1:
        raise ValueError("a day needs at least one hour")
    for x in lengths:
        if not 0 <= x < m:
            raise ValueError(f"task length {x} must lie in 0..{m - 1}")


def schedule_latest(m: int, lengths: Sequence[int]) -> Schedule:
    _check_lengths(m, lengths)
    return Schedule.from_partition(rightmost(ModWord(m, lengths)))


def schedule_all(m: int, lengths: Sequence[int]) -> list[Schedule]:
    """All equitable schedules, earliest (bottom of the lattice) first."""
    _check_lengths(m, lengths)
    L = enumerate_lattice(ModWord(m, lengths))
    # a linear extension: lower partitions have larger block-index sums
    nodes = sorted(L.nodes, key=lambda p: (-sum(block_vector(p)), block_vector(p)))
    return [Schedule.from_partition(p) for p in nodes]


def inspector_check(s: Schedule) -> tuple[bool, tuple[int, ...]]:
    """Can an inspector arriving in the last hour watch every task back to back?

    Returns the verdict and the tasks (1-based) watched without a break, in
    order.  On failure the trace stops where the inspector would have to wait.
    """
    p = s.partition()
    if not is_equitable(p):
        raise ValueError(f"schedule {list(s.starts)} is not equitable")
    res, steps = inverse_presweep_trace(p)
    if isinstance(res, PresweepFailure):
        return False, res.visited
    return True, tuple(st.next_index for st in steps[: len(p)])
