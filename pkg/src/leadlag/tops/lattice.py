"""
Geometry of the admissible region between a start and an end node.

Moves only increase t1 and/or t2, so the nodes reachable from `start` and
co-reachable from `end` form the box start.t1 <= t1 <= end.t1,
start.t2 <= t2 <= end.t2. Each rotated-time slice of the box is a
contiguous t1 range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from leadlag.core.errors import UnreachableNodeError
from leadlag.tops.types import LatticeNode


@dataclass(frozen=True)
class Box:
    a1: int
    a2: int
    b1: int
    b2: int

    @classmethod
    def between(cls, start: LatticeNode, end: LatticeNode, n: int) -> "Box":
        start.check(n)
        end.check(n)
        if end.t <= start.t or end.t1 < start.t1 or end.t2 < start.t2:
            raise UnreachableNodeError(f"end {end} is not reachable from start {start}")
        return cls(start.t1, start.t2, end.t1, end.t2)

    @property
    def t_start(self) -> int:
        return self.a1 + self.a2

    @property
    def t_end(self) -> int:
        return self.b1 + self.b2

    def t1_range(self, t: int) -> Tuple[int, int]:
        """Inclusive t1 bounds of slice t."""
        return max(self.a1, t - self.b2), min(self.b1, t - self.a2)

    def mirrored(self, n: int) -> "Box":
        """The same box after reversing both series (t1 -> n-1-t1, t2 -> n-1-t2)."""
        m = n - 1
        return Box(m - self.b1, m - self.b2, m - self.a1, m - self.a2)


def member_nodes(n: int, i1: int, i2: int) -> Tuple[LatticeNode, LatticeNode]:
    """Start (i1, i2) and mirrored end (n-1-i1, n-1-i2) of one ensemble member."""
    return LatticeNode.at(i1, i2), LatticeNode.at(n - 1 - i1, n - 1 - i2)


def lattice_nodes(n: int, start: LatticeNode, end: LatticeNode) -> Iterator[LatticeNode]:
    """All admissible nodes between start and end, by rotated time then ascending t1."""
    box = Box.between(start, end, n)
    for t in range(box.t_start, box.t_end + 1):
        lo, hi = box.t1_range(t)
        for t1 in range(lo, hi + 1):
            yield LatticeNode.at(t1, t - t1)


def half_width(n: int, start: LatticeNode, end: LatticeNode) -> List[int]:
    """Largest |x| available in each slice of the region."""
    box = Box.between(start, end, n)
    widths = []
    for t in range(box.t_start, box.t_end + 1):
        lo, hi = box.t1_range(t)
        widths.append(max(abs(t - 2 * lo), abs(t - 2 * hi)))
    return widths


def shifted(prev: np.ndarray, prev_lo: int, idx: np.ndarray, fill: float) -> np.ndarray:
    """prev[idx - prev_lo] where in range, `fill` elsewhere."""
    out = np.full(idx.shape, fill, dtype=float)
    pos = idx - prev_lo
    ok = (pos >= 0) & (pos < prev.size)
    out[ok] = prev[pos[ok]]
    return out
