"""First-hit ray shooting among disjoint axis-parallel segments.

Both structures decompose the segments' extent over a segment tree on the
fixed integer coordinate range they were built for. Each tree cell keeps
the segments assigned to it sorted by their position along the ray, and a
ray query inspects the O(log n) cells above its coordinate, each with a
binary search. Deleted entries stay in place and are jumped over through
union-find "next live" pointers, so the deletion-heavy workload of the
dominating-set solver costs O(log^2 n) per operation without shifting
large lists. Inserting into a cell that has tombstones compacts that cell.
"""

from __future__ import annotations

from array import array
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable

_SHIFT = 32
_OWNER = (1 << _SHIFT) - 1


@dataclass(frozen=True, slots=True)
class HSegment:
    owner: int
    y: int
    x_lo: int
    x_hi: int


@dataclass(frozen=True, slots=True)
class VSegment:
    owner: int
    x: int
    y_lo: int
    y_hi: int


class _Cell:
    __slots__ = ("keys", "nxt", "dead")

    def __init__(self) -> None:
        self.keys: list[int] = []
        self.nxt = array("i")
        self.dead = 0

    def seal(self) -> None:
        self.nxt = array("i", range(len(self.keys) + 1))


class _StabbingIndex:
    """Segment tree over ``lo..hi``; an interval is stored in its canonical cells.

    Keys are ``position << 32 | owner``; intervals sharing a cell overlap, so
    disjointness of the segments makes their positions (and keys) distinct.
    """

    def __init__(self, lo: int, hi: int):
        if hi < lo:
            raise ValueError(f"empty coordinate range [{lo}, {hi}]")
        size = 1
        while size < hi - lo + 1:
            size *= 2
        self.lo = lo
        self.hi = hi
        self.size = size
        self.cells: list[_Cell | None] = [None] * (2 * size)

    def _canonical(self, a: int, b: int) -> list[int]:
        out = []
        left = a - self.lo + self.size
        right = b - self.lo + self.size + 1
        while left < right:
            if left & 1:
                out.append(left)
                left += 1
            if right & 1:
                right -= 1
                out.append(right)
            left >>= 1
            right >>= 1
        return out

    def bulk_load(self, items: Iterable[tuple[int, int, int]]) -> None:
        """Load ``(key, a, b)`` triples into an empty index."""
        cells = self.cells
        for key, a, b in sorted(items):
            for c in self._canonical(a, b):
                cell = cells[c]
                if cell is None:
                    cell = cells[c] = _Cell()
                cell.keys.append(key)
        for cell in cells:
            if cell is not None:
                cell.seal()

    def add(self, key: int, a: int, b: int, live: set[int]) -> None:
        cells = self.cells
        for c in self._canonical(a, b):
            cell = cells[c]
            if cell is None:
                cell = cells[c] = _Cell()
            if cell.dead:
                cell.keys = [k for k in cell.keys if k in live]
                cell.dead = 0
            i = bisect_left(cell.keys, key)
            cell.keys.insert(i, key)
            cell.seal()

    def remove(self, key: int, a: int, b: int) -> None:
        cells = self.cells
        for c in self._canonical(a, b):
            cell = cells[c]
            i = bisect_left(cell.keys, key)
            cell.nxt[i] = i + 1
            cell.dead += 1

    def first_at_least(self, point: int, threshold: int) -> int:
        """Smallest live key ``>= threshold`` among intervals containing ``point``; -1 if none."""
        if point < self.lo or point > self.hi:
            return -1
        cells = self.cells
        best = -1
        c = point - self.lo + self.size
        while c:
            cell = cells[c]
            c >>= 1
            if cell is None:
                continue
            keys = cell.keys
            i = bisect_left(keys, threshold)
            if i == len(keys):
                continue
            nxt = cell.nxt
            # find with path halving
            j = i
            while nxt[j] != j:
                nxt[j] = nxt[nxt[j]]
                j = nxt[j]
            if j < len(keys):
                k = keys[j]
                if best < 0 or k < best:
                    best = k
        return best


class HorizontalRayShooter:
    """Live horizontal segments; answers downward vertical rays."""

    def __init__(self, x_lo: int, x_hi: int, segments: Iterable[HSegment] = ()):
        self._index = _StabbingIndex(x_lo, x_hi)
        self._segs: dict[int, HSegment] = {}
        self._keys: set[int] = set()
        self.queries = 0
        segs = list(segments)
        for s in segs:
            self._admit(s)
        self._keys.update((s.y << _SHIFT) | s.owner for s in segs)
        self._index.bulk_load(((s.y << _SHIFT) | s.owner, s.x_lo, s.x_hi) for s in segs)

    def __len__(self) -> int:
        return len(self._segs)

    def __contains__(self, owner: int) -> bool:
        return owner in self._segs

    def _admit(self, s: HSegment) -> None:
        if s.owner in self._segs:
            raise KeyError(f"segment owner {s.owner} already present")
        if not 0 <= s.owner <= _OWNER:
            raise ValueError("owner ids must fit in 32 bits")
        if s.y < 0:
            raise ValueError("segment rows must be non-negative")
        if s.x_lo > s.x_hi or s.x_lo < self._index.lo or s.x_hi > self._index.hi:
            raise ValueError(f"bad horizontal extent [{s.x_lo}, {s.x_hi}]")
        self._segs[s.owner] = s

    def insert(self, s: HSegment) -> None:
        self._admit(s)
        key = (s.y << _SHIFT) | s.owner
        self._index.add(key, s.x_lo, s.x_hi, self._keys)
        self._keys.add(key)

    def delete(self, owner: int) -> None:
        s = self._segs.pop(owner, None)
        if s is None:
            raise KeyError(f"no segment owned by {owner}")
        key = (s.y << _SHIFT) | owner
        self._keys.discard(key)
        self._index.remove(key, s.x_lo, s.x_hi)

    def shoot_down(self, x: int, y_start: int) -> HSegment | None:
        """First live segment hit by the ray from ``(x, y_start)`` towards larger y."""
        self.queries += 1
        key = self._index.first_at_least(x, y_start << _SHIFT)
        return None if key < 0 else self._segs[key & _OWNER]


class VerticalRayShooter:
    """Live vertical segments; answers rightward horizontal rays."""

    def __init__(self, y_lo: int, y_hi: int, segments: Iterable[VSegment] = ()):
        self._index = _StabbingIndex(y_lo, y_hi)
        self._segs: dict[int, VSegment] = {}
        self._keys: set[int] = set()
        self.queries = 0
        segs = list(segments)
        for s in segs:
            self._admit(s)
        self._keys.update((s.x << _SHIFT) | s.owner for s in segs)
        self._index.bulk_load(((s.x << _SHIFT) | s.owner, s.y_lo, s.y_hi) for s in segs)

    def __len__(self) -> int:
        return len(self._segs)

    def __contains__(self, owner: int) -> bool:
        return owner in self._segs

    def _admit(self, s: VSegment) -> None:
        if s.owner in self._segs:
            raise KeyError(f"segment owner {s.owner} already present")
        if not 0 <= s.owner <= _OWNER:
            raise ValueError("owner ids must fit in 32 bits")
        if s.x < 0:
            raise ValueError("segment columns must be non-negative")
        if s.y_lo > s.y_hi or s.y_lo < self._index.lo or s.y_hi > self._index.hi:
            raise ValueError(f"bad vertical extent [{s.y_lo}, {s.y_hi}]")
        self._segs[s.owner] = s

    def insert(self, s: VSegment) -> None:
        self._admit(s)
        key = (s.x << _SHIFT) | s.owner
        self._index.add(key, s.y_lo, s.y_hi, self._keys)
        self._keys.add(key)

    def delete(self, owner: int) -> None:
        s = self._segs.pop(owner, None)
        if s is None:
            raise KeyError(f"no segment owned by {owner}")
        key = (s.x << _SHIFT) | owner
        self._keys.discard(key)
        self._index.remove(key, s.y_lo, s.y_hi)

    def shoot_right(self, y: int, x_start: int) -> VSegment | None:
        """First live segment hit by the ray from ``(x_start, y)`` towards larger x."""
        self.queries += 1
        key = self._index.first_at_least(y, x_start << _SHIFT)
        return None if key < 0 else self._segs[key & _OWNER]
