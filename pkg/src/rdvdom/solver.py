"""Minimum dominating set and maximum independent set on RDV graphs.

Both run the classical greedy over a bottom-up vertex order without ever
listing edges. Finding the latest closed neighbour of the current vertex is
a range-maximum query on a priority search tree holding the vertices whose
vertical segment crosses the current row. Marking a selected vertex's closed
neighbourhood is done with repeated first-hit ray queries against the
segments of vertices that are still undominated, deleting every segment
that gets hit.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import NamedTuple

from .model import (
    RdvRepresentation,
    assign_coordinates,
    bottom_depth_order,
    bottom_up_order,
    check,
    normalize,
)
from .pst import PrioritySearchTree
from .rayshoot import HorizontalRayShooter, HSegment, VerticalRayShooter, VSegment


@dataclass
class SolveStats:
    pst_ops: int = 0
    ray_queries: int = 0
    wall_ns: int = 0
    # list-based interval solver counters
    p_inserts: int = 0
    p_deletes: int = 0
    p_scans: int = 0


class RayEvent(NamedTuple):
    source: int  # vertex whose neighbourhood is being marked
    direction: str  # "down" or "right"
    hit: int | None  # owner of the segment hit, None for an empty ray
    accepted: bool


@dataclass
class Solution:
    selected: list[int]  # in selection order
    dominated_by: list[int | None]
    stats: SolveStats = field(default_factory=SolveStats)
    trace: list[RayEvent] | None = None

    @property
    def size(self) -> int:
        return len(self.selected)


class SolverState:
    """Everything one greedy run owns. Ranks index the bottom-up order."""

    def __init__(self, rep: RdvRepresentation, *, trace: bool = False, check_invariants: bool = False):
        rep = normalize(rep)
        self.rep = rep
        n = rep.vertex_count
        coords = assign_coordinates(rep.tree)
        order = bottom_up_order(rep, coords)
        self.order = order.order
        self.rank = order.rank
        self.pending = bottom_depth_order(rep, coords)
        self.next_pending = 0
        x, y, x_hi = coords.x, coords.y, coords.x_hi
        self.top_y = [y[t] for t in rep.top]
        self.top_x = [x[t] for t in rep.top]
        self.top_x_hi = [x_hi[t] for t in rep.top]
        self.bot_x = [x[b] for b in rep.bottom]
        self.bot_y = [y[b] for b in rep.bottom]
        leaves = max(x_hi[rep.tree.root], 1)
        height = max(y) if y else 0
        self.pst = PrioritySearchTree(1, leaves)
        self.s_h = HorizontalRayShooter(
            1, leaves,
            (HSegment(z, self.top_y[z], self.top_x[z], self.top_x_hi[z]) for z in range(n)),
        )
        self.s_v = VerticalRayShooter(
            0, height,
            (VSegment(z, self.bot_x[z], self.top_y[z], self.bot_y[z]) for z in range(n)),
        )
        self.dominated_by: list[int | None] = [None] * n
        self.selected: list[int] = []
        self.stats = SolveStats()
        self.trace: list[RayEvent] | None = [] if trace else None
        self.check_invariants = check_invariants

    def admit_pending(self, i: int) -> None:
        """Move vertices whose vertical segment reaches row ``y(t(z_i))`` into the PST."""
        row = self.top_y[self.order[i]]
        pending = self.pending
        bot_y = self.bot_y
        k = self.next_pending
        while k < len(pending) and bot_y[pending[k]] >= row:
            p = pending[k]
            self.pst.insert(self.bot_x[p], self.rank[p], p)
            self.stats.pst_ops += 1
            k += 1
        self.next_pending = k

    def retire(self, i: int) -> None:
        self.pst.delete(self.order[i])
        self.stats.pst_ops += 1

    def operation_a(self, i: int) -> int:
        """Rank of the latest vertex in the closed neighbourhood of ``z_i``."""
        z = self.order[i]
        self.stats.pst_ops += 1
        p = self.pst.range_max_payload(self.top_x[z], self.top_x_hi[z])
        return self.rank[p]

    def _mark(self, p: int, by: int) -> None:
        self.dominated_by[p] = by
        self.s_h.delete(p)
        self.s_v.delete(p)

    def operation_b_le(self, q: int) -> list[int]:
        """Mark the still-undominated vertices of ``N_<=[z_q]``."""
        zq = self.order[q]
        x = self.bot_x[zq]
        y0 = self.top_y[zq]
        y1 = self.bot_y[zq]
        top_y = self.top_y
        marked = []
        while True:
            self.stats.ray_queries += 1
            s = self.s_h.shoot_down(x, y0)
            if s is None:
                self._record(zq, "down", None, False)
                break
            p = s.owner
            if top_y[p] > y1:
                self._record(zq, "down", p, False)
                break
            if self.check_invariants:
                assert self.rank[p] <= q, "downward ray hit a later vertex"
            self._record(zq, "down", p, True)
            self._mark(p, zq)
            marked.append(p)
        return marked

    def operation_b_gt(self, q: int) -> list[int]:
        """Mark the still-undominated vertices of ``N_>[z_q]``."""
        zq = self.order[q]
        y = self.top_y[zq]
        x0 = self.top_x[zq]
        x1 = self.top_x_hi[zq]
        bot_x = self.bot_x
        marked = []
        while True:
            self.stats.ray_queries += 1
            s = self.s_v.shoot_right(y, x0)
            if s is None:
                self._record(zq, "right", None, False)
                break
            p = s.owner
            if bot_x[p] > x1:
                self._record(zq, "right", p, False)
                break
            self._record(zq, "right", p, True)
            self._mark(p, zq)
            marked.append(p)
        return marked

    def _record(self, source: int, direction: str, hit: int | None, accepted: bool) -> None:
        if self.trace is not None:
            self.trace.append(RayEvent(source, direction, hit, accepted))

    def is_dominated(self, z: int) -> bool:
        return self.dominated_by[z] is not None

    def assert_pst_invariant(self, i: int) -> None:
        row = self.top_y[self.order[i]]
        expected = {
            z for z in range(self.rep.vertex_count)
            if self.rank[z] >= i and self.top_y[z] <= row <= self.bot_y[z]
        }
        stored = {e.payload for e in self.pst.entries()}
        assert stored == expected, f"PST holds {sorted(stored)}, expected {sorted(expected)}"
        undominated = {z for z in range(self.rep.vertex_count) if self.dominated_by[z] is None}
        assert set(self.s_h._segs) == undominated and set(self.s_v._segs) == undominated

    def solution(self) -> Solution:
        return Solution(self.selected, self.dominated_by, self.stats, self.trace)


def solve(rep: RdvRepresentation, *, trace: bool = False, check_invariants: bool = False) -> Solution:
    """Minimum dominating set of the RDV graph given by ``rep``."""
    check(rep)
    start = time.perf_counter_ns()
    state = SolverState(rep, trace=trace, check_invariants=check_invariants)
    for i in range(len(state.order)):
        state.admit_pending(i)
        if check_invariants:
            state.assert_pst_invariant(i)
        if not state.is_dominated(state.order[i]):
            q = state.operation_a(i)
            state.selected.append(state.order[q])
            state.operation_b_le(q)
            state.operation_b_gt(q)
        state.retire(i)
    state.stats.wall_ns = time.perf_counter_ns() - start
    return state.solution()


def solve_independent_set(rep: RdvRepresentation) -> list[int]:
    """Maximum independent set: greedy along the bottom-up order, which is a
    perfect elimination order; each pick covers its closed neighbourhood."""
    check(rep)
    state = SolverState(rep)
    chosen = []
    for i, z in enumerate(state.order):
        if state.is_dominated(z):
            continue
        chosen.append(z)
        state.operation_b_le(i)
        state.operation_b_gt(i)
    return chosen
