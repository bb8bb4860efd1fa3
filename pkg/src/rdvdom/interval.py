"""Linear-time minimum dominating set for interval graphs.

An interval graph is an RDV graph whose host tree is a path, so every node
sits in the same column and only depths matter. The greedy keeps the
vertices crossing the current row in an unsorted doubly linked list and
finds the latest one by scanning it; the scan is paid for by the
iterations it lets us skip. All vertices between the current one and the
chosen one are dominated outright, and the chosen vertex's later
neighbours are exactly the list contents when the scan reaches it.
"""

from __future__ import annotations

import time

from .model import (
    HostTree,
    InvalidRepresentation,
    RdvRepresentation,
    assign_coordinates,
    bottom_depth_order,
    bottom_up_order,
    check,
)
from .solver import Solution, SolveStats


class NotAPath(InvalidRepresentation):
    pass


def normalize_interval(rep: RdvRepresentation) -> RdvRepresentation:
    """Give every vertex its own top node by subdividing path links.

    Only tops are separated; the host stays a path rooted at one end.
    """
    check(rep)
    tree = rep.tree
    if not tree.is_path():
        raise NotAPath("host tree is not a path")
    n = rep.vertex_count
    if len(set(rep.top)) == n:
        return rep
    tops_at: dict[int, list[int]] = {}
    for z, t in enumerate(rep.top):
        tops_at.setdefault(t, []).append(z)
    parent = list(tree.parent)
    children = [list(c) for c in tree.children]
    top = list(rep.top)
    root = tree.root
    for v, ws in sorted(tops_at.items()):
        if len(ws) < 2:
            continue
        rho = parent[v]
        below = v
        for w in ws[1:]:
            s = len(parent)
            parent.append(-1)
            children.append([below])
            parent[below] = s
            top[w] = s
            below = s
        if rho == -1:
            root = below
        else:
            parent[below] = rho
            children[rho] = [below]
    out = HostTree(root, tuple(parent), tuple(tuple(c) for c in children))
    return RdvRepresentation(out, tuple(top), rep.bottom)


def solve_interval(rep: RdvRepresentation) -> Solution:
    start = time.perf_counter_ns()
    rep = normalize_interval(rep)
    n = rep.vertex_count
    coords = assign_coordinates(rep.tree)
    y = coords.y
    top_y = [y[t] for t in rep.top]
    bot_y = [y[b] for b in rep.bottom]
    vo = bottom_up_order(rep, coords)
    order, rank = vo.order, vo.rank
    pending = bottom_depth_order(rep, coords)
    stats = SolveStats()

    # live list P: doubly linked over ranks, -1 terminated
    head = -1
    prev = [-1] * n
    nxt = [-1] * n
    dominated_by: list[int | None] = [None] * n
    chosen = [False] * n
    selected = []
    k = 0
    for i in range(n):
        zi = order[i]
        row = top_y[zi]
        while k < n and bot_y[pending[k]] >= row:
            r = rank[pending[k]]
            nxt[r] = head
            prev[r] = -1
            if head >= 0:
                prev[head] = r
            head = r
            stats.p_inserts += 1
            k += 1

        if dominated_by[zi] is None:
            q = -1
            r = head
            while r >= 0:
                stats.p_scans += 1
                if r > q:
                    q = r
                r = nxt[r]
            zq = order[q]
            selected.append(zq)
            chosen[q] = True
            for j in range(i, q + 1):
                if dominated_by[order[j]] is None:
                    dominated_by[order[j]] = zq

        if chosen[i]:
            r = head
            while r >= 0:
                stats.p_scans += 1
                if dominated_by[order[r]] is None:
                    dominated_by[order[r]] = zi
                r = nxt[r]

        # unlink z_i, which is always in P by now
        a, b = prev[i], nxt[i]
        if a >= 0:
            nxt[a] = b
        else:
            head = b
        if b >= 0:
            prev[b] = a
        stats.p_deletes += 1

    stats.wall_ns = time.perf_counter_ns() - start
    return Solution(selected, dominated_by, stats)
