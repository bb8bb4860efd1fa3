"""Slow reference algorithms on explicit adjacency lists."""

from __future__ import annotations

from typing import Sequence

MAX_EXACT_VERTICES = 24


class InstanceTooLarge(ValueError):
    pass


def _closed_masks(adj: Sequence[Sequence[int]]) -> list[int]:
    masks = []
    for z, nbrs in enumerate(adj):
        m = 1 << z
        for w in nbrs:
            m |= 1 << w
        masks.append(m)
    return masks


def verify_dominating(adj: Sequence[Sequence[int]], candidate) -> bool:
    return first_undominated(adj, candidate) is None


def first_undominated(adj: Sequence[Sequence[int]], candidate) -> int | None:
    """Smallest vertex neither in ``candidate`` nor adjacent to it, or ``None``."""
    chosen = set(candidate)
    for z, nbrs in enumerate(adj):
        if z not in chosen and not any(w in chosen for w in nbrs):
            return z
    return None


def greedy_booth_johnson(adj: Sequence[Sequence[int]], order: Sequence[int]) -> list[int]:
    """The dominating-set greedy by explicit neighbourhood scans.

    For each still-undominated vertex in ``order``, pick its closed neighbour
    that comes latest in ``order`` and dominate that pick's neighbourhood.
    """
    n = len(adj)
    rank = [0] * n
    for i, z in enumerate(order):
        rank[z] = i
    dominated = [False] * n
    chosen = []
    for z in order:
        if dominated[z]:
            continue
        q = z
        for w in adj[z]:
            if rank[w] > rank[q]:
                q = w
        chosen.append(q)
        dominated[q] = True
        for w in adj[q]:
            dominated[w] = True
    return chosen


def exact_min_domset(adj: Sequence[Sequence[int]]) -> list[int]:
    """A minimum dominating set by iterative deepening on the solution size.

    At depth ``k`` the search branches on the closed neighbourhood of the
    lowest undominated vertex (one of those must be chosen), so the first
    depth that succeeds is the optimum.
    """
    n = len(adj)
    if n > MAX_EXACT_VERTICES:
        raise InstanceTooLarge(f"{n} vertices exceeds the exhaustive limit of {MAX_EXACT_VERTICES}")
    if n == 0:
        return []
    masks = _closed_masks(adj)
    full = (1 << n) - 1
    options = [[w for w in range(n) if masks[z] >> w & 1] for z in range(n)]

    def search(covered: int, budget: int, picked: list[int]) -> list[int] | None:
        if covered == full:
            return list(picked)
        if budget == 0:
            return None
        rest = ~covered & full
        z = (rest & -rest).bit_length() - 1
        for w in options[z]:
            picked.append(w)
            found = search(covered | masks[w], budget - 1, picked)
            picked.pop()
            if found is not None:
                return found
        return None

    for k in range(1, n + 1):
        found = search(0, k, [])
        if found is not None:
            return sorted(set(found))
    raise AssertionError("the full vertex set always dominates")


def exact_max_indset(adj: Sequence[Sequence[int]]) -> list[int]:
    n = len(adj)
    if n > MAX_EXACT_VERTICES:
        raise InstanceTooLarge(f"{n} vertices exceeds the exhaustive limit of {MAX_EXACT_VERTICES}")
    masks = _closed_masks(adj)
    best: list[int] = []

    def grow(free: int, picked: list[int]) -> None:
        nonlocal best
        if len(picked) + bin(free).count("1") <= len(best):
            return
        if not free:
            best = list(picked)
            return
        z = (free & -free).bit_length() - 1
        picked.append(z)
        grow(free & ~masks[z], picked)
        picked.pop()
        grow(free & ~(1 << z), picked)

    grow((1 << n) - 1, [])
    return sorted(best)
