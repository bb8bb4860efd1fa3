"""Priority search tree over a fixed integer value range.

The skeleton is a complete binary tree over the value positions
``lo .. hi``; node ``k`` has children ``2k`` and ``2k+1`` and covers a
contiguous block of values. Every node stores at most one entry, and the
entry at a node is the heaviest of all entries stored in its subtree (heap
order on weight), while an entry may only live on the root-to-leaf path of
its own value (search order on value). Insert, delete and the
three-sided range-maximum query all touch O(log n) nodes.
"""

from __future__ import annotations

from dataclasses import dataclass

_SHIFT = 32
_MASK = (1 << _SHIFT) - 1


@dataclass(frozen=True, slots=True)
class PstEntry:
    value: int
    weight: int
    payload: int


class PrioritySearchTree:
    def __init__(self, lo: int, hi: int):
        if hi < lo:
            raise ValueError(f"empty value range [{lo}, {hi}]")
        if hi - lo >= _MASK:
            raise ValueError("value range too wide")
        self._lo = lo
        self._hi = hi
        size = 1
        levels = 0
        while size < hi - lo + 1:
            size *= 2
            levels += 1
        self._size = size
        self._levels = levels
        # Entry at node k is packed as (weight << 32 | value offset); -1 = empty.
        # Ties on weight therefore favour the larger value.
        self._key = [-1] * (2 * size)
        self._payload = [0] * (2 * size)
        self._where: dict[int, int] = {}
        self._used: set[int] = set()

    def __len__(self) -> int:
        return len(self._where)

    def __contains__(self, payload: int) -> bool:
        return payload in self._where

    def insert(self, value: int, weight: int, payload: int) -> None:
        if payload in self._where:
            raise KeyError(f"payload {payload} is already stored")
        if not self._lo <= value <= self._hi:
            raise ValueError(f"value {value} outside [{self._lo}, {self._hi}]")
        if weight < 0:
            raise ValueError("weights must be non-negative")
        if value in self._used:
            raise ValueError(f"value {value} is already stored")
        self._used.add(value)
        keys = self._key
        payloads = self._payload
        where = self._where
        key = (weight << _SHIFT) | (value - self._lo)
        node = 1
        depth = 0
        leaf_index = self._size + (key & _MASK)
        while True:
            cur = keys[node]
            if cur < 0:
                keys[node] = key
                payloads[node] = payload
                where[payload] = node
                return
            if key > cur:
                keys[node], key = key, cur
                payloads[node], payload = payload, payloads[node]
                where[payloads[node]] = node
                leaf_index = self._size + (key & _MASK)
            depth += 1
            node = leaf_index >> (self._levels - depth)

    def delete(self, payload: int) -> None:
        node = self._where.pop(payload, None)
        if node is None:
            raise KeyError(f"payload {payload} is not stored")
        keys = self._key
        payloads = self._payload
        where = self._where
        self._used.discard(self._lo + (keys[node] & _MASK))
        last = 2 * self._size
        while True:
            left = 2 * node
            if left >= last:
                keys[node] = -1
                return
            kl = keys[left]
            kr = keys[left + 1]
            if kl < 0 and kr < 0:
                keys[node] = -1
                return
            child = left if kl > kr else left + 1
            keys[node] = keys[child]
            p = payloads[child]
            payloads[node] = p
            where[p] = node
            node = child

    def range_max(self, x_lo: int, x_hi: int) -> PstEntry | None:
        """Heaviest entry with ``x_lo <= value <= x_hi``; ties go to the larger value."""
        if x_lo > x_hi:
            raise ValueError(f"inverted range [{x_lo}, {x_hi}]")
        found = self._range_max_key(x_lo, x_hi)
        if found is None:
            return None
        key, payload = found
        return PstEntry(self._lo + (key & _MASK), key >> _SHIFT, payload)

    def range_max_payload(self, x_lo: int, x_hi: int) -> int | None:
        found = self._range_max_key(x_lo, x_hi)
        return None if found is None else found[1]

    def _range_max_key(self, x_lo: int, x_hi: int) -> tuple[int, int] | None:
        lo = max(x_lo, self._lo) - self._lo
        hi = min(x_hi, self._hi) - self._lo
        if lo > hi:
            return None
        keys = self._key
        best = -1
        best_node = 0
        # stack of (node, first position, last position)
        stack = [(1, 0, self._size - 1)]
        pop = stack.pop
        push = stack.append
        while stack:
            node, a, b = pop()
            k = keys[node]
            if k <= best or b < lo or a > hi:
                continue
            if lo <= (k & _MASK) <= hi:
                best = k
                best_node = node
                if lo <= a and b <= hi:
                    continue
            if a == b:
                continue
            mid = (a + b) >> 1
            push((2 * node, a, mid))
            push((2 * node + 1, mid + 1, b))
        if best < 0:
            return None
        return best, self._payload[best_node]

    def entries(self) -> list[PstEntry]:
        out = []
        for node, k in enumerate(self._key):
            if k >= 0:
                out.append(PstEntry(self._lo + (k & _MASK), k >> _SHIFT, self._payload[node]))
        return out

    def check_invariants(self) -> None:
        """Assert heap order on weights and search order on values."""
        keys = self._key
        for node in range(1, 2 * self._size):
            k = keys[node]
            if k < 0:
                continue
            depth = node.bit_length() - 1
            leaf = self._size + (k & _MASK)
            assert leaf >> (self._levels - depth) == node, f"node {node} holds an entry off its path"
            if node > 1:
                assert keys[node >> 1] > k, f"heap order broken at node {node}"
            assert self._where[self._payload[node]] == node
        assert sum(1 for k in keys if k >= 0) == len(self._where)
