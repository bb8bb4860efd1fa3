"""Seeded instance generators.

Randomness comes from :class:`XorShift64Star`, defined entirely by its
recurrence so that any implementation reproduces the same instances::

    seeding:  s = splitmix64(seed)        (s = 1 if that yields 0)
    step:     s ^= s >> 12; s ^= s << 25 (mod 2^64); s ^= s >> 27
    output:   s * 0x2545F4914F6CDD1D  (mod 2^64)
    below(k): (output * k) >> 64      uniform-ish integer in [0, k)

where ``splitmix64(v)`` is ``z = v + 0x9E3779B97F4A7C15; z = (z ^ z>>30) *
0xBF58476D1CE4E5B9; z = (z ^ z>>27) * 0x94D049BB133111EB; z ^ z>>31``, all
mod 2^64.
"""

from __future__ import annotations

from .model import HostTree, RdvRepresentation

_M64 = (1 << 64) - 1


def splitmix64(v: int) -> int:
    z = (v + 0x9E3779B97F4A7C15) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


class XorShift64Star:
    def __init__(self, seed: int):
        self.state = splitmix64(seed & _M64) or 1

    def next_u64(self) -> int:
        s = self.state
        s ^= s >> 12
        s ^= (s << 25) & _M64
        s ^= s >> 27
        self.state = s
        return (s * 0x2545F4914F6CDD1D) & _M64

    def below(self, k: int) -> int:
        return (self.next_u64() * k) >> 64


def random_tree(rng: XorShift64Star, node_count: int) -> HostTree:
    """Node ``v > 0`` hangs below a uniform earlier node; children in id order."""
    return HostTree.from_edges(node_count, 0, ((rng.below(v), v) for v in range(1, node_count)))


def gen_rdv(seed: int, n: int, tree_nodes: int, max_path_len: int) -> RdvRepresentation:
    """Random tree, then per vertex a uniform top and a random downward walk
    of uniform length in ``0..max_path_len`` (stopping early at a leaf)."""
    if tree_nodes < 1:
        raise ValueError("tree_nodes must be at least 1")
    if n < 0 or max_path_len < 0:
        raise ValueError("n and max_path_len must be non-negative")
    rng = XorShift64Star(seed)
    tree = random_tree(rng, tree_nodes)
    children = tree.children
    top = []
    bottom = []
    below = rng.below
    for _ in range(n):
        t = below(tree_nodes)
        v = t
        for _ in range(below(max_path_len + 1)):
            ch = children[v]
            if not ch:
                break
            v = ch[below(len(ch))]
        top.append(t)
        bottom.append(v)
    return RdvRepresentation(tree, tuple(top), tuple(bottom))


def gen_interval(seed: int, n: int, path_len: int) -> RdvRepresentation:
    """Random subpaths of a path host with ``path_len`` nodes."""
    if path_len < 1:
        raise ValueError("path_len must be at least 1")
    rng = XorShift64Star(seed)
    top = []
    bottom = []
    for _ in range(n):
        a = rng.below(path_len)
        b = rng.below(path_len)
        top.append(min(a, b))
        bottom.append(max(a, b))
    return RdvRepresentation(HostTree.path(path_len), tuple(top), tuple(bottom))


def gen_paper_example() -> RdvRepresentation:
    """The seven-vertex instance used as the running example.

    Nodes: 0 root, 1 and 2 its children (left to right); 1 has children
    3, 4, 5; 3 has children 6, 7; 4 has child 8; 2 has child 9. Vertex
    ``k`` here is ``z_{k+1}`` of the example.
    """
    tree = HostTree.from_edges(
        10, 0, [(0, 1), (0, 2), (1, 3), (1, 4), (1, 5), (3, 6), (3, 7), (4, 8), (2, 9)]
    )
    top = (3, 3, 4, 1, 1, 0, 0)
    bottom = (6, 3, 8, 7, 8, 5, 9)
    return RdvRepresentation(tree, top, bottom)
