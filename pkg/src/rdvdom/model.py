"""Host trees, RDV representations and their geometric encoding.

A vertex ``z`` of an RDV graph is a downward path in a rooted host tree,
running from its top node ``top[z]`` to a descendant ``bottom[z]``. Two
vertices are adjacent iff their paths share a node.

Every node gets integer grid coordinates: ``y`` is its depth and ``x`` the
rank of its leftmost descendant leaf. A vertex is then encoded by a
horizontal segment at the depth of its top node and a vertical segment
dropping from that row down to the column of its bottom leaf. In a
bottom-up order, an earlier vertex ``a`` and a later vertex ``b`` are
adjacent exactly when the vertical segment of ``b`` crosses the horizontal
segment of ``a``; :func:`edge_query` evaluates that with two interval
containment checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class InvalidRepresentation(ValueError):
    """Raised when a host tree or representation breaks its invariants."""


class NotNormalized(InvalidRepresentation):
    pass


@dataclass(frozen=True)
class HostTree:
    """Rooted tree with ordered children. Node ids are ``0 .. node_count-1``."""

    root: int
    parent: tuple[int, ...]  # -1 for the root
    children: tuple[tuple[int, ...], ...]

    @property
    def node_count(self) -> int:
        return len(self.parent)

    @classmethod
    def from_edges(cls, node_count: int, root: int, edges: Iterable[tuple[int, int]]) -> "HostTree":
        """Build a tree from ``(parent, child)`` links; child order is link order."""
        if node_count < 1:
            raise InvalidRepresentation("a host tree needs at least one node")
        if not 0 <= root < node_count:
            raise InvalidRepresentation(f"root {root} out of range")
        parent = [-1] * node_count
        children: list[list[int]] = [[] for _ in range(node_count)]
        for p, c in edges:
            if not (0 <= p < node_count and 0 <= c < node_count):
                raise InvalidRepresentation(f"edge {p} -> {c} names an unknown node")
            if c == root:
                raise InvalidRepresentation(f"edge {p} -> {c} gives the root a parent")
            if parent[c] != -1:
                raise InvalidRepresentation(f"node {c} has two parents")
            parent[c] = p
            children[p].append(c)
        return cls(root, tuple(parent), tuple(tuple(c) for c in children))

    @classmethod
    def path(cls, node_count: int) -> "HostTree":
        """A path ``0 - 1 - ... - node_count-1`` rooted at node 0."""
        return cls.from_edges(node_count, 0, ((v - 1, v) for v in range(1, node_count)))

    def is_leaf(self, node: int) -> bool:
        return not self.children[node]

    def is_path(self) -> bool:
        return all(len(c) <= 1 for c in self.children)

    def preorder(self) -> list[int]:
        order = []
        stack = [self.root]
        children = self.children
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(children[v]))
        return order


@dataclass(frozen=True)
class RdvRepresentation:
    tree: HostTree
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.top)

    @classmethod
    def build(cls, tree: HostTree, top: Sequence[int], bottom: Sequence[int]) -> "RdvRepresentation":
        if len(top) != len(bottom):
            raise InvalidRepresentation("top and bottom lists differ in length")
        return cls(tree, tuple(top), tuple(bottom))


@dataclass(frozen=True)
class NodeCoordinates:
    x: list[int]  # leftmost descendant leaf rank, 1-based
    y: list[int]  # depth, root at 0
    x_hi: list[int]  # rightmost descendant leaf rank


@dataclass(frozen=True, slots=True)
class SegmentPair:
    h_y: int
    h_x_lo: int
    h_x_hi: int
    v_x: int
    v_y_lo: int
    v_y_hi: int


@dataclass(frozen=True)
class VertexOrder:
    order: list[int]  # rank -> vertex
    rank: list[int]  # vertex -> rank


@dataclass(frozen=True)
class Violation:
    message: str
    vertex: int | None = None
    node: int | None = None

    def __str__(self) -> str:
        return self.message


def _tree_violation(tree: HostTree) -> Violation | None:
    m = tree.node_count
    if len(tree.children) != m:
        return Violation("parent and children tables differ in length")
    if m == 0:
        return Violation("host tree is empty")
    if not 0 <= tree.root < m:
        return Violation(f"root {tree.root} out of range", node=tree.root)
    if tree.parent[tree.root] != -1:
        return Violation(f"root {tree.root} has a parent", node=tree.root)
    for v in range(m):
        if tree.parent[v] == -1 and v != tree.root:
            return Violation(f"node {v} has no parent but is not the root", node=v)
    for v in range(m):
        for c in tree.children[v]:
            if not 0 <= c < m or tree.parent[c] != v:
                return Violation(f"child link {v} -> {c} disagrees with the parent table", node=v)
    child_total = sum(len(c) for c in tree.children)
    if child_total != m - 1:
        return Violation("a node is listed as a child more than once")
    seen = set(tree.preorder())
    if len(seen) != m:
        missing = next(v for v in range(m) if v not in seen)
        return Violation(f"node {missing} is not reachable from the root", node=missing)
    return None


def euler_intervals(tree: HostTree) -> tuple[list[int], list[int]]:
    """Entry/exit stamps; ``a`` is an ancestor-or-self of ``b`` iff
    ``tin[a] <= tin[b] and tout[b] <= tout[a]``."""
    m = tree.node_count
    tin = [0] * m
    tout = [0] * m
    order = tree.preorder()
    for i, v in enumerate(order):
        tin[v] = i
    for v in reversed(order):
        ch = tree.children[v]
        tout[v] = tout[ch[-1]] if ch else tin[v]
    return tin, tout


def validate(rep: RdvRepresentation) -> Violation | None:
    """Return ``None`` when ``rep`` is a legal representation, else the first problem."""
    bad = _tree_violation(rep.tree)
    if bad is not None:
        return bad
    if len(rep.top) != len(rep.bottom):
        return Violation("top and bottom lists differ in length")
    m = rep.tree.node_count
    tin, tout = euler_intervals(rep.tree)
    for z, (t, b) in enumerate(zip(rep.top, rep.bottom)):
        if not 0 <= t < m:
            return Violation(f"vertex {z}: top node {t} out of range", vertex=z, node=t)
        if not 0 <= b < m:
            return Violation(f"vertex {z}: bottom node {b} out of range", vertex=z, node=b)
        if not (tin[t] <= tin[b] and tout[b] <= tout[t]):
            return Violation(f"vertex {z}: bottom node {b} is not a descendant of top node {t}",
                             vertex=z, node=b)
    return None


def check(rep: RdvRepresentation) -> None:
    bad = validate(rep)
    if bad is not None:
        raise InvalidRepresentation(str(bad))


def is_normalized(rep: RdvRepresentation) -> bool:
    """Distinct non-leaf tops and distinct leaf bottoms."""
    children = rep.tree.children
    n = rep.vertex_count
    if len(set(rep.top)) != n or len(set(rep.bottom)) != n:
        return False
    return all(not children[t] for t in rep.bottom) and all(children[t] for t in rep.top)


def normalize(rep: RdvRepresentation) -> RdvRepresentation:
    """Rewrite ``rep`` so that tops are distinct internal nodes and bottoms
    are distinct leaves, without changing which paths meet.

    Every bottom node receives one fresh leaf per vertex ending there; the
    fresh leaves are placed before the node's existing children, in vertex
    order. A node that is the top of ``w1 < ... < wk`` keeps ``w1``; the link
    to its parent is subdivided by ``k-1`` new nodes that become the tops of
    ``w2, ..., wk`` from the bottom up (above the root they form a new root
    chain). Input that already has these properties is returned as is.
    Vertex ids are unchanged; original node ids are kept and new nodes are
    appended.
    """
    check(rep)
    if is_normalized(rep):
        return rep
    tree = rep.tree
    m = tree.node_count
    parent = list(tree.parent)
    children = [list(c) for c in tree.children]
    top = list(rep.top)
    bottom = list(rep.bottom)
    tops_at: list[list[int]] = [[] for _ in range(m)]
    bottoms_at: list[list[int]] = [[] for _ in range(m)]
    for z in range(rep.vertex_count):
        tops_at[top[z]].append(z)
        bottoms_at[bottom[z]].append(z)
    slot = [0] * m  # position of each node in its parent's child list
    for v in range(m):
        for i, c in enumerate(children[v]):
            slot[c] = i
    root = tree.root

    for v in range(m):
        ws = tops_at[v]
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
            children[rho][slot[v]] = below

    for v in range(m):
        zs = bottoms_at[v]
        if not zs:
            continue
        fresh = []
        for z in zs:
            leaf = len(parent)
            parent.append(v)
            children.append([])
            bottom[z] = leaf
            fresh.append(leaf)
        children[v][:0] = fresh

    out = HostTree(root, tuple(parent), tuple(tuple(c) for c in children))
    return RdvRepresentation(out, tuple(top), tuple(bottom))


def assign_coordinates(tree: HostTree) -> NodeCoordinates:
    m = tree.node_count
    children = tree.children
    parent = tree.parent
    x = [0] * m
    y = [0] * m
    x_hi = [0] * m
    order = tree.preorder()
    leaf = 0
    for v in order:
        p = parent[v]
        if p >= 0:
            y[v] = y[p] + 1
        if not children[v]:
            leaf += 1
            x[v] = x_hi[v] = leaf
    for v in reversed(order):
        ch = children[v]
        if ch:
            x[v] = x[ch[0]]
            x_hi[v] = x_hi[ch[-1]]
    return NodeCoordinates(x, y, x_hi)


def bottom_up_order(rep: RdvRepresentation, coords: NodeCoordinates) -> VertexOrder:
    """Vertices by decreasing top depth, ties by ascending vertex id (bucket sort)."""
    y = coords.y
    depth = [y[t] for t in rep.top]
    return _bucket_order(depth)


def _bucket_order(depth: list[int]) -> VertexOrder:
    n = len(depth)
    if n == 0:
        return VertexOrder([], [])
    buckets: list[list[int]] = [[] for _ in range(max(depth) + 1)]
    for z, d in enumerate(depth):
        buckets[d].append(z)
    order = [z for bucket in reversed(buckets) for z in bucket]
    rank = [0] * n
    for i, z in enumerate(order):
        rank[z] = i
    return VertexOrder(order, rank)


def bottom_depth_order(rep: RdvRepresentation, coords: NodeCoordinates) -> list[int]:
    """The pending list: vertices by decreasing bottom depth, ties by id."""
    y = coords.y
    return _bucket_order([y[b] for b in rep.bottom]).order


def build_segments(rep: RdvRepresentation, coords: NodeCoordinates) -> list[SegmentPair]:
    if not is_normalized(rep):
        raise NotNormalized("segments are only pairwise disjoint on a normalized representation")
    x, y, x_hi = coords.x, coords.y, coords.x_hi
    return [
        SegmentPair(y[t], x[t], x_hi[t], x[b], y[t], y[b])
        for t, b in zip(rep.top, rep.bottom)
    ]


def segments_disjoint(segments: Sequence[SegmentPair]) -> bool:
    """Check that horizontal (resp. vertical) segments never share a point."""
    rows: dict[int, list[tuple[int, int]]] = {}
    cols: dict[int, list[tuple[int, int]]] = {}
    for s in segments:
        rows.setdefault(s.h_y, []).append((s.h_x_lo, s.h_x_hi))
        cols.setdefault(s.v_x, []).append((s.v_y_lo, s.v_y_hi))
    for line in (*rows.values(), *cols.values()):
        line.sort()
        for (_, hi), (lo, _) in zip(line, line[1:]):
            if lo <= hi:
                return False
    return True


def edge_query(i: int, j: int, segments: Sequence[SegmentPair], order: VertexOrder) -> bool:
    """Adjacency of the vertices at ranks ``i < j``."""
    if i >= j:
        raise ValueError(f"edge_query needs i < j, got {i}, {j}")
    h = segments[order.order[i]]
    v = segments[order.order[j]]
    return h.h_x_lo <= v.v_x <= h.h_x_hi and v.v_y_lo <= h.h_y <= v.v_y_hi


def path_nodes(rep: RdvRepresentation, z: int) -> list[int]:
    """Nodes of vertex ``z``'s path, bottom first."""
    parent = rep.tree.parent
    t = rep.top[z]
    v = rep.bottom[z]
    nodes = [v]
    while v != t:
        v = parent[v]
        if v < 0:
            raise InvalidRepresentation(f"vertex {z}: bottom is not below top")
        nodes.append(v)
    return nodes


def materialize_graph(rep: RdvRepresentation) -> list[list[int]]:
    """Explicit adjacency lists, from shared path nodes. Oracle use only."""
    n = rep.vertex_count
    members: dict[int, list[int]] = {}
    for z in range(n):
        for v in path_nodes(rep, z):
            members.setdefault(v, []).append(z)
    adj: list[set[int]] = [set() for _ in range(n)]
    for group in members.values():
        if len(group) < 2:
            continue
        for z in group:
            adj[z].update(group)
    for z in range(n):
        adj[z].discard(z)
    return [sorted(a) for a in adj]
