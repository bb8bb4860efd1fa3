"""Plain-text instance and solution files.

Instance::

    RDV 1
    nodes M root R
    edge P C            (M-1 lines; child order is line order)
    vertices N
    vertex V T B        (N lines)

Solution (the ``solve`` command's plain output)::

    size K
    v1
    ...
"""

from __future__ import annotations

from pathlib import Path

from .model import HostTree, InvalidRepresentation, RdvRepresentation


class FormatError(ValueError):
    pass


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_rdv(text: str) -> RdvRepresentation:
    lines = [(i + 1, ln.split()) for i, ln in enumerate(text.splitlines())]
    lines = [(i, t) for i, t in lines if t]
    pos = 0

    def take(word: str, arity: int) -> tuple[int, list[int]]:
        nonlocal pos
        if pos >= len(lines):
            raise FormatError(f"unexpected end of file, expected {word!r}")
        lineno, tok = lines[pos]
        if tok[0] != word or len(tok) != arity + 1:
            raise FormatError(f"line {lineno}: expected {word!r} with {arity} fields")
        pos += 1
        return lineno, tok[1:]

    lineno, head = take("RDV", 1)
    if head != ["1"]:
        raise FormatError(f"line {lineno}: unsupported format version {head[0]!r}")
    lineno, tok = take("nodes", 3)
    if tok[1] != "root":
        raise FormatError(f"line {lineno}: expected 'nodes M root R'")
    m, root = _ints([tok[0], tok[2]], lineno)
    if m < 1:
        raise FormatError(f"line {lineno}: need at least one node")
    edges = []
    for _ in range(m - 1):
        lineno, tok = take("edge", 2)
        edges.append(tuple(_ints(tok, lineno)))
    lineno, tok = take("vertices", 1)
    (n,) = _ints(tok, lineno)
    if n < 0:
        raise FormatError(f"line {lineno}: negative vertex count")
    top = [-1] * n
    bottom = [-1] * n
    for _ in range(n):
        lineno, tok = take("vertex", 3)
        v, t, b = _ints(tok, lineno)
        if not 0 <= v < n:
            raise FormatError(f"line {lineno}: vertex id {v} out of range")
        if top[v] != -1:
            raise FormatError(f"line {lineno}: vertex {v} listed twice")
        top[v], bottom[v] = t, b
    if pos != len(lines):
        raise FormatError(f"line {lines[pos][0]}: trailing content")
    try:
        tree = HostTree.from_edges(m, root, edges)
    except InvalidRepresentation as exc:
        raise FormatError(str(exc)) from None
    return RdvRepresentation(tree, tuple(top), tuple(bottom))


def format_rdv(rep: RdvRepresentation) -> str:
    tree = rep.tree
    out = ["RDV 1", f"nodes {tree.node_count} root {tree.root}"]
    # parents before children so that any reader can stream the edges
    for v in tree.preorder():
        for c in tree.children[v]:
            out.append(f"edge {v} {c}")
    out.append(f"vertices {rep.vertex_count}")
    for z, (t, b) in enumerate(zip(rep.top, rep.bottom)):
        out.append(f"vertex {z} {t} {b}")
    return "\n".join(out) + "\n"


def load_rdv(path: str | Path) -> RdvRepresentation:
    return parse_rdv(Path(path).read_text())


def save_rdv(rep: RdvRepresentation, path: str | Path) -> None:
    Path(path).write_text(format_rdv(rep))


def format_solution(selected) -> str:
    ids = sorted(selected)
    return "\n".join([f"size {len(ids)}", *map(str, ids)]) + "\n"


def parse_solution(text: str) -> list[int]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("size "):
        raise FormatError("solution must start with 'size K'")
    try:
        k = int(lines[0].split()[1])
        ids = [int(ln) for ln in lines[1:]]
    except (ValueError, IndexError):
        raise FormatError("malformed solution file") from None
    if k != len(ids):
        raise FormatError(f"solution declares size {k} but lists {len(ids)} vertices")
    return ids
