"""Scaling sweeps: generate, solve, cross-check, and tabulate."""

from __future__ import annotations

import csv
import math
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable, TextIO

from .generate import gen_interval, gen_rdv
from .interval import solve_interval
from .model import RdvRepresentation, assign_coordinates, bottom_up_order, materialize_graph
from .oracle import greedy_booth_johnson
from .solver import solve

KINDS = ("rdv", "dense", "interval")
DENSE_TREE_NODES = 16
SPARSE_PATH_LEN = 8


@dataclass
class BenchRow:
    kind: str
    n: int
    seed: int
    tree_nodes: int
    wall_ns: int
    pst_ops: int
    ray_queries: int
    dset_size: int
    greedy_size: int | None  # None when the instance was too big to materialize


def make_instance(kind: str, seed: int, n: int) -> RdvRepresentation:
    """``dense`` keeps the host tree at a fixed small size, so any two paths
    share a node with constant probability and the graph has Theta(n^2)
    edges in expectation."""
    if kind == "rdv":
        return gen_rdv(seed, n, max(n, 1), SPARSE_PATH_LEN)
    if kind == "dense":
        return gen_rdv(seed, n, DENSE_TREE_NODES, DENSE_TREE_NODES)
    if kind == "interval":
        return gen_interval(seed, n, max(n, 1))
    raise ValueError(f"unknown instance kind {kind!r}")


def run_one(kind: str, seed: int, n: int, check_max_n: int) -> BenchRow:
    rep = make_instance(kind, seed, n)
    sol = solve_interval(rep) if kind == "interval" else solve(rep)
    greedy = None
    if n <= check_max_n:
        order = bottom_up_order(rep, assign_coordinates(rep.tree)).order
        greedy = len(greedy_booth_johnson(materialize_graph(rep), order))
        if greedy != sol.size:
            raise AssertionError(f"{kind} n={n} seed={seed}: solver {sol.size} vs greedy {greedy}")
    s = sol.stats
    return BenchRow(kind, n, seed, rep.tree.node_count, s.wall_ns, s.pst_ops, s.ray_queries, sol.size, greedy)


def run_bench(kind: str, sizes: Iterable[int], seeds: int, check_max_n: int = 2048,
              progress=None) -> list[BenchRow]:
    rows = []
    for n in sizes:
        for seed in range(seeds):
            row = run_one(kind, seed, n, check_max_n)
            rows.append(row)
            if progress is not None:
                progress(row)
    rows.sort(key=lambda r: (r.n, r.seed))
    return rows


def write_rows(rows: list[BenchRow], fh: TextIO) -> None:
    writer = csv.DictWriter(fh, fieldnames=list(BenchRow.__dataclass_fields__))
    writer.writeheader()
    for r in rows:
        d = asdict(r)
        if d["greedy_size"] is None:
            d["greedy_size"] = ""
        writer.writerow(d)


def write_csv(rows: list[BenchRow], path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        write_rows(rows, fh)


def read_csv(path: str | Path) -> list[BenchRow]:
    rows = []
    with open(path, newline="") as fh:
        for d in csv.DictReader(fh):
            rows.append(BenchRow(
                d["kind"], int(d["n"]), int(d["seed"]), int(d["tree_nodes"]), int(d["wall_ns"]),
                int(d["pst_ops"]), int(d["ray_queries"]), int(d["dset_size"]),
                int(d["greedy_size"]) if d["greedy_size"] else None,
            ))
    return rows


def scaling_exponent(rows: list[BenchRow]) -> float:
    """Slope of log(t/n) against log(log2 n), from per-size median times.

    ``t = C n log^e n`` gives slope ``e``; an O(n log^2 n) solver stays near 2.
    """
    by_n: dict[int, list[float]] = {}
    for r in rows:
        by_n.setdefault(r.n, []).append(r.wall_ns / r.n)
    if len(by_n) < 2:
        raise ValueError("need at least two sizes to fit an exponent")
    xs, ys = [], []
    for n, per in sorted(by_n.items()):
        per.sort()
        xs.append(math.log(math.log2(n)))
        ys.append(math.log(per[len(per) // 2]))
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)


def plot_scaling(rows: list[BenchRow], path: str | Path) -> None:
    """Per-vertex time against n, with n log n and n log^2 n guides."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    by_n: dict[int, list[float]] = {}
    for r in rows:
        by_n.setdefault(r.n, []).append(r.wall_ns / r.n / 1e3)
    ns = sorted(by_n)
    med = [sorted(by_n[n])[len(by_n[n]) // 2] for n in ns]
    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    ax.plot(ns, med, "o-", label="measured")
    base = med[0] / math.log2(ns[0])
    ax.plot(ns, [base * math.log2(n) for n in ns], "--", lw=1, label=r"$\propto \log n$")
    base2 = med[0] / math.log2(ns[0]) ** 2
    ax.plot(ns, [base2 * math.log2(n) ** 2 for n in ns], ":", lw=1, label=r"$\propto \log^2 n$")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("vertices n")
    ax.set_ylabel(r"time per vertex ($\mu$s)")
    ax.set_title(f"{rows[0].kind} instances")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
