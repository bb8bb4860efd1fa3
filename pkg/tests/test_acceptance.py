"""Acceptance criteria 1-10. Each test prints one PASS/FAIL line in the
"acceptance criteria" section of the pytest summary.

Run just this file with ``pytest tests/test_acceptance.py``; criterion 10
runs the full scaling sweep and takes a few minutes (deselect with
``-m "not slow"``).
"""

import random
import time

import pytest

from rdvdom import bench
from rdvdom.cli import main as cli_main
from rdvdom.generate import gen_interval, gen_paper_example, gen_rdv
from rdvdom.interval import solve_interval
from rdvdom.model import (
    assign_coordinates,
    bottom_up_order,
    build_segments,
    edge_query,
    materialize_graph,
    normalize,
)
from rdvdom.oracle import exact_max_indset, exact_min_domset, greedy_booth_johnson, verify_dominating
from rdvdom.solver import RayEvent, solve, solve_independent_set

from conftest import brute_adjacency
from test_pst import run_script as pst_script
from test_rayshoot import run_script as ray_script

Z4, Z5, Z6, Z7 = 3, 4, 5, 6
Z1, Z2 = 0, 1


def rdv_instance(seed: int, max_n: int):
    r = random.Random(seed)
    n = r.randint(1, max_n)
    return gen_rdv(seed, n, r.randint(1, 2 * n), r.randint(0, 8))


@pytest.mark.criterion("1 golden example")
def test_c1_golden_example(record_property):
    rep = gen_paper_example()
    sol = solve(rep)
    adj = materialize_graph(rep)
    best = min(_timed(lambda: solve(rep)) for _ in range(50))
    record_property("detail", f"size {sol.size}, first pick z{sol.selected[0] + 1}, "
                              f"exact {len(exact_min_domset(adj))}, best of 50 {best * 1e6:.0f} us")
    assert sol.size == 3 and verify_dominating(adj, sol.selected)
    assert sol.selected[0] == Z4
    assert len(exact_min_domset(adj)) == 3
    assert best < 1e-3


def _timed(fn) -> float:
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


@pytest.mark.criterion("2 ray-trace golden")
def test_c2_ray_trace(record_property):
    trace = [e for e in solve(gen_paper_example(), trace=True).trace if e.source == Z4]
    down = [e.hit for e in trace if e.direction == "down"]
    right = [(e.hit, e.accepted) for e in trace if e.direction == "right"]
    record_property("detail", f"down {down}, right {right}")
    assert down == [Z4, Z2, Z1, None]
    assert all(e.accepted for e in trace if e.direction == "down" and e.hit is not None)
    assert right == [(Z5, True), (Z6, True), (Z7, False)]
    assert trace[-1] == RayEvent(Z4, "right", Z7, False)


@pytest.mark.criterion("3 optimality n<=20")
def test_c3_optimal_small(record_property):
    mismatches = 0
    count = 1000
    for seed in range(count):
        rep = rdv_instance(seed, 20)
        adj = materialize_graph(rep)
        sol = solve(rep)
        if not verify_dominating(adj, sol.selected) or sol.size != len(exact_min_domset(adj)):
            mismatches += 1
    record_property("detail", f"{count} instances, {mismatches} mismatches")
    assert mismatches == 0


def c4_sizes():
    # geometric spread from 10 to 100,000 plus several full-size instances
    sizes = [int(10 * 10 ** (4 * k / 195)) for k in range(196)]
    return sizes + [100_000] * 4


@pytest.mark.criterion("4 greedy agreement up to n=100k")
def test_c4_greedy_agreement(record_property):
    mismatches = 0
    sizes = c4_sizes()
    for seed, n in enumerate(sizes):
        # alternate sparse and moderately dense host trees
        rep = gen_rdv(seed, n, n if seed % 2 else max(16, n // 4), 8 if seed % 2 else 12)
        order = bottom_up_order(normalize(rep), assign_coordinates(normalize(rep).tree)).order
        greedy = greedy_booth_johnson(materialize_graph(rep), order)
        if solve(rep).size != len(greedy):
            mismatches += 1
    record_property("detail", f"{len(sizes)} instances, max n {max(sizes)}, {mismatches} mismatches")
    assert mismatches == 0


@pytest.mark.criterion("5 edge_query equivalence")
def test_c5_edge_query(record_property):
    pairs = mismatches = 0
    for seed in range(500):
        rep = normalize(rdv_instance(seed, 12))
        c = assign_coordinates(rep.tree)
        segs = build_segments(rep, c)
        order = bottom_up_order(rep, c)
        adj = brute_adjacency(rep)
        n = rep.vertex_count
        for i in range(n):
            for j in range(i + 1, n):
                pairs += 1
                if edge_query(i, j, segs, order) != (order.order[j] in adj[order.order[i]]):
                    mismatches += 1
    record_property("detail", f"500 instances, {pairs} pairs, {mismatches} mismatches")
    assert mismatches == 0


@pytest.mark.criterion("6 normalization postconditions")
def test_c6_normalize(record_property):
    violations = 0
    for seed in range(500):
        rep = rdv_instance(seed, 16)
        out = normalize(rep)
        t = out.tree
        ok = (
            len(set(out.top)) == out.vertex_count
            and len(set(out.bottom)) == out.vertex_count
            and all(t.is_leaf(b) for b in out.bottom)
            and not any(t.is_leaf(x) for x in out.top)
            and t.node_count - rep.tree.node_count <= 2 * rep.vertex_count
            and brute_adjacency(out) == brute_adjacency(rep)
        )
        violations += not ok
    record_property("detail", f"500 instances, {violations} violations")
    assert violations == 0


@pytest.mark.criterion("7 data-structure oracles")
def test_c7_structures(record_property):
    scripts = 10_000
    for seed in range(scripts):
        pst_script(seed, 1 + seed % 40)
        ray_script(seed, 1 + seed % 40, horizontal=True)
        ray_script(seed, 1 + seed % 40, horizontal=False)
    record_property("detail", f"{scripts} scripts each for pst, shoot_down, shoot_right")


@pytest.mark.criterion("8 interval solver")
def test_c8_interval(record_property):
    mismatches = over = 0
    worst = 0.0
    for seed in range(1000):
        r = random.Random(seed)
        rep = gen_interval(seed, r.randint(1, 20), r.randint(1, 30))
        adj = materialize_graph(rep)
        sol = solve_interval(rep)
        if not verify_dominating(adj, sol.selected) or sol.size != len(exact_min_domset(adj)):
            mismatches += 1
        n = rep.vertex_count
        over += sol.stats.p_scans > 2 * n
        worst = max(worst, sol.stats.p_scans / n)
    record_property("detail", f"1000 instances, {mismatches} mismatches, "
                              f"max scans/n {worst:.2f}, {over} over 2n")
    assert mismatches == 0 and over == 0


@pytest.mark.criterion("9 independent set")
def test_c9_indset(record_property):
    mismatches = 0
    for seed in range(500):
        rep = rdv_instance(seed, 14)
        adj = materialize_graph(rep)
        ind = solve_independent_set(rep)
        independent = all(b not in adj[a] for a in ind for b in ind)
        if not independent or len(ind) != len(exact_max_indset(adj)):
            mismatches += 1
    record_property("detail", f"500 instances, {mismatches} mismatches")
    assert mismatches == 0


@pytest.mark.slow
@pytest.mark.criterion("10 scaling")
def test_c10_scaling(tmp_path, record_property):
    out = tmp_path / "scaling.csv"
    sizes = [2 ** 14, 2 ** 16, 2 ** 18, 2 ** 20]
    start = time.perf_counter()
    rc = cli_main(["bench", "--kind", "dense", "--sizes", ",".join(map(str, sizes)),
                   "--seeds", "1", "--csv", str(out)])
    elapsed = time.perf_counter() - start
    assert rc == 0
    rows = bench.read_csv(out)
    exponent = bench.scaling_exponent(rows)
    ray = max(r.ray_queries / r.n for r in rows)
    pst = max(r.pst_ops / r.n for r in rows)
    record_property("detail", f"exponent {exponent:.2f}, max ray/n {ray:.2f}, max pst/n {pst:.2f}, "
                              f"sweep {elapsed:.0f} s")
    assert sorted(r.n for r in rows) == sizes
    assert exponent < 2.3
    assert all(r.ray_queries <= 4 * r.n and r.pst_ops <= 3 * r.n for r in rows)
    assert elapsed < 600


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
