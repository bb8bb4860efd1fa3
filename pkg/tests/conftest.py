import random

import pytest

from rdvdom.generate import gen_interval, gen_rdv
from rdvdom.model import RdvRepresentation


def path_node_set(rep: RdvRepresentation, z: int) -> set[int]:
    """Nodes on the path of vertex z, by walking parent links from the bottom."""
    nodes = {rep.bottom[z]}
    v = rep.bottom[z]
    while v != rep.top[z]:
        v = rep.tree.parent[v]
        nodes.add(v)
    return nodes


def brute_adjacency(rep: RdvRepresentation) -> list[set[int]]:
    """Pairwise path intersection; independent of the library's materializer."""
    n = rep.vertex_count
    paths = [path_node_set(rep, z) for z in range(n)]
    adj = [set() for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if paths[a] & paths[b]:
                adj[a].add(b)
                adj[b].add(a)
    return adj


def small_rdv(seed: int, max_n: int = 12) -> RdvRepresentation:
    r = random.Random(seed)
    return gen_rdv(seed, r.randint(0, max_n), r.randint(1, 16), r.randint(0, 6))


def small_interval(seed: int, max_n: int = 20) -> RdvRepresentation:
    r = random.Random(seed)
    return gen_interval(seed, r.randint(0, max_n), r.randint(1, 24))


# --- acceptance reporting ------------------------------------------------------

_results: dict[str, tuple[str, str]] = {}  # label -> (outcome, measured detail)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion covered by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        detail = "; ".join(str(v) for k, v in report.user_properties if k == "detail")
        _results[label] = (report.outcome.upper(), detail)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_results, key=lambda s: int(s.split()[0])):
        status, detail = _results[label]
        line = f"[{'PASS' if status == 'PASSED' else 'FAIL'}] criterion {label}"
        terminalreporter.write_line(line + (f": {detail}" if detail else ""))
