import random

import pytest

from coalition_lab.graph import Graph, from_edge_list, is_connected


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    while True:
        g = random_graph(n, rng.uniform(0.25, 0.7), rng)
        if is_connected(g):
            return g


def random_cubic_graph(n: int, rng: random.Random) -> Graph:
    """Configuration-model sample, rejecting loops and multi-edges."""
    points = [v for v in range(n) for _ in range(3)]
    while True:
        rng.shuffle(points)
        edges = set()
        for i in range(0, len(points), 2):
            a, b = sorted(points[i:i + 2])
            if a == b or (a, b) in edges:
                break
            edges.add((a, b))
        else:
            return from_edge_list(n, edges)


def random_permutation_of(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(perm)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._acceptance = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    passed = call.excinfo is None
    item.config._acceptance[number] = (title, passed)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_acceptance", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, passed = results[number]
        terminalreporter.write_line(f"criterion {number:>2}: {'PASS' if passed else 'FAIL'}  {title}")
