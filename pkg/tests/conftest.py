import random

import pytest

from sidonkit.corpus import small_groups
from sidonkit.digraph import Graph, graph_girth


@pytest.fixture(scope="session")
def corpus():
    return small_groups()


def girth5_graph(n: int, seed: int, deg: int) -> Graph:
    """Random graph built by adding shuffled pairs while girth stays >= 5."""
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    edges: list[tuple[int, int]] = []
    degree = [0] * n
    for u, v in pairs:
        if degree[u] >= deg or degree[v] >= deg:
            continue
        if graph_girth(Graph.from_edges(n, edges + [(u, v)])) >= 5:
            edges.append((u, v))
            degree[u] += 1
            degree[v] += 1
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def girth5_20():
    # 80 Hamilton cycles, several of which can be oriented at once
    return girth5_graph(20, 1, 5)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
