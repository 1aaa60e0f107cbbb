"""Undirected simple graphs: girth, Hamilton cycles and a few named examples."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from ..errors import CapExceeded, InvalidInput, SpecError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[frozenset[int]]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        es = set()
        for u, v in edges:
            if u == v:
                raise InvalidInput(f"loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge {u}-{v} outside 0..{n - 1}")
            es.add(frozenset((u, v)))
        return cls(n, frozenset(es))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            u, v = sorted(e)
            adj[u].append(v)
            adj[v].append(u)
        return [sorted(a) for a in adj]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def read_edge_list(path: str | Path) -> Graph:
    """'u v' per line, 1-indexed; an optional first line with a single integer gives n."""
    lines = [ln.split() for ln in Path(path).read_text().splitlines() if ln.strip() and not ln.startswith("#")]
    n = None
    if lines and len(lines[0]) == 1:
        n = int(lines[0][0])
        lines = lines[1:]
    try:
        pairs = [(int(a) - 1, int(b) - 1) for a, b in lines]
    except ValueError as exc:
        raise SpecError(f"malformed edge list {path}") from exc
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    return Graph.from_edges(n, pairs)


def graph_girth(g: Graph) -> float:
    """Shortest cycle length by BFS from every vertex; math.inf for forests."""
    adj = g.adjacency()
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    q.append(v)
                elif parent[u] != v:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def hamilton_cycles(g: Graph, max_nodes: int = 10**7) -> list[tuple[int, ...]]:
    """Every undirected Hamilton cycle once, as a vertex sequence starting at 0
    whose second vertex is smaller than its last."""
    n = g.n
    if n < 3:
        return []
    adj = g.adjacency()
    out = []
    path = [0]
    on = [False] * n
    on[0] = True
    nodes = 0

    def rec() -> None:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise CapExceeded("Hamilton cycle enumeration budget exceeded")
        u = path[-1]
        if len(path) == n:
            if 0 in adj[u] and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for v in adj[u]:
            if not on[v]:
                on[v] = True
                path.append(v)
                rec()
                path.pop()
                on[v] = False

    rec()
    return out


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def lcf(n: int, shifts: list[int], repeats: int) -> Graph:
    edges = [(i, (i + 1) % n) for i in range(n)]
    seq = shifts * repeats
    edges += [(i, (i + seq[i]) % n) for i in range(n)]
    return Graph.from_edges(n, edges)


def dodecahedron() -> Graph:
    return lcf(20, [10, 7, 4, -4, -7, 10, -4, 7, -7, 4], 2)


NAMED_GRAPHS = {"petersen": petersen, "dodecahedron": dodecahedron}
