"""Forbidden patterns: F_k (two walks, same ends) and C_{l,l} (two disjoint paths)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import SpecError
from .core import ClosedWalk, Digraph, walk_type

DEFAULT_CLL_WORK = 5 * 10**6


@dataclass(frozen=True)
class FkResult:
    free: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def adjacency(D: Digraph) -> np.ndarray:
    M = np.zeros((D.n, D.n), dtype=object)
    M[:, :] = 0
    for u, v in D.arcs:
        M[u, v] = 1
    return M


def walk_count_power(D: Digraph, k: int) -> np.ndarray:
    """A^k with Python-integer entries."""
    M = adjacency(D)
    P = np.zeros((D.n, D.n), dtype=object)
    P[:, :] = 0
    for i in range(D.n):
        P[i, i] = 1
    for _ in range(k):
        P = P.dot(M)
    return P


def _walks(out, u: int, v: int, k: int):
    if k == 0:
        if u == v:
            yield (u,)
        return
    for w in out[u]:
        for rest in _walks(out, w, v, k - 1):
            yield (u,) + rest


def is_fk_free(D: Digraph, k: int) -> FkResult:
    """Free iff every entry of A^k is at most 1."""
    if k < 2:
        raise SpecError(f"k must be at least 2, got {k}")
    P = walk_count_power(D, k)
    hits = np.argwhere(P >= 2)
    if len(hits) == 0:
        return FkResult(True)
    u, v = (int(x) for x in hits[0])
    gen = _walks(D.out_neighbors(), u, v, k)
    return FkResult(False, (next(gen), next(gen)))


@dataclass(frozen=True)
class CllResult:
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None
    exact: bool
    work: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def find_cll(D: Digraph, l: int, max_work: int = DEFAULT_CLL_WORK) -> CllResult:
    """Two internally disjoint directed paths of length l from x to y.

    For each start x, every simple path of length l is generated; paths are
    grouped by endpoint and pairs checked for disjoint interiors.  Starts are
    ordered by out-degree times in-degree of likely ends (highest first).
    """
    if l < 2:
        raise SpecError(f"l must be at least 2, got {l}")
    out = D.out_neighbors()
    indeg = [0] * D.n
    for _, v in D.arcs:
        indeg[v] += 1
    work = 0
    order = sorted(range(D.n), key=lambda x: (-len(out[x]), x))
    for x in order:
        by_end: dict[int, list[tuple[int, ...]]] = {}
        stack = [(x,)]
        while stack:
            path = stack.pop()
            work += 1
            if work > max_work:
                return CllResult(None, False, work)
            if len(path) == l + 1:
                if path[-1] != x:
                    by_end.setdefault(path[-1], []).append(path)
                continue
            for w in reversed(out[path[-1]]):
                if w not in path or (len(path) == l and w == x):
                    stack.append(path + (w,))
        for y in sorted(by_end, key=lambda y: (-indeg[y], y)):
            paths = by_end[y]
            for i, p in enumerate(paths):
                inner = set(p[1:-1])
                for q in paths[i + 1 :]:
                    work += 1
                    if inner.isdisjoint(q[1:-1]):
                        return CllResult((p, q), True, work)
            if work > max_work:
                return CllResult(None, False, work)
    return CllResult(None, True, work)


def closed_walks(D: Digraph, max_len: int):
    """Every closed walk of the underlying graph with 1 <= length <= max_len,
    each arc usable forward or backward."""
    steps: list[list[tuple[int, bool]]] = [[] for _ in range(D.n)]
    for u, v in sorted(D.arcs):
        steps[u].append((v, True))
        steps[v].append((u, False))

    def rec(start, verts, dirs):
        u = verts[-1]
        for w, f in steps[u]:
            if w == start:
                yield ClosedWalk(tuple(verts), tuple(dirs) + (f,))
            if len(dirs) + 1 < max_len:
                yield from rec(start, verts + [w], dirs + [f])

    for s in range(D.n):
        yield from rec(s, [s], [])


def nonzero_type_walk(D: Digraph, max_len: int) -> ClosedWalk | None:
    for w in closed_walks(D, max_len):
        if walk_type(w) != 0:
            return w
    return None
