"""Exact counts: Hamilton cycles, Eulerian circuits (BEST), transition vectors."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from ..errors import CapExceeded, InvalidInput, SpecError
from .core import Digraph, bidirected
from .graph import complete_bipartite

HAMILTON_MAX_N = 24


@dataclass(frozen=True)
class CountResult:
    value: int
    formula: int | None = None
    method: str = ""

    @property
    def matches(self) -> bool | None:
        return None if self.formula is None else self.value == self.formula


def count_hamilton_cycles(D: Digraph, max_n: int = HAMILTON_MAX_N) -> int:
    """Directed Hamilton cycles, each cyclic sequence counted once.

    Paths start at vertex 0; the number of ways to finish from (visited set,
    current vertex) is memoised.
    """
    n = D.n
    if n > max_n:
        raise CapExceeded(f"Hamilton counting limited to n <= {max_n}")
    if n < 2:
        return 0
    out = D.out_neighbors()
    inn = D.in_neighbors()
    if any(not o for o in out) or any(not i for i in inn):
        return 0
    full = (1 << n) - 1
    closes = [0 in o for o in out]

    @lru_cache(maxsize=None)
    def finish(mask: int, v: int) -> int:
        if mask == full:
            return 1 if closes[v] else 0
        total = 0
        for w in out[v]:
            if not mask >> w & 1:
                total += finish(mask | 1 << w, w)
        return total

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 10 * n + 100))
    try:
        return finish(1, 0)
    finally:
        finish.cache_clear()
        sys.setrecursionlimit(limit)


def enumerate_hamilton_cycles(D: Digraph, limit: int = 10**5) -> list[tuple[int, ...]]:
    n = D.n
    out = D.out_neighbors()
    found: list[tuple[int, ...]] = []
    path = [0]
    on = [False] * n
    if n:
        on[0] = True

    def rec() -> None:
        if len(found) > limit:
            raise CapExceeded("too many Hamilton cycles to list")
        u = path[-1]
        if len(path) == n:
            if 0 in out[u]:
                found.append(tuple(path))
            return
        for w in out[u]:
            if not on[w]:
                on[w] = True
                path.append(w)
                rec()
                path.pop()
                on[w] = False

    if n >= 2:
        rec()
    return found


def bareiss_det(M: list[list[int]]) -> int:
    """Integer determinant by fraction-free elimination."""
    A = [row[:] for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _check_eulerian(D: Digraph) -> None:
    outd = [0] * D.n
    ind = [0] * D.n
    for u, v in D.arcs:
        outd[u] += 1
        ind[v] += 1
    if outd != ind:
        raise InvalidInput("BEST needs in-degree = out-degree at every vertex")
    if D.n == 0 or not D.arcs:
        raise InvalidInput("BEST needs at least one arc")
    if any(d == 0 for d in outd):
        raise InvalidInput("every vertex must lie on an arc")
    # balanced + weakly connected implies strongly connected
    adj = [set() for _ in range(D.n)]
    for u, v in D.arcs:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != D.n:
        raise InvalidInput("digraph is not connected")


def arborescences(D: Digraph, root: int = 0) -> int:
    """Spanning arborescences oriented towards ``root`` (matrix-tree theorem)."""
    n = D.n
    L = [[0] * n for _ in range(n)]
    for u, v in D.arcs:
        L[u][u] += 1
        L[u][v] -= 1
    minor = [[L[i][j] for j in range(n) if j != root] for i in range(n) if i != root]
    return bareiss_det(minor)


def best_eulerian_count(D: Digraph) -> int:
    """t_w(D) * prod (d+(v) - 1)!: Eulerian circuits with a fixed first arc at the root."""
    _check_eulerian(D)
    outd = [0] * D.n
    for u, _ in D.arcs:
        outd[u] += 1
    total = arborescences(D, 0)
    for d in outd:
        total *= factorial(d - 1)
    return total


def enumerate_eulerian_circuits(D: Digraph, max_arcs: int = 16) -> list[tuple[int, ...]]:
    """Eulerian circuits as vertex sequences starting with the least arc out of vertex 0."""
    _check_eulerian(D)
    if len(D.arcs) > max_arcs:
        raise CapExceeded(f"circuit enumeration limited to {max_arcs} arcs")
    out = D.out_neighbors()
    first = (0, out[0][0])
    used = {first}
    seq = [0, first[1]]
    found = []
    total = len(D.arcs)

    def rec() -> None:
        u = seq[-1]
        if len(used) == total:
            if u == 0:
                found.append(tuple(seq[:-1]))
            return
        for w in out[u]:
            if (u, w) not in used:
                used.add((u, w))
                seq.append(w)
                rec()
                seq.pop()
                used.discard((u, w))

    rec()
    return found


def bidirected_kmm(m: int) -> Digraph:
    return bidirected(complete_bipartite(m, m))


def transition_vector_formula(m: int) -> int:
    return m ** (2 * (m - 1)) * factorial(m - 1) ** (2 * m)


@dataclass(frozen=True)
class TransitionVector:
    """Cyclic word X_f(1) Y_g(1) ... X_f(m^2) Y_g(m^2)."""

    f: tuple[int, ...]
    g: tuple[int, ...]

    def valid(self, m: int) -> bool:
        L = m * m
        if len(self.f) != L or len(self.g) != L or self.f[0] != 1 or self.g[0] != 1:
            return False
        xy = {(self.f[s], self.g[s]) for s in range(L)}
        yx = {(self.g[s], self.f[(s + 1) % L]) for s in range(L)}
        return len(xy) == L and len(yx) == L


def transition_vectors(m: int, enumerate_all: bool = True, max_m: int = 3) -> tuple[int, list[TransitionVector]]:
    """Count (by formula) and, for small m, list every transition vector."""
    if m < 1:
        raise SpecError(f"m must be at least 1, got {m}")
    count = transition_vector_formula(m)
    if not enumerate_all:
        return count, []
    if m > max_m:
        raise CapExceeded(f"transition vector enumeration limited to m <= {max_m}")
    L = m * m
    f = [1]
    g = [1]
    used_xy = {(1, 1)}
    used_yx: set[tuple[int, int]] = set()
    out = []

    def rec() -> None:
        s = len(f)
        if s == L:
            if (g[-1], 1) not in used_yx:
                out.append(TransitionVector(tuple(f), tuple(g)))
            return
        for x in range(1, m + 1):
            if (g[-1], x) in used_yx:
                continue
            used_yx.add((g[-1], x))
            f.append(x)
            for y in range(1, m + 1):
                if (x, y) in used_xy:
                    continue
                used_xy.add((x, y))
                g.append(y)
                rec()
                g.pop()
                used_xy.discard((x, y))
            f.pop()
            used_yx.discard((g[-1], x))

    rec()
    return count, out


def glm_hamilton_formula(r: int, m: int) -> int:
    if r < 2 or m < 1:
        raise SpecError(f"need r >= 2 and m >= 1, got r={r}, m={m}")
    return transition_vector_formula(m) * factorial(m) ** (2 * m * (r - 2))
