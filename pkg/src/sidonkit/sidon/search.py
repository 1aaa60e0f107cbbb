"""Exhaustive maximum-set search (M_k, M_{k,g}, M_k') and naive oracles."""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

import numpy as np

from ..errors import SpecError
from ..groups import ElementSet, FiniteGroup
from .bounds import iroot
from .verify import check_sk_prime

DEFAULT_MAX_NODES = 10**6


def default_max_nodes() -> int:
    try:
        return int(os.environ.get("SIDON_MAX_NODES", DEFAULT_MAX_NODES))
    except ValueError:
        return DEFAULT_MAX_NODES


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: ElementSet
    nodes: int
    exact: bool


class _Budget(Exception):
    pass


class _SkTables:
    """Word-count layers for the current set, extended one element at a time.

    ``layers[j][z]`` counts words of length j+1 with product z.  Appending x
    to S uses new_j = new_{j-1} * (S + x) + old_{j-1} * x, where new_j counts
    words that use x at least once.
    """

    def __init__(self, G: FiniteGroup, k: int):
        n = G.order
        self.k = k
        self.n = n
        tab = G.table
        if tab is None:
            tab = [[G.mul(a, b) for b in range(n)] for a in range(n)]
        T = np.array(tab, dtype=np.int64)
        inv = [G.inv(a) for a in range(n)]
        # shift[a] maps a count vector to its right-multiple by a: (v * a)[z] = v[z a^-1]
        self.shift = [T[:, inv[a]] for a in range(n)]

    def empty(self) -> list[np.ndarray]:
        return [np.zeros(self.n, dtype=np.int64) for _ in range(self.k)]

    def extend(self, layers: list[np.ndarray], S: list[int], x: int) -> list[np.ndarray]:
        Sx = S + [x]
        new = np.zeros(self.n, dtype=np.int64)
        new[x] = 1
        out = [layers[0] + new]
        for j in range(1, self.k):
            nxt = layers[j - 1][self.shift[x]].copy()
            for a in Sx:
                nxt += new[self.shift[a]]
            new = nxt
            out.append(layers[j] + new)
        return out


def max_sk(
    G: FiniteGroup,
    k: int,
    g: int = 1,
    max_nodes: int | None = None,
    target: int | None = None,
    exclude: Iterable[int] = (),
) -> SearchResult:
    """Largest S_k[g]-set by branch and bound over increasing element indices.

    With ``target`` the search stops at the first set of that size (the
    lexicographically least one) instead of proving optimality.
    """
    if k < 2:
        raise SpecError(f"k must be at least 2, got {k}")
    if g < 1:
        raise SpecError(f"g must be at least 1, got {g}")
    cap = default_max_nodes() if max_nodes is None else max_nodes
    tables = _SkTables(G, k)
    ceiling = min(G.order, iroot(g * G.order, k))
    if target is not None:
        ceiling = min(ceiling, target)
    banned = set(exclude)
    best: list[int] = []
    nodes = 0

    def viable(layers, S, pool):
        out = []
        for x in pool:
            if tables.extend(layers, S, x)[-1].max() <= g:
                out.append(x)
        return out

    def dfs(S, layers, cand):
        nonlocal best, nodes
        nodes += 1
        if nodes > cap:
            raise _Budget
        if len(S) > len(best):
            best = list(S)
        if len(best) >= ceiling:
            return True
        if len(S) + len(cand) <= len(best):
            return False
        for i, x in enumerate(cand):
            if len(S) + len(cand) - i <= len(best):
                return False
            L = tables.extend(layers, S, x)
            S.append(x)
            rest = viable(L, S, cand[i + 1 :])
            done = dfs(S, L, rest)
            S.pop()
            if done:
                return True
        return False

    start = [x for x in range(G.order) if x not in banned]
    exact = True
    try:
        dfs([], tables.empty(), start)
    except _Budget:
        exact = False
    if target is not None:
        exact = exact and len(best) >= target
    return SearchResult(len(best), ElementSet.of(G, best), nodes, exact)


def find_sk_set(G: FiniteGroup, k: int, size: int, g: int = 1, exclude: Iterable[int] = (0,), max_nodes: int | None = None) -> ElementSet | None:
    """Lexicographically least S_k[g]-set of the given size avoiding ``exclude``."""
    res = max_sk(G, k, g, max_nodes=max_nodes, target=size, exclude=exclude)
    return res.witness if res.value >= size else None


def max_sk_prime(G: FiniteGroup, k: int, cyclic: bool = True, max_nodes: int | None = None) -> SearchResult:
    """Largest S_k'-set.  Left translates of S_k'-sets are S_k'-sets, so the
    identity (index 0) is taken as the first element without loss."""
    if k < 2:
        raise SpecError(f"k must be at least 2, got {k}")
    cap = default_max_nodes() if max_nodes is None else max_nodes
    best: list[int] = [0]
    nodes = 0

    def ok(S):
        return check_sk_prime(G, S, k, cyclic).holds

    def dfs(S, cand):
        nonlocal best, nodes
        nodes += 1
        if nodes > cap:
            raise _Budget
        if len(S) > len(best):
            best = list(S)
        for i, x in enumerate(cand):
            if len(S) + len(cand) - i <= len(best):
                return
            S.append(x)
            rest = [y for y in cand[i + 1 :] if ok(S + [y])]
            dfs(S, rest)
            S.pop()

    exact = True
    try:
        dfs([0], [x for x in range(1, G.order) if ok([0, x])])
    except _Budget:
        exact = False
    return SearchResult(len(best), ElementSet.of(G, best), nodes, exact)


# ---------------------------------------------------------------- naive oracles


def _naive_sk_ok(G: FiniteGroup, A, k: int, g: int) -> bool:
    counts: dict[int, int] = {}
    for word in product(A, repeat=k):
        x = 0
        for a in word:
            x = G.mul(x, a)
        counts[x] = counts.get(x, 0) + 1
        if counts[x] > g:
            return False
    return True


def _naive_sk_prime_ok(G: FiniteGroup, A, k: int, cyclic: bool = True) -> bool:
    for word in product(A, repeat=2 * k):
        if any(word[i] == word[i + 1] for i in range(2 * k - 1)):
            continue
        if cyclic and word[-1] == word[0]:
            continue
        x = 0
        for i, c in enumerate(word):
            x = G.mul(x, G.inv(c) if i % 2 else c)
        if x == 0:
            return False
    return True


def _naive_max(G: FiniteGroup, good) -> tuple[int, tuple[int, ...]]:
    # both properties pass to subsets, so the first empty size ends the scan
    best: tuple[int, ...] = ()
    for s in range(1, G.order + 1):
        hit = next((A for A in combinations(range(G.order), s) if good(A)), None)
        if hit is None:
            break
        best = hit
    return len(best), best


def naive_max_sk(G: FiniteGroup, k: int, g: int = 1) -> tuple[int, tuple[int, ...]]:
    """Oracle by subset enumeration; returns (value, lexicographically least witness)."""
    return _naive_max(G, lambda A: _naive_sk_ok(G, A, k, g))


def naive_max_sk_prime(G: FiniteGroup, k: int, cyclic: bool = True) -> tuple[int, tuple[int, ...]]:
    return _naive_max(G, lambda A: _naive_sk_prime_ok(G, A, k, cyclic))
