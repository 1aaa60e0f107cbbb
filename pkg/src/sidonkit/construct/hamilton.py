"""Lift a randomly oriented high-girth graph to an S_k-set of cyclic permutations.

Each Hamilton cycle whose edges all agree with the orientation gives the
cyclic permutation following it.  Two distinct words of length k in these
permutations that agree at a point would trace two different oriented walks
whose union closes a cycle of length at most 2k, impossible when the girth
is at least 2k + 1.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..digraph.graph import Graph, graph_girth, hamilton_cycles
from ..errors import InvalidInput


@lru_cache(maxsize=16)
def _cycles(g: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(hamilton_cycles(g))


def random_orientation(g: Graph, seed: int) -> set[tuple[int, int]]:
    """One fair coin per edge, in sorted edge order."""
    rng = np.random.default_rng(seed)
    arcs = set()
    for u, v in g.sorted_edges():
        arcs.add((u, v) if rng.integers(2) == 0 else (v, u))
    return arcs


def respected_cycles(g: Graph, arcs: set[tuple[int, int]]) -> list[tuple[int, ...]]:
    """Hamilton cycles, as directed vertex sequences, whose every edge is an arc."""
    out = []
    for cyc in _cycles(g):
        for seq in (cyc, (cyc[0],) + tuple(reversed(cyc[1:]))):
            if all((seq[i], seq[(i + 1) % len(seq)]) in arcs for i in range(len(seq))):
                out.append(seq)
                break
    return out


def cycle_permutation(seq: tuple[int, ...], n: int) -> tuple[int, ...]:
    """pi(i) = j for each step i -> j of the cycle, on points 1..n."""
    images = [0] * n
    for i, v in enumerate(seq):
        images[v] = seq[(i + 1) % len(seq)] + 1
    return tuple(images)


def lift_with_orientation(g: Graph, k: int, arcs: set[tuple[int, int]]) -> list[tuple[int, ...]]:
    """The lift for a given orientation (one arc per edge)."""
    girth = graph_girth(g)
    if girth < 2 * k + 1:
        raise InvalidInput(f"girth {girth} is below 2k+1 = {2 * k + 1}")
    if any((v, u) in arcs for u, v in arcs) or len(arcs) != len(g.edges):
        raise InvalidInput("orientation must give each edge exactly one direction")
    return sorted(cycle_permutation(seq, g.n) for seq in respected_cycles(g, arcs))


def hamilton_lift(g: Graph, k: int, seed: int) -> list[tuple[int, ...]]:
    return lift_with_orientation(g, k, random_orientation(g, seed))
