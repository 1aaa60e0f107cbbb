"""Digraphs without loops or parallel arcs, and the generators built on them."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import InvalidInput, SpecError
from ..groups import ElementSet, FiniteGroup
from .graph import Graph


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[tuple[int, int]]
    labels: tuple | None = None

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]], labels: Sequence | None = None) -> "Digraph":
        s = set()
        for u, v in arcs:
            if u == v:
                raise InvalidInput(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"arc {u}->{v} outside 0..{n - 1}")
            if (u, v) in s:
                raise InvalidInput(f"parallel arc {u}->{v}")
            s.add((u, v))
        if labels is not None and len(labels) != n:
            raise InvalidInput("one label per vertex expected")
        return cls(n, frozenset(s), tuple(labels) if labels is not None else None)

    def out_neighbors(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            out[u].append(v)
        return [sorted(x) for x in out]

    def in_neighbors(self) -> list[list[int]]:
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            inn[v].append(u)
        return [sorted(x) for x in inn]

    def index_of(self, label) -> int:
        if self.labels is None:
            raise SpecError("digraph has no labels")
        return self.labels.index(label)

    def with_arcs(self, extra: Iterable[tuple[int, int]]) -> "Digraph":
        return Digraph.from_arcs(self.n, list(self.arcs) + list(extra), self.labels)

    def induced(self, keep: Sequence[int]) -> "Digraph":
        keep = sorted(keep)
        pos = {v: i for i, v in enumerate(keep)}
        arcs = [(pos[u], pos[v]) for u, v in self.arcs if u in pos and v in pos]
        labels = tuple(self.labels[v] for v in keep) if self.labels is not None else None
        return Digraph.from_arcs(len(keep), arcs, labels)


def read_digraph(path: str | Path) -> Digraph:
    """Line 1: n; then one 'u v' arc per line, 1-indexed."""
    lines = [ln.split() for ln in Path(path).read_text().splitlines() if ln.strip()]
    try:
        n = int(lines[0][0])
        arcs = [(int(a) - 1, int(b) - 1) for a, b in lines[1:]]
    except (IndexError, ValueError) as exc:
        raise SpecError(f"malformed digraph file {path}") from exc
    return Digraph.from_arcs(n, arcs)


def write_digraph(D: Digraph, path: str | Path, label_path: str | Path | None = None) -> None:
    lines = [str(D.n)] + [f"{u + 1} {v + 1}" for u, v in sorted(D.arcs)]
    Path(path).write_text("\n".join(lines) + "\n")
    if label_path is not None and D.labels is not None:
        rows = [f"{i + 1} " + " ".join(str(x) for x in lab) for i, lab in enumerate(D.labels)]
        Path(label_path).write_text("\n".join(rows) + "\n")


@dataclass(frozen=True)
class DegreeProfile:
    min_out: int
    min_in: int
    max_out: int
    max_in: int

    @property
    def min_semidegree(self) -> int:
        return min(self.min_out, self.min_in)


def degree_profile(D: Digraph) -> DegreeProfile:
    outd = [0] * D.n
    ind = [0] * D.n
    for u, v in D.arcs:
        outd[u] += 1
        ind[v] += 1
    if D.n == 0:
        return DegreeProfile(0, 0, 0, 0)
    return DegreeProfile(min(outd), min(ind), max(outd), max(ind))


@dataclass(frozen=True)
class ClosedWalk:
    """v0 e0 v1 ... v_{k-1} e_{k-1} v0; forward[i] says e_i runs v_i -> v_{i+1}."""

    vertices: tuple[int, ...]
    forward: tuple[bool, ...]

    def validate(self, D: Digraph) -> None:
        k = len(self.vertices)
        if k == 0 or len(self.forward) != k:
            raise InvalidInput("closed walk needs one direction flag per step")
        for i in range(k):
            u, v = self.vertices[i], self.vertices[(i + 1) % k]
            arc = (u, v) if self.forward[i] else (v, u)
            if arc not in D.arcs:
                raise InvalidInput(f"step {i} uses missing arc {arc}")


def walk_type(w: ClosedWalk, D: Digraph | None = None) -> int:
    """|#forward - #backward|."""
    if D is not None:
        w.validate(D)
    if len(w.forward) != len(w.vertices):
        raise InvalidInput("closed walk needs one direction flag per step")
    f = sum(1 for x in w.forward if x)
    return abs(f - (len(w.forward) - f))


def cayley_digraph(G: FiniteGroup, A) -> Digraph:
    """Arc x -> xa for every a in A."""
    members = list(A.members if isinstance(A, ElementSet) else sorted(set(A)))
    if 0 in members:
        raise InvalidInput("the identity in A would create loops")
    return Digraph.from_arcs(G.order, ((x, G.mul(x, a)) for x in range(G.order) for a in members))


def bipartite_cayley(G: FiniteGroup, A) -> Graph:
    """Edges {(x,0), (xb,1)}; (x,0) is vertex x and (y,1) is vertex |G| + y."""
    members = list(A.members if isinstance(A, ElementSet) else sorted(set(A)))
    n = G.order
    return Graph.from_edges(2 * n, ((x, n + G.mul(x, b)) for x in range(n) for b in members))


def glm(l: int, m: int) -> Digraph:
    """Layers V_0..V_{l-2} and W_0..W_{l-2}, each of m^2 vertices v_{ijk}, w_{ijk}.

    V-layers advance by changing j and keeping k, W-layers by changing k and
    keeping j; the last V layer feeds W_0 and the last W layer feeds V_0.
    Labels are ('v' | 'w', i, j, k) with 1 <= j, k <= m.
    """
    if l < 2 or m < 1:
        raise SpecError(f"glm needs l >= 2 and m >= 1, got l={l}, m={m}")
    labels = [(s, i, j, k) for s in "vw" for i in range(l - 1) for j in range(1, m + 1) for k in range(1, m + 1)]
    idx = {lab: t for t, lab in enumerate(labels)}
    top = l - 2
    arcs = []
    for i in range(l - 1):
        for j in range(1, m + 1):
            for k in range(1, m + 1):
                for x in range(1, m + 1):
                    if i < top:
                        arcs.append((idx["v", i, j, k], idx["v", i + 1, x, k]))
                        arcs.append((idx["w", i, j, k], idx["w", i + 1, j, x]))
                    else:
                        arcs.append((idx["v", top, j, k], idx["w", 0, x, k]))
                        arcs.append((idx["w", top, j, k], idx["v", 0, j, x]))
    return Digraph.from_arcs(len(labels), arcs, labels)


def bidirected(g: Graph) -> Digraph:
    arcs = []
    for u, v in g.sorted_edges():
        arcs += [(u, v), (v, u)]
    return Digraph.from_arcs(g.n, arcs)


def directed_cycle(n: int) -> Digraph:
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])
