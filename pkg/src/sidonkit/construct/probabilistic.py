"""Sidon sets of the first and second kind by sampling and deletion.

The violating configurations form a hypergraph on the candidate elements;
an independent set of it is a valid set.  With e_r edges of size r,
a uniform k-subset keeps f(k) = sum_r e_r C(k,r)/C(n,r) edges on average,
so deleting one vertex per surviving edge leaves k - f(k) in expectation.
We resample until the bound is actually met.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb

import numpy as np

from ..errors import InvalidInput, SpecError
from ..groups import ElementSet, FiniteGroup, PermutationGroup, element_order
from .. import perm

DEFAULT_ATTEMPTS = 200


@dataclass(frozen=True)
class HypergraphProfile:
    vertex_count: int
    edge_counts_by_size: dict[int, int]

    def f(self, k: int) -> Fraction:
        n = self.vertex_count
        return sum(
            (Fraction(e * comb(k, r), comb(n, r)) for r, e in self.edge_counts_by_size.items()),
            Fraction(0),
        )

    def f_table(self) -> dict[int, Fraction]:
        return {k: self.f(k) for k in range(1, self.vertex_count + 1)}

    def best_k(self) -> int:
        """argmax of k - f(k) over 1..n, smallest k on ties."""
        best, arg = None, 1
        for k in range(1, self.vertex_count + 1):
            v = k - self.f(k)
            if best is None or v > best:
                best, arg = v, k
        return arg


@dataclass(frozen=True)
class ProbabilisticResult:
    members: ElementSet
    profile: HypergraphProfile
    k_star: int
    f_k_star: Fraction
    target: int
    attempts: int
    budget_exhausted: bool


def check_base(G: FiniteGroup, B) -> None:
    """Pairwise distinct squares and pairwise non-commuting, else InvalidInput."""
    members = list(B)
    sq = [G.mul(b, b) for b in members]
    if len(set(sq)) != len(sq):
        raise InvalidInput("base elements must have pairwise distinct squares")
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if G.mul(a, b) == G.mul(b, a):
                raise InvalidInput(f"base elements {G.render(a)} and {G.render(b)} commute")


def first_kind_edges(G: FiniteGroup, B) -> set[frozenset[int]]:
    """Vertex sets of solutions ab = cd with (a, b) != (c, d) over B."""
    members = list(B)
    by_product: dict[int, list[tuple[int, int]]] = {}
    for a in members:
        for b in members:
            by_product.setdefault(G.mul(a, b), []).append((a, b))
    edges = set()
    for pairs in by_product.values():
        for i, (a, b) in enumerate(pairs):
            for c, d in pairs[i + 1 :]:
                edges.add(frozenset((a, b, c, d)))
    return edges


def second_kind_edges(G: FiniteGroup) -> set[frozenset[int]]:
    """Vertex sets of a1 b1^-1 a2 b2^-1 = 1 with a1 != b1 != a2 != b2 != a1."""
    edges = set()
    n = G.order
    mul, inv = G.mul, G.inv
    for a1 in range(n):
        for b1 in range(n):
            if b1 == a1:
                continue
            x = mul(a1, inv(b1))
            for a2 in range(n):
                if a2 == b1:
                    continue
                b2 = mul(x, a2)
                if b2 == a2 or b2 == a1:
                    continue
                edges.add(frozenset((a1, b1, a2, b2)))
    return edges


def profile_of(vertices: list[int], edges) -> HypergraphProfile:
    counts: dict[int, int] = {}
    for e in edges:
        counts[len(e)] = counts.get(len(e), 0) + 1
    return HypergraphProfile(len(vertices), dict(sorted(counts.items())))


def probabilistic_sidon(
    G: FiniteGroup,
    kind: str,
    base=None,
    seed: int = 0,
    max_attempts: int = DEFAULT_ATTEMPTS,
) -> ProbabilisticResult:
    if kind == "first":
        if base is None:
            raise SpecError("kind=first needs a base set")
        vertices = sorted(set(base.members if isinstance(base, ElementSet) else base))
        check_base(G, vertices)
        edges = first_kind_edges(G, vertices)
    elif kind == "second":
        vertices = list(range(G.order))
        edges = second_kind_edges(G)
    else:
        raise SpecError(f"kind must be 'first' or 'second', got {kind!r}")

    profile = profile_of(vertices, edges)
    k_star = profile.best_k()
    f_star = profile.f(k_star)
    target = max(0, ceil(k_star - f_star))
    edge_list = sorted(tuple(sorted(e)) for e in edges)
    best: list[int] = []
    attempt = 0
    while attempt < max_attempts:
        rng = np.random.default_rng([seed, attempt])
        attempt += 1
        picks = rng.choice(len(vertices), size=k_star, replace=False)
        S = {vertices[i] for i in picks}
        for e in edge_list:
            if all(v in S for v in e):
                S.discard(e[-1])
        if len(S) > len(best):
            best = sorted(S)
        if len(best) >= target:
            break
    return ProbabilisticResult(
        ElementSet.of(G, best), profile, k_star, f_star, target, attempt, len(best) < target
    )


def anticommuting_base(n: int) -> ElementSet:
    """Inside A_n: n-cycles (n odd) or (n-1)-cycles fixing n (n even), one per
    cyclic subgroup, so no member is a nontrivial power of another."""
    if n < 4:
        raise SpecError(f"anticommuting_base needs n >= 4, got {n}")
    G = PermutationGroup(n, alternating=True)
    length = n if n % 2 else n - 1
    chosen = []
    covered: set[int] = set()
    for i, p in enumerate(G.perms):
        if i in covered or perm.cycle_type(p)[0] != length:
            continue
        if n % 2 == 0 and p[n - 1] != n:
            continue
        chosen.append(i)
        x = i
        while x != 0:
            covered.add(x)
            x = G.mul(x, i)
    B = ElementSet.of(G, chosen)
    check_base(G, B.members)
    assert all(element_order(G, b) == length for b in B)
    return B
