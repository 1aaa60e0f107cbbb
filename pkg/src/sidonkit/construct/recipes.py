"""Conjugation recipes for S_2[g]-sets in G x G.

For pi in G and a base set A, the pairs (a, a pi) satisfy
(a, a pi)(b, b pi) = (ab, a pi b pi), so the product pair (m1, m2) pins down
b^-1 pi b = m1^-1 m2 pi^-1, and b in turn fixes a.  The multiplicity is
therefore at most g = max_c #{b in A : b^-1 pi b = c}.  When A is closed
under inverses (stabilizers, whole groups, classes of S_n) this is the same
as counting a pi a^-1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .. import perm
from ..errors import InvalidInput, SpecError
from ..groups import ElementSet, FiniteGroup, PermutationGroup, ProductGroup, conjugacy_class, point_stabilizer_subset
from ..sidon.verify import sk_multiplicity


@dataclass(frozen=True)
class PairSet:
    group: ProductGroup
    members: tuple[tuple[int, int], ...]
    claimed_g: int
    pi: int | None = None

    def flattened(self) -> ElementSet:
        return ElementSet.of(self.group, (self.group.pair(a, b) for a, b in self.members))

    def multiplicity(self, max_words: int | None = None) -> int:
        return sk_multiplicity(self.group, self.flattened(), 2, max_words)

    def verify(self) -> bool:
        return self.multiplicity() <= self.claimed_g

    def __len__(self) -> int:
        return len(self.members)


def conjugation_multiplicity(G: FiniteGroup, pi: int, A) -> int:
    """max over c of #{b in A : b^-1 pi b = c}."""
    counts = Counter(G.mul(G.mul(G.inv(b), pi), b) for b in A)
    return max(counts.values()) if counts else 0


def conjugacy_recipe(G: FiniteGroup, pi: int, A, P: ProductGroup | None = None) -> PairSet:
    members = list(A.members if isinstance(A, ElementSet) else sorted(set(A)))
    if not members:
        raise InvalidInput("conjugacy recipe needs a nonempty base set")
    G.check(pi)
    P = P if P is not None else ProductGroup(G, G)
    pairs = tuple((a, G.mul(a, pi)) for a in members)
    return PairSet(P, pairs, conjugation_multiplicity(G, pi, members), pi)


def canonical_pi(n: int) -> perm.Permutation:
    """(1 2 ... n) for odd n, (1 2 ... n-1) for even n; both even permutations."""
    length = n if n % 2 else n - 1
    return perm.from_cycles([tuple(range(1, length + 1))], n)


def sn_cross(n: int, full: bool = False, alternating: bool = False) -> PairSet:
    if n < 3:
        raise SpecError(f"sn_cross needs n >= 3, got {n}")
    G = PermutationGroup(n, alternating)
    pi = G.element_of(canonical_pi(n))
    base = ElementSet.of(G, G.elements()) if full else point_stabilizer_subset(n, alternating, 1, group=G)
    return conjugacy_recipe(G, pi, base)


def class_recipe(G: FiniteGroup, a: int) -> PairSet:
    """Base set = the class of a, pi = a, claimed g = |G| / |class|."""
    A = conjugacy_class(G, a)
    ps = conjugacy_recipe(G, a, A)
    return PairSet(ps.group, ps.members, G.order // len(A), a)
