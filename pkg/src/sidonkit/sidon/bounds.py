"""Integer upper bounds on M_k, M_{k,g} and M_k' for a concrete group."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..errors import CapExceeded, InvalidInput
from ..groups import ElementSet, FiniteGroup, abelian_subgroups, element_order, is_normal, is_subgroup

SUBGROUP_SEARCH_LIMIT = 64


def iroot(n: int, k: int) -> int:
    """floor(n ** (1/k)) for integers n >= 0, exactly."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0 and k >= 1")
    if n < 2:
        return n
    r = int(round(n ** (1.0 / k)))
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: int | None
    applicable: bool
    bounds: str  # which maximum the value bounds: M_k, M_k[g] or M_k'
    inputs: dict = field(default_factory=dict)


@dataclass(frozen=True)
class BoundReport:
    order: int
    k: int
    g: int
    entries: tuple[BoundEntry, ...]

    def get(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def applicable(self, bounds: str | None = None) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable and (bounds is None or e.bounds == bounds)]


def z2d_value(h: int, d: int) -> int:
    """Largest |A| allowed by |A cap H| <= 1 and sum of squared coset counts <= |H|,
    over 2^d cosets.  The sum of squares is least when the remaining
    elements are spread evenly over the 2^d - 1 non-trivial cosets."""
    c = 2**d - 1

    def fits(a: int) -> bool:
        for x1 in (0, 1):
            rest = a - x1
            if rest < 0:
                continue
            q, r = divmod(rest, c)
            if x1 + r * (q + 1) ** 2 + (c - r) * q * q <= h:
                return True
        return False

    a = 0
    while fits(a + 1):
        a += 1
    return a


def _abelian_subgroups(G: FiniteGroup, known: Sequence | None) -> list[frozenset[int]] | None:
    if known is not None:
        out = []
        for H in known:
            members = frozenset(H.members if isinstance(H, ElementSet) else H)
            if not is_subgroup(G, members):
                raise InvalidInput(f"{sorted(members)} is not a subgroup of {G.label}")
            if all(G.mul(a, b) == G.mul(b, a) for a in members for b in members):
                out.append(members)
        return out
    if G.order > SUBGROUP_SEARCH_LIMIT:
        return None
    try:
        return abelian_subgroups(G, SUBGROUP_SEARCH_LIMIT)
    except CapExceeded:
        return None


def upper_bound_report(G: FiniteGroup, k: int, known_subgroups: Sequence | None = None, g: int = 1) -> BoundReport:
    n = G.order
    entries = []
    t = iroot(n, k)
    entries.append(BoundEntry("trivial", t, True, "M_k", {"order": n, "k": k}))
    entries.append(BoundEntry("trivial_g", iroot(g * n, k), True, "M_k[g]", {"order": n, "k": k, "g": g}))
    if n > 1:
        strict = t - 1 if t**k == n else t
        entries.append(BoundEntry("dimovski_strict", strict, True, "M_k", {"order": n, "k": k, "exact_root": t**k == n}))
    else:
        entries.append(BoundEntry("dimovski_strict", None, False, "M_k", {"order": n}))

    subs = _abelian_subgroups(G, known_subgroups)
    searched = subs is not None
    subs = subs or []

    idx2 = [H for H in subs if 2 * len(H) == n]
    if idx2:
        entries.append(BoundEntry("index2_abelian", 1 + iroot(n // 2, k), True, "M_k", {"subgroup_order": n // 2}))
    else:
        entries.append(BoundEntry("index2_abelian", None, False, "M_k", {"searched": searched}))

    best_z2d = None
    if k == 2:
        for H in subs:
            h = len(H)
            idx = n // h
            d = idx.bit_length() - 1
            if d < 1 or 2**d != idx or not is_normal(G, H):
                continue
            if any(G.mul(x, x) not in H for x in range(n)):
                continue
            v = z2d_value(h, d)
            if best_z2d is None or v < best_z2d[0]:
                best_z2d = (v, h, d)
    if best_z2d:
        v, h, d = best_z2d
        entries.append(BoundEntry("z2d_quotient", v, True, "M_k", {"subgroup_order": h, "d": d}))
    else:
        entries.append(BoundEntry("z2d_quotient", None, False, "M_k", {"k": k, "searched": searched}))

    if k >= 3 and subs:
        h = min(n // len(H) for H in subs)
        entries.append(BoundEntry("skprime_subgroup", h * (k - 1), True, "M_k'", {"index": h, "k": k}))
    else:
        entries.append(BoundEntry("skprime_subgroup", None, False, "M_k'", {"k": k, "searched": searched}))

    if n > 1:
        orders = [element_order(G, a) for a in range(n)]
        m_k = len({o for o in orders if 2 <= o <= k})
        n_k = sum(1 for o in orders if o > k)
        entries.append(BoundEntry("order_census", m_k + n_k, True, "M_k", {"m_k": m_k, "n_k": n_k}))
    else:
        entries.append(BoundEntry("order_census", None, False, "M_k", {"order": n}))
    return BoundReport(n, k, g, tuple(entries))
