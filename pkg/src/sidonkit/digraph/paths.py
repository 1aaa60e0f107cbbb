"""Cycles formed by one subpath of each of two Hamilton paths, and the Sigma family."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Iterator, Sequence

from ..errors import InvalidInput, SpecError


@dataclass(frozen=True)
class TwoPartCycle:
    p_part: tuple[int, ...]  # subpath of P, in P's order
    q_part: tuple[int, ...]  # subpath of Q, in Q's order
    type: int


def two_part_cycles(P: Sequence[int], Q: Sequence[int], l: int) -> list[TwoPartCycle]:
    """Cycles of length l that are the union of a subpath of P and a subpath of Q.

    The two subpaths share their ends a (first on P) and b and nothing else.
    Going a -> b along P is p forward steps; returning b -> a along Q is
    backward if Q also runs a -> b (type |p - q|), forward otherwise (p + q).
    """
    if sorted(P) != sorted(Q) or len(set(P)) != len(P):
        raise InvalidInput("P and Q must list the same distinct vertices")
    if l < 3:
        return []
    posQ = {v: i for i, v in enumerate(Q)}
    n = len(P)
    out = []
    seen = set()
    for i in range(n):
        for p in range(1, l):
            j = i + p
            if j >= n:
                break
            q = l - p
            a, b = P[i], P[j]
            qa, qb = posQ[a], posQ[b]
            if abs(qa - qb) != q:
                continue
            p_part = tuple(P[i : j + 1])
            lo, hi = min(qa, qb), max(qa, qb)
            q_part = tuple(Q[lo : hi + 1])
            if set(p_part[1:-1]) & set(q_part[1:-1]):
                continue
            t = abs(p - q) if qa < qb else p + q
            key = (frozenset(p_part), p_part, q_part)
            if key in seen:
                continue
            seen.add(key)
            out.append(TwoPartCycle(p_part, q_part, t))
    return out


@dataclass(frozen=True)
class SigmaFamily:
    """Hamilton paths on 1..n whose i-th vertex (i = 1..n) lies in N_{i mod (2r+1)}.

    The parts are contiguous blocks: N_c = {c s + 1, ..., (c + 1) s}, s = n/(2r+1).
    """

    n: int
    r: int
    parts: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return factorial(self.n // (2 * self.r + 1)) ** (2 * self.r + 1)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        c = 2 * self.r + 1
        slots = [[i for i in range(1, self.n + 1) if i % c == cls] for cls in range(c)]
        for choice in product(*(permutations(part) for part in self.parts)):
            path = [0] * self.n
            for cls in range(c):
                for pos, v in zip(slots[cls], choice[cls]):
                    path[pos - 1] = v
            yield tuple(path)


def sigma_paths(n: int, r: int) -> SigmaFamily:
    if r < 1 or n < 1 or n % (2 * r + 1):
        raise SpecError(f"need r >= 1 and (2r+1) | n, got n={n}, r={r}")
    s = n // (2 * r + 1)
    parts = tuple(tuple(range(c * s + 1, (c + 1) * s + 1)) for c in range(2 * r + 1))
    return SigmaFamily(n, r, parts)
