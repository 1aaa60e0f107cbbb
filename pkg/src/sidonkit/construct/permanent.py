"""Permanents of 0/1 matrices and the matching lift of an S_k-set into S_|G|."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Sequence

from ..errors import CapExceeded, SpecError
from ..groups import ElementSet, FiniteGroup

RYSER_MAX_N = 30
LIFT_MAX_ORDER = 12


@dataclass(frozen=True)
class SquareMatrix01:
    n: int
    bits: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SquareMatrix01":
        n = len(rows)
        bits = tuple(tuple(int(x) for x in r) for r in rows)
        if any(len(r) != n for r in bits) or any(x not in (0, 1) for r in bits for x in r):
            raise SpecError("expected a square 0/1 matrix")
        return cls(n, bits)

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.bits]

    def col_sums(self) -> list[int]:
        return [sum(r[j] for r in self.bits) for j in range(self.n)]


def cayley_matrix(G: FiniteGroup, A) -> SquareMatrix01:
    """M[x][y] = 1 iff x^-1 y lies in A."""
    s = set(A.members if isinstance(A, ElementSet) else A)
    rows = [[1 if G.mul(G.inv(x), y) in s else 0 for y in range(G.order)] for x in range(G.order)]
    return SquareMatrix01.from_rows(rows)


def ryser_permanent(M: SquareMatrix01) -> int:
    """Ryser's formula, walking column subsets in Gray-code order."""
    n = M.n
    if n > RYSER_MAX_N:
        raise CapExceeded(f"permanent limited to n <= {RYSER_MAX_N}")
    if n == 0:
        return 1
    cols = [[M.bits[i][j] for i in range(n)] for j in range(n)]
    rowsum = [0] * n
    total = 0
    prev = 0
    for s in range(1, 1 << n):
        gray = s ^ (s >> 1)
        j = (gray ^ prev).bit_length() - 1
        sign = 1 if gray & (1 << j) else -1
        c = cols[j]
        for i in range(n):
            rowsum[i] += sign * c[i]
        prev = gray
        p = 1
        for r in rowsum:
            p *= r
            if not p:
                break
        if p:
            total += -p if bin(gray).count("1") % 2 else p
    return total * (-1) ** n


def naive_permanent(M: SquareMatrix01) -> int:
    n = M.n
    total = 0
    for sigma in permutations(range(n)):
        if all(M.bits[i][sigma[i]] for i in range(n)):
            total += 1
    return total


def ef_bound(n: int, rowsum: int) -> Fraction:
    """rowsum^n n! / n^n: the permanent floor for n x n 0/1 matrices with all
    line sums equal to rowsum (M / rowsum is doubly stochastic)."""
    if rowsum < 1 or n < 1:
        raise SpecError("ef_bound needs n >= 1 and rowsum >= 1")
    return Fraction(rowsum**n * factorial(n), n**n)


def permanent_lift(G: FiniteGroup, A, max_order: int = LIFT_MAX_ORDER) -> list[tuple[int, ...]]:
    """Every permutation pi of the elements with pi(x) in xA, as one-line
    permutations of 1..|G| (element i is point i+1), in lexicographic order."""
    if G.order > max_order:
        raise CapExceeded(f"permanent lift limited to groups of order <= {max_order}")
    members = sorted(set(A.members if isinstance(A, ElementSet) else A))
    n = G.order
    if not members:
        return []
    options = [sorted(G.mul(x, a) for a in members) for x in range(n)]
    used = [False] * n
    image = [0] * n
    out: list[tuple[int, ...]] = []

    def rec(x: int) -> None:
        if x == n:
            out.append(tuple(y + 1 for y in image))
            return
        for y in options[x]:
            if not used[y]:
                used[y] = True
                image[x] = y
                rec(x + 1)
                used[y] = False

    rec(0)
    return out
