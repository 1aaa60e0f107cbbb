"""Arithmetic in GF(p^k) via a fixed monic irreducible polynomial.

Field elements are coded as integers ``sum(c_i * p**i)`` for the coefficient
vector ``(c_0, ..., c_{k-1})``.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``f`` over GF(p)."""
    a = _trim(list(a))
    df = len(f) - 1
    while len(a) - 1 >= df:
        lead = a[-1]
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - lead * fc) % p
        _trim(a)
    return a


def is_irreducible(f: list[int], p: int) -> bool:
    """Trial division of the monic ``f`` by every monic polynomial of degree <= deg/2."""
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            g = list(low) + [1]
            if not _polymod(f, g, p):
                return False
    return True


def least_irreducible(p: int, k: int) -> list[int]:
    """Monic irreducible of degree k with the smallest integer code of its lower coefficients."""
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        f = low + [1]
        if k == 1 or is_irreducible(f, p):
            return f
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


class GF:
    """The field with p^k elements."""

    def __init__(self, p: int, k: int):
        if not is_prime(p) or k < 1:
            raise ValueError(f"GF({p}^{k}) is not a field")
        self.p = p
        self.k = k
        self.size = p**k
        self.modulus = least_irreducible(p, k)

    def coeffs(self, x: int) -> list[int]:
        return [(x // self.p**i) % self.p for i in range(self.k)]

    def code(self, c: list[int]) -> int:
        return sum(ci * self.p**i for i, ci in enumerate(c))

    def mul(self, x: int, y: int) -> int:
        a, b = self.coeffs(x), self.coeffs(y)
        prod_ = [0] * (2 * self.k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod_[i + j] = (prod_[i + j] + ai * bj) % self.p
        r = _polymod(prod_, self.modulus, self.p)
        return self.code(r + [0] * (self.k - len(r)))

    def power(self, x: int, e: int) -> int:
        result, base = 1, x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    @cached_property
    def primitive_element(self) -> int:
        n = self.size - 1
        prime_factors = [q for q in range(2, n + 1) if n % q == 0 and is_prime(q)]
        for g in range(2 if self.size > 2 else 1, self.size):
            if all(self.power(g, n // q) != 1 for q in prime_factors):
                return g
        raise AssertionError("multiplicative group is cyclic; unreachable")

    @cached_property
    def exp_table(self) -> list[int]:
        """``exp_table[e]`` is the code of g^e for the primitive element g."""
        g = self.primitive_element
        out = [1]
        for _ in range(self.size - 2):
            out.append(self.mul(out[-1], g))
        return out

    def render(self, x: int) -> str:
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs(x)))):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms) or "0"
