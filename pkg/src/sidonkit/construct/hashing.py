"""The cyclic-shift set family and the resulting bound on perfect hash codes."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..errors import SpecError


def hash_shift_family(t: int, v: int) -> list[frozenset[int]]:
    """Cyclic shifts of {1..v-2} modulo t-1, as subsets of {1..t-1}."""
    if not 3 <= v <= t:
        raise SpecError(f"need 3 <= v <= t, got t={t}, v={v}")
    m = t - 1
    return [frozenset((i + j) % m + 1 for j in range(v - 2)) for i in range(m)]


def hash_code_bound(t: int, v: int, q: int, n: int) -> Fraction:
    """C(t,2) q^((1 - (v-2)/(t-1)) n), exact; requires (t-1) | n."""
    if not 3 <= v <= t:
        raise SpecError(f"need 3 <= v <= t, got t={t}, v={v}")
    if q < 2:
        raise SpecError(f"need q >= 2, got {q}")
    if n % (t - 1):
        raise SpecError(f"block length needs (t-1) | n; {t - 1} does not divide {n}")
    exponent = n - (v - 2) * n // (t - 1)
    return Fraction(comb(t, 2) * q**exponent)
