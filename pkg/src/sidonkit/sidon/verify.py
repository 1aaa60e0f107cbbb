"""Exact checks for the S_k, S_k[g] and S_k' properties.

The core routines work on any hashable elements given a multiplication and
an inverse, so lists of permutations of a large point set can be checked
without building the ambient symmetric group.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from ..errors import CapExceeded, SpecError
from ..groups import ElementSet, FiniteGroup

DEFAULT_MAX_WORDS = 10**8


def default_max_words() -> int:
    try:
        return int(os.environ.get("SIDON_MAX_WORDS", DEFAULT_MAX_WORDS))
    except ValueError:
        return DEFAULT_MAX_WORDS


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one check.

    ``witness`` is a pair of distinct words with equal product (Sk) or a
    single alternating word a1 b1 ... ak bk whose product a1 b1^-1 ... is
    trivial (SkPrime).  Words hold the elements themselves.
    """

    property: str
    k: int
    holds: bool
    multiplicity: int | None
    witness: tuple | None = None
    size: int = 0
    cyclic: bool = True
    work: int = field(default=0, compare=False)


def _tick(work: int, add: int, cap: int) -> int:
    work += add
    if work > cap:
        raise CapExceeded(f"word budget {cap} exceeded; raise max_words")
    return work


def word_layers(A: Sequence[Hashable], k: int, mul: Callable, max_words: int | None = None) -> tuple[list[Counter], int]:
    """layers[j][mu] = number of length-(j+1) words over A with product mu."""
    cap = default_max_words() if max_words is None else max_words
    layers = [Counter(A)]
    work = len(A)
    for _ in range(k - 1):
        prev = layers[-1]
        work = _tick(work, len(prev) * len(A), cap)
        nxt: Counter = Counter()
        for x, c in prev.items():
            for a in A:
                nxt[mul(x, a)] += c
        layers.append(nxt)
    return layers, work


def _words_to(layers: list[Counter], A: Sequence, j: int, y, mul: Callable, inv: Callable):
    """Yield every word of length j+1 with product y (lexicographic in A's order)."""
    if j == 0:
        if y in layers[0]:
            yield (y,)
        return
    for a in A:
        x = mul(y, inv(a))
        if x in layers[j - 1]:
            for w in _words_to(layers, A, j - 1, x, mul, inv):
                yield w + (a,)


def sk_generic(A: Sequence[Hashable], k: int, mul: Callable, inv: Callable, max_words: int | None = None) -> VerifyReport:
    if k < 2:
        raise SpecError(f"k must be at least 2, got {k}")
    A = list(dict.fromkeys(A))
    if not A:
        return VerifyReport("Sk", k, True, 0, None, 0)
    layers, work = word_layers(A, k, mul, max_words)
    top = layers[-1]
    mult = max(top.values())
    witness = None
    if mult >= 2:
        # the first product (in iteration order) reaching the maximum
        mu = next(m for m, c in top.items() if c == mult)
        gen = _words_to(layers, A, k - 1, mu, mul, inv)
        witness = (next(gen), next(gen))
    return VerifyReport("Sk", k, mult <= 1, mult, witness, len(A), work=work)


def sk_prime_generic(
    A: Sequence[Hashable], k: int, mul: Callable, inv: Callable, identity, cyclic: bool = True, max_words: int | None = None
) -> VerifyReport:
    """Search alternating words a1 b1 ... ak bk with a1 b1^-1 ... ak bk^-1 = identity,
    a_i != b_i, b_i != a_{i+1}, and (cyclic) b_k != a_1."""
    if k < 2:
        raise SpecError(f"k must be at least 2, got {k}")
    A = list(dict.fromkeys(A))
    if len(A) <= 1:
        return VerifyReport("SkPrime", k, True, None, None, len(A), cyclic)
    cap = default_max_words() if max_words is None else max_words
    invA = {a: inv(a) for a in A}
    # state: (product, first letter, last letter); parents for witness rebuild
    layer = {(a, a, a): None for a in A}
    history = [layer]
    work = len(A)
    for step in range(2 * k - 1):
        beta = step % 2 == 0  # even steps append b_i (as b_i^-1)
        nxt: dict = {}
        work = _tick(work, len(layer) * len(A), cap)
        for state in layer:
            prod, first, last = state
            for c in A:
                if c == last:
                    continue
                p = mul(prod, invA[c]) if beta else mul(prod, c)
                s = (p, first, c)
                if s not in nxt:
                    nxt[s] = state
        layer = nxt
        history.append(layer)
    for state in layer:
        prod, first, last = state
        if prod == identity and (not cyclic or last != first):
            word = [state[2]]
            for j in range(len(history) - 1, 0, -1):
                state = history[j][state]
                word.append(state[2])
            return VerifyReport("SkPrime", k, False, None, tuple(reversed(word)), len(A), cyclic, work)
    return VerifyReport("SkPrime", k, True, None, None, len(A), cyclic, work)


def _members(G: FiniteGroup, A) -> list[int]:
    if isinstance(A, ElementSet):
        return list(A.members)
    return list(ElementSet.of(G, A).members)


def check_sk(G: FiniteGroup, A, k: int, max_words: int | None = None) -> VerifyReport:
    """S_k check with the exact multiplicity max_mu #{words over A of length k with product mu}."""
    return sk_generic(_members(G, A), k, G.mul, G.inv, max_words)


def sk_multiplicity(G: FiniteGroup, A, k: int, max_words: int | None = None) -> int:
    return check_sk(G, A, k, max_words).multiplicity


def check_sk_prime(G: FiniteGroup, A, k: int, cyclic: bool = True, max_words: int | None = None) -> VerifyReport:
    return sk_prime_generic(_members(G, A), k, G.mul, G.inv, 0, cyclic, max_words)


def rewitness(G: FiniteGroup, report: VerifyReport) -> bool:
    """Re-check that a report's witness really is a violation."""
    w = report.witness
    if w is None:
        return report.holds
    if report.property == "Sk":
        u, v = w

        def prod(word):
            x = 0
            for a in word:
                x = G.mul(x, a)
            return x

        return u != v and len(u) == len(v) == report.k and prod(u) == prod(v)
    x = 0
    for i, c in enumerate(w):
        x = G.mul(x, G.inv(c) if i % 2 else c)
    n = len(w)
    adjacent = all(w[i] != w[i + 1] for i in range(n - 1))
    closing = w[-1] != w[0] if report.cyclic else True
    return x == 0 and n == 2 * report.k and adjacent and closing


# permutation words, for sets living in S_n without a built group
def _perm_mul(a, b):
    return tuple(a[x - 1] for x in b)


def _perm_inv(a):
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x - 1] = i + 1
    return tuple(out)


def check_sk_permutations(perms: Sequence[Sequence[int]], k: int, max_words: int | None = None) -> VerifyReport:
    """S_k check for permutations in one-line notation (composition a(b(x)))."""
    return sk_generic([tuple(p) for p in perms], k, _perm_mul, _perm_inv, max_words)
