"""Permutations in one-line notation.

A permutation of {1..n} is a tuple ``p`` with ``p[x-1]`` the image of ``x``.
Composition is right-to-left: ``compose(a, b)(x) == a(b(x))``, so a word
``a1 a2 ... ak`` applied to a point evaluates ``ak`` first.
"""

from __future__ import annotations

import re
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import SpecError

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(a: Sequence[int], b: Sequence[int]) -> Permutation:
    return tuple(a[x - 1] for x in b)


def inverse(a: Sequence[int]) -> Permutation:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x - 1] = i + 1
    return tuple(out)


def is_permutation(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(1, len(images) + 1))


def sign(a: Sequence[int]) -> int:
    """+1 for even permutations, -1 for odd ones."""
    seen = [False] * len(a)
    parity = 0
    for start in range(len(a)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = a[x] - 1
            length += 1
        parity += length - 1
    return -1 if parity % 2 else 1


def cycles(a: Sequence[int]) -> list[tuple[int, ...]]:
    """Nontrivial cycles, each starting at its least point, sorted by that point."""
    seen = set()
    out = []
    for start in range(1, len(a) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = a[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = a[x - 1]
        if len(cyc) > 1:
            out.append(tuple(cyc))
    return out


def cycle_type(a: Sequence[int]) -> tuple[int, ...]:
    lengths = [len(c) for c in cycles(a)]
    lengths += [1] * (len(a) - sum(lengths))
    return tuple(sorted(lengths, reverse=True))


def to_cycle_string(a: Sequence[int]) -> str:
    cs = cycles(a)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


def from_cycles(cyc: Iterable[Sequence[int]], n: int) -> Permutation:
    images = list(range(1, n + 1))
    touched: set[int] = set()
    for c in cyc:
        for x in c:
            if not 1 <= x <= n:
                raise SpecError(f"point {x} outside 1..{n}")
            if x in touched:
                raise SpecError(f"point {x} repeated in cycle notation")
            touched.add(x)
        for i, x in enumerate(c):
            images[x - 1] = c[(i + 1) % len(c)]
    return tuple(images)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse(text: str, n: int) -> Permutation:
    """Parse cycle notation ``(1 2 3)(4 5)``, ``()``/``e``, or one-line ``[2,3,1]``."""
    s = text.strip()
    if s in ("e", "id", "()", ""):
        return identity(n)
    if s.startswith("["):
        if not s.endswith("]"):
            raise SpecError(f"bad one-line permutation {text!r}")
        body = s[1:-1].replace(",", " ").split()
        try:
            images = tuple(int(x) for x in body)
        except ValueError as exc:
            raise SpecError(f"bad one-line permutation {text!r}") from exc
        if len(images) != n or not is_permutation(images):
            raise SpecError(f"{text!r} is not a permutation of 1..{n}")
        return images
    if _CYCLE_RE.sub("", s).strip():
        raise SpecError(f"bad cycle notation {text!r}")
    cyc = []
    for body in _CYCLE_RE.findall(s):
        parts = body.replace(",", " ").split()
        try:
            cyc.append(tuple(int(x) for x in parts))
        except ValueError as exc:
            raise SpecError(f"bad cycle notation {text!r}") from exc
    return from_cycles(cyc, n)


def all_permutations(n: int, alternating: bool = False) -> Iterator[Permutation]:
    """Permutations of 1..n in lexicographic order (identity first)."""
    for p in permutations(range(1, n + 1)):
        if not alternating or sign(p) == 1:
            yield p
