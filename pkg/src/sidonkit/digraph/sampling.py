"""Random layering and random induced subgraphs, retried until their degree targets hold."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import SpecError
from .core import Digraph, degree_profile


@dataclass(frozen=True)
class SampleResult:
    digraph: Digraph
    kept: tuple[int, ...]  # original vertex of each output vertex, or layer classes for layering
    attempts: int
    success: bool


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(str(x))


def layered_subgraph(D: Digraph, h: int, eps, seed: int, max_tries: int = 100) -> SampleResult:
    """Random classes 0..2h-1; keep arcs from class c to class c+1 mod 2h.

    Every closed walk of length at most 2h-1 in the output has type 0, since
    its net displacement is a multiple of 2h.  ``kept`` holds the classes.
    """
    eps = _frac(eps)
    if h < 1 or not 0 < eps < 1:
        raise SpecError("layering needs h >= 1 and 0 < eps < 1")
    need = (1 - eps) / (2 * h) * degree_profile(D).min_out
    best = None
    for attempt in range(1, max_tries + 1):
        rng = np.random.default_rng([seed, attempt])
        cls = [int(c) for c in rng.integers(2 * h, size=D.n)]
        arcs = [(u, v) for u, v in D.arcs if cls[v] == (cls[u] + 1) % (2 * h)]
        out = Digraph.from_arcs(D.n, arcs, D.labels)
        got = degree_profile(out).min_out
        if best is None or got > best[0]:
            best = (got, out, tuple(cls), attempt)
        if got >= need:
            return SampleResult(out, tuple(cls), attempt, True)
    _, out, cls, _ = best
    return SampleResult(out, cls, max_tries, False)


def random_induced_subgraph(D: Digraph, m: int, eps, seed: int, max_tries: int = 2000) -> SampleResult:
    """Delete each vertex independently with probability 1 - m/n until exactly m
    remain and both minimum degrees are at least (1-eps)(m/n) of the original."""
    eps = _frac(eps)
    n = D.n
    if not (2 * m >= n and m <= n):
        raise SpecError(f"need n/2 <= m <= n, got m={m}, n={n}")
    prof = degree_profile(D)
    ratio = Fraction(m, n)
    need_out = (1 - eps) * ratio * prof.min_out
    need_in = (1 - eps) * ratio * prof.min_in
    keep_p = m / n
    best = None
    for attempt in range(1, max_tries + 1):
        if m == n:
            return SampleResult(D, tuple(range(n)), attempt, True)
        rng = np.random.default_rng([seed, attempt])
        keep = [v for v, r in enumerate(rng.random(n)) if r < keep_p]
        if len(keep) != m:
            continue
        sub = D.induced(keep)
        p = degree_profile(sub)
        ok = p.min_out >= need_out and p.min_in >= need_in
        if ok:
            return SampleResult(sub, tuple(keep), attempt, True)
        if best is None or p.min_semidegree > best[0]:
            best = (p.min_semidegree, sub, tuple(keep))
    if best is None:
        return SampleResult(D.induced([]), (), max_tries, False)
    return SampleResult(best[1], best[2], max_tries, False)
