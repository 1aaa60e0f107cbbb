"""Finite groups on dense element indices, and the subsets the constructions use.

Every group has elements ``0..order-1`` with the identity at index 0.  Groups
are built from a spec string::

    S:<n> | A:<n> | Z:<n> | prod(<spec>,<spec>) | table:<path> | os:<p>,<k>

Permutation groups store their element list (lexicographic one-line order)
and multiply by composing images, so no multiplication table is needed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

from . import perm
from .errors import CapExceeded, SpecError
from .gf import GF, is_prime

DEFAULT_MAX_ORDER = 20160
TABLE_LIMIT = 1024  # cache a full Cayley table only up to this order


class FiniteGroup:
    """A finite group on indices ``0..order-1`` with identity 0."""

    order: int
    label: str
    identity: int = 0

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def _inv(self, a: int) -> int:
        for b in range(self.order):
            if self.mul(a, b) == 0:
                return b
        raise AssertionError(f"{a} has no inverse in {self.label}")

    def inv(self, a: int) -> int:
        return self.inverses[a]

    @cached_property
    def inverses(self) -> list[int]:
        return [self._inv(a) for a in range(self.order)]

    def render(self, a: int) -> str:
        return str(a)

    def parse_element(self, text: str) -> int:
        s = text.strip()
        if s.startswith("#"):
            return self.check(int(s[1:]))
        try:
            return self.check(int(s))
        except ValueError as exc:
            raise SpecError(f"cannot parse element {text!r} of {self.label}") from exc

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise SpecError(f"element index {a!r} outside 0..{self.order - 1} of {self.label}")
        return a

    def elements(self) -> range:
        return range(self.order)

    @cached_property
    def table(self) -> list[list[int]] | None:
        """Full Cayley table (row a, column b = a*b), or None above TABLE_LIMIT."""
        if self.order > TABLE_LIMIT:
            return None
        return [[self.mul(a, b) for b in range(self.order)] for a in range(self.order)]

    @cached_property
    def is_abelian(self) -> bool:
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.label} order={self.order}>"


class CyclicGroup(FiniteGroup):
    def __init__(self, n: int):
        self.n = n
        self.order = n
        self.label = f"Z:{n}"

    def mul(self, a: int, b: int) -> int:
        return (a + b) % self.n

    def _inv(self, a: int) -> int:
        return (-a) % self.n


class PermutationGroup(FiniteGroup):
    """S_n or A_n; element i is the i-th (even) permutation in lexicographic order."""

    def __init__(self, n: int, alternating: bool = False):
        self.n = n
        self.alternating = alternating
        self.label = f"{'A' if alternating else 'S'}:{n}"
        self.perms: list[perm.Permutation] = list(perm.all_permutations(n, alternating))
        self.index = {p: i for i, p in enumerate(self.perms)}
        self.order = len(self.perms)

    def mul(self, a: int, b: int) -> int:
        pa, pb = self.perms[a], self.perms[b]
        return self.index[tuple(pa[x - 1] for x in pb)]

    def _inv(self, a: int) -> int:
        return self.index[perm.inverse(self.perms[a])]

    def render(self, a: int) -> str:
        return perm.to_cycle_string(self.perms[a])

    def parse_element(self, text: str) -> int:
        s = text.strip()
        if s.startswith("#"):
            return super().parse_element(s)
        p = perm.parse(s, self.n)
        if p not in self.index:
            raise SpecError(f"{text!r} is odd, not in {self.label}")
        return self.index[p]

    def element_of(self, p: Sequence[int]) -> int:
        try:
            return self.index[tuple(p)]
        except KeyError as exc:
            raise SpecError(f"{p!r} is not an element of {self.label}") from exc


class ProductGroup(FiniteGroup):
    """Direct product; element (a, b) has index ``a * |right| + b``."""

    def __init__(self, left: FiniteGroup, right: FiniteGroup):
        self.left = left
        self.right = right
        self.order = left.order * right.order
        self.label = f"prod({left.label},{right.label})"

    def split(self, x: int) -> tuple[int, int]:
        return divmod(x, self.right.order)

    def pair(self, a: int, b: int) -> int:
        return a * self.right.order + b

    def mul(self, x: int, y: int) -> int:
        a1, b1 = divmod(x, self.right.order)
        a2, b2 = divmod(y, self.right.order)
        lt, rt = self.left.table, self.right.table
        a = lt[a1][a2] if lt is not None else self.left.mul(a1, a2)
        b = rt[b1][b2] if rt is not None else self.right.mul(b1, b2)
        return a * self.right.order + b

    def _inv(self, x: int) -> int:
        a, b = self.split(x)
        return self.pair(self.left.inv(a), self.right.inv(b))

    def render(self, x: int) -> str:
        a, b = self.split(x)
        return f"[{self.left.render(a)}; {self.right.render(b)}]"

    def parse_element(self, text: str) -> int:
        s = text.strip()
        if s.startswith("#"):
            return super().parse_element(s)
        if not (s.startswith("[") and s.endswith("]")):
            raise SpecError(f"product elements are written [left; right], got {text!r}")
        body = s[1:-1]
        depth = 0
        for i, ch in enumerate(body):
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            elif ch == ";" and depth == 0:
                return self.pair(
                    self.left.parse_element(body[:i]), self.right.parse_element(body[i + 1 :])
                )
        raise SpecError(f"product elements are written [left; right], got {text!r}")


class TableGroup(FiniteGroup):
    """A group given by an explicit multiplication table."""

    def __init__(self, rows: Sequence[Sequence[int]], label: str = "table", names: Sequence[str] | None = None):
        self.order = len(rows)
        self.rows = [list(r) for r in rows]
        self.label = label
        self.names = list(names) if names is not None else None
        self._validate()

    def _validate(self) -> None:
        n = self.order
        if n < 1:
            raise SpecError("empty multiplication table")
        full = list(range(n))
        for a, row in enumerate(self.rows):
            if len(row) != n:
                raise SpecError(f"row {a} has {len(row)} entries, expected {n}")
            if sorted(row) != full:
                raise SpecError(f"row {a} is not a permutation of 0..{n - 1}")
        for b in range(n):
            if sorted(self.rows[a][b] for a in range(n)) != full:
                raise SpecError(f"column {b} is not a permutation of 0..{n - 1}")
        if self.rows[0] != full or [r[0] for r in self.rows] != full:
            raise SpecError("index 0 must be the identity")
        if not check_associative(self):
            raise SpecError(f"table {self.label} is not associative")

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    @cached_property
    def table(self) -> list[list[int]]:
        return self.rows

    def render(self, a: int) -> str:
        return self.names[a] if self.names else str(a)


class OSGroup(FiniteGroup):
    """GF(p^k)^* extended by the Frobenius x -> x^p, order (p^k - 1) k.

    Element (e, i) stands for g^e * F^i with g primitive and F the Frobenius,
    multiplied as (e1, i)(e2, j) = (e1 + e2 p^i, i + j).  Index = e * k + i.
    """

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise SpecError(f"os:{p},{k}: {p} is not prime")
        if k < 2 or (p - 1) % k:
            raise SpecError(f"os:{p},{k}: need k >= 2 dividing p - 1")
        self.p = p
        self.k = k
        self.field = GF(p, k)
        self.cyc = p**k - 1
        self.order = self.cyc * k
        self.label = f"os:{p},{k}"
        self._pow = [pow(p, i, self.cyc) for i in range(k)]

    def mul(self, x: int, y: int) -> int:
        e1, i = divmod(x, self.k)
        e2, j = divmod(y, self.k)
        return ((e1 + e2 * self._pow[i]) % self.cyc) * self.k + (i + j) % self.k

    def render(self, x: int) -> str:
        e, i = divmod(x, self.k)
        poly = self.field.render(self.field.exp_table[e])
        return f"g^{e}*F^{i} [{poly}]"

    def parse_element(self, text: str) -> int:
        s = text.strip()
        if s.startswith("#") or s.isdigit():
            return super().parse_element(s)
        try:
            gpart, fpart = s.split("[")[0].strip().split("*")
            e = int(gpart.strip().removeprefix("g^"))
            i = int(fpart.strip().removeprefix("F^"))
        except ValueError as exc:
            raise SpecError(f"os elements are written g^e*F^i, got {text!r}") from exc
        return self.check((e % self.cyc) * self.k + i % self.k)


def check_associative(G: FiniteGroup, exhaustive_limit: int = 256, samples: int = 20000, seed: int = 0) -> bool:
    """Associativity, exhaustively up to ``exhaustive_limit``, else on random triples."""
    n = G.order
    if n <= exhaustive_limit:
        mul = G.mul
        rows = [[mul(a, b) for b in range(n)] for a in range(n)]
        return all(
            rows[rows[a][b]][c] == rows[a][rows[b][c]]
            for a in range(n)
            for b in range(n)
            for c in range(n)
        )
    rng = random.Random(seed)
    for _ in range(samples):
        a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)):
            return False
    return True


def verify_group_axioms(G: FiniteGroup, exhaustive_limit: int = 256) -> bool:
    """Identity, inverse and associativity laws."""
    for a in range(G.order):
        if G.mul(a, 0) != a or G.mul(0, a) != a:
            return False
        b = G.inv(a)
        if G.mul(a, b) != 0 or G.mul(b, a) != 0:
            return False
    return check_associative(G, exhaustive_limit)


# ---------------------------------------------------------------- spec parsing


def _spec_order(node: tuple) -> int:
    kind = node[0]
    if kind == "S":
        return math.factorial(node[1])
    if kind == "A":
        return max(1, math.factorial(node[1]) // 2)
    if kind == "Z":
        return node[1]
    if kind == "os":
        p, k = node[1], node[2]
        return (p**k - 1) * k
    if kind == "prod":
        return _spec_order(node[1]) * _spec_order(node[2])
    return 0  # table: order known only after reading


def _parse(s: str, pos: int) -> tuple[tuple, int]:
    def number(p: int) -> tuple[int, int]:
        q = p
        while q < len(s) and s[q].isdigit():
            q += 1
        if q == p:
            raise SpecError(f"expected a number at position {p} in {s!r}")
        return int(s[p:q]), q

    for prefix in ("S:", "A:", "Z:"):
        if s.startswith(prefix, pos):
            n, q = number(pos + 2)
            if n < 1:
                raise SpecError(f"{prefix}{n}: need n >= 1")
            return (prefix[0], n), q
    if s.startswith("os:", pos):
        p, q = number(pos + 3)
        if q >= len(s) or s[q] != ",":
            raise SpecError(f"os spec needs the form os:<p>,<k> in {s!r}")
        k, q = number(q + 1)
        if not is_prime(p):
            raise SpecError(f"os:{p},{k}: {p} is not prime")
        if k < 2 or (p - 1) % k:
            raise SpecError(f"os:{p},{k}: need k >= 2 dividing p - 1")
        return ("os", p, k), q
    if s.startswith("prod(", pos):
        left, q = _parse(s, pos + 5)
        if q >= len(s) or s[q] != ",":
            raise SpecError(f"expected ',' in prod at position {q} of {s!r}")
        right, q = _parse(s, q + 1)
        if q >= len(s) or s[q] != ")":
            raise SpecError(f"expected ')' closing prod at position {q} of {s!r}")
        return ("prod", left, right), q + 1
    if s.startswith("table:", pos):
        q = pos + 6
        depth = 0
        while q < len(s):
            if s[q] == "(":
                depth += 1
            elif s[q] in "),":
                if depth == 0:
                    break
                if s[q] == ")":
                    depth -= 1
            q += 1
        path = s[pos + 6 : q]
        if not path:
            raise SpecError("table spec needs a path")
        return ("table", path), q
    raise SpecError(f"cannot parse group spec at position {pos}: {s[pos:]!r}")


def parse_spec(text: str) -> tuple:
    """Parse a spec string into a nested tuple; raises SpecError."""
    s = text.strip().replace(" ", "")
    node, pos = _parse(s, 0)
    if pos != len(s):
        raise SpecError(f"trailing text in group spec: {s[pos:]!r}")
    return node


def read_table(path: str | Path, label: str | None = None) -> TableGroup:
    """Read the table format: first line the order n, then n rows of n indices."""
    p = Path(path)
    try:
        lines = [ln.split() for ln in p.read_text().splitlines() if ln.strip()]
    except OSError as exc:
        raise SpecError(f"cannot read table {path}: {exc}") from exc
    try:
        n = int(lines[0][0])
        rows = [[int(x) for x in ln] for ln in lines[1 : n + 1]]
    except (IndexError, ValueError) as exc:
        raise SpecError(f"malformed table file {path}") from exc
    if len(rows) != n:
        raise SpecError(f"table {path} declares order {n} but has {len(rows)} rows")
    return TableGroup(rows, label=label or f"table:{path}")


def write_table(G: FiniteGroup, path: str | Path) -> None:
    lines = [str(G.order)]
    for a in range(G.order):
        lines.append(" ".join(str(G.mul(a, b)) for b in range(G.order)))
    Path(path).write_text("\n".join(lines) + "\n")


def _build(node: tuple, max_order: int) -> FiniteGroup:
    kind = node[0]
    if kind == "S":
        return PermutationGroup(node[1])
    if kind == "A":
        return PermutationGroup(node[1], alternating=True)
    if kind == "Z":
        return CyclicGroup(node[1])
    if kind == "os":
        return OSGroup(node[1], node[2])
    if kind == "prod":
        G = ProductGroup(_build(node[1], max_order), _build(node[2], max_order))
        if G.order > max_order:
            raise CapExceeded(f"{G.label} has order {G.order} > cap {max_order}")
        return G
    G = read_table(node[1])
    if G.order > max_order:
        raise CapExceeded(f"{G.label} has order {G.order} > cap {max_order}")
    return G


def build_group(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Construct the group described by ``spec``; orders above ``max_order`` are refused."""
    node = parse_spec(spec)
    order = _spec_order(node)
    if order > max_order:
        raise CapExceeded(f"{spec} has order {order} > cap {max_order}")
    return _build(node, max_order)


# ---------------------------------------------------------------- element sets


@dataclass(frozen=True, eq=False)
class ElementSet:
    """Sorted, duplicate-free subset of a group's element indices."""

    group: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        members = tuple(sorted(set(self.members)))
        for a in members:
            self.group.check(a)
        object.__setattr__(self, "members", members)

    @classmethod
    def of(cls, group: FiniteGroup, members: Iterable[int]) -> "ElementSet":
        return cls(group, tuple(members))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, a: object) -> bool:
        return a in set(self.members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.group.label == other.group.label and self.members == other.members

    def __hash__(self) -> int:
        return hash((self.group.label, self.members))

    def render(self) -> list[str]:
        return [self.group.render(a) for a in self.members]

    def __repr__(self) -> str:
        return f"ElementSet({self.group.label}, {self.members})"


def parse_element_set(G: FiniteGroup, text: str) -> ElementSet:
    """Split a comma-separated literal at top level (commas inside brackets are kept)."""
    items, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur))
    return ElementSet.of(G, [G.parse_element(t) for t in items if t.strip()])


# ---------------------------------------------------------------- operations


def group_multiply(G: FiniteGroup, a: int, b: int) -> int:
    return G.mul(G.check(a), G.check(b))


def group_inverse(G: FiniteGroup, a: int) -> int:
    return G.inv(G.check(a))


def element_order(G: FiniteGroup, a: int) -> int:
    G.check(a)
    t, x = 1, a
    while x != 0:
        x = G.mul(x, a)
        t += 1
    return t


def count_involutions(G: FiniteGroup) -> int:
    return sum(1 for a in range(1, G.order) if G.mul(a, a) == 0)


def conjugacy_class(G: FiniteGroup, a: int) -> ElementSet:
    G.check(a)
    return ElementSet.of(G, {G.mul(G.mul(g, a), G.inv(g)) for g in range(G.order)})


def conjugacy_classes(G: FiniteGroup) -> list[ElementSet]:
    """All classes, ordered by their least member."""
    seen: set[int] = set()
    out = []
    for a in range(G.order):
        if a not in seen:
            cls = conjugacy_class(G, a)
            seen.update(cls.members)
            out.append(cls)
    return out


def point_stabilizer_subset(n: int, alternating: bool, point: int, group: PermutationGroup | None = None) -> ElementSet:
    """All (even) permutations of 1..n fixing ``point``, as a subset of S:n or A:n."""
    if not 1 <= point <= n:
        raise SpecError(f"point {point} outside 1..{n}")
    if alternating and n < 2:
        raise SpecError("alternating stabilizer needs n >= 2")
    G = group if group is not None else PermutationGroup(n, alternating)
    if G.n != n or G.alternating != alternating:
        raise SpecError(f"group {G.label} does not match n={n}, alternating={alternating}")
    return ElementSet.of(G, (i for i, p in enumerate(G.perms) if p[point - 1] == point))


def find_os_parameters(n: int, k: int) -> tuple[int, int] | None:
    """Largest prime p with k | p-1 and (p^k - 1) k <= n, with that m."""
    if k < 2 or n < 2 * k:
        raise SpecError(f"need k >= 2 and n >= 2k, got n={n}, k={k}")
    p = 2
    while (p**k - 1) * k <= n:
        p += 1
    for q in range(p, 1, -1):
        m = (q**k - 1) * k
        if m <= n and is_prime(q) and (q - 1) % k == 0:
            return q, m
    return None


def is_subgroup(G: FiniteGroup, members: Iterable[int]) -> bool:
    s = set(members)
    if 0 not in s:
        return False
    return all(G.mul(a, G.inv(b)) in s for a in s for b in s)


def is_normal(G: FiniteGroup, members: Iterable[int]) -> bool:
    s = set(members)
    return all(G.mul(G.mul(g, h), G.inv(g)) in s for g in range(G.order) for h in s)


def abelian_subgroups(G: FiniteGroup, max_order: int = 64) -> list[frozenset[int]]:
    """Every abelian subgroup, by closing under adjoining commuting elements."""
    if G.order > max_order:
        raise CapExceeded(f"abelian subgroup enumeration capped at order {max_order}")
    mul = G.mul
    comm = [[mul(a, b) == mul(b, a) for b in range(G.order)] for a in range(G.order)]
    trivial = frozenset([0])
    found = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            for g in range(G.order):
                if g in H or not all(comm[g][h] for h in H):
                    continue
                # H is abelian and g centralizes it, so <H, g> = H <g>
                powers = [0]
                x = g
                while x != 0:
                    powers.append(x)
                    x = mul(x, g)
                K = frozenset(mul(h, p) for h in H for p in powers)
                if K not in found:
                    found.add(K)
                    nxt.append(K)
        frontier = nxt
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def render_permutation(p: Sequence[int]) -> str:
    return perm.to_cycle_string(p)
