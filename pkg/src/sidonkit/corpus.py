"""All 42 groups of order at most 16, as multiplication tables.

Each entry is built from an explicit law (cyclic products, semidirect
products, dicyclic groups, A_4) and then frozen into a TableGroup.
``certify_distinct`` checks the list is pairwise non-isomorphic, so
together with the known counts per order it is the complete list.
"""

from __future__ import annotations

from collections import Counter
from itertools import product
from pathlib import Path
from typing import Callable, Hashable, Sequence

from .groups import FiniteGroup, PermutationGroup, TableGroup, element_order, write_table

# number of isomorphism classes of groups of each order up to 16
GROUP_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2,
                11: 1, 12: 5, 13: 1, 14: 2, 15: 1, 16: 14}


def law_group(elements: Sequence[Hashable], mul: Callable, label: str) -> TableGroup:
    """Freeze a law on ``elements`` (identity first) into a TableGroup."""
    index = {e: i for i, e in enumerate(elements)}
    rows = [[index[mul(a, b)] for b in elements] for a in elements]
    return TableGroup(rows, label=label, names=[_name(e) for e in elements])


def _name(e) -> str:
    if isinstance(e, tuple):
        return "(" + ",".join(_name(x) for x in e) + ")"
    return str(e)


def abelian(*ns: int) -> TableGroup:
    elements = list(product(*(range(n) for n in ns)))
    mul = lambda a, b: tuple((x + y) % n for x, y, n in zip(a, b, ns))
    return law_group(elements, mul, "x".join(f"Z{n}" for n in ns))


def metacyclic(m: int, n: int, r: int, label: str) -> TableGroup:
    """Z_m semidirect Z_n, the generator of Z_n acting as a -> r a."""
    assert pow(r, n, m) == 1 % m
    elements = [(a, t) for t in range(n) for a in range(m)]

    def mul(x, y):
        return ((x[0] + pow(r, x[1], m) * y[0]) % m, (x[1] + y[1]) % n)

    return law_group(elements, mul, label)


def dihedral(n: int) -> TableGroup:
    return metacyclic(n, 2, n - 1, f"D{2 * n}")


def dicyclic(n: int, label: str) -> TableGroup:
    """Order 4n: <a, x | a^{2n}, x^2 = a^n, x a x^-1 = a^-1>; element (i, t) = a^i x^t."""
    m = 2 * n
    elements = [(i, t) for t in range(2) for i in range(m)]

    def mul(p, q):
        (i, s), (j, t) = p, q
        if s == 0:
            return ((i + j) % m, t)
        if t == 0:
            return ((i - j) % m, 1)
        return ((i - j + n) % m, 0)

    return law_group(elements, mul, label)


def z4z2_by_z2(action: Callable[[tuple[int, int]], tuple[int, int]], label: str) -> TableGroup:
    """(Z4 x Z2) semidirect Z2 for an involutive automorphism ``action``."""
    elements = [((x, y), t) for t in range(2) for x in range(4) for y in range(2)]

    def act(v, t):
        return action(v) if t else v

    def mul(p, q):
        (v, s), (w, t) = p, q
        w2 = act(w, s)
        return (((v[0] + w2[0]) % 4, (v[1] + w2[1]) % 2), (s + t) % 2)

    return law_group(elements, mul, label)


def direct(G: FiniteGroup, H: FiniteGroup, label: str) -> TableGroup:
    elements = [(a, b) for a in range(G.order) for b in range(H.order)]
    mul = lambda x, y: (G.mul(x[0], y[0]), H.mul(x[1], y[1]))
    return law_group(elements, mul, label)


def a4() -> TableGroup:
    P = PermutationGroup(4, alternating=True)
    return TableGroup(
        [[P.mul(a, b) for b in range(P.order)] for a in range(P.order)],
        label="A4",
        names=[P.render(a) for a in range(P.order)],
    )


def small_groups() -> list[TableGroup]:
    """The 42 groups of order <= 16, sorted by order."""
    D8, Q8, Z2 = dihedral(4), dicyclic(2, "Q8"), abelian(2)
    gs = [
        abelian(1), abelian(2), abelian(3),
        abelian(4), abelian(2, 2),
        abelian(5),
        abelian(6), dihedral(3),
        abelian(7),
        abelian(8), abelian(4, 2), abelian(2, 2, 2), D8, Q8,
        abelian(9), abelian(3, 3),
        abelian(10), dihedral(5),
        abelian(11),
        abelian(12), abelian(6, 2), a4(), dihedral(6), dicyclic(3, "Dic12"),
        abelian(13),
        abelian(14), dihedral(7),
        abelian(15),
        abelian(16), abelian(4, 4), abelian(8, 2), abelian(4, 2, 2), abelian(2, 2, 2, 2),
        dihedral(8), metacyclic(8, 2, 3, "SD16"), metacyclic(8, 2, 5, "M16"),
        dicyclic(4, "Q16"), metacyclic(4, 4, 3, "Z4:Z4"),
        z4z2_by_z2(lambda v: (v[0], (v[1] + v[0]) % 2), "(Z4xZ2):Z2"),
        z4z2_by_z2(lambda v: ((v[0] + 2 * v[1]) % 4, v[1]), "Pauli"),
        direct(D8, Z2, "D8xZ2"), direct(Q8, Z2, "Q8xZ2"),
    ]
    return sorted(gs, key=lambda G: G.order)


def invariants(G: FiniteGroup) -> tuple:
    """Isomorphism invariants: order, element-order census, center and commutator sizes."""
    n = G.order
    orders = Counter(element_order(G, a) for a in range(n))
    center = sum(1 for a in range(n) if all(G.mul(a, b) == G.mul(b, a) for b in range(n)))
    squares = len({G.mul(a, a) for a in range(n)})
    comm = {G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))) for a in range(n) for b in range(n)}
    return (n, tuple(sorted(orders.items())), center, squares, len(comm))


def _generators(G: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = {0}
    for a in sorted(range(G.order), key=lambda a: -element_order(G, a)):
        if a in span:
            continue
        gens.append(a)
        span = _closure(G, gens)
        if len(span) == G.order:
            break
    return gens


def _closure(G: FiniteGroup, gens: Sequence[int]) -> set[int]:
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    """Brute force: try every order-preserving image of a generating set of G."""
    if invariants(G) != invariants(H):
        return False
    gens = _generators(G)
    ordG = [element_order(G, g) for g in gens]
    by_order: dict[int, list[int]] = {}
    for b in range(H.order):
        by_order.setdefault(element_order(H, b), []).append(b)
    for images in product(*(by_order.get(o, []) for o in ordG)):
        phi = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for g, img in zip(gens, images):
                    y, z = G.mul(x, g), H.mul(phi[x], img)
                    if y in phi:
                        if phi[y] != z:
                            ok = False
                            break
                    else:
                        phi[y] = z
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if ok and len(set(phi.values())) == G.order:
            # phi is well defined on right multiplication by generators, hence a homomorphism
            if all(phi[G.mul(a, b)] == H.mul(phi[a], phi[b]) for a in range(G.order) for b in range(G.order)):
                return True
    return False


def certify_distinct(groups: Sequence[FiniteGroup]) -> bool:
    for i, G in enumerate(groups):
        for H in groups[i + 1 :]:
            if G.order == H.order and isomorphic(G, H):
                return False
    return True


def write_corpus(directory: str | Path, groups: Sequence[TableGroup] | None = None) -> list[Path]:
    """Write one table file per group; file names sort by order."""
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, G in enumerate(groups if groups is not None else small_groups()):
        safe = "".join(c if c.isalnum() else "_" for c in G.label)
        p = d / f"{G.order:03d}_{i:02d}_{safe}.tbl"
        write_table(G, p)
        paths.append(p)
    return paths
