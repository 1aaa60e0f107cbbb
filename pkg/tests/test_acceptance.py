"""The thirteen acceptance criteria, one test each.

Each test prints a single PASS/FAIL line (collected and repeated in the
terminal summary) and then asserts.
"""

import math
import random
import time
from fractions import Fraction
from itertools import combinations
from math import ceil

import pytest

from sidonkit.construct import (
    SquareMatrix01,
    anticommuting_base,
    cayley_matrix,
    class_recipe,
    ef_bound,
    hamilton_lift,
    hash_code_bound,
    hash_shift_family,
    naive_permanent,
    permanent_lift,
    probabilistic_sidon,
    ryser_permanent,
    sn_cross,
)
from sidonkit.digraph import (
    Digraph,
    best_eulerian_count,
    bidirected,
    bidirected_kmm,
    cayley_digraph,
    count_hamilton_cycles,
    degree_profile,
    dodecahedron,
    enumerate_eulerian_circuits,
    find_cll,
    glm,
    glm_hamilton_formula,
    graph_girth,
    is_fk_free,
    layered_subgraph,
    nonzero_type_walk,
    petersen,
    random_induced_subgraph,
    sigma_paths,
    transition_vectors,
    two_part_cycles,
)
from sidonkit.digraph.graph import Graph
from sidonkit.groups import build_group, conjugacy_classes, parse_element_set
from sidonkit.sidon import (
    check_sk,
    check_sk_permutations,
    check_sk_prime,
    max_sk,
    max_sk_prime,
    naive_max_sk,
    naive_max_sk_prime,
    sk_multiplicity,
    upper_bound_report,
)

RESULTS: list[str] = []


def record(n: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {n:2d}: {detail}"
    RESULTS.append(line)
    print(line)


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


def test_criterion_01_symmetric_cross():
    def run():
        problems = []
        f = math.factorial
        for n in (3, 4, 5):
            sizes = {
                (False, False): f(n - 1),
                (True, False): f(n),
                (False, True): f(n - 1) // 2,
                (True, True): f(n) // 2,
            }
            for (full, alt), size in sizes.items():
                ps = sn_cross(n, full, alt)
                g = ps.multiplicity()
                limit = (n if n % 2 else n - 1) if full else 1
                if len(ps) != size or (g != 1 if not full else g > limit):
                    problems.append((n, full, alt, len(ps), g))
        return problems

    problems, secs = timed(run)
    ok = not problems and secs < 60
    record(1, ok, f"sn_cross sizes and multiplicities for n=3,4,5 ({secs:.1f}s) {problems or ''}")
    assert ok


def test_criterion_02_class_recipe():
    def run():
        rows = []
        for spec in ("S:3", "S:4"):
            G = build_group(spec)
            for c in conjugacy_classes(G):
                a = c.members[0]
                ps = class_recipe(G, a)
                rows.append((spec, G.render(a), ps.claimed_g, sk_multiplicity(ps.group, ps.flattened(), 2)))
        return rows

    rows, secs = timed(run)
    upper = all(mult <= claim for *_, claim, mult in rows)
    exact = all(mult == claim for *_, claim, mult in rows)
    ok = exact and secs < 30
    detail = "; ".join(f"{s} {r}: claimed {c}, actual {m}" for s, r, c, m in rows)
    record(2, ok, f"class_recipe claimed_g == multiplicity (upper bound holds: {upper}) [{detail}]")
    assert upper, "orbit-stabiliser bound violated"
    assert exact, "claimed g = |G|/m is an upper bound, not the exact multiplicity"


def test_criterion_03_oracle_equivalence(corpus):
    def run():
        bad = []
        for G in corpus:
            for k in (2, 3):
                r = max_sk(G, k)
                if not r.exact or (r.value, r.witness.members) != naive_max_sk(G, k):
                    bad.append((G.label, k, "sk"))
                p = max_sk_prime(G, k)
                if not p.exact or (p.value, p.witness.members) != naive_max_sk_prime(G, k):
                    bad.append((G.label, k, "sk'"))
            if G.is_abelian and G.order > 1 and max_sk(G, 2).value != 1:
                bad.append((G.label, "M2 != 1"))
        if max_sk(build_group("S:3"), 2).value != 2:
            bad.append(("S:3", "M2 != 2"))
        return bad

    bad, secs = timed(run)
    ok = not bad and secs < 600
    record(3, ok, f"search == naive oracle on {len(corpus)} groups, k=2,3 ({secs:.1f}s) {bad or ''}")
    assert ok


def test_criterion_04_bound_consistency(corpus):
    bad = []
    for G in corpus:
        for k in (2, 3):
            rep = upper_bound_report(G, k)
            mk = max_sk(G, k).value
            mkp = max_sk_prime(G, k).value
            for e in rep.applicable("M_k"):
                if mk > e.value:
                    bad.append((G.label, k, e.name))
            for e in rep.applicable("M_k'"):
                if mkp > e.value:
                    bad.append((G.label, k, e.name))
            if G.order > 1 and not mk**k < G.order:
                bad.append((G.label, k, "strict"))
    record(4, not bad, f"M_k within every applicable bound on {len(corpus)} groups {bad or ''}")
    assert not bad


def test_criterion_05_os_groups():
    def run():
        out = []
        for p in (3, 5):
            G = build_group(f"os:{p},2")
            size = (p - 1) // 2
            r = max_sk(G, 2, target=size, exclude=(0,))
            A = r.witness
            D = cayley_digraph(G, A)
            prof = degree_profile(D)
            out.append(
                r.value == size
                and check_sk(G, A, 2).holds
                and is_fk_free(D, 2).free
                and (prof.min_out, prof.min_in, prof.max_out, prof.max_in) == (size,) * 4
            )
        return out

    out, secs = timed(run)
    ok = all(out) and secs < 60
    record(5, ok, f"os:3,2 and os:5,2 S_2 sets of size (p-1)/2, F_2-free Cayley digraphs ({secs:.1f}s)")
    assert ok


def test_criterion_06_permanents():
    def run():
        rng = random.Random(2024)
        agree = 0
        for _ in range(200):
            n = rng.randint(1, 7)
            M = SquareMatrix01.from_rows([[rng.randint(0, 1) for _ in range(n)] for _ in range(n)])
            agree += ryser_permanent(M) == naive_permanent(M)
        G = build_group("S:3")
        A = parse_element_set(G, "(1 2 3),(1 2)")
        assert check_sk(G, A, 2).holds
        M = cayley_matrix(G, A)
        lift = permanent_lift(G, A)
        per = ryser_permanent(M)
        return agree, len(lift) == per, per >= ef_bound(6, 2), check_sk_permutations(lift, 2).holds

    (agree, size_ok, ef_ok, sk_ok), secs = timed(run)
    ok = agree == 200 and size_ok and ef_ok and sk_ok and secs < 300
    record(6, ok, f"Ryser == naive on {agree}/200; lift size {size_ok}, EF bound {ef_ok}, S_2 in S_6 {sk_ok}")
    assert ok


def test_criterion_07_hamilton_lift():
    def run():
        g = dodecahedron()
        assert graph_girth(g) == 5
        sweep = all(check_sk_permutations(hamilton_lift(g, 2, s), 2).holds for s in range(100))
        return sweep, hamilton_lift(petersen(), 2, 0) == []

    (sweep, pet), secs = timed(run)
    ok = sweep and pet and secs < 300
    record(7, ok, f"dodecahedron 100 seeds pass S_2: {sweep}; Petersen empty: {pet} ({secs:.1f}s)")
    assert ok


def test_criterion_08_probabilistic():
    def run():
        bad = []
        Z = build_group("Z:101")
        B = anticommuting_base(5)
        for seed in range(20):
            r = probabilistic_sidon(Z, "second", seed=seed)
            target = ceil(r.k_star - r.profile.f(r.k_star))
            if not (check_sk_prime(Z, r.members, 2).holds and len(r.members) >= target):
                bad.append(("Z:101", seed))
            r = probabilistic_sidon(B.group, "first", base=B, seed=seed)
            target = ceil(r.k_star - r.profile.f(r.k_star))
            if not (check_sk(B.group, r.members, 2).holds and len(r.members) >= target):
                bad.append(("A:5", seed))
        return bad

    bad, secs = timed(run)
    ok = not bad and secs < 300
    record(8, ok, f"probabilistic outputs verified and >= ceil(k* - f(k*)) for 20 seeds each ({secs:.1f}s) {bad or ''}")
    assert ok


def test_criterion_09_glm():
    def run():
        bad = []
        for l, m in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)]:
            D = glm(l, m)
            p = degree_profile(D)
            if D.n != (2 * l - 2) * m * m or (p.min_out, p.min_in, p.max_out, p.max_in) != (m,) * 4:
                bad.append((l, m, "shape"))
            r = find_cll(D, l)
            if r.found or not r.exact:
                bad.append((l, m, "cll"))
        D = glm(3, 2)
        a, b = D.index_of(("w", 0, 2, 1)), D.index_of(("w", 1, 1, 1))
        if not find_cll(D.with_arcs([(a, b)]), 3).found:
            bad.append("adversarial arc")
        return bad

    bad, secs = timed(run)
    ok = not bad and secs < 600
    record(9, ok, f"glm shapes, C_ll-freeness and adversarial witness ({secs:.1f}s) {bad or ''}")
    assert ok


def test_criterion_10_counting():
    checks = {
        "glm(2,2)": count_hamilton_cycles(glm(2, 2)) == 4 == glm_hamilton_formula(2, 2),
        "glm(3,2)": count_hamilton_cycles(glm(3, 2)) == 64,
        "K22": best_eulerian_count(bidirected_kmm(2)) == 4 == len(enumerate_eulerian_circuits(bidirected_kmm(2))),
        "K33": best_eulerian_count(bidirected_kmm(3)) == 5184 == 3**4 * math.factorial(2) ** 6,
        "tv(2)": len(transition_vectors(2)[1]) == 4,
        "glm(2,3)": count_hamilton_cycles(glm(2, 3)) == 5184 == glm_hamilton_formula(2, 3),
    }
    ok = all(checks.values())
    record(10, ok, "Hamilton/Eulerian/transition counts " + ", ".join(f"{k}={'ok' if v else 'BAD'}" for k, v in checks.items()))
    assert ok


def test_criterion_11_layering_and_density():
    def run():
        bad = []
        K = bidirected(Graph.from_edges(8, list(combinations(range(8), 2))))
        inputs = [(K, 2), (glm(2, 2), 2), (bidirected(Graph.from_edges(12, [(i, (i + 1) % 12) for i in range(12)] + [(i, (i + 5) % 12) for i in range(12)])), 3)]
        for D, h in inputs:
            for seed in range(10):
                r = layered_subgraph(D, h, Fraction(1, 2), seed)
                if nonzero_type_walk(r.digraph, 2 * h - 1) is not None:
                    bad.append(("layer", D.n, h, seed))
        D = glm(2, 4)
        prof = degree_profile(D)
        for seed in range(100):
            r = random_induced_subgraph(D, 24, Fraction(1, 2), seed)
            q = degree_profile(r.digraph)
            need = Fraction(1, 2) * Fraction(24, 32)
            if not (r.success and r.digraph.n == 24 and q.min_out >= need * prof.min_out and q.min_in >= need * prof.min_in):
                bad.append(("induced", seed))
        return bad

    bad, secs = timed(run)
    ok = not bad and secs < 300
    record(11, ok, f"layered outputs have only type-0 short closed walks; induced subgraphs meet targets on 100 seeds ({secs:.1f}s) {bad or ''}")
    assert ok


def test_criterion_12_sigma():
    def run():
        fam = sigma_paths(10, 2)
        members = list(fam)
        bad = sum(1 for P, Q in combinations(members, 2) for c in two_part_cycles(P, Q, 4) if c.type != 0)
        return fam.size, len(members), bad

    (size, listed, bad), secs = timed(run)
    ok = size == listed == 32 == math.factorial(2) ** 5 and bad == 0 and secs < 120
    record(12, ok, f"|Sigma(10,2)| = {listed}, nonzero-type 4-cycles over all pairs: {bad}")
    assert ok


def test_criterion_13_hashing():
    def run():
        for t in range(3, 13):
            for v in range(3, t + 1):
                fam = hash_shift_family(t, v)
                cover = [sum(x in s for s in fam) for x in range(1, t)]
                if len(fam) != t - 1 or any(len(s) != v - 2 for s in fam) or set(cover) != {v - 2}:
                    return False
        return hash_code_bound(4, 3, 2, 6) == 96 and hash_code_bound(3, 3, 3, 4) == 27

    ok, secs = timed(run)
    ok = ok and secs < 10
    record(13, ok, "shift-family regularity for 3 <= v <= t <= 12; bound 96 at (4,3,2,6)")
    assert ok
