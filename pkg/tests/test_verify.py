import itertools
from collections import Counter

import pytest

from sidonkit.errors import CapExceeded, SpecError
from sidonkit.groups import ElementSet, build_group, parse_element_set
from sidonkit.sidon import (
    check_sk,
    check_sk_permutations,
    check_sk_prime,
    rewitness,
    sk_multiplicity,
)


def brute_multiplicity(G, A, k):
    counts = Counter()
    for w in itertools.product(A, repeat=k):
        x = 0
        for a in w:
            x = G.mul(x, a)
        counts[x] += 1
    return max(counts.values()) if counts else 0


def brute_sk_prime(G, A, k, cyclic=True):
    for w in itertools.product(A, repeat=2 * k):
        x = 0
        for i, c in enumerate(w):
            x = G.mul(x, G.inv(c) if i % 2 else c)
        if x:
            continue
        if all(w[i] != w[i + 1] for i in range(2 * k - 1)) and (not cyclic or w[-1] != w[0]):
            return False
    return True


def test_commuting_pair_violates():
    G = build_group("Z:5")
    r = check_sk(G, ElementSet.of(G, [0, 1]), 2)
    assert not r.holds
    assert set(r.witness) == {(0, 1), (1, 0)}
    assert rewitness(G, r)


def test_s3_pair_is_s2():
    G = build_group("S:3")
    r = check_sk(G, parse_element_set(G, "(1 2 3),(1 2)"), 2)
    assert r.holds and r.multiplicity == 1 and r.witness is None


def test_degenerate_sets():
    G = build_group("S:4")
    for k in (2, 3, 5):
        r = check_sk(G, ElementSet.of(G, [7]), k)
        assert r.holds and r.multiplicity == 1
    r = check_sk(G, ElementSet.of(G, []), 2)
    assert r.holds and r.multiplicity == 0
    assert sk_multiplicity(G, ElementSet.of(G, []), 3) == 0
    assert check_sk_prime(G, ElementSet.of(G, [3]), 2).holds
    assert check_sk_prime(G, ElementSet.of(G, []), 3).holds


def test_multiplicity_of_whole_z4():
    G = build_group("Z:4")
    assert sk_multiplicity(G, ElementSet.of(G, range(4)), 2) == 4


def test_sk_prime_examples():
    Z4 = build_group("Z:4")
    assert check_sk_prime(Z4, ElementSet.of(Z4, [0, 1]), 2).holds
    V = build_group("prod(Z:2,Z:2)")
    r = check_sk_prime(V, parse_element_set(V, "[0; 0],[1; 0]"), 2)
    assert not r.holds and rewitness(V, r)


def test_cyclic_flag_agrees_with_brute_force():
    for spec in ("prod(Z:2,Z:2)", "Z:6", "S:3"):
        G = build_group(spec)
        for A in itertools.combinations(range(G.order), 3):
            S = ElementSet.of(G, A)
            for k in (2, 3):
                for cyclic in (True, False):
                    r = check_sk_prime(G, S, k, cyclic=cyclic)
                    assert r.holds == brute_sk_prime(G, A, k, cyclic)
                    assert rewitness(G, r)
                # every cyclic violation is also a linear one
                if check_sk_prime(G, S, k, cyclic=False).holds:
                    assert check_sk_prime(G, S, k).holds


def test_bad_k():
    G = build_group("Z:3")
    with pytest.raises(SpecError):
        check_sk(G, ElementSet.of(G, [1]), 1)


def test_work_cap():
    G = build_group("S:5")
    A = ElementSet.of(G, range(20))
    with pytest.raises(CapExceeded):
        check_sk(G, A, 4, max_words=1000)


def test_env_budget(monkeypatch):
    monkeypatch.setenv("SIDON_MAX_WORDS", "10")
    G = build_group("S:4")
    with pytest.raises(CapExceeded):
        check_sk(G, ElementSet.of(G, range(8)), 3)


@pytest.mark.parametrize("spec", ["S:3", "S:4", "Z:6", "prod(Z:2,S:3)", "A:4"])
def test_against_brute_force(spec):
    import random

    G = build_group(spec)
    rng = random.Random(spec)
    for _ in range(25):
        size = rng.randint(0, min(5, G.order))
        A = sorted(rng.sample(range(G.order), size))
        S = ElementSet.of(G, A)
        for k in (2, 3):
            r = check_sk(G, S, k)
            assert r.multiplicity == brute_multiplicity(G, A, k)
            assert r.holds == (r.multiplicity <= 1)
            assert rewitness(G, r)
            if size <= 4:
                p = check_sk_prime(G, S, k)
                assert p.holds == brute_sk_prime(G, A, k)
                assert rewitness(G, p)


def test_permutation_words():
    # (1 2 3) and (1 2) in one-line notation on {1,2,3}
    assert check_sk_permutations([(2, 3, 1), (2, 1, 3)], 2).holds
    assert not check_sk_permutations([(2, 3, 1), (3, 1, 2)], 2).holds
