import random
from fractions import Fraction

import pytest

from sidonkit.construct import (
    SquareMatrix01,
    cayley_matrix,
    ef_bound,
    naive_permanent,
    permanent_lift,
    ryser_permanent,
)
from sidonkit.errors import CapExceeded
from sidonkit.groups import ElementSet, build_group, parse_element_set
from sidonkit.sidon import check_sk, check_sk_permutations, max_sk


def test_small_permanents():
    for n in range(1, 6):
        I = SquareMatrix01.from_rows([[int(i == j) for j in range(n)] for i in range(n)])
        assert ryser_permanent(I) == 1
    assert ryser_permanent(SquareMatrix01.from_rows([[1] * 3] * 3)) == 6
    assert ryser_permanent(SquareMatrix01.from_rows([[1, 1], [1, 0]])) == 1
    assert ryser_permanent(SquareMatrix01.from_rows([[0, 0], [1, 1]])) == 0


def test_ryser_vs_naive():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 7)
        M = SquareMatrix01.from_rows([[rng.randint(0, 1) for _ in range(n)] for _ in range(n)])
        assert ryser_permanent(M) == naive_permanent(M)


def test_ryser_cap():
    with pytest.raises(CapExceeded):
        ryser_permanent(SquareMatrix01.from_rows([[1] * 31] * 31))


def test_row_sums():
    M = SquareMatrix01.from_rows([[1, 0, 1], [0, 0, 1], [1, 1, 1]])
    assert M.row_sums() == [2, 1, 3]
    assert M.col_sums() == [2, 1, 3]


def test_ef_bound():
    assert ef_bound(3, 3) == 6
    assert ef_bound(6, 2) == Fraction(64 * 720, 46656)
    assert ef_bound(1, 1) == 1


def test_lift_cyclic_singleton():
    G = build_group("Z:3")
    assert permanent_lift(G, ElementSet.of(G, [1])) == [(2, 3, 1)]
    assert permanent_lift(G, ElementSet.of(G, [])) == []


def test_lift_s3():
    G = build_group("S:3")
    A = parse_element_set(G, "(1 2 3),(1 2)")
    M = cayley_matrix(G, A)
    assert M.row_sums() == [2] * 6 == M.col_sums()
    lift = permanent_lift(G, A)
    assert len(lift) == ryser_permanent(M) == 8
    assert ryser_permanent(M) >= ef_bound(6, 2)
    assert check_sk_permutations(lift, 2).holds


@pytest.mark.parametrize("spec", ["S:3", "Z:4", "Z:6", "prod(Z:2,Z:4)", "Z:8"])
@pytest.mark.parametrize("k", [2, 3])
def test_lift_preserves_sk(spec, k):
    G = build_group(spec)
    A = max_sk(G, k).witness
    lift = permanent_lift(G, A)
    assert len(lift) == ryser_permanent(cayley_matrix(G, A))
    assert check_sk(G, A, k).holds
    assert check_sk_permutations(lift, k).holds
