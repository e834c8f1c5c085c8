import random
from math import factorial, prod

import pytest

from spechtgram.determinant import a2_parity, orth_det, reduce_square_class
from spechtgram.hooks import dimension, is_odd
from spechtgram.oracle import (
    BudgetExceeded,
    bareiss_minors,
    column_stabilizer_order,
    determinant,
    gram_determinant,
    gram_matrix,
    is_positive_definite,
    p_valuation,
    polytabloid,
    standard_tableaux,
)
from spechtgram.partitions import P, parse_partition, partitions_of


def test_standard_tableaux_counts():
    assert len(standard_tableaux(P(1, 1))) == 1
    assert len(standard_tableaux(P(2, 1))) == factorial(3) // (3 * 1 * 1)
    assert len(standard_tableaux(P(3, 3, 1))) == dimension(P(3, 3, 1)) == 21


@pytest.mark.parametrize("n", range(1, 8))
def test_standard_tableaux_are_standard(n):
    for lam in partitions_of(n):
        tabs = standard_tableaux(lam)
        assert len(tabs) == dimension(lam)
        words = [[x for row in t for x in row] for t in tabs]
        assert words == sorted(words)
        for t in tabs:
            assert sorted(x for row in t for x in row) == list(range(1, n + 1))
            for row in t:
                assert list(row) == sorted(row)
            for i in range(1, len(t)):
                assert all(t[i - 1][j] < t[i][j] for j in range(len(t[i])))


def test_polytabloid_examples():
    (t,) = standard_tableaux(P(4))
    assert polytabloid(t) == {(0, 0, 0, 0): 1}
    (t,) = standard_tableaux(P(1, 1))
    # {1|2} - {2|1}
    assert polytabloid(t) == {(0, 1): 1, (1, 0): -1}


@pytest.mark.parametrize("lam", ["3,2", "2,2,1", "3,1,1", "2,1^4", "3,2,1"])
def test_polytabloid_support_is_column_stabilizer(lam):
    lam = parse_partition(lam)
    order = prod(factorial(c) for c in lam.conjugate().parts)
    assert column_stabilizer_order(lam) == order
    for t in standard_tableaux(lam):
        e = polytabloid(t)
        assert len(e) == order
        assert set(e.values()) <= {1, -1}


def test_gram_examples():
    assert gram_matrix(P(1, 1)) == [[2]]
    assert gram_matrix(P(5)) == [[1]]
    g = gram_matrix(P(2, 1))
    assert g == [list(r) for r in zip(*g)]
    assert is_positive_definite(g)
    assert determinant(g) == 3


def test_gram_determinant_examples():
    assert gram_determinant(P(1, 1)) == 2
    assert gram_determinant(P(6)) == 1
    assert reduce_square_class([gram_determinant(parse_partition("2,1^5"))], []).squarefree == 7


def test_budget_guard():
    with pytest.raises(BudgetExceeded, match="budget of 100"):
        gram_matrix(P(3, 3, 2), budget=100)


def test_determinant_against_fraction_elimination():
    from fractions import Fraction

    rnd = random.Random(7)
    for size in range(1, 7):
        m = [[rnd.randint(-9, 9) for _ in range(size)] for _ in range(size)]
        a = [[Fraction(x) for x in row] for row in m]
        d = Fraction(1)
        for k in range(size):
            piv = next((i for i in range(k, size) if a[i][k] != 0), None)
            if piv is None:
                d = Fraction(0)
                break
            if piv != k:
                a[k], a[piv] = a[piv], a[k]
                d = -d
            d *= a[k][k]
            for i in range(k + 1, size):
                f = a[i][k] / a[k][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        assert determinant(m) == d


def test_bareiss_minors_are_leading_minors():
    m = [[4, 2, 1], [2, 5, 3], [1, 3, 6]]
    assert bareiss_minors(m) == [4, 4 * 5 - 2 * 2, determinant(m)]


def test_p_valuation():
    assert p_valuation(2, 2) == 1
    assert p_valuation(1, 3) == 0
    assert p_valuation(12, 2) == 2
    with pytest.raises(ValueError):
        p_valuation(12, 4)


def test_basis_order_independence():
    lam = P(3, 2, 1)
    basis = standard_tableaux(lam)
    ref = determinant(gram_matrix(lam, basis=basis))
    rnd = random.Random(1)
    for _ in range(3):
        shuffled = basis[:]
        rnd.shuffle(shuffled)
        assert determinant(gram_matrix(lam, basis=shuffled)) == ref


@pytest.mark.parametrize("n", range(1, 7))
def test_oracle_agrees_with_odd_branch_formula(n):
    # the n <= 8 sweep is in the acceptance module
    for lam in partitions_of(n):
        g = gram_matrix(lam)
        assert is_positive_definite(g)
        d = determinant(g)
        assert p_valuation(d, 2) % 2 == a2_parity(lam)
        if not is_odd(lam):
            assert p_valuation(d, 2) % 2 == 0
            assert reduce_square_class([d], []) == orth_det(lam)
        f = dimension(lam)
        for p in (2, 3, 5):
            assert f - p_valuation(d, p) <= f
