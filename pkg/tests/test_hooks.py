from math import factorial

import pytest
from hypothesis import given

from conftest import partitions
from spechtgram.hooks import binary_weight, core, d_map, dimension, is_odd, odd_rank, two_power_r
from spechtgram.partitions import P, Partition, _beta, hook_table, parse_partition, part_of_beta, partitions_of


def test_dimension_examples():
    # hooks read off the hook diagrams of (2,1^5) and (3,3,1)
    assert dimension(parse_partition("2,1^5")) == factorial(7) // (7 * 5 * 4 * 3 * 2 * 1 * 1) == 6
    assert dimension(P(3, 3, 1)) == factorial(7) // (5 * 3 * 2 * 4 * 2 * 1 * 1) == 21
    assert dimension(Partition(())) == 1
    for n in range(1, 12):
        assert dimension(P(n)) == 1


@pytest.mark.parametrize("n", range(0, 11))
def test_plancherel(n):
    assert sum(dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_is_odd_examples():
    assert is_odd(P(3, 3, 1))
    assert not is_odd(parse_partition("2,1^5"))
    assert is_odd(Partition(()))


@pytest.mark.parametrize("n", range(0, 19))
def test_parity_agrees_with_dimension(n):
    for lam in partitions_of(n):
        assert is_odd(lam) == (dimension(lam) % 2 == 1), lam


def test_core_examples():
    res = core(P(7, 4, 3), 8)
    assert res.core == P(3, 2, 1)
    assert res.removed_hooks == (((1, 2), 8),)
    staircase = P(4, 3, 2, 1)
    assert all(h % 2 for h in hook_table(staircase).hooks.values())
    assert core(staircase, 2).core == staircase


@given(partitions(max_n=20))
def test_core_invariants(lam):
    for q in range(1, 8):
        res = core(lam, q)
        assert all(h % q for h in hook_table(res.core).hooks.values())
        assert lam.n == res.core.n + q * len(res.removed_hooks)
        if res.removed_hooks:
            # the first removal is read against the original diagram
            cell, h = res.removed_hooks[0]
            assert hook_table(lam).hooks[cell] == h == q


def _core_smallest_first(lam, q):
    beta = set(_beta(lam.parts, len(lam)))
    while True:
        eligible = [b for b in beta if b >= q and b - q not in beta]
        if not eligible:
            return beta
        b = min(eligible)
        beta.remove(b)
        beta.add(b - q)


@given(partitions(max_n=20))
def test_core_independent_of_removal_order(lam):
    for q in range(1, 6):
        assert part_of_beta(list(_core_smallest_first(lam, q))) == core(lam, q).core


def test_two_power_r():
    assert two_power_r(7) == 2
    assert two_power_r(8) == 3
    assert two_power_r(13) == 3
    assert two_power_r(1) == 0
    with pytest.raises(ValueError):
        two_power_r(0)


def test_d_map_examples():
    assert d_map(P(3, 3, 1)) == P(3)
    assert d_map(parse_partition("2,1^5")) == P(2, 1)
    assert d_map(P(6, 3, 2)) == P(2, 1)
    assert d_map(Partition(())) == Partition(())


def test_odd_rank_examples():
    assert odd_rank(Partition(())) == 0
    assert odd_rank(P(3, 3, 1)) == 3
    assert odd_rank(parse_partition("2,1^5")) == 1


@pytest.mark.parametrize("n", range(1, 19))
def test_odd_rank_binary_weight_and_d_parity(n):
    for lam in partitions_of(n):
        assert is_odd(lam) == (odd_rank(lam) == binary_weight(n))
        assert is_odd(d_map(lam)) == is_odd(lam)


@pytest.mark.parametrize("n", range(1, 19))
def test_unique_two_power_hook(n):
    q = 1 << two_power_r(n)
    for lam in partitions_of(n):
        beta = _beta(lam.parts, len(lam))
        assert sum(1 for b in beta if b >= q and b - q not in beta) <= 1
        assert sum(1 for h in hook_table(lam).hooks.values() if h == q) <= 1
