import pytest
from hypothesis import given, strategies as st

from colorpart.partitions import (
    conjugate,
    enumerate_partitions,
    generalized_pentagonal,
    in_D,
    in_D0,
    in_P,
    iter_partitions,
    level_set,
    partition_count,
    pentagonal_alternating_sum,
    pentagonal_involution,
)
from oracles import brute_partitions


def test_predicates():
    assert in_P(()) and in_D(()) and in_D0(())
    assert in_D0((3, 1, 0)) and not in_D((3, 1, 0))
    assert not in_D0((2, 0, 0))
    assert in_P((2, 2, 1)) and not in_D((2, 2, 1))
    assert not in_P((1, 2))


def test_conjugate():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((3, 0)) == (1, 1, 1)


@pytest.mark.parametrize("n, expected", [(-3, 0), (0, 1), (1, 1), (7, 15), (10, 42), (100, 190569292)])
def test_partition_count_values(n, expected):
    assert partition_count(n) == expected


def test_partition_count_matches_enumeration():
    for n in range(0, 61):
        assert partition_count(n) == len(enumerate_partitions(n))
    for n in range(0, 16):
        assert set(enumerate_partitions(n)) == brute_partitions(n)


@pytest.mark.parametrize("f, expected", [(0, 0), (1, 1), (-1, 2), (-2, 7), (2, 5)])
def test_generalized_pentagonal(f, expected):
    assert generalized_pentagonal(f) == expected


def test_generalized_pentagonal_injective():
    values = [generalized_pentagonal(f) for f in range(-100, 101)]
    assert len(set(values)) == len(values)


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 0), (12, 0)])
def test_alternating_sum_examples(n, expected):
    assert pentagonal_alternating_sum(n) == expected


def test_involution_n1():
    assert pentagonal_involution(1, (1,), 0) == ((), 1)
    assert pentagonal_involution(1, (), 1) == ((1,), 0)


def test_involution_n2_matching():
    level = level_set(2)
    even = [x for x in level if x[1] % 2 == 0]
    odd = [x for x in level if x[1] % 2]
    assert len(level) == 4 and len(even) == len(odd) == 2
    images = {pentagonal_involution(2, mu, f) for mu, f in even}
    assert images == set(odd)


@pytest.mark.parametrize("n", range(1, 26))
def test_involution_level_sets(n):
    level = level_set(n)
    assert len(level) == len(set(level))
    for mu, f in level:
        nu, g = pentagonal_involution(n, mu, f)
        assert in_P(nu)
        assert sum(nu) + generalized_pentagonal(g) == n
        assert (g - f) % 2 == 1
        assert pentagonal_involution(n, nu, g) == (mu, f)


def test_involution_rejects_bad_input():
    with pytest.raises(ValueError):
        pentagonal_involution(0, (), 0)
    with pytest.raises(ValueError):
        pentagonal_involution(3, (2,), 0)
    with pytest.raises(ValueError):
        pentagonal_involution(3, (1, 2), 0)


def test_enumerate_examples():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(4, "distinct") == [(4,), (3, 1)]
    assert enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert enumerate_partitions(4, "multiset", {1: 2, 2: 1, 3: 1}) == [(3, 1), (2, 1, 1)]
    with pytest.raises(ValueError):
        enumerate_partitions(-1)


def test_enumerate_ordering_and_lazy_agree():
    for n in range(0, 20):
        parts = enumerate_partitions(n)
        assert parts == sorted(parts, reverse=True)
        assert parts == list(iter_partitions(n))
        distinct = enumerate_partitions(n, "distinct")
        assert distinct == [p for p in parts if in_D(p)]


@given(st.lists(st.integers(min_value=1, max_value=12), max_size=10))
def test_conjugate_is_involution(parts):
    mu = tuple(sorted(parts, reverse=True))
    assert conjugate(conjugate(mu)) == mu
    assert sum(conjugate(mu)) == sum(mu)
