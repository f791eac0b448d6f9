from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from tokenspectra.combinatorics import (
    binomial, enumerate_subsets, rank_colex, rank_rows, subset_array, symmetric_difference,
    unrank_colex,
)
from tokenspectra.errors import ValidationError


def colex_bruteforce(n, k):
    return sorted(combinations(range(1, n + 1), k), key=lambda s: s[::-1])


def test_binomial_values():
    assert binomial(6, 2) == 15
    assert binomial(4, 2) - binomial(4, 1) == 2
    assert binomial(10, 5) == 252
    assert binomial(10, 3) == binomial(10, 7)
    assert binomial(5, -1) == 0 and binomial(5, 6) == 0
    assert binomial(0, 0) == 1


def test_binomial_is_exact_for_large_arguments():
    assert binomial(200, 100) == 90548514656103281165404177077484163874504589675413336841320
    assert isinstance(binomial(200, 100), int)


@pytest.mark.parametrize("n", range(0, 12))
def test_pascal(n):
    for k in range(1, n + 1):
        assert binomial(n + 1, k) == binomial(n, k) + binomial(n, k - 1)


def test_rank_examples():
    assert [rank_colex(s) for s in [(1, 2), (1, 3), (2, 3)]] == [0, 1, 2]
    assert rank_colex((1, 2, 3)) == 0
    assert rank_colex((), 4) == 0


def test_unrank_examples():
    assert unrank_colex(3, 2, 1) == (1, 3)
    assert unrank_colex(7, 4, 0) == (1, 2, 3, 4)
    assert unrank_colex(5, 2, 9) == colex_bruteforce(5, 2)[9] == (4, 5)


@pytest.mark.parametrize("n", range(0, 11))
def test_round_trip_and_enumeration_order(n):
    for k in range(n + 1):
        subs = enumerate_subsets(n, k)
        assert subs == colex_bruteforce(n, k)
        assert [rank_colex(s, n) for s in subs] == list(range(binomial(n, k)))
        assert [unrank_colex(n, k, i) for i in range(len(subs))] == subs


def test_enumerate_edge_cases():
    assert enumerate_subsets(3, 2) == [(1, 2), (1, 3), (2, 3)]
    assert enumerate_subsets(4, 0) == [()]
    assert len(enumerate_subsets(8, 4)) == 70
    with pytest.raises(ValidationError):
        enumerate_subsets(3, 4)


def test_invalid_subsets_rejected():
    with pytest.raises(ValidationError):
        rank_colex((2, 2), 4)
    with pytest.raises(ValidationError):
        rank_colex((3, 1), 4)
    with pytest.raises(ValidationError):
        rank_colex((1, 5), 4)
    with pytest.raises(ValidationError):
        unrank_colex(4, 2, 6)
    with pytest.raises(ValidationError):
        unrank_colex(4, 2, -1)


def test_symmetric_difference():
    assert symmetric_difference((1, 2), (1, 3)) == (2, 3)
    assert symmetric_difference((1, 2), (1, 2)) == ()
    assert symmetric_difference((1, 4), (2, 3)) == (1, 2, 3, 4)


@given(st.sets(st.integers(1, 12)), st.sets(st.integers(1, 12)))
def test_symmetric_difference_size(a, b):
    d = symmetric_difference(sorted(a), sorted(b))
    assert len(d) == len(a) + len(b) - 2 * len(a & b)


@given(st.integers(1, 14).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_vectorized_rank_matches_scalar(nk):
    n, k = nk
    arr = subset_array(n, k)
    ranks = rank_rows(arr, n)
    assert list(ranks) == list(range(binomial(n, k)))
