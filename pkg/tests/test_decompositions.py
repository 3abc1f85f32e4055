from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nearcentral.combinatorics import Permutation, all_permutations, tagged, tagged_class_size, tagged_classes
from nearcentral.decompositions import (
    FactorizationQuery,
    brute_decomposition_table,
    brute_decompositions,
    decomposition_count,
    decomposition_table,
    full_cycle,
    is_obstructed,
)
from nearcentral.z1 import ResourceGuardError, connection_coefficient


def q(left, i, right, j):
    return FactorizationQuery.make(left, i, right, j)


def test_examples():
    for n in range(1, 8):
        assert decomposition_count(q([1] * n, 1, (n,), n)) == 1
    assert decomposition_count(q((2, 1), 1, (2, 1), 2)) == 1
    assert decomposition_count(q((2, 1), 1, (2, 1), 1)) == 0
    assert brute_decompositions(q((3,), 3, (3,), 3)) == 1
    assert brute_decompositions(q((2, 1), 2, (2, 1), 2)) == 1


def test_full_cycle():
    assert full_cycle(4) == Permutation((2, 3, 4, 1))


def test_rows_sum_to_class_size():
    for n in range(1, 7):
        table = brute_decomposition_table(n)
        for a in tagged_classes(n):
            assert sum(table[a, b] for b in tagged_classes(n)) == tagged_class_size(a)
        assert sum(table.values()) == factorial(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_formula_matches_brute_force(n):
    assert decomposition_table(n) == brute_decomposition_table(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_vectorised_scan_matches_direct_scan(n):
    table = brute_decomposition_table(n)
    for (a, b), v in table.items():
        assert brute_decompositions(FactorizationQuery(a, b)) == v


@pytest.mark.parametrize("n", range(1, 7))
def test_formula_matches_connection_coefficient(n):
    target = tagged((n,), n)
    for (a, b), v in decomposition_table(n).items():
        assert connection_coefficient(a, b, target) == v


@pytest.mark.parametrize("n", range(1, 8))
def test_symmetry_and_obstructions(n):
    table = decomposition_table(n)
    for (a, b), v in table.items():
        assert table[b, a] == v
        if is_obstructed(FactorizationQuery(a, b)):
            assert v == 0


def test_guards_and_validation():
    with pytest.raises(ResourceGuardError):
        brute_decompositions(q((9,), 9, [1] * 9, 1))
    with pytest.raises(ResourceGuardError):
        brute_decomposition_table(6, max_n=5)
    with pytest.raises(ValueError):
        q((2, 1), 1, (4,), 4)
    with pytest.raises(ValueError):
        q((2, 1), 2, (3,), 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(lambda n: st.sampled_from(list(all_permutations(n)))))
def test_each_factor_is_counted_once(pi1):
    n = len(pi1)
    pi2 = pi1.inverse() * full_cycle(n)
    assert pi1 * pi2 == full_cycle(n)
    table = brute_decomposition_table(n)
    assert table[pi1.tagged_class(), pi2.tagged_class()] >= 1
