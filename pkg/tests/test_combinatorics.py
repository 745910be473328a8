import pytest

from cpq.combinatorics import (
    InvalidShiftError, Permutation, complement, enumerate_multiindices, enumerate_shuffles,
    inversion_count, multi_index, position, run_suite, sharp, shift, shuffle_factorization,
    union, weight,
)
from cpq.qscalar import DomainError


def test_enumeration_is_lexicographic():
    assert enumerate_multiindices(3, 2) == [(1, 2), (1, 3), (2, 3)]
    assert enumerate_multiindices(2, 0) == [()]


def test_sharp_and_shift():
    i = (1, 3)
    assert sharp(1, i) == 1
    assert sharp(2, i) == -1
    assert sharp(3, i) == 1
    assert shift(i, 1, "+") == (2, 3)
    assert shift(i, 2, "-") == (1, 2)
    with pytest.raises(InvalidShiftError):
        shift(i, 2, "+")


def test_complement_union_weight_position():
    assert complement((2,), 4) == (1, 3, 4)
    assert union((1, 4), (2,)) == (1, 2, 4)
    assert weight((1, 2, 4)) == 7
    assert position(4, (1, 2, 4)) == 3
    with pytest.raises(DomainError):
        union((1,), (1, 2))


def test_multi_index_validation():
    assert multi_index([1, 3], 3) == (1, 3)
    with pytest.raises(DomainError):
        multi_index([2, 2], 3)
    with pytest.raises(DomainError):
        multi_index([0, 1], 3)


def test_shuffles():
    sh = list(enumerate_shuffles(1, 2))
    assert [p.images for p in sh] == [(1, 2, 3), (2, 1, 3), (3, 1, 2)]
    assert [inversion_count(p) for p in sh] == [0, 1, 2]


def test_shuffle_factorization_example():
    p = Permutation((3, 1, 2, 4))
    p1, p2 = shuffle_factorization(p, 2)
    assert p1.compose(p2) == p
    assert inversion_count(p) == inversion_count(p1) + inversion_count(p2)


def test_permutation_inverse():
    p = Permutation((2, 3, 1))
    assert p.compose(p.inverse()) == Permutation.identity(3)


@pytest.mark.parametrize("ell", [1, 2, 3, 4, 5])
def test_suite_green(ell):
    assert all(ok for _, ok, _ in run_suite(ell))
