import math
import random

import pytest

from cpq.qscalar import ONE, DomainError, qpow
from cpq.sphere import (
    MIXED, SpherePoly, SphereWord, c_N, compositions, is_normal, khat_action, khat_eigenvalue,
    khat_grading, normal_form, partition_of_unity_check, psi_entries, random_poly, run_suite,
    sphere_relation, z, zstar,
)


def test_basic_rewrites():
    assert normal_form(z(1, 2) * z(1, 1)) == (z(1, 1) * z(1, 2)).scale(qpow(-1))
    assert normal_form(zstar(1, 1) * z(1, 1)) == z(1, 1) * zstar(1, 1)
    assert normal_form(zstar(2, 1) * z(2, 3)) == (z(2, 3) * zstar(2, 1)).scale(qpow(1))
    assert normal_form(zstar(2, 1) * zstar(2, 2)) == (zstar(2, 2) * zstar(2, 1)).scale(qpow(-1))


def test_commutator_with_lower_terms():
    # z_2* z_2 = z_2 z_2* + (1 - q^2) z_1 z_1*, and z_2 z_2* is eliminated at l = 1
    lhs = normal_form(zstar(1, 2) * z(1, 2))
    rhs = SpherePoly.scalar(1, 1) - (z(1, 1) * zstar(1, 1)).scale(qpow(2))
    assert lhs == rhs


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_sphere_relation(ell):
    assert normal_form(sphere_relation(ell)) == SpherePoly.scalar(ell, 1)


@pytest.mark.parametrize("ell,N", [(l, n) for l in (1, 2, 3) for n in range(5)])
def test_partition_of_unity(ell, N):
    ok, residual, summands = partition_of_unity_check(ell, N)
    assert ok, residual
    assert summands == math.comb(N + ell, ell)


def test_partition_of_unity_needs_the_q_power():
    # mutation: drop the q-multinomial weights entirely
    p = SpherePoly(2)
    for j in compositions(2, 3):
        from cpq.sphere import z_power
        zj = z_power(2, j)
        p = p + zj * zj.star()
    assert normal_form(p) != SpherePoly.scalar(2, 1)


@pytest.mark.parametrize("ell,N", [(1, 0), (1, 2), (2, 1), (2, 3)])
def test_c_n_recurrence(ell, N):
    assert normal_form(c_N(ell, N, sphere_relation(ell))) == normal_form(c_N(ell, N + 1))


def test_sphere_word_validates_order():
    w = SphereWord([(1, 0), (2, 0), (2, 1)], 3)
    assert (w.deg_z, w.deg_zstar) == (2, 1)
    assert str(w) == "z1 z2 z2*"
    with pytest.raises(DomainError):
        SphereWord([(2, 0), (1, 0)], 3)
    with pytest.raises(DomainError):
        SphereWord([(3, 0), (3, 1)], 2)


def test_words_only_for_normal_forms():
    p = normal_form(zstar(2, 2) * z(2, 1) * z(2, 3))
    assert is_normal(p)
    assert all(isinstance(w, SphereWord) for _, w in p.words())


def test_star_is_involutive_and_antimultiplicative():
    a = z(2, 1).scale(qpow(1)) + zstar(2, 3)
    b = z(2, 2) * zstar(2, 1)
    assert a.star().star() == a
    assert (a * b).star() == b.star() * a.star()


def test_grading_examples():
    assert khat_grading(zstar(1, 1)) == 1
    assert khat_grading(z(2, 1) * zstar(2, 2)) == 0
    assert khat_grading(SpherePoly.scalar(3, 1)) == 0
    assert khat_grading(z(1, 1) + zstar(1, 1)) == MIXED
    assert khat_grading(SpherePoly(1)) is None


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_psi_entries_graded(ell):
    for N in range(4):
        for m in psi_entries(ell, N):
            assert khat_grading(m) == N
            assert khat_action(m) == khat_eigenvalue(ell, N)


def test_grading_survives_reduction():
    # z_2 z_2* reduces to a sum including the scalar 1, still degree 0
    p = z(1, 2) * zstar(1, 2) * zstar(1, 1)
    assert khat_grading(p) == 1


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_random_corpus_confluent_and_idempotent(ell):
    rng = random.Random(100 + ell)
    for _ in range(170):
        p = random_poly(rng, ell)
        a = normal_form(p)
        assert normal_form(a) == a
        assert normal_form(p, "rightmost") == a


def test_unknown_strategy():
    with pytest.raises(DomainError):
        normal_form(z(1, 1), "middle")


def test_generator_index_checked():
    with pytest.raises(DomainError):
        z(2, 4)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_suite_green(ell):
    assert all(ok for _, ok, _ in run_suite(ell))
