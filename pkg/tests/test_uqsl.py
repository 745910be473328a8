from fractions import Fraction

import pytest

from cpq.qmatrix import QMatrix
from cpq.qscalar import ONE, DomainError, qnum, qpow
from cpq.spectra import casimir_highest_weight
from cpq.uqsl import (
    E, F, K, Khat, MatrixRep, NCElement, RootVectors, TensorElement, adjoint_action, antipode_square,
    casimir, casimir_checks, casimir_matrix, defining_relations, evaluate_tensor, fundamental_rep,
    hopf_axioms, lemma_a, lemma_b, nen_relation, run_suite, tensor_rep, x_coproduct, x_identities,
)


def _all_ok(checks):
    bad = [name for name, ok, _ in checks if not ok]
    assert not bad, bad


def test_fundamental_matrices():
    pi = fundamental_rep(2)
    e1 = pi(E(1))
    assert e1[1, 0] == ONE and e1.nnz() == 1
    assert pi(K(1)).diagonal() == [qpow(Fraction(-1, 2)), qpow(Fraction(1, 2)), ONE]
    # Khat is (K_1 K_2^2)^(2/3)
    assert pi(Khat()) == pi(NCElement.word(("K", 1, Fraction(2, 3)), ("K", 2, Fraction(4, 3))))


def test_star_antipode_coproduct_on_generators():
    assert E(1).star() == F(1)
    assert (E(1) * F(2)).star() == E(2) * F(1)
    assert E(1).antipode() == E(1).scale(-qpow(1))
    assert F(1).antipode_inverse() == F(1).scale(-qpow(1))
    d = E(1).coproduct()
    want = TensorElement.tensor(E(1), K(1)) + TensorElement.tensor(K(1, -1), E(1))
    assert d.terms == want.terms


def test_root_vector_recursion():
    rv = RootVectors(3)
    assert rv.M(2, 2) == E(2)
    assert rv.M(1, 2) == E(1) * E(2) - (E(2) * E(1)).scale(qpow(-1))
    assert rv.M(3, 2).is_zero()


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_relations_in_pi(ell):
    _all_ok(defining_relations(fundamental_rep(ell)))


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_relations_in_tensor_square(ell):
    pi = fundamental_rep(ell)
    _all_ok(defining_relations(tensor_rep(pi, pi)))


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_hopf_structure(ell):
    pi = fundamental_rep(ell)
    _all_ok(hopf_axioms(pi))
    _all_ok(antipode_square(pi))


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_lemmas(ell):
    pi = fundamental_rep(ell)
    _all_ok(lemma_a(pi))
    _all_ok(lemma_b(pi))
    _all_ok(nen_relation(pi))


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_casimir_in_pi_takes_highest_weight_value(ell):
    pi = fundamental_rep(ell)
    _all_ok(casimir_checks(pi, casimir_highest_weight(ell, (0,) * (ell - 1) + (1,))))


def test_casimir_sl2_value():
    # l = 1: [n/2 + 1/2]^2 on spin n/2, shifted by [1]^2 (q-1/q)^-2 conventions
    pi = fundamental_rep(1)
    c = casimir_matrix(pi).is_scalar()
    assert c == casimir_highest_weight(1, (1,))
    assert c.at_one() == Fraction(3, 4)


@pytest.mark.parametrize("ell", [2, 3])
def test_casimir_in_tensor_square_is_central_and_not_scalar(ell):
    pi = fundamental_rep(ell)
    pp = tensor_rep(pi, pi)
    _all_ok(casimir_checks(pp))
    assert casimir_matrix(pp).is_scalar() is None


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_x_vectors(ell):
    pi = fundamental_rep(ell)
    _all_ok(x_identities(pi))
    _all_ok(x_coproduct(pi, pi))


def test_adjoint_action_of_group_like():
    pi = fundamental_rep(2)
    x = E(1)
    lhs = pi(adjoint_action(x, K(2)))
    assert lhs == pi(K(2, -1) * x * K(2))


def test_tensor_evaluation_matches_tensor_rep():
    pi = fundamental_rep(2)
    pp = tensor_rep(pi, pi)
    for g in (E(1), F(2), K(1)):
        assert evaluate_tensor(g.coproduct(), pi, pi) == pp(g)


def test_wrong_representation_fails_relations():
    # mutation: flip the sign of the K exponents, E/F no longer weight vectors
    pi = fundamental_rep(2)
    bad = MatrixRep(2, [[-x for x in row] for row in pi.k_exp], pi.E, pi.F)
    assert not all(ok for _, ok, _ in defining_relations(bad))


def test_wrong_casimir_value_is_detected():
    pi = fundamental_rep(2)
    wrong = casimir_highest_weight(2, (1, 0)) + qnum(2)
    assert not all(ok for _, ok, _ in casimir_checks(pi, wrong))


def test_matrix_rep_rejects_unknown_letter():
    with pytest.raises(DomainError):
        fundamental_rep(1).letter(("Z", 1))


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_suite_green(ell):
    _all_ok(run_suite(ell))
