from fractions import Fraction

import pytest

from cpq.grassmann import (
    GrOperator, GrVector, basis_vectors, contraction, exterior, j_checks, j_square_sign, jmap,
    jmap_operator, qdim_trace, qdim_W, run_suite, sigma_full, sigma_k, sigma_rep, wedge,
    wedge_checks, wedge_degree_one_left, wedge_degree_one_right,
)
from cpq.qmatrix import QMatrix
from cpq.qscalar import I_UNIT, ONE, DomainError, qbinom, qpow
from cpq.uqsl import E, F, K, defining_relations


def v(ell, *i):
    return GrVector.basis(ell, i)


def test_wedge_of_generators():
    # v_1 ^ v_2 = v_12, v_2 ^ v_1 = -q^-1 v_12
    assert wedge(v(2, 1), v(2, 2)) == v(2, 1, 2)
    assert wedge(v(2, 2), v(2, 1)) == v(2, 1, 2).scale(-qpow(-1))
    assert wedge(v(2, 1), v(2, 1)).is_zero()


def test_wedge_overflow_is_zero():
    assert wedge(v(2, 1, 2), v(2, 1)).is_zero()


def test_wedge_unit():
    one = GrVector(3, 0, {(): ONE})
    x = v(3, 1, 3)
    assert wedge(one, x) == x == wedge(x, one)


def test_square_of_left_exterior_product():
    x = GrVector(3, 1, {(1,): ONE, (2,): qpow(1), (3,): I_UNIT})
    lhs = exterior(x, "L") @ exterior(x, "L")
    assert lhs == exterior(wedge(x, x), "L")


def test_degree_one_formulas_on_generic_vectors():
    x = GrVector(4, 1, {(1,): ONE, (3,): qpow(2) - 1, (4,): I_UNIT})
    w = GrVector(4, 2, {(1, 2): ONE, (2, 4): qpow(-1), (3, 4): 3})
    assert wedge(x, w) == wedge_degree_one_left(x, w)
    assert wedge(w, x) == wedge_degree_one_right(w, x)


def test_sigma_on_basis():
    # {E_1 w}_i = w_{i^{1,+}} for 1#i = +1, so E_1 v_23 = v_13
    assert sigma_k(3, 2, "E", 1)(v(3, 2, 3))[2] == v(3, 1, 3)
    assert sigma_k(3, 2, "E", 1)(v(3, 1, 3)) == {}
    assert sigma_k(3, 2, "F", 1)(v(3, 1, 3))[2] == v(3, 2, 3)
    assert sigma_k(3, 2, "K", 1)(v(3, 1, 3))[2] == v(3, 1, 3).scale(qpow(Fraction(1, 2)))
    assert sigma_k(3, 2, "Kinv", 1)(v(3, 2, 3))[2] == v(3, 2, 3).scale(qpow(Fraction(1, 2)))
    with pytest.raises(DomainError):
        sigma_k(3, 2, "E", 3)


@pytest.mark.parametrize("ell", [1, 2, 3, 4, 5])
def test_sigma_relations(ell):
    for k in range(ell + 1):
        bad = [n for n, ok, _ in defining_relations(sigma_rep(ell, k)) if not ok]
        assert not bad, (k, bad)


def test_sigma_dimensions():
    assert [sigma_rep(4, k).dim for k in range(5)] == [1, 4, 6, 4, 1]


def test_j_on_basis():
    ell = 2
    c = qpow(Fraction(3, 2))
    # J v_() = (-q^-1)^3 q^{3/2} v_12 and J v_12 = q^{3/2} v_()
    assert jmap(GrVector(ell, 0, {(): ONE})) == v(ell, 1, 2).scale(-c * qpow(-3))
    assert jmap(v(ell, 1, 2)) == GrVector(ell, 0, {(): c})


def test_j_is_antilinear():
    x = GrVector(2, 1, {(1,): I_UNIT})
    assert jmap(x) == jmap(v(2, 1)).scale(-I_UNIT)
    assert jmap_operator(2).antilinear


@pytest.mark.parametrize("ell", range(1, 7))
def test_j_square(ell):
    J = jmap_operator(ell)
    assert J @ J == GrOperator.identity(ell).scale(j_square_sign(ell))


def test_j_square_signs():
    assert [j_square_sign(l) for l in range(1, 9)] == [-1, -1, 1, 1, -1, -1, 1, 1]


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_j_identities(ell):
    bad = [n for n, ok in j_checks(ell) if not ok]
    assert not bad, bad


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_wedge_identities(ell):
    bad = [n for n, ok in wedge_checks(ell) if not ok]
    assert not bad, bad


def test_contraction_left_is_adjoint():
    x = v(3, 2)
    assert contraction(x, "L") == exterior(x, "L").adjoint()
    # i^L_{v_1} v_{12} = v_2
    assert contraction(v(3, 1), "L")(v(3, 1, 2))[1] == v(3, 2)


def test_antilinear_composition_rule():
    J = jmap_operator(2)
    s = sigma_full(2, K(1))
    assert (J @ s).antilinear and not (J @ J).antilinear
    x = GrVector(2, 1, {(1,): I_UNIT})
    lhs = (J @ s)(x)
    rhs = J(s(x)[1])
    assert lhs == rhs


def test_right_exterior_needs_degree_one():
    with pytest.raises(DomainError):
        exterior(v(3, 1, 2), "R")


def test_prop_relation_fails_without_factor():
    # mutation: dropping the -q factor must break J e^L J^-1 = -q i^R
    J = jmap_operator(3)
    x = v(3, 2)
    assert J @ exterior(x, "L") @ J.inverse() != contraction(x, "R")


def test_equivariance_fails_without_antipode():
    J = jmap_operator(2)
    x = E(1)
    assert sigma_full(2, x.star()) @ J != J @ sigma_full(2, x)


@pytest.mark.parametrize("ell", range(1, 9))
def test_qdim(ell):
    for k in range(ell + 1):
        d = qdim_W(ell, k)
        assert d == qbinom(ell, k)
        assert d.at_one() == qbinom(ell, k).at_one()


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_qdim_trace_route(ell):
    for k in range(ell + 1):
        assert qdim_trace(ell, k) == qdim_W(ell, k)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_suite_green(ell):
    assert all(ok for _, ok, _ in run_suite(ell))
