from fractions import Fraction

import pytest

from cpq.qscalar import (
    I_UNIT, ONE, ZERO, DomainError, PrecisionError, QScalar, RootOrder, SingularEvaluationError,
    qbinom, qfactorial, qmultinom, qmultinom_recursive, qnum, qpow, run_suite,
)


def test_qnum_small_values():
    assert qnum(1) == ONE
    assert qnum(0) == ZERO
    assert qnum(2) == qpow(1) + qpow(-1)
    assert qnum(-3) == -qnum(3)


def test_qnum_half_integer():
    v = qnum(Fraction(1, 2))
    assert v.at_one() == Fraction(1, 2)
    # [1/2] = 1/(q^{1/2} + q^{-1/2})
    assert v == ONE / (qpow(Fraction(1, 2)) + qpow(Fraction(-1, 2)))


def test_root_orders_lift_to_lcm():
    a, b = qpow(Fraction(1, 3)), qpow(Fraction(1, 4))
    assert (a * b) == qpow(Fraction(7, 12))
    assert (a * b).r == 12


def test_numeric_evaluation():
    assert qnum(3).evaluate(0.5) == pytest.approx(0.25 + 1 + 4)
    assert qbinom(4, 2).evaluate(1) == 6
    assert qnum(2).evaluate(Fraction(1, 2)) == pytest.approx(2.5)


def test_at_one_exact():
    v = (qnum(5) * qnum(2)) / qnum(3)
    assert v.at_one() == Fraction(10, 3)


def test_pole_at_one_raises():
    with pytest.raises(SingularEvaluationError):
        (ONE / (ONE - qpow(2))).at_one()


def test_gaussian_coefficients_and_conjugation():
    x = qnum(2) + I_UNIT * qpow(1)
    assert x.conjugate() == qnum(2) - I_UNIT * qpow(1)
    assert not x.is_real()
    assert (I_UNIT * I_UNIT) == -ONE


def test_serialize_parse_round_trip():
    for x in (qnum(Fraction(2, 3)), ONE / (qpow(1) - 3), I_UNIT * qnum(4), ZERO,
              (qpow(1) + Fraction(1, 3)) / (qpow(-2) - Fraction(5, 7))):
        assert QScalar.parse(x.serialize()) == x


def test_factorials_and_binomials():
    assert qfactorial(0) == ONE
    assert qfactorial(3) == qnum(2) * qnum(3)
    assert qbinom(5, 0) == ONE
    assert qbinom(5, 6) == ZERO
    assert qbinom(6, 2) == qbinom(6, 4)


def test_multinomial_routes_agree():
    for j in [(0, 0), (2, 1), (1, 2, 1), (3, 0, 2), (2, 2, 2, 1)]:
        assert qmultinom(j) == qmultinom_recursive(j)
    assert qmultinom((1, 1)) == qnum(2) * qpow(-1)


def test_root_order_guards():
    r = RootOrder.for_rank(2)
    assert r.r == 6
    assert r.qpow(Fraction(1, 3)) == qpow(Fraction(1, 3))
    with pytest.raises(PrecisionError):
        r.qpow(Fraction(1, 4))
    with pytest.raises(DomainError):
        RootOrder(3)


def test_negative_factorial_rejected():
    with pytest.raises(DomainError):
        qfactorial(-1)
    with pytest.raises(DomainError):
        qmultinom((1, -1))


def test_suite_green():
    assert all(ok for _, ok, _ in run_suite())
