from fractions import Fraction

from hypothesis import given, settings, strategies as st

from cpq.combinatorics import Permutation, inversion_count, shuffle_factorization
from cpq.grassmann import GrVector, jmap, j_square_sign, qdim_W, wedge
from cpq.qscalar import I_UNIT, ONE, QScalar, qbinom, qnum, qpow
from cpq.sphere import MIXED, SpherePoly, khat_grading, normal_form
from cpq.spectra import casimir_eigenvalue, casimir_highest_weight, weyl_dim

small_frac = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def qscalars(draw):
    x = QScalar({}, None, 2)
    for _ in range(draw(st.integers(1, 3))):
        c = draw(st.integers(-3, 3))
        x = x + qpow(draw(small_frac)) * c
    if draw(st.booleans()):
        x = x + I_UNIT * draw(st.integers(-2, 2))
    return x


@given(qscalars(), qscalars(), qscalars())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()


@given(qscalars(), qscalars())
@settings(max_examples=60, deadline=None)
def test_division_and_conjugation(a, b):
    if not b.is_zero():
        assert (a / b) * b == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@given(small_frac, small_frac)
@settings(max_examples=60, deadline=None)
def test_qnum_addition_rule(x, y):
    # [x+y] = q^y [x] + q^-x [y]
    assert qnum(x + y) == qpow(y) * qnum(x) + qpow(-x) * qnum(y)


@given(st.permutations(list(range(1, 7))), st.integers(0, 6))
def test_shuffle_factorization_property(images, k):
    p = Permutation(images)
    p1, p2 = shuffle_factorization(p, k)
    assert p1.compose(p2) == p
    assert inversion_count(p) == inversion_count(p1) + inversion_count(p2)


@st.composite
def grvectors(draw, ell, degree):
    from cpq.combinatorics import enumerate_multiindices
    idx = enumerate_multiindices(ell, degree)
    coeffs = {}
    for i in draw(st.lists(st.sampled_from(idx), max_size=3)):
        coeffs[i] = qpow(draw(st.integers(-2, 2))) * draw(st.integers(-2, 2)) + I_UNIT * draw(st.integers(-1, 1))
    return GrVector(ell, degree, coeffs)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_wedge_associative_on_random_vectors(data):
    ell = 4
    h, k = data.draw(st.integers(0, 2)), data.draw(st.integers(0, 2))
    m = data.draw(st.integers(0, ell - h - k))
    u, v, w = (data.draw(grvectors(ell, d)) for d in (h, k, m))
    assert wedge(wedge(u, v), w) == wedge(u, wedge(v, w))


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_j_square_on_random_vectors(data):
    ell = data.draw(st.integers(1, 5))
    k = data.draw(st.integers(0, ell))
    x = data.draw(grvectors(ell, k))
    assert jmap(jmap(x)) == x.scale(j_square_sign(ell))


@given(st.integers(1, 9), st.data())
def test_qdim_symmetry(ell, data):
    k = data.draw(st.integers(0, ell))
    assert qdim_W(ell, k) == qdim_W(ell, ell - k) == qbinom(ell, k)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4))
@settings(max_examples=40, deadline=None)
def test_casimir_forms_agree_classically(n):
    ell = len(n)
    n = tuple(n)
    assert casimir_highest_weight(ell, n).at_one() == casimir_eigenvalue(ell, n).at_one()
    assert weyl_dim(ell, n) >= 1


letters = st.tuples(st.integers(1, 3), st.integers(0, 1))


@st.composite
def sphere_polys(draw, ell=2):
    p = SpherePoly(ell)
    for _ in range(draw(st.integers(1, 3))):
        w = tuple(draw(st.lists(letters, max_size=6)))
        p = p + SpherePoly(ell, {w: qpow(draw(st.integers(-2, 2))) * draw(st.integers(1, 3))})
    return p


@given(sphere_polys())
@settings(max_examples=80, deadline=None)
def test_normal_form_idempotent_and_strategy_free(p):
    a = normal_form(p)
    assert normal_form(a) == a
    assert normal_form(p, "rightmost") == a


@given(sphere_polys(), sphere_polys())
@settings(max_examples=60, deadline=None)
def test_grading_additive(p, r):
    gp, gr = khat_grading(p), khat_grading(r)
    if gp in (None, MIXED) or gr in (None, MIXED):
        return
    g = khat_grading(p * r)
    assert g is None or g == gp + gr
