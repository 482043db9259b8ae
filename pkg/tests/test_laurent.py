from hypothesis import given
from hypothesis import strategies as st

from pseudoknots.laurent import LOOP_FACTOR, LaurentPolynomial

polys = st.dictionaries(
    st.integers(-12, 12), st.integers(-9, 9), max_size=8
).map(LaurentPolynomial)


def test_basic_arithmetic():
    t = LaurentPolynomial.monomial(1, 1)
    t_inv = LaurentPolynomial.monomial(1, -1)
    assert (t + t_inv) * (t - t_inv) == t * t - t_inv * t_inv
    assert (t - t) .is_zero()
    assert LaurentPolynomial({2: 1, 0: -1}).coeff(0) == -1


def test_zero_coefficients_dropped():
    p = LaurentPolynomial([(3, 1), (3, -1), (0, 2)])
    assert p.items() == [(0, 2)]


def test_loop_factor():
    assert LOOP_FACTOR.items() == [(-2, -1), (2, -1)]


def test_pow():
    d = LOOP_FACTOR
    assert d ** 0 == LaurentPolynomial.one()
    assert d ** 3 == d * d * d


def test_invert_variable():
    p = LaurentPolynomial({-4: -1, -3: 1, -1: 1})
    assert p.invert_variable().items() == [(1, 1), (3, 1), (4, -1)]


def test_evaluate_at_unit():
    p = LaurentPolynomial({-4: -1, -3: 1, -1: 1})
    assert p.evaluate_at_unit(1) == 1
    assert p.evaluate_at_unit(-1) == -3


def test_pairs_string_round_trip():
    p = LaurentPolynomial({-6: -1, -3: 2, 1: 1})
    assert LaurentPolynomial.from_pairs_string(p.to_pairs_string()) == p
    assert LaurentPolynomial.from_pairs_string("0:0").is_zero()


def test_pretty():
    p = LaurentPolynomial({-4: -1, -3: 1, -1: 1})
    assert p.pretty() == "-t^-4 + t^-3 + t^-1"
    assert LaurentPolynomial.zero().pretty() == "0"
    assert LaurentPolynomial({0: 3}).pretty() == "3"


@given(polys, polys)
def test_addition_commutes(p, q):
    assert p + q == q + p


@given(polys, polys, polys)
def test_multiplication_distributes(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(polys)
def test_invert_involution(p):
    assert p.invert_variable().invert_variable() == p


@given(polys, polys)
def test_invert_is_ring_map(p, q):
    assert (p * q).invert_variable() == p.invert_variable() * q.invert_variable()
