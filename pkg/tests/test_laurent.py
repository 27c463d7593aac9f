"""Ring-axiom and oracle tests for the Laurent polynomial core."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fstirling.laurent import LaurentPoly, as_laurent, poly_product_expand

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=12
)


@st.composite
def laurent_polys(draw, var="t"):
    terms = draw(
        st.dictionaries(
            st.integers(min_value=-6, max_value=6), rationals, max_size=5
        )
    )
    return LaurentPoly(var, terms)


@settings(max_examples=350)
@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + 0 == a
    assert a * 1 == a
    assert a - a == LaurentPoly("t", {})
    assert a * 0 == LaurentPoly("t", {})


@settings(max_examples=350)
@given(laurent_polys(), rationals.filter(lambda q: q != 0))
def test_scalar_evaluation_is_homomorphism(a, x):
    b = LaurentPoly("t", {1: Fraction(2), -1: Fraction(1, 3)})
    assert (a * b).substitute(x) == a.substitute(x) * b.substitute(x)
    assert (a + b).substitute(x) == a.substitute(x) + b.substitute(x)


@settings(max_examples=350)
@given(
    st.dictionaries(st.integers(min_value=-4, max_value=4), rationals, max_size=4),
)
def test_json_round_trip(terms):
    a = LaurentPoly("q", terms)
    assert LaurentPoly.from_json(a.to_json()) == a


def test_monomial_inverse_and_negative_powers():
    m = LaurentPoly.monomial("t", 3, Fraction(2, 5))
    assert m * m.inverse() == 1
    assert m ** -2 == (m.inverse()) ** 2
    with pytest.raises(ZeroDivisionError):
        (m + 1).inverse()
    with pytest.raises(ZeroDivisionError):
        LaurentPoly("t", {}).inverse()


def test_constant_coercion_across_variables():
    cq = LaurentPoly.constant("q", Fraction(3, 2))
    pt = LaurentPoly.monomial("t", 2)
    assert (cq * pt).var == "t"
    assert (cq + pt).coeff(0) == Fraction(3, 2)
    with pytest.raises(ValueError):
        LaurentPoly.variable("q") * LaurentPoly.variable("t")


def test_product_expand_matches_direct_multiplication():
    roots = [Fraction(1), Fraction(-2, 3), Fraction(5)]
    coeffs = poly_product_expand(roots)
    # evaluate both sides at a few x values
    for x in (Fraction(0), Fraction(1), Fraction(-7, 2), Fraction(4, 3)):
        direct = Fraction(1)
        for r in roots:
            direct *= x + r
        horner = sum(c * x ** i for i, c in enumerate(coeffs))
        assert horner == direct
    assert coeffs[-1] == 1
    assert poly_product_expand([]) == [Fraction(1)]


@settings(max_examples=200)
@given(st.lists(rationals, max_size=5))
def test_product_expand_root_evaluation_zero(roots):
    coeffs = poly_product_expand(roots)
    assert len(coeffs) == len(roots) + 1
    for r in roots:
        x = -r
        assert sum(c * x ** i for i, c in enumerate(coeffs)) == 0


def test_string_rendering():
    p = LaurentPoly("t", {-1: Fraction(1, 2), 0: -1, 2: 3})
    assert str(p) == "1/2*t^-1 - 1 + 3*t^2"
    assert str(LaurentPoly("t", {})) == "0"


def test_as_laurent_coercion():
    assert as_laurent(Fraction(2, 3), "u").constant_value() == Fraction(2, 3)
    p = LaurentPoly.constant("t", 5)
    assert as_laurent(p, "u").var == "u"
    m = LaurentPoly.monomial("u", 2)
    assert as_laurent(m, "u") is m
