import cmath
from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from uniqexp.digitset import validate
from uniqexp.polynomial import (
    IntPolynomial,
    admissible_orders,
    cyclotomic,
    digit_polynomial,
    divides,
    vanishes_at_order,
)

from oracles import brute_admissible

P = IntPolynomial
Z = sympy.Symbol("z")


def test_zero_trimmed():
    assert P((1, 2, 0, 0)).coefficients == (1, 2)
    assert P((0, 0)).is_zero() and P(()).degree == -1


@pytest.mark.parametrize(
    "base, digits, coeffs",
    [
        (4, [0, 1, 8, 9], (1, 1, 0, 0, 0, 0, 0, 0, 1, 1)),
        (3, [0, 1, 2], (1, 1, 1)),
        (2, [0], (1,)),
    ],
)
def test_digit_polynomial(base, digits, coeffs):
    assert digit_polynomial(validate(base, digits)).coefficients == coeffs


@pytest.mark.parametrize(
    "d, coeffs",
    [(1, (-1, 1)), (2, (1, 1)), (6, (1, -1, 1)), (16, (1, 0, 0, 0, 0, 0, 0, 0, 1))],
)
def test_cyclotomic_examples(d, coeffs):
    assert cyclotomic(d).coefficients == coeffs


def test_cyclotomic_matches_sympy():
    for d in range(1, 121):
        ref = sympy.Poly(sympy.cyclotomic_poly(d, Z), Z).all_coeffs()[::-1]
        assert cyclotomic(d).coefficients == tuple(int(c) for c in ref), d


def test_cyclotomic_degree_and_division():
    for d in range(1, 201):
        phi = cyclotomic(d)
        assert phi.degree == sympy.totient(d)
        assert divides(phi, P.monomial(d) - P((1,)))


def test_cyclotomic_product():
    for d in range(1, 51):
        prod = P((1,))
        for e in range(1, d + 1):
            if d % e == 0:
                prod = prod * cyclotomic(e)
        assert prod == P.monomial(d) - P((1,))


def test_divides_examples():
    assert divides(P((1, 1)), P((1, 1, 0, 0, 0, 0, 0, 0, 1, 1)))
    assert not divides(P((1, 1, 1)), P((1, 1, 0, 0, 1)))
    assert divides(P((1, 1)), P(()))
    with pytest.raises(ZeroDivisionError):
        divides(P(()), P((1,)))


def test_divides_non_monic():
    assert divides(P((2, 2)), P((2, 4, 2)))
    assert not divides(P((0, 2)), P((0, 1)))


def test_vanishes_examples():
    p = P((1, 1, 0, 0, 0, 0, 0, 0, 1, 1))
    assert vanishes_at_order(p, 2) and vanishes_at_order(p, 16)
    assert not vanishes_at_order(P((1, 1, 0, 0, 1)), 3)


def test_admissible_orders_examples():
    assert admissible_orders(P((1,) * 10), 4) == [2, 4, 8, 16]
    assert admissible_orders(P((1, 1, 0, 0, 1)), 3) == [3]
    assert admissible_orders(P((1, 1)), 6) == [2]


def test_admissible_orders_brute_force():
    for base in range(2, 13):
        for deg in range(0, 25):
            assert admissible_orders(P((1,) * (deg + 1)), base) == brute_admissible(deg, base)


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 1), min_size=1, max_size=33), st.integers(1, 64))
def test_vanishing_agrees_with_float_evaluation(bits, d):
    p = P(tuple(bits))
    if p.is_zero():
        return
    numeric = all(
        abs(p(cmath.exp(-2j * cmath.pi * m / d))) < 1e-6
        for m in range(1, d + 1)
        if gcd(m, d) == 1
    )
    assert vanishes_at_order(p, d) == numeric


@given(st.sets(st.integers(0, 40), min_size=1, max_size=10), st.integers(2, 9))
def test_mask_normalization(digits, base):
    ds = validate(base, digits)
    assert digit_polynomial(ds)(1) == ds.size


def test_arithmetic():
    a, b = P((1, 1)), P((1, -1))
    assert a * b == P((1, 0, -1))
    assert a - a == P(())
    q, r = (a * b + P((3,))).divmod_exact(a)
    assert q == b and r == P((3,))
    assert str(cyclotomic(6)) == "1 - z + z^2"
