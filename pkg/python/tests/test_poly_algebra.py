from fractions import Fraction

from matchpoly import (ONE, X, ZERO, DivisionByZero, FormatError, NotLaurent, PoleAtPoint, PolyFrac, as_laurent,
                       evaluate, format_polyfrac, monomial, parse_polyfrac)
from instances import to_sympy
import numpy as np
import sympy
import pytest


def test_canonical_form_cancels_common_factors():
    # (x^2 - 1) / (x - 1) = x + 1
    assert PolyFrac((1, 0, -1), (1, -1)) == PolyFrac((1, 1))
    assert PolyFrac((2, 2), (4,)) == PolyFrac((1, 1), (2,))
    assert PolyFrac((4,), (2,)) == 2


def test_zero_is_stored_as_zero_over_one():
    z = PolyFrac((), (1, 5))
    assert z == ZERO
    assert z.is_zero()
    assert z.denominator == (1,)
    assert not z


def test_monomials():
    assert monomial(0) == ONE
    assert monomial(1) == X
    assert monomial(3) * monomial(-2) == X
    assert monomial(-2) == ONE / (X * X)
    assert X ** 3 == monomial(3)
    assert X ** -1 == monomial(-1)


def test_field_operations():
    a = PolyFrac((1, 1))          # x + 1
    b = PolyFrac((1,), (1, -1))   # 1 / (x - 1)
    assert a * b / b == a
    assert (a + b) - b == a
    assert a / a == ONE
    assert 1 - a == -X
    assert 2 * X == X + X


def test_division_by_zero_raises():
    with pytest.raises(DivisionByZero) as e_info:
        X / ZERO
    assert e_info.match("division by the zero fraction")
    with pytest.raises(DivisionByZero):
        PolyFrac((1,), ())


def test_as_laurent():
    assert as_laurent(2 * X ** 2) == {2: 2}
    assert as_laurent(X ** 3 + 3 * X ** -2) == {3: 1, -2: 3}
    assert as_laurent(ZERO) == {}
    with pytest.raises(NotLaurent):
        as_laurent(PolyFrac((1,), (1, 1)))


def test_evaluate():
    assert evaluate(2 * X ** 2, 1) == 2
    assert evaluate(X ** -1, 2) == Fraction(1, 2)
    assert evaluate(PolyFrac((1, 1), (1, -1)), Fraction(1, 2)) == -3
    with pytest.raises(PoleAtPoint):
        evaluate(PolyFrac((1,), (1, -1)), 1)


@pytest.mark.parametrize("value, text", [
    (ZERO, "0"),
    (ONE, "1"),
    (2 * X ** 2, "2*x^2"),
    (15 * X ** 3, "15*x^3"),
    (X ** 7 - 3 * X + 2, "1*x^7+-3*x^1+2"),
    (-X ** 2 - 1, "-1*x^2+-1"),
    (X ** -2, "(1)/(1*x^2)"),
])
def test_format(value, text):
    assert format_polyfrac(value) == text
    assert parse_polyfrac(text) == value


def test_parse_accepts_implicit_coefficients_and_spaces():
    assert parse_polyfrac("x^2 + 2x + 1") == PolyFrac((1, 2, 1))
    assert parse_polyfrac("-x") == -X
    assert parse_polyfrac("(x)/(x^2-1)") == PolyFrac((1, 0), (1, 0, -1))


@pytest.mark.parametrize("text", ["x^", "2**x", "(1)/(0)", "y"])
def test_parse_errors(text):
    with pytest.raises(FormatError):
        parse_polyfrac(text)


def test_equal_values_hash_alike():
    assert hash(PolyFrac((3,))) == hash(3)
    assert len({X * X, monomial(2), PolyFrac((1, 0, 0))}) == 1


def _random_fraction(rng):
    '''Numerator and denominator of degree at most 8 with coefficients in [-9, 9].'''
    num = rng.integers(-9, 10, size=int(rng.integers(1, 10)))
    den = rng.integers(-9, 10, size=int(rng.integers(1, 10)))
    while not den.any():
        den = rng.integers(-9, 10, size=len(den))
    return PolyFrac(num, den)


@pytest.mark.parametrize("seed", range(50))
def test_field_axioms_on_random_fractions(seed):
    rng = np.random.default_rng(seed)
    a, b, c = (_random_fraction(rng) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO
    if b:
        assert (a / b) * b == a
        assert b / b == ONE
    assert sympy.cancel(to_sympy(a * b + c) - (to_sympy(a) * to_sympy(b) + to_sympy(c))) == 0


@pytest.mark.parametrize("a", range(-10, 11))
def test_monomials_multiply_by_adding_exponents(a):
    for b in range(-10, 11):
        assert monomial(a) * monomial(b) == monomial(a + b)


@pytest.mark.parametrize("seed", range(50))
def test_canonical_form_is_idempotent(seed):
    f = _random_fraction(np.random.default_rng(seed))
    g = PolyFrac.from_coefficients(f.numerator, f.denominator)
    assert (g.numerator, g.denominator) == (f.numerator, f.denominator)
    assert g == f
    assert hash(g) == hash(f)
    assert f.denominator[-1] > 0
    assert PolyFrac((1,), (-1, 0)) == -monomial(-1)
