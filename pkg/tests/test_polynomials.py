"""Tests for exact polynomial arithmetic and the expression parser."""

import random
from fractions import Fraction

import pytest

from germlab.errors import (
    DegreeCapError,
    ParseError,
    SingularMatrixError,
    UnknownVariableError,
    ZeroPolynomialError,
)
from germlab.polynomials import (
    ONE,
    VERTICAL,
    X,
    Y,
    ZERO,
    Polynomial,
    Slope,
    parse_polynomial,
)


# -- construction and basic queries ------------------------------------


def test_terms_are_canonical():
    p = Polynomial({(0, 2): 1, (3, 0): -1, (1, 1): 0})
    assert p.terms == {(0, 2): Fraction(1), (3, 0): Fraction(-1)}
    assert len(p) == 2
    assert p.coefficient(0, 2) == 1
    assert p.coefficient(5, 5) == 0


def test_zero_polynomial():
    assert ZERO.is_zero()
    assert not ZERO
    assert Polynomial({(1, 0): 0}).is_zero()
    with pytest.raises(ZeroPolynomialError):
        ZERO.order()


def test_order_and_total_degree():
    p = parse_polynomial("y^2 - x^3")
    assert p.order() == 2
    assert p.total_degree() == 3
    assert parse_polynomial("x^11 + y^11 + x^6*y^6").order() == 11
    assert parse_polynomial("x + y^5").order() == 1


def test_initial_form():
    assert parse_polynomial("y^2 - x^3").initial_form() == parse_polynomial("y^2")
    assert parse_polynomial("y^2 - 2*x*y + x^2 + x^5").initial_form() == \
        parse_polynomial("y^2 - 2*x*y + x^2")
    assert parse_polynomial("x^3 + y^5").initial_form() == parse_polynomial("x^3")


def test_partials():
    fx, fy = parse_polynomial("y^2 - x^3").partials()
    assert fx == parse_polynomial("-3*x^2")
    assert fy == parse_polynomial("2*y")
    fx, fy = ONE.partials()
    assert fx.is_zero() and fy.is_zero()
    fx, fy = parse_polynomial("x^6*y^6").partials()
    assert fx == parse_polynomial("6*x^5*y^6")
    assert fy == parse_polynomial("6*x^6*y^5")


def test_evaluation():
    p = parse_polynomial("y^2 - x^3")
    assert p(0, 0) == 0
    assert p(1, 1) == 0
    assert p(Fraction(1, 2), 2) == Fraction(31, 8)


def test_arithmetic_basics():
    p = parse_polynomial("x + y")
    q = parse_polynomial("x - y")
    assert p + q == parse_polynomial("2*x")
    assert p - q == parse_polynomial("2*y")
    assert p * q == parse_polynomial("x^2 - y^2")
    assert -p == parse_polynomial("-x - y")
    assert 3 * p == parse_polynomial("3*x + 3*y")
    assert p * Fraction(1, 2) == parse_polynomial("1/2 x + 1/2 y")
    assert p ** 0 == ONE
    assert p ** 2 == parse_polynomial("x^2 + 2*x*y + y^2")


def test_pow_matches_repeated_product():
    p = parse_polynomial("1 + x + y^2")
    q = ONE
    for _ in range(5):
        q = q * p
    assert p ** 5 == q


def test_equality_and_hash():
    p = parse_polynomial("y^2 - x^3")
    q = Polynomial({(0, 2): 1, (3, 0): -1})
    assert p == q
    assert hash(p) == hash(q)
    assert p != parse_polynomial("y^2")
    assert p != "y^2 - x^3"


def test_swap_variables():
    p = parse_polynomial("y^2 - x^3")
    assert p.swap_variables() == parse_polynomial("x^2 - y^3")
    assert p.swap_variables().swap_variables() == p


def test_substitute_linear_identity():
    p = parse_polynomial("y^2 - x^3 + 7*x*y")
    assert p.substitute_linear(((1, 0), (0, 1))) == p


def test_substitute_linear_shear():
    p = parse_polynomial("y^2 - x")
    sheared = p.substitute_linear(((1, 0), (1, 1)))  # y -> y + x
    assert sheared == parse_polynomial("y^2 + 2*x*y + x^2 - x")


def test_substitute_linear_swap():
    p = parse_polynomial("y^2 - x^3")
    assert p.substitute_linear(((0, 1), (1, 0))) == parse_polynomial("x^2 - y^3")


def test_substitute_linear_translation():
    p = parse_polynomial("x^2 + y")
    moved = p.substitute_linear(((1, 0), (0, 1)), translation=(1, -1))
    assert moved == parse_polynomial("x^2 + 2*x + y")


def test_substitute_linear_singular_matrix():
    p = parse_polynomial("x + y")
    with pytest.raises(SingularMatrixError):
        p.substitute_linear(((1, 2), (2, 4)))


def test_substitute_general():
    p = parse_polynomial("y^2 - x^3")
    q = p.substitute(X, X * Y)  # the classical blowup chart map
    assert q == parse_polynomial("x^2*y^2 - x^3")


# -- printing ----------------------------------------------------------


def test_str_examples():
    assert str(parse_polynomial("y^2 - x^3")) == "y^2 - x^3"
    assert str(parse_polynomial("-x + 3/2 x*y")) == "-x + 3/2 x*y"
    assert str(parse_polynomial("x^6*y^6 + y^11 + x^11")) == "y^11 + x^11 + x^6*y^6"
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(parse_polynomial("x - 1")) == "-1 + x"


def test_print_parse_round_trip_is_identity():
    rng = random.Random(1211)
    for _ in range(200):
        terms = {}
        for _ in range(rng.randint(1, 8)):
            i, j = rng.randint(0, 6), rng.randint(0, 6)
            terms[(i, j)] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        p = Polynomial(terms)
        if p.is_zero():
            continue
        assert parse_polynomial(str(p)) == p


# -- parser grammar ----------------------------------------------------


def test_parse_reference_forms():
    assert parse_polynomial("y^2 - x^3").terms == {(0, 2): 1, (3, 0): -1}
    assert len(parse_polynomial("x^11 + y^11 + x^6*y^6")) == 3
    assert parse_polynomial("3/2 x y - x").terms == {(1, 1): Fraction(3, 2), (1, 0): -1}


def test_parse_whitespace_and_signs():
    assert parse_polynomial("  -x+ y ") == parse_polynomial("y - x")
    assert parse_polynomial("x-y+y") == X
    assert parse_polynomial("- 2 x") == parse_polynomial("-2*x")


def test_parse_juxtaposition_and_star():
    assert parse_polynomial("2x y^2") == parse_polynomial("2*x*y^2")
    assert parse_polynomial("x*x*x") == parse_polynomial("x^3")
    assert parse_polynomial("x^2x") == parse_polynomial("x^3")


def test_parse_rational_coefficients():
    p = parse_polynomial("1/2 x + 5/10 x")
    assert p == parse_polynomial("x")
    assert parse_polynomial("7/3").coefficient(0, 0) == Fraction(7, 3)


def test_parse_cancellation():
    assert parse_polynomial("x*y - x*y").is_zero()


def test_parse_errors():
    for bad in ["", "  ", "x +", "^2", "x^", "x^0", "x^-2", "* x", "x *",
                "1/0", "x++y", "(x+y)", "x + + y"]:
        with pytest.raises(ParseError):
            parse_polynomial(bad)


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariableError):
        parse_polynomial("x + z")
    assert issubclass(UnknownVariableError, ParseError)


def test_degree_cap():
    assert parse_polynomial("x^512").total_degree() == 512
    with pytest.raises(DegreeCapError):
        parse_polynomial("x^513")
    assert parse_polynomial("x^20", max_degree=25).total_degree() == 20
    with pytest.raises(DegreeCapError):
        parse_polynomial("x^26", max_degree=25)


# -- directions --------------------------------------------------------


def test_direction_repr():
    assert str(Slope(Fraction(0))) == "y = 0*x"
    assert str(Slope(Fraction(3, 2))) == "y = 3/2*x"
    assert str(VERTICAL) == "x = 0"
    assert Slope(Fraction(1)) == Slope(Fraction(1))
    assert Slope(Fraction(1)) != VERTICAL


# -- algebraic laws on random inputs ------------------------------------


def _random_poly(rng, max_terms=6, max_deg=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[(rng.randint(0, max_deg), rng.randint(0, max_deg))] = Fraction(
            rng.randint(-6, 6), rng.randint(1, 6)
        )
    return Polynomial(terms)


def test_ring_axioms_random():
    rng = random.Random(771)
    for _ in range(100):
        p, q, r = (_random_poly(rng) for _ in range(3))
        assert p + q == q + p
        assert (p + q) + r == p + (q + r)
        assert p * q == q * p
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + ZERO == p
        assert p * ONE == p
        assert p - p == ZERO


def test_order_and_initial_form_multiplicative_random():
    rng = random.Random(772)
    for _ in range(60):
        p, q = _random_poly(rng), _random_poly(rng)
        if p.is_zero() or q.is_zero():
            continue
        assert (p * q).order() == p.order() + q.order()
        assert (p * q).initial_form() == p.initial_form() * q.initial_form()


def test_evaluation_is_ring_homomorphism_random():
    rng = random.Random(773)
    for _ in range(60):
        p, q = _random_poly(rng), _random_poly(rng)
        a = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        b = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        assert (p + q)(a, b) == p(a, b) + q(a, b)
        assert (p * q)(a, b) == p(a, b) * q(a, b)


def test_linear_substitution_inverse_random():
    rng = random.Random(774)
    for _ in range(60):
        p = _random_poly(rng)
        while True:
            a, b, c, d = (rng.randint(-3, 3) for _ in range(4))
            det = a * d - b * c
            if det != 0:
                break
        q = p.substitute_linear(((a, b), (c, d)))
        inverse = (
            (Fraction(d, det), Fraction(-b, det)),
            (Fraction(-c, det), Fraction(a, det)),
        )
        assert q.substitute_linear(inverse) == p
