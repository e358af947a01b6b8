import pytest
from hypothesis import given, strategies as st

from gridcover.laurent import (
    LaurentPoly2, PolySyntaxError, add, char_poly, mul, negate, parse_poly, serialize,
)

X = LaurentPoly2.monomial((1, 0))
Y = LaurentPoly2.monomial((0, 1))
ONE = LaurentPoly2.constant(1)
ZERO = LaurentPoly2()

exps = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
polys = st.dictionaries(exps, st.integers(-20, 20), max_size=8).map(LaurentPoly2)


def test_add_examples():
    assert add(X + Y, -Y) == X
    f = parse_poly("3x - y^-2 + 7")
    assert add(f, ZERO) == f
    assert add(ONE + X * Y, ONE + X * Y) == parse_poly("2 + 2x*y")


def test_mul_examples():
    assert mul(ONE + X * Y, X + Y) == parse_poly("x + y + x^2*y + x*y^2")
    f = parse_poly("x^-1 - 4y + 2")
    assert mul(f, ONE) == f
    assert mul(f, ZERO).is_zero()


def test_big_coefficients_are_exact():
    f = LaurentPoly2.constant(10**30) + X
    assert (f * f).coeff((0, 0)) == 10**60


def test_zero_is_empty_and_no_zero_coefficients():
    assert ZERO.terms == ()
    assert (X - X).terms == ()
    assert all(c != 0 for _, c in (X + Y - X).terms)


@given(polys)
def test_additive_inverse(f):
    assert add(f, negate(f)).is_zero()


@given(polys, polys, polys)
def test_mul_commutative_associative(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)


@given(polys, polys, polys)
def test_distributive(f, g, h):
    assert f * (g + h) == f * g + f * h


@given(polys)
def test_serialize_roundtrip(f):
    text = serialize(f)
    assert parse_poly(text) == f
    assert serialize(parse_poly(text)) == text


def test_char_poly_examples():
    diamond = {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}
    assert char_poly(diamond) == parse_poly("x^-1 + y^-1 + 1 + x + y")
    assert char_poly({(0, 0)}) == ONE
    assert char_poly({(1, 0), (0, 1)}) == parse_poly("x^-1 + y^-1")
    with pytest.raises(ValueError):
        char_poly(set())


@given(st.frozensets(exps, min_size=1, max_size=12))
def test_char_poly_support(D):
    f = char_poly(D)
    assert set(f.support()) == {(-x, -y) for x, y in D}
    assert all(c == 1 for _, c in f.terms)
    assert len(f) == len(D)


def test_parse_examples():
    explicit = char_poly({(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)})
    assert parse_poly("x^-1+y^-1+1+x+y") == explicit
    f = parse_poly("3x + y + x*y^2 + x*y + x^3*y^3 + x^4*y^4")
    assert f.as_dict() == {(1, 0): 3, (0, 1): 1, (1, 2): 1, (1, 1): 1, (3, 3): 1, (4, 4): 1}
    assert parse_poly("0").is_zero()


@pytest.mark.parametrize("text, expected", [
    ("-x", {(1, 0): -1}),
    ("x*x*y", {(2, 1): 1}),
    (" 2 x ^ 3 y^-1 ", {(3, -1): 2}),
    ("x - x", {}),
    ("5", {(0, 0): 5}),
    ("x + -2", {(1, 0): 1, (0, 0): -2}),
    ("x - -2y", {(1, 0): 1, (0, 1): 2}),
    ("x^-1*y^-1 - 1 + x*y", {(-1, -1): 1, (0, 0): -1, (1, 1): 1}),
])
def test_parse_variants(text, expected):
    assert parse_poly(text).as_dict() == expected


@pytest.mark.parametrize("text", ["", "x +", "x^", "x^y", "3 4", "z", "x + + y", "x^99999999999"])
def test_parse_errors(text):
    with pytest.raises(PolySyntaxError) as err:
        parse_poly(text)
    assert err.value.pos >= 0


def test_canonical_order():
    assert serialize(parse_poly("x + y + 1 + x^-1 + y^-1")) == "x^-1 + y^-1 + 1 + y + x"
    assert serialize(parse_poly("-2x*y + 3")) == "3 - 2x*y"
