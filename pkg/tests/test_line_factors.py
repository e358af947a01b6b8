import random

import pytest

from conftest import DIRECTIONS, random_line_poly, random_poly
from gridcover.fibers import normal_form
from gridcover.geometry import canonical, candidate_line_directions
from gridcover.laurent import LaurentPoly2, parse_poly
from gridcover.line_factors import (
    LineFactorReport, classify_directions, divide_by_line_poly, line_factor_in_direction, line_factors,
)
from gridcover.unipoly import UniPoly, divides

DIAGONAL_MIX = "3x + y + x*y^2 + x*y + x^3*y^3 + x^4*y^4"
SQUARE_B_MINUS_A_1 = "x^-1 + y^-1 + x + y"


def P(*c):
    return UniPoly(c)


def test_line_factor_in_direction_examples():
    f = parse_poly("x + y + x^2*y + x*y^2")
    assert line_factor_in_direction(f, (1, 1)) == P(1, 1)
    assert line_factor_in_direction(parse_poly(DIAGONAL_MIX), (1, 1)) is None
    assert line_factor_in_direction(parse_poly(SQUARE_B_MINUS_A_1), (1, 1)) == P(1, 1)
    with pytest.raises(ValueError):
        line_factor_in_direction(LaurentPoly2(), (1, 0))


def test_line_factors_examples():
    for k in (0, 2, 3, -2):
        g = parse_poly(SQUARE_B_MINUS_A_1) + (1 - k)
        assert line_factors(g).entries == ()
    report = line_factors(parse_poly(SQUARE_B_MINUS_A_1))
    assert report.entries == (((1, -1), P(1, 1)), ((1, 1), P(1, 1)))
    assert line_factors(parse_poly("7x^3*y")).entries == ()


def test_repeated_factor_is_greatest():
    f = parse_poly("1 + x") * parse_poly("1 + x") * parse_poly("2 + y")
    assert line_factor_in_direction(f, (1, 0)) == P(1, 2, 1)
    assert line_factor_in_direction(f, (0, 1)) == P(2, 1)
    assert classify_directions(line_factors(f)).kind == "multiple"


def test_classify_directions():
    assert classify_directions(LineFactorReport()).kind == "none"
    one = classify_directions(LineFactorReport((((1, 2), P(1, 1)),)))
    assert one.kind == "single" and one.directions == ((1, 2),)
    two = classify_directions(LineFactorReport((((1, 0), P(1, 1)), ((0, 1), P(1, 1)))))
    assert two.kind == "multiple"


def test_divide_by_line_poly():
    f = parse_poly("x + y + x^2*y + x*y^2")
    assert divide_by_line_poly(f, (1, 1), P(1, 1)) == parse_poly("x + y")
    assert divide_by_line_poly(f, (1, -1), P(1, 1)) * parse_poly("1 + x*y^-1") == f
    assert divide_by_line_poly(f, (1, 0), P(1, 1)) is None


def test_constructive_soundness():
    rng = random.Random(5)
    for _ in range(300):
        v = rng.choice(DIRECTIONS)
        phi = random_line_poly(rng, v)
        g = random_poly(rng, box=5, max_terms=8)
        f = phi * g
        w = canonical(v)
        report = line_factors(f).as_dict()
        assert w in report
        assert divides(normal_form(phi, w), report[w])


def test_reported_factors_divide():
    rng = random.Random(6)
    for _ in range(300):
        v = rng.choice(DIRECTIONS)
        f = random_line_poly(rng, v, max_degree=3) * random_poly(rng, box=4, max_terms=6)
        if rng.random() < 0.3:
            f = random_poly(rng)
        if f.is_zero():
            continue
        cands = candidate_line_directions(f)
        for w, phi in line_factors(f).entries:
            assert w in cands
            assert phi.degree >= 1 and phi.content() == 1 and phi.lead > 0
            q = divide_by_line_poly(f, w, phi)
            assert q is not None
            assert q * LaurentPoly2({(k * w[0], k * w[1]): c for k, c in enumerate(phi.coeffs)}) == f
