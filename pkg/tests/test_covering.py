import random

import pytest

from conftest import random_convex_shape
from gridcover.covering import (
    CoveringProblem, Verdict, admissible_constants, classify, classify_convex, grid_ball, periodizer,
)
from gridcover.geometry import is_convex
from gridcover.laurent import char_poly, parse_poly
from gridcover.unipoly import UniPoly

ONE_PLUS_T = UniPoly([1, 1])


def test_grid_ball_sizes():
    assert grid_ball("square", 1) == {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}
    assert grid_ball("king", 1) == {(x, y) for x in (-1, 0, 1) for y in (-1, 0, 1)}
    assert grid_ball("triangular", 1) == grid_ball("square", 1) | {(1, 1), (-1, -1)}
    for r in range(1, 5):
        assert grid_ball("square", r) == {(x, y) for x in range(-r, r + 1)
                                          for y in range(-r, r + 1) if abs(x) + abs(y) <= r}
        assert len(grid_ball("king", r)) == (2 * r + 1) ** 2
        # hexagonal ball: 3r(r+1) + 1 cells
        assert len(grid_ball("triangular", r)) == 3 * r * (r + 1) + 1
    with pytest.raises(ValueError):
        grid_ball("square", 0)
    with pytest.raises(ValueError):
        grid_ball("hex", 1)


def test_problem_validation():
    with pytest.raises(ValueError):
        CoveringProblem(grid_ball("square", 1), 6, 0)
    with pytest.raises(ValueError):
        CoveringProblem(frozenset(), 0, 0)
    with pytest.raises(ValueError):
        CoveringProblem(grid_ball("square", 1), 1, -1)


def test_periodizer_examples():
    assert periodizer(CoveringProblem.grid("square", 1, 3, 3)) == parse_poly("x^-1 + y^-1 + 1 + x + y")
    assert periodizer(CoveringProblem.grid("square", 1, 2, 1)) == parse_poly("x^-1 + y^-1 + x + y")
    assert periodizer(CoveringProblem.grid("triangular", 1, 2, 0)) == parse_poly(
        "x^-1*y^-1 + x^-1 + y^-1 - 1 + x + y + x*y")
    # constant term appears even when 0 is not in D
    assert periodizer(CoveringProblem({(1, 0), (0, 1)}, 2, 0)) == parse_poly("x^-1 + y^-1 - 2")


@pytest.mark.parametrize("b, a", [(b, a) for b in range(6) for a in range(6) if b - a != 1])
def test_square_r1_two_periodic(b, a):
    assert classify(CoveringProblem.grid("square", 1, b, a)).verdict is Verdict.ALL_TWO_PERIODIC


def test_square_r1_boundary():
    c = classify(CoveringProblem.grid("square", 1, 2, 1))
    assert c.verdict is Verdict.INCONCLUSIVE
    assert c.evidence.entries == (((1, -1), ONE_PLUS_T), ((1, 1), ONE_PLUS_T))


def test_king_r2_two_periodic():
    for b, a in [(3, 1), (1, 3), (25, 0), (7, 8)]:
        assert classify(CoveringProblem.grid("king", 2, b, a)).verdict is Verdict.ALL_TWO_PERIODIC


def test_king_equal_constants_consistent():
    for r in (1, 2):
        c = classify(CoveringProblem.grid("king", r, 2, 2))
        dirs = {d for d, _ in c.evidence.entries}
        if not dirs:
            assert c.verdict is Verdict.ALL_TWO_PERIODIC
        elif len(dirs) == 1:
            assert c.verdict is Verdict.ALL_PERIODIC_IN_DIRECTION
        else:
            assert c.verdict is Verdict.INCONCLUSIVE
        assert c.periodizer == periodizer(CoveringProblem.grid("king", r, 2, 2))


def test_single_direction_verdict():
    # D = horizontal bar of 3 cells, b = a: g = x^-1 + 1 + x, one direction only
    c = classify(CoveringProblem({(-1, 0), (0, 0), (1, 0)}, 1, 1))
    assert c.verdict is Verdict.ALL_PERIODIC_IN_DIRECTION
    assert c.direction == (1, 0)


def test_zero_periodizer():
    c = classify(CoveringProblem({(0, 0)}, 1, 0))
    assert c.periodizer.is_zero()
    assert c.verdict is Verdict.INCONCLUSIVE
    assert classify_convex(CoveringProblem({(0, 0)}, 1, 0)).verdict is Verdict.INCONCLUSIVE


def test_convex_examples():
    for b, a in admissible_constants(grid_ball("square", 2)):
        assert classify_convex(CoveringProblem.grid("square", 2, b, a)).verdict is Verdict.ALL_TWO_PERIODIC
    for b, a in admissible_constants(grid_ball("triangular", 1)):
        v = classify_convex(CoveringProblem.grid("triangular", 1, b, a)).verdict
        assert (v is Verdict.ALL_TWO_PERIODIC) == (b - a != -1)
    for b, a in [(0, 0), (5, 3), (19, 0), (2, 7)]:
        assert classify_convex(CoveringProblem.grid("triangular", 2, b, a)).verdict is Verdict.ALL_TWO_PERIODIC


def test_convex_rejects_nonconvex():
    with pytest.raises(ValueError):
        classify_convex(CoveringProblem({(0, 0), (2, 0)}, 1, 1))


def test_convex_agrees_on_random_shapes():
    rng = random.Random(17)
    for _ in range(20):
        D = random_convex_shape(rng, box=6)
        assert is_convex(D)
        n = len(D)
        for b, a in {(0, 0), (n, 0), (min(1, n), min(2, n)), (min(2, n), 1), (n, n)}:
            p = CoveringProblem(D, b, a)
            general, special = classify(p), classify_convex(p)
            assert general.verdict is special.verdict
            assert general.evidence == special.evidence


def test_evidence_is_periodizer():
    for kind in ("square", "king", "triangular"):
        p = CoveringProblem.grid(kind, 1, 2, 1)
        assert classify(p).periodizer == char_poly(p.D) - 1
