import random

import pytest

from gridcover.laurent import LaurentPoly2

DIRECTIONS = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (1, -2), (2, -1), (1, 3), (3, -1)]


def random_poly(rng: random.Random, box: int = 7, max_terms: int = 10, coeff: int = 5) -> LaurentPoly2:
    """Nonzero polynomial with support in ``[0, box)^2``."""
    while True:
        f = LaurentPoly2({(rng.randrange(box), rng.randrange(box)): rng.randint(-coeff, coeff)
                          for _ in range(rng.randint(1, max_terms))})
        if not f.is_zero():
            return f


def random_line_poly(rng: random.Random, v, max_degree: int = 6, coeff: int = 5) -> LaurentPoly2:
    """Line polynomial ``sum a_k X^(k v)`` with nonzero end coefficients and degree >= 1."""
    n = rng.randint(1, max_degree)
    cs = [rng.randint(-coeff, coeff) for _ in range(n + 1)]
    cs[0] = cs[0] or 1
    cs[-1] = cs[-1] or -1
    return LaurentPoly2({(k * v[0], k * v[1]): c for k, c in enumerate(cs) if c})


def fits_box(f: LaurentPoly2, box: int = 7) -> bool:
    xs = [u[0] for u in f.support()]
    ys = [u[1] for u in f.support()]
    return max(xs) - min(xs) < box and max(ys) - min(ys) < box


def normalize(f: LaurentPoly2) -> LaurentPoly2:
    """Translate so the support starts at the origin corner."""
    xs = [u[0] for u in f.support()]
    ys = [u[1] for u in f.support()]
    return f.shift((-min(xs), -min(ys)))


def oracle_corpus(n: int, seed: int = 2024):
    """Random polynomials in a 7x7 box.

    Cycles through plain random supports, products carrying a line factor, and
    such products with one coefficient nudged (parallel edges kept, factor
    usually destroyed).
    """
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        kind = len(out) % 3
        if kind == 0:
            out.append(random_poly(rng))
            continue
        v = rng.choice(DIRECTIONS)
        f = random_line_poly(rng, v, max_degree=3, coeff=3) * random_poly(rng, box=4, max_terms=5, coeff=3)
        if f.is_zero() or not fits_box(f):
            continue
        if kind == 2:
            u = rng.choice(f.support())
            f = f + LaurentPoly2.monomial(u, rng.choice([-1, 1]))
            if f.is_zero():
                continue
        out.append(normalize(f))
    return out


@pytest.fixture
def rng():
    return random.Random(12345)


def random_convex_shape(rng: random.Random, box: int = 9, max_seeds: int = 6) -> frozenset:
    """Lattice points of the hull of a few random points in ``[0, box)^2``."""
    from gridcover.geometry import convex_hull, in_hull

    seeds = {(rng.randrange(box), rng.randrange(box)) for _ in range(rng.randint(1, max_seeds))}
    hull = convex_hull(seeds)
    return frozenset((x, y) for x in range(box) for y in range(box) if in_hull(hull, (x, y)))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
