"""Forced periodicity of perfect (D, b, a)-coverings.

Every (D, b, a)-covering ``c`` satisfies ``(f_D - (b - a)) c = a``, so
``g = f_D - (b - a)`` periodizes it. If ``g`` has no line-polynomial factors
every covering is two-periodic; if all factors are parallel to one direction
every covering is periodic in it.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from math import gcd as igcd
from typing import Iterable, Optional

from .fibers import fiber_set
from .geometry import canonical, is_convex, outer_edge_directions
from .laurent import ExpVec, LaurentPoly2, char_poly, make_shape
from .line_factors import LineFactorReport, classify_directions, line_factors
from .unipoly import UniPoly, all_ones, gcd

GRID_STEPS = {
    "square": [(1, 0), (-1, 0), (0, 1), (0, -1)],
    "king": [(dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0)],
    "triangular": [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)],
}


def grid_ball(kind: str, r: int) -> frozenset:
    """Graph-distance ball of radius ``r`` around the origin, by BFS over grid steps."""
    if kind not in GRID_STEPS:
        raise ValueError(f"unknown grid {kind!r}; expected one of {sorted(GRID_STEPS)}")
    if r < 1:
        raise ValueError("radius must be >= 1")
    steps = GRID_STEPS[kind]
    dist = {(0, 0): 0}
    queue = deque([(0, 0)])
    while queue:
        u = queue.popleft()
        if dist[u] == r:
            continue
        for dx, dy in steps:
            w = (u[0] + dx, u[1] + dy)
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return frozenset(dist)


@dataclass(frozen=True)
class CoveringProblem:
    D: frozenset
    b: int
    a: int

    def __post_init__(self):
        object.__setattr__(self, "D", make_shape(self.D))
        if not self.D:
            raise ValueError("neighborhood must be nonempty")
        n = len(self.D)
        if not (0 <= self.b <= n and 0 <= self.a <= n):
            raise ValueError(f"need 0 <= b, a <= |D| = {n}, got b={self.b}, a={self.a}")

    @classmethod
    def grid(cls, kind: str, r: int, b: int, a: int) -> "CoveringProblem":
        return cls(grid_ball(kind, r), b, a)


class Verdict(str, Enum):
    ALL_TWO_PERIODIC = "AllTwoPeriodic"
    ALL_PERIODIC_IN_DIRECTION = "AllPeriodicInDirection"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    evidence: LineFactorReport
    periodizer: LaurentPoly2
    direction: Optional[ExpVec] = None
    note: str = ""


def periodizer(p: CoveringProblem) -> LaurentPoly2:
    return char_poly(p.D) - (p.b - p.a)


def _from_report(report: LineFactorReport, g: LaurentPoly2) -> Classification:
    dc = classify_directions(report)
    if dc.kind == "none":
        return Classification(Verdict.ALL_TWO_PERIODIC, report, g)
    if dc.kind == "single":
        return Classification(Verdict.ALL_PERIODIC_IN_DIRECTION, report, g, dc.directions[0])
    return Classification(Verdict.INCONCLUSIVE, report, g)


def _zero_periodizer(g: LaurentPoly2) -> Classification:
    # D = {0} with b - a = 1: every configuration is a covering
    return Classification(Verdict.INCONCLUSIVE, LineFactorReport(), g,
                          note="periodizer is zero; every configuration is a covering")


def classify(p: CoveringProblem) -> Classification:
    g = periodizer(p)
    if g.is_zero():
        return _zero_periodizer(g)
    return _from_report(line_factors(g), g)


def _length(phi: UniPoly) -> int:
    """``n`` such that ``phi == all_ones(n)``; raises if ``phi`` is not of that form."""
    if phi.is_zero() or any(c != 1 for c in phi.coeffs):
        raise ValueError(f"{phi} is not an all-ones polynomial")
    return len(phi.coeffs)


def _all_ones_or_zero(d: int) -> UniPoly:
    # gcd of an empty fiber family is 0 (the zero polynomial)
    return all_ones(d) if d else UniPoly()


def classify_convex(p: CoveringProblem) -> Classification:
    """Classification specialised to convex neighborhoods.

    Off-origin fibers of ``g`` are all-ones polynomials ``phi_n``; their gcd is
    ``phi_d`` with ``d`` the gcd of the lengths. With ``b == a`` a direction fails
    when ``d > 1``; otherwise it fails when ``phi_d`` shares a factor with the
    origin fiber of ``g``.
    """
    if not is_convex(p.D):
        raise ValueError("neighborhood is not convex")
    g = periodizer(p)
    if g.is_zero():
        return _zero_periodizer(g)
    edges = outer_edge_directions(g)
    failing: dict[ExpVec, UniPoly] = {}
    for v in sorted({canonical(e) for e in edges}):
        fs = fiber_set(g, v)
        if p.b == p.a:
            d = reduce(igcd, (_length(phi) for phi in fs.all_forms), 0)
            common = _all_ones_or_zero(d)
        else:
            d = reduce(igcd, (_length(phi) for phi in fs.off_origin_forms), 0)
            phi_d = _all_ones_or_zero(d)
            if phi_d.is_zero():
                common = fs.origin_form.primitive_part()
            elif fs.origin_form.is_zero():
                common = phi_d
            else:
                common = gcd(phi_d, fs.origin_form)
        if common.degree >= 1:
            failing[v] = common
    report = LineFactorReport(tuple(sorted(failing.items())))
    return _from_report(report, g)


def classify_grid(kind: str, r: int, b: int, a: int) -> Classification:
    return classify(CoveringProblem.grid(kind, r, b, a))


def admissible_constants(D: Iterable[ExpVec]):
    """All (b, a) with 0 <= b, a <= |D|."""
    n = len(make_shape(D))
    return [(b, a) for b in range(n + 1) for a in range(n + 1)]
