"""Convex-hull geometry of finite subsets of Z^2.

Directions are plain ``(dx, dy)`` tuples. A *directed* direction keeps its
sign; the *undirected* canonical form has ``dx > 0`` or ``dx == 0, dy > 0``.

For a direction ``v`` the half-plane ``H_v`` lies to the right of ``v`` when
walking along it, and ``l_v`` is the line through 0 parallel to ``v``.
A set ``D`` has an outer edge in direction ``v`` when it sits in a translate of
the closed half-plane and the boundary line carries at least two points of
``D``. Walking the convex hull clockwise produces exactly these directions.
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable

from .laurent import ExpVec, LaurentPoly2


def cross(o: ExpVec, a: ExpVec, b: ExpVec) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def primitive(v: ExpVec) -> ExpVec:
    """Primitive vector parallel to ``v`` with the same orientation."""
    x, y = v
    g = gcd(x, y)
    if g == 0:
        raise ValueError("zero vector has no direction")
    return (x // g, y // g)


def is_primitive(v: ExpVec) -> bool:
    return v != (0, 0) and gcd(v[0], v[1]) == 1


def canonical(v: ExpVec) -> ExpVec:
    """Undirected canonical form of a direction."""
    x, y = primitive(v)
    if x < 0 or (x == 0 and y < 0):
        return (-x, -y)
    return (x, y)


def convex_hull(points: Iterable[ExpVec]) -> list[ExpVec]:
    """Strict hull vertices in counter-clockwise order (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list[ExpVec] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[ExpVec] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _edge_directions(points: Iterable[ExpVec]) -> set[ExpVec]:
    hull = convex_hull(points)
    if len(hull) < 2:
        return set()
    if len(hull) == 2:
        # segment: both orientations are edges
        d = primitive((hull[1][0] - hull[0][0], hull[1][1] - hull[0][1]))
        return {d, (-d[0], -d[1])}
    out = set()
    n = len(hull)
    # clockwise traversal = reversed ccw order
    for i in range(n):
        a, b = hull[i], hull[(i + 1) % n]
        out.add(primitive((a[0] - b[0], a[1] - b[1])))
    return out


def outer_edge_directions(f: LaurentPoly2) -> set[ExpVec]:
    """Directed outer-edge directions of the support of ``f``."""
    if f.is_zero():
        raise ValueError("zero polynomial has no support")
    return _edge_directions(f.support())


def shape_outer_edge_directions(D: Iterable[ExpVec]) -> set[ExpVec]:
    return _edge_directions(D)


def supporting_line(points: Iterable[ExpVec], v: ExpVec) -> list[ExpVec]:
    """Points of ``points`` on the extreme line parallel to ``v`` on the H_v side.

    With ``v_perp = (vy, -vx)`` the set lies in ``{p : <p, v_perp> >= c}``
    and ``c`` is attained on the returned points; the boundary meets one point
    (a vertex) or two or more (an outer edge).
    """
    pts = list(points)
    vx, vy = v
    vals = [p[0] * vy - p[1] * vx for p in pts]
    c = min(vals)
    return [p for p, s in zip(pts, vals) if s == c]


def candidate_line_directions(f: LaurentPoly2) -> set[ExpVec]:
    """Undirected directions ``v`` for which both ``v`` and ``-v`` are outer edges."""
    dirs = outer_edge_directions(f)
    return {canonical(d) for d in dirs if (-d[0], -d[1]) in dirs}


def in_hull(hull: list[ExpVec], p: ExpVec) -> bool:
    """Closed membership test against a ccw hull from :func:`convex_hull`."""
    n = len(hull)
    if n == 1:
        return p == hull[0]
    if n == 2:
        a, b = hull
        return (cross(a, b, p) == 0
                and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))
    return all(cross(hull[i], hull[(i + 1) % n], p) >= 0 for i in range(n))


def is_convex(D: Iterable[ExpVec]) -> bool:
    """True when ``D`` contains every lattice point of its real convex hull."""
    return _is_convex(frozenset(D))


@lru_cache(maxsize=1024)
def _is_convex(pts: frozenset) -> bool:
    if not pts:
        raise ValueError("empty shape")
    hull = convex_hull(pts)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            if (x, y) not in pts and in_hull(hull, (x, y)):
                return False
    return True
