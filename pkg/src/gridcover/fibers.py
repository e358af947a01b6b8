"""Fibers of a Laurent polynomial along a direction and their normal forms.

For a primitive direction ``v`` the terms of ``f`` split by the line
``u + Zv`` they sit on. The line is identified by ``u_x*v_y - u_y*v_x``, which
is constant along ``u + Zv`` and zero exactly on the line through the origin.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import canonical, is_primitive
from .laurent import ExpVec, LaurentPoly2
from .unipoly import UniPoly


def line_key(u: ExpVec, v: ExpVec) -> int:
    return u[0] * v[1] - u[1] * v[0]


def position(u: ExpVec, v: ExpVec, base: ExpVec) -> int:
    """Integer ``k`` with ``u = base + k*v`` (both points on one v-line)."""
    dx, dy = u[0] - base[0], u[1] - base[1]
    if v[0]:
        k, r = divmod(dx, v[0])
    else:
        k, r = divmod(dy, v[1])
    if r or (dx, dy) != (k * v[0], k * v[1]):
        raise ValueError(f"{u} is not on the line {base} + Z{v}")
    return k


def _check(f: LaurentPoly2, v: ExpVec):
    if f.is_zero():
        raise ValueError("zero polynomial has no fibers")
    if not is_primitive(tuple(v)):
        raise ValueError(f"direction {v} is not primitive")


def fibers(f: LaurentPoly2, v: ExpVec) -> list[tuple[ExpVec, LaurentPoly2]]:
    """Nonzero v-fibers of ``f`` as ``(base, fiber)`` pairs, ordered by line key.

    The base is the support point of the fiber furthest back along ``v``.
    """
    _check(f, v)
    groups: dict[int, list[tuple[ExpVec, int]]] = {}
    for u, c in f.terms:
        groups.setdefault(line_key(u, v), []).append((u, c))
    out = []
    for key in sorted(groups):
        terms = groups[key]
        base = min((u for u, _ in terms), key=lambda u: u[0] * v[0] + u[1] * v[1])
        out.append((base, LaurentPoly2(terms)))
    return out


def normal_form(fiber: LaurentPoly2, v: ExpVec) -> UniPoly:
    """Normal form of a monomial or a line polynomial in direction ``v``.

    Writing the fiber as ``X^u (a_0 + a_1 t + ... + a_n t^n)`` with ``t = X^v``
    and ``a_0, a_n != 0``, returns ``a_0 + ... + a_n t^n``.
    """
    _check(fiber, v)
    pts = fiber.support()
    keys = {line_key(u, v) for u in pts}
    if len(keys) != 1:
        raise ValueError("fiber is not supported on a single line")
    base = min(pts, key=lambda u: u[0] * v[0] + u[1] * v[1])
    coeffs: dict[int, int] = {}
    for u, c in fiber.terms:
        coeffs[position(u, v, base)] = c
    n = max(coeffs)
    return UniPoly(coeffs.get(k, 0) for k in range(n + 1))


def to_line_poly(p: UniPoly, v: ExpVec, base: ExpVec = (0, 0)) -> LaurentPoly2:
    """Re-expand ``p(t)`` with ``t = X^v`` as ``X^base * p(X^v)``."""
    return LaurentPoly2(
        ((base[0] + k * v[0], base[1] + k * v[1]), c) for k, c in enumerate(p.coeffs) if c
    )


@dataclass(frozen=True)
class FiberSet:
    direction: ExpVec
    all_forms: frozenset
    off_origin_forms: frozenset
    origin_form: UniPoly = field(default_factory=UniPoly)


def _line_forms(f: LaurentPoly2, v: ExpVec) -> dict[int, UniPoly]:
    """Normal form of every nonzero v-fiber, keyed by line."""
    vx, vy = v
    norm = vx * vx + vy * vy
    lines: dict[int, dict[int, int]] = {}
    for (ux, uy), c in f.terms:
        # u.v steps by |v|^2 between neighbors on a line
        lines.setdefault(ux * vy - uy * vx, {})[ux * vx + uy * vy] = c
    out = {}
    for key, pts in lines.items():
        lo, hi = min(pts), max(pts)
        out[key] = UniPoly(pts.get(k, 0) for k in range(lo, hi + 1, norm))
    return out


def fiber_set(f: LaurentPoly2, v: ExpVec) -> FiberSet:
    """Distinct normal forms of the v-fibers of ``f``, split by the origin line."""
    _check(f, v)
    forms = _line_forms(f, v)
    origin = forms.pop(0, UniPoly())
    off = frozenset(forms.values())
    all_forms = off | {origin} if not origin.is_zero() else off
    return FiberSet(canonical(v), all_forms, off, origin)
