"""Line-polynomial factors of Laurent polynomials.

A polynomial has a line-polynomial factor in direction ``v`` exactly when the
normal forms of its v-fibers share a nonconstant common factor, and such a
direction must be an outer edge of the support in both orientations. The
detector therefore only inspects :func:`candidate_line_directions`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .fibers import fiber_set, fibers, normal_form, to_line_poly
from .geometry import candidate_line_directions, canonical, is_primitive
from .laurent import ExpVec, LaurentPoly2
from .unipoly import UniPoly, exact_div, gcd_many


@dataclass(frozen=True)
class LineFactorReport:
    """(direction, greatest common fiber factor) pairs in canonical direction order."""

    entries: tuple[tuple[ExpVec, UniPoly], ...] = ()

    @property
    def directions(self) -> list[ExpVec]:
        return [d for d, _ in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def as_dict(self) -> dict[ExpVec, UniPoly]:
        return dict(self.entries)


def line_factor_in_direction(f: LaurentPoly2, v: ExpVec) -> Optional[UniPoly]:
    """Greatest common factor of the v-fiber normal forms, or None if it is a unit.

    The normal forms are read along the canonical orientation of ``v``.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if not is_primitive(tuple(v)):
        raise ValueError(f"direction {v} is not primitive")
    fs = fiber_set(f, canonical(v))
    g = gcd_many(sorted(fs.all_forms, key=lambda p: p.coeffs))
    return g if g.degree >= 1 else None


def line_factors(f: LaurentPoly2) -> LineFactorReport:
    if f.is_zero():
        raise ValueError("zero polynomial")
    entries = []
    for v in sorted(candidate_line_directions(f)):
        phi = line_factor_in_direction(f, v)
        if phi is not None:
            entries.append((v, phi))
    return LineFactorReport(tuple(entries))


def divide_by_line_poly(f: LaurentPoly2, v: ExpVec, phi: UniPoly) -> Optional[LaurentPoly2]:
    """Quotient ``f / phi(X^v)`` in the Laurent ring, or None when it does not divide.

    Division proceeds fiber by fiber: ``phi(X^v)`` divides ``f`` iff it divides
    every fiber's normal form, and the quotient is reassembled at the fiber bases.
    """
    if phi.is_zero():
        raise ZeroDivisionError("division by zero")
    if f.is_zero():
        return LaurentPoly2()
    v = canonical(v)
    quotient = LaurentPoly2()
    for base, fib in fibers(f, v):
        try:
            q = exact_div(normal_form(fib, v), phi)
        except ValueError:
            return None
        quotient = quotient + to_line_poly(q, v, base)
    return quotient


@dataclass(frozen=True)
class DirectionClass:
    """Outcome of :func:`classify_directions`.

    ``kind`` is ``"none"``, ``"single"`` or ``"multiple"``.
    """

    kind: str
    directions: tuple[ExpVec, ...] = ()


def classify_directions(report: LineFactorReport) -> DirectionClass:
    dirs = tuple(sorted({canonical(d) for d in report.directions}))
    if not dirs:
        return DirectionClass("none")
    if len(dirs) == 1:
        return DirectionClass("single", dirs)
    return DirectionClass("multiple", dirs)
