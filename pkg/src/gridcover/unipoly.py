"""Univariate integer polynomials in ``t``.

Coefficients are stored constant term first with no trailing zeros; the zero
polynomial has no coefficients. All algorithms stay in the integers: gcds
use the primitive remainder sequence and divisibility uses pseudo-division.
"""
from __future__ import annotations

from functools import lru_cache, reduce
from math import gcd as igcd
from typing import Iterable, Sequence


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def constant(cls, c: int) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "UniPoly":
        return cls([0] * n + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_unit(self) -> bool:
        """Nonzero constant (a unit over the rationals)."""
        return len(self.coeffs) == 1

    def content(self) -> int:
        return reduce(igcd, self.coeffs, 0)

    def primitive_part(self) -> "UniPoly":
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lead < 0:
            c = -c
        return UniPoly(a // c for a in self.coeffs)

    def __call__(self, t):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * t + a
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> "UniPoly":
        return UniPoly(-a for a in self.coeffs)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, int):
            return UniPoly(a * other for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_unipoly(self)

    def __repr__(self) -> str:
        return f"UniPoly({list(self.coeffs)})"


def format_unipoly(p: UniPoly, var: str = "t") -> str:
    """Ascending-degree text, e.g. ``1 + t + t^2`` or ``1 - t``."""
    if p.is_zero():
        return "0"
    parts = []
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        mag = abs(a)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
        if not parts:
            parts.append(("-" if a < 0 else "") + body)
        else:
            parts.append(("- " if a < 0 else "+ ") + body)
    return " ".join(parts)


def pseudo_rem(a: UniPoly, b: UniPoly) -> UniPoly:
    """Pseudo-remainder of ``a`` by nonzero ``b``, scaled by powers of lead(b)."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-division by zero polynomial")
    r = list(a.coeffs)
    db = b.degree
    lb = b.lead
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [lb * x for x in r]
        for j, bc in enumerate(b.coeffs):
            r[shift + j] -= lr * bc
        while r and r[-1] == 0:
            r.pop()
    return UniPoly(r)


def exact_div(a: UniPoly, b: UniPoly) -> UniPoly:
    """Quotient ``a / b`` when it exists in Z[t]; raises ValueError otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    r = list(a.coeffs)
    db = b.degree
    lb = b.lead
    q = [0] * max(len(r) - db, 0)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        c, m = divmod(r[-1], lb)
        if m:
            raise ValueError("division is not exact over the integers")
        q[shift] = c
        for j, bc in enumerate(b.coeffs):
            r[shift + j] -= c * bc
        while r and r[-1] == 0:
            r.pop()
    if r:
        raise ValueError("division leaves a remainder")
    return UniPoly(q)


def gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Greatest common divisor over Q, normalized to content 1 and positive lead."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p.primitive_part(), q.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero():
        a, b = b, pseudo_rem(a, b).primitive_part()
    # the remainder sequence ends in a constant when the inputs are coprime
    if a.degree == 0:
        return UniPoly.constant(1)
    return a


def gcd_many(ps: Sequence[UniPoly]) -> UniPoly:
    """Fold of :func:`gcd` over a list; zero entries are skipped."""
    nonzero = [p for p in ps if not p.is_zero()]
    if not nonzero:
        raise ValueError("gcd of an all-zero list is undefined")
    g = nonzero[0].primitive_part()
    for p in nonzero[1:]:
        if g.degree == 0:
            break
        g = gcd(g, p)
    if g.degree == 0:
        return UniPoly.constant(1)
    return g


def divides(p: UniPoly, q: UniPoly) -> bool:
    """True iff ``p`` divides ``q`` over Q."""
    if p.is_zero():
        raise ValueError("zero polynomial divides nothing")
    return pseudo_rem(q, p).is_zero()


def all_ones(n: int) -> UniPoly:
    """``1 + t + ... + t^(n-1)``."""
    if n < 1:
        raise ValueError("all_ones needs n >= 1")
    return UniPoly([1] * n)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> UniPoly:
    """d-th cyclotomic polynomial via exact division of t^d - 1."""
    if d < 1:
        raise ValueError("cyclotomic needs d >= 1")
    num = UniPoly([-1] + [0] * (d - 1) + [1])
    for e in range(1, d):
        if d % e == 0:
            num = exact_div(num, cyclotomic(e))
    return num
