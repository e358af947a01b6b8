"""Two-variable Laurent polynomials with integer coefficients.

A polynomial is stored as a sorted tuple of ``((x, y), coeff)`` pairs with no
zero coefficients, so instances are hashable and compare by value.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Tuple

ExpVec = Tuple[int, int]
Shape = frozenset  # frozenset of ExpVec

MAX_EXPONENT = 10**9


class PolySyntaxError(ValueError):
    """Raised by :func:`parse_poly` on malformed input."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


class LaurentPoly2:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ExpVec, int] | Iterable[tuple[ExpVec, int]] = ()):
        acc: dict[ExpVec, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (ex, ey), c in items:
            key = (int(ex), int(ey))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = tuple(sorted((k, c) for k, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def monomial(cls, u: ExpVec, coeff: int = 1) -> "LaurentPoly2":
        return cls({u: coeff})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    # -- container protocol -------------------------------------------------
    @property
    def terms(self) -> tuple[tuple[ExpVec, int], ...]:
        """Terms in canonical lexicographic order on (x, y)."""
        return self._terms

    def as_dict(self) -> dict[ExpVec, int]:
        return dict(self._terms)

    def support(self) -> list[ExpVec]:
        return [k for k, _ in self._terms]

    def coeff(self, u: ExpVec) -> int:
        return dict(self._terms).get(tuple(u), 0)

    def __iter__(self) -> Iterator[tuple[ExpVec, int]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.constant(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    # -- ring operations ----------------------------------------------------
    def __add__(self, other) -> "LaurentPoly2":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, c in other._terms:
            acc[k] = acc.get(k, 0) + c
        return LaurentPoly2(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2((k, -c) for k, c in self._terms)

    def __sub__(self, other) -> "LaurentPoly2":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly2":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly2":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[ExpVec, int] = {}
        for (ax, ay), ac in self._terms:
            for (bx, by), bc in other._terms:
                key = (ax + bx, ay + by)
                acc[key] = acc.get(key, 0) + ac * bc
        return LaurentPoly2(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials; use shift()")
        result = LaurentPoly2.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, u: ExpVec) -> "LaurentPoly2":
        """Multiply by the monomial X^u."""
        ux, uy = u
        return LaurentPoly2(((x + ux, y + uy), c) for (x, y), c in self._terms)

    # -- text ---------------------------------------------------------------
    def __str__(self) -> str:
        return serialize(self)

    def __repr__(self) -> str:
        return f"LaurentPoly2({serialize(self)!r})"


def _coerce(other):
    if isinstance(other, LaurentPoly2):
        return other
    if isinstance(other, int):
        return LaurentPoly2.constant(other)
    return NotImplemented


def add(f: LaurentPoly2, g: LaurentPoly2) -> LaurentPoly2:
    return f + g


def negate(f: LaurentPoly2) -> LaurentPoly2:
    return -f


def mul(f: LaurentPoly2, g: LaurentPoly2) -> LaurentPoly2:
    return f * g


def make_shape(points: Iterable[ExpVec]) -> frozenset:
    return frozenset((int(x), int(y)) for x, y in points)


def char_poly(D: Iterable[ExpVec]) -> LaurentPoly2:
    """Characteristic polynomial of a shape: sum of X^(-u) over u in D."""
    D = make_shape(D)
    if not D:
        raise ValueError("characteristic polynomial of an empty shape")
    return LaurentPoly2({(-x, -y): 1 for x, y in D})


def shape_of_char_poly(f: LaurentPoly2) -> frozenset:
    """Read the shape back off a characteristic polynomial (negated support)."""
    if f.is_zero():
        raise ValueError("zero polynomial has no shape")
    return frozenset((-x, -y) for x, y in f.support())


# -- serialization --------------------------------------------------------

def _monomial_text(x: int, y: int) -> str:
    parts = []
    for var, e in (("x", x), ("y", y)):
        if e == 0:
            continue
        parts.append(var if e == 1 else f"{var}^{e}")
    return "*".join(parts)


def serialize(f: LaurentPoly2) -> str:
    """Canonical text form, e.g. ``x^-1 + y^-1 + 1 + y + x``."""
    if f.is_zero():
        return "0"
    out = []
    for i, ((x, y), c) in enumerate(f.terms):
        mono = _monomial_text(x, y)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


class _Parser:
    """Recursive-descent parser for the polynomial grammar.

    poly   := term (("+"|"-") term)*
    term   := coeff? factor*
    factor := ("x"|"y") ("^" int)? ("*")?
    int    := "-"? digit+
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _error(self, msg: str):
        raise PolySyntaxError(msg, self.text, self.pos)

    def _int(self) -> int:
        self._skip_ws()
        start = self.pos
        neg = False
        if self._peek() == "-":
            neg = True
            self.pos += 1
            self._skip_ws()
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            self.pos = start
            self._error("expected integer")
        value = int(self.text[digits_start:self.pos])
        return -value if neg else value

    def parse(self) -> LaurentPoly2:
        if not self.text.strip():
            self._error("empty polynomial")
        acc: dict[ExpVec, int] = {}
        sign = 1
        if self._peek() in "+-" and self._peek():
            sign = -1 if self._peek() == "-" else 1
            self.pos += 1
        while True:
            (ex, ey), c = self._term()
            acc[(ex, ey)] = acc.get((ex, ey), 0) + sign * c
            ch = self._peek()
            if ch == "":
                break
            if ch not in "+-":
                self._error(f"unexpected character {ch!r}")
            sign = -1 if ch == "-" else 1
            self.pos += 1
        return LaurentPoly2(acc)

    def _signed_digit_ahead(self) -> bool:
        if self._peek() != "-":
            return False
        rest = self.text[self.pos + 1:].lstrip()
        return rest[:1].isdigit()

    def _term(self) -> tuple[ExpVec, int]:
        coeff = 1
        seen = False
        if self._peek().isdigit() or self._signed_digit_ahead():
            coeff = self._int()
            seen = True
            if self._peek() == "*":
                self.pos += 1
        ex = ey = 0
        while self._peek() in ("x", "y") and self._peek():
            var = self._peek()
            self.pos += 1
            e = 1
            if self._peek() == "^":
                self.pos += 1
                epos = self.pos
                e = self._int()
                if abs(e) > MAX_EXPONENT:
                    self.pos = epos
                    self._error(f"exponent {e} exceeds {MAX_EXPONENT}")
            if var == "x":
                ex += e
            else:
                ey += e
            seen = True
            if self._peek() == "*":
                self.pos += 1
        if not seen:
            self._error("expected coefficient or variable")
        if abs(ex) > MAX_EXPONENT or abs(ey) > MAX_EXPONENT:
            self._error("accumulated exponent out of range")
        return (ex, ey), coeff


def parse_poly(text: str) -> LaurentPoly2:
    """Parse polynomial text such as ``"3x + y + x*y^2"`` or ``"x^-1+y^-1+1"``."""
    return _Parser(text).parse()
