"""Two-periodic binary configurations stored on a fundamental domain.

A period lattice is given in Hermite normal form by the vectors ``(p, 0)`` and
``(s, q)`` with ``0 <= s < p``. Cells are kept in a ``(q, p)`` uint8 array so
that ``cells[j, i]`` is the cell at ``(i, j)``; row ``j`` is line ``j`` of a
pattern file (y grows downward in file order).
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Optional

import numpy as np

from .laurent import ExpVec, LaurentPoly2, char_poly, make_shape


@dataclass(frozen=True, order=True)
class PeriodLattice:
    p: int
    q: int
    s: int = 0

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError(f"periods must be positive, got p={self.p}, q={self.q}")
        if not 0 <= self.s < self.p:
            raise ValueError(f"shear must satisfy 0 <= s < p, got s={self.s}, p={self.p}")

    @property
    def area(self) -> int:
        return self.p * self.q

    def reduce(self, u: ExpVec) -> tuple[int, int]:
        """Representative ``(i, j)`` of ``u`` in the fundamental domain."""
        x, y = u
        k = y // self.q
        return ((x - k * self.s) % self.p, y - k * self.q)

    def representatives(self) -> Iterator[tuple[int, int]]:
        """Fundamental-domain cells in row-major order (j outer, i inner)."""
        for j in range(self.q):
            for i in range(self.p):
                yield (i, j)


def lattices_of_area(n: int) -> list[PeriodLattice]:
    """All Hermite-normal-form lattices of index ``n``, ordered by (p, s)."""
    return [PeriodLattice(p, n // p, s) for p in range(1, n + 1) if n % p == 0 for s in range(p)]


def lattices_up_to(area_bound: int) -> list[PeriodLattice]:
    return [L for n in range(1, area_bound + 1) for L in lattices_of_area(n)]


class TorusConfig:
    __slots__ = ("lattice", "cells")

    def __init__(self, lattice: PeriodLattice, cells):
        arr = np.asarray(cells, dtype=np.uint8)
        if arr.shape != (lattice.q, lattice.p):
            arr = arr.reshape(lattice.q, lattice.p)
        if arr.size and arr.max() > 1:
            raise ValueError("cells must be 0 or 1")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "cells", arr)

    def __setattr__(self, name, value):
        raise AttributeError("TorusConfig is immutable")

    @classmethod
    def constant(cls, lattice: PeriodLattice, value: int) -> "TorusConfig":
        return cls(lattice, np.full((lattice.q, lattice.p), value, dtype=np.uint8))

    @classmethod
    def from_function(cls, lattice: PeriodLattice, fn) -> "TorusConfig":
        """Fill the fundamental domain with ``fn(i, j)``; ``fn`` should respect the lattice."""
        cells = [[1 if fn(i, j) else 0 for i in range(lattice.p)] for j in range(lattice.q)]
        return cls(lattice, cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusConfig):
            return NotImplemented
        return self.lattice == other.lattice and np.array_equal(self.cells, other.cells)

    def __hash__(self) -> int:
        return hash((self.lattice, self.cells.tobytes()))

    def key(self) -> tuple:
        return (self.lattice, tuple(self.cells.ravel().tolist()))

    def __repr__(self) -> str:
        L = self.lattice
        rows = "/".join("".join(str(v) for v in row) for row in self.cells)
        return f"TorusConfig(p={L.p}, q={L.q}, s={L.s}, {rows})"


def cell_at(c: TorusConfig, u: ExpVec) -> int:
    i, j = c.lattice.reduce(u)
    return int(c.cells[j, i])


def neighbor_table(L: PeriodLattice, D: Iterable[ExpVec]) -> np.ndarray:
    """``(area, |D|)`` array of flat cell indices of ``u + d`` for each representative ``u``.

    Flat index of ``(i, j)`` is ``j * p + i``. Wrapped neighbors repeat indices.
    """
    D = sorted(make_shape(D))
    rows = []
    for i, j in L.representatives():
        row = []
        for dx, dy in D:
            ii, jj = L.reduce((i + dx, j + dy))
            row.append(jj * L.p + ii)
        rows.append(row)
    return np.array(rows, dtype=np.intp).reshape(L.area, len(D))


@dataclass(frozen=True)
class Counterexample:
    cell: tuple[int, int]
    observed: int
    expected: int


def verify_covering(c: TorusConfig, problem) -> Optional[Counterexample]:
    """Check the covering condition on every representative; None means it holds.

    Otherwise returns the first failing cell in row-major order.
    """
    table = neighbor_table(c.lattice, problem.D)
    flat = c.cells.ravel()
    counts = flat[table].sum(axis=1)
    for idx, (i, j) in enumerate(c.lattice.representatives()):
        target = problem.b if flat[idx] else problem.a
        if counts[idx] != target:
            return Counterexample((i, j), int(counts[idx]), target)
    return None


def consistent_constants(c: TorusConfig, D: Iterable[ExpVec]) -> Optional[tuple[Optional[int], Optional[int]]]:
    """The unique (b, a) making ``c`` a covering, or None.

    A missing symbol leaves its constant unconstrained and reported as None
    (``a`` for the all-ones configuration, ``b`` for all-zeros).
    """
    table = neighbor_table(c.lattice, D)
    flat = c.cells.ravel()
    counts = flat[table].sum(axis=1)
    ones = set(counts[flat == 1].tolist())
    zeros = set(counts[flat == 0].tolist())
    if len(ones) > 1 or len(zeros) > 1:
        return None
    b = ones.pop() if ones else None
    a = zeros.pop() if zeros else None
    return (b, a)


def periodic_product(f: LaurentPoly2, c: TorusConfig) -> np.ndarray:
    """Coefficients of ``f * c`` on the fundamental domain, shape ``(q, p)``.

    ``(f c)_u = sum_w f_w c_{u - w}``, well defined because ``c`` is periodic.
    """
    L = c.lattice
    out = np.zeros((L.q, L.p), dtype=np.int64)
    for (wx, wy), coef in f.terms:
        for i, j in L.representatives():
            ii, jj = L.reduce((i - wx, j - wy))
            out[j, i] += coef * int(c.cells[jj, ii])
    return out


def periodizer_identity_check(c: TorusConfig, problem) -> bool:
    """Whether ``f_D c == (b - a) c + a`` holds coefficient-wise."""
    lhs = periodic_product(char_poly(problem.D), c)
    rhs = (problem.b - problem.a) * c.cells.astype(np.int64) + problem.a
    return bool(np.array_equal(lhs, rhs))


def is_t_periodic(c: TorusConfig, t: ExpVec) -> bool:
    if tuple(t) == (0, 0):
        raise ValueError("zero period vector")
    tx, ty = t
    return all(cell_at(c, (i, j)) == cell_at(c, (i - tx, j - ty))
               for i, j in c.lattice.representatives())


# -- pattern files -------------------------------------------------------

class PatternFormatError(ValueError):
    pass


def format_pattern(c: TorusConfig) -> str:
    L = c.lattice
    lines = [f"{L.p} {L.q} {L.s}"]
    lines += ["".join(str(v) for v in row) for row in c.cells]
    return "\n".join(lines) + "\n"


def parse_pattern(text: str) -> TorusConfig:
    """Read ``p q s`` then ``q`` lines of ``p`` characters from ``{0, 1}``."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise PatternFormatError("empty pattern file")
    head = lines[0].split()
    if len(head) != 3:
        raise PatternFormatError(f"header must be 'p q s', got {lines[0]!r}")
    try:
        p, q, s = (int(h) for h in head)
        L = PeriodLattice(p, q, s)
    except ValueError as exc:
        raise PatternFormatError(f"bad header {lines[0]!r}: {exc}") from None
    rows = lines[1:]
    if len(rows) != q:
        raise PatternFormatError(f"expected {q} rows, got {len(rows)}")
    cells = []
    for j, row in enumerate(rows):
        if len(row) != p or set(row) - {"0", "1"}:
            raise PatternFormatError(f"row {j} must be {p} characters from 0/1, got {row!r}")
        cells.append([int(ch) for ch in row])
    return TorusConfig(L, cells)


def read_pattern(path) -> TorusConfig:
    return parse_pattern(Path(path).read_text())


def write_pattern(c: TorusConfig, path) -> None:
    Path(path).write_text(format_pattern(c))


def format_pbm(c: TorusConfig, reps: tuple[int, int] = (1, 1)) -> str:
    """Plain PBM (P1) image of the configuration, tiled ``reps`` times.

    Rows follow the pattern-file orientation. Tiling uses :func:`cell_at`, so
    sheared lattices render correctly.
    """
    L = c.lattice
    w, h = L.p * reps[0], L.q * reps[1]
    lines = ["P1", f"{w} {h}"]
    for y in range(h):
        lines.append(" ".join(str(cell_at(c, (x, y))) for x in range(w)))
    return "\n".join(lines) + "\n"


def write_pbm(c: TorusConfig, path, reps: tuple[int, int] = (1, 1)) -> None:
    Path(path).write_text(format_pbm(c, reps))
