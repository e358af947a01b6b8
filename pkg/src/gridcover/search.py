"""Bounded search for two-periodic (D, b, a)-coverings.

Lattices are tried in order of increasing area (then ``p``, then ``s``). On each
lattice a depth-first backtracker assigns cells in row-major order, value 0
before 1, with forward checking on every neighborhood count. A search that
finds nothing reports the bound it exhausted; it never claims that no
covering exists.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np

from .torus import PeriodLattice, TorusConfig, lattices_up_to, neighbor_table

HARD_CAP = 36
ENV_CAP = "GRIDCOVER_MAX_AREA"


class CapExceeded(ValueError):
    pass


def hard_cap() -> int:
    """Cell cap, lowered (never raised) by the GRIDCOVER_MAX_AREA variable."""
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return HARD_CAP
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_CAP} must be an integer, got {raw!r}") from None
    return max(1, min(HARD_CAP, value))


@dataclass
class SearchStats:
    lattices_tried: int = 0
    nodes: int = 0


def _solutions(problem, L: PeriodLattice, stats: SearchStats) -> Iterator[TorusConfig]:
    n = L.area
    table = neighbor_table(L, problem.D)
    # rev[w] = [(u, multiplicity of w in ball(u))]
    rev: list[dict[int, int]] = [dict() for _ in range(n)]
    for u in range(n):
        for w in table[u]:
            rev[int(w)][u] = rev[int(w)].get(u, 0) + 1
    rev_items = [list(r.items()) for r in rev]
    b, a = problem.b, problem.a
    lo, hi = min(b, a), max(b, a)
    ones = [0] * n
    free = [table.shape[1]] * n
    value = [-1] * n

    def ok(u: int) -> bool:
        if value[u] < 0:
            return lo <= ones[u] + free[u] and ones[u] <= hi
        target = b if value[u] else a
        return ones[u] <= target <= ones[u] + free[u]

    def place(w: int, val: int):
        value[w] = val
        for u, m in rev_items[w]:
            free[u] -= m
            if val:
                ones[u] += m

    def unplace(w: int, val: int):
        for u, m in rev_items[w]:
            free[u] += m
            if val:
                ones[u] -= m
        value[w] = -1

    def rec(w: int):
        if w == n:
            yield TorusConfig(L, np.array(value, dtype=np.uint8).reshape(L.q, L.p))
            return
        for val in (0, 1):
            stats.nodes += 1
            place(w, val)
            if ok(w) and all(ok(u) for u, _ in rev_items[w]):
                yield from rec(w + 1)
            unplace(w, val)

    yield from rec(0)


def _check_cap(area: int):
    cap = hard_cap()
    if area > cap:
        raise CapExceeded(f"area {area} exceeds the cap of {cap} cells")


def enumerate_on_lattice(problem, L: PeriodLattice, stats: Optional[SearchStats] = None) -> list[TorusConfig]:
    """Every covering on ``L``, in backtracking order."""
    _check_cap(L.area)
    return list(_solutions(problem, L, stats if stats is not None else SearchStats()))


@dataclass
class SearchOutcome:
    """``witness`` is set when found; otherwise ``area_bound`` was exhausted."""

    found: bool
    area_bound: int
    witness: Optional[TorusConfig] = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def status(self) -> str:
        return "Found" if self.found else "ExhaustedUnknown"


def search(problem, area_bound: int) -> SearchOutcome:
    if area_bound < 1:
        raise ValueError("area bound must be positive")
    _check_cap(area_bound)
    stats = SearchStats()
    for L in lattices_up_to(area_bound):
        stats.lattices_tried += 1
        witness = next(_solutions(problem, L, stats), None)
        if witness is not None:
            return SearchOutcome(True, area_bound, witness, stats)
    return SearchOutcome(False, area_bound, None, stats)
