"""Brute-force oracles for cross-checking the fast paths.

Neither oracle uses fiber gcds or the pruned backtracker. The line-factor
oracle factors one fiber with sympy, forms every divisor from those factors,
and tries dividing the whole polynomial by each candidate. The covering
oracle scores all ``2**area`` assignments at once with numpy.
"""
from __future__ import annotations

from itertools import product
from typing import Optional

import numpy as np
import sympy

from .laurent import ExpVec, LaurentPoly2
from .torus import PeriodLattice, TorusConfig
from .unipoly import UniPoly

BRUTE_CAP = 16

_x, _y, _t = sympy.symbols("x y t")


def _fiber_normal_forms(f: LaurentPoly2, v: ExpVec) -> list[list[int]]:
    """Normal forms of the v-fibers, computed directly from coordinates."""
    vx, vy = v
    lines: dict[int, dict[int, int]] = {}
    for (ux, uy), c in f.terms:
        # position along v and line label via the unimodular completion of v
        along = ux * vx + uy * vy
        lines.setdefault(ux * vy - uy * vx, {})[along] = c
    norm = vx * vx + vy * vy
    forms = []
    for pts in lines.values():
        lo = min(pts)
        n = (max(pts) - lo) // norm
        forms.append([pts.get(lo + k * norm, 0) for k in range(n + 1)])
    return forms


def _proper(expr_terms: dict[tuple[int, int], int]) -> sympy.Poly:
    mx = min(k[0] for k in expr_terms)
    my = min(k[1] for k in expr_terms)
    return sympy.Poly.from_dict({(a - mx, b - my): c for (a, b), c in expr_terms.items()},
                                _x, _y, domain=sympy.ZZ)


def laurent_divides(f: LaurentPoly2, phi: UniPoly, v: ExpVec) -> bool:
    """Whether ``phi(X^v)`` divides ``f`` in the Laurent ring (sympy exact quotient)."""
    terms = {(k * v[0], k * v[1]): c for k, c in enumerate(phi.coeffs) if c}
    divisor = _proper(terms)
    try:
        _proper(dict(f.terms)).exquo(divisor)
    except sympy.ExactQuotientFailed:
        return False
    return True


def brute_line_factor(f: LaurentPoly2, v: ExpVec, degree_bound: int) -> Optional[UniPoly]:
    """A maximal-degree line-polynomial divisor of ``f`` in direction ``v``, or None."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    forms = _fiber_normal_forms(f, v)
    seed = min(forms, key=len)
    if len(seed) < 2:
        return None
    _, factors = sympy.factor_list(sum(c * _t**k for k, c in enumerate(seed)), _t)
    factors = [(fac, m) for fac, m in factors if sympy.degree(fac, _t) > 0]
    best: Optional[UniPoly] = None
    for exps in product(*[range(m + 1) for _, m in factors]):
        cand = sympy.Integer(1)
        for (fac, _), e in zip(factors, exps):
            cand *= fac**e
        deg = sympy.degree(cand, _t) if cand != 1 else 0
        if deg < 1 or deg > degree_bound or (best is not None and deg <= best.degree):
            continue
        coeffs = sympy.Poly(cand, _t).all_coeffs()[::-1]
        phi = UniPoly(int(c) for c in coeffs).primitive_part()
        if laurent_divides(f, phi, v):
            best = phi
    return best


def _incidence(D, L: PeriodLattice) -> np.ndarray:
    """``M[w, u]`` = how many ``d in D`` land ``u + d`` on cell ``w`` (flat indices)."""
    n = L.area
    M = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        i, j = u % L.p, u // L.p
        for dx, dy in D:
            x, y = i + dx, j + dy
            k = y // L.q
            ii, jj = (x - k * L.s) % L.p, y - k * L.q
            M[jj * L.p + ii, u] += 1
    return M


def brute_enumerate(problem, L: PeriodLattice) -> list[TorusConfig]:
    """All coverings on ``L`` by scoring every assignment; sorted by cell tuple."""
    n = L.area
    if n > BRUTE_CAP:
        raise ValueError(f"brute force limited to {BRUTE_CAP} cells, got {n}")
    codes = np.arange(2**n, dtype=np.int64)
    A = ((codes[:, None] >> np.arange(n)) & 1).astype(np.int64)
    counts = A @ _incidence(problem.D, L)
    target = problem.a + (problem.b - problem.a) * A
    good = np.all(counts == target, axis=1)
    out = [TorusConfig(L, row.reshape(L.q, L.p)) for row in A[good]]
    return sorted(out, key=lambda c: tuple(c.cells.ravel().tolist()))
