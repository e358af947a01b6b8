# %% [markdown]
# # Forced periodicity on the three classical grids
#
# For a neighborhood `D` and constants `(b, a)` every perfect covering is
# annihilated up to a constant by `g = f_D - (b - a)`. If `g` has no
# line-polynomial factor, every covering is two-periodic.

# %%
from collections import Counter

from gridcover.covering import CoveringProblem, classify, grid_ball

for kind in ("square", "king", "triangular"):
    for r in (1, 2, 3):
        n = len(grid_ball(kind, r))
        tally = Counter()
        exceptions = set()
        for b in range(n + 1):
            for a in range(n + 1):
                c = classify(CoveringProblem.grid(kind, r, b, a))
                tally[c.verdict.value] += 1
                if c.verdict.value != "AllTwoPeriodic":
                    exceptions.add(b - a)
        print(f"{kind:10s} r={r} |D|={n:2d} {dict(tally)}  b-a with line factors: {sorted(exceptions)}")

# %% [markdown]
# The exceptions are `b - a = 1` for the square 1-ball, `b - a = 0` for the king
# grid, and `b - a = -1` for the triangular 1-ball. The boundary cases carry
# the factor `1 + t` in every candidate direction:

# %%
for kind, b, a in [("square", 2, 1), ("triangular", 0, 1), ("king", 2, 2)]:
    c = classify(CoveringProblem.grid(kind, 1, b, a))
    print(kind, c.periodizer, [(v, str(phi)) for v, phi in c.evidence.entries])
