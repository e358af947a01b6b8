# %% [markdown]
# # Searching two-periodic coverings
#
# Two-periodic configurations live on a torus given by the lattice with basis
# `(p, 0), (s, q)`. The search walks lattices by area and backtracks over
# cell assignments. It reports a witness or the bound it exhausted.

# %%
from gridcover.covering import CoveringProblem
from gridcover.search import enumerate_on_lattice, search
from gridcover.torus import (
    PeriodLattice, consistent_constants, format_pbm, is_t_periodic, periodizer_identity_check,
    verify_covering,
)

p = CoveringProblem.grid("square", 1, 1, 1)
out = search(p, 25)
print(out.status, out.witness, out.stats)
w = out.witness
print(verify_covering(w, p), periodizer_identity_check(w, p), consistent_constants(w, p.D))
print(format_pbm(w, reps=(1, 5)))

# %% [markdown]
# On the 5x5 torus the perfect code appears with its translates and mirror images.

# %%
sols = enumerate_on_lattice(p, PeriodLattice(5, 5))
print(len(sols))
print([is_t_periodic(c, (1, -2)) for c in sols])

# %% [markdown]
# Without a witness the answer is only "nothing up to this area":

# %%
print(search(CoveringProblem.grid("square", 1, 0, 1), 12).status)
