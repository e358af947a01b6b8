# %% [markdown]
# # Convex neighborhoods
#
# For a convex shape every off-origin fiber of `g` is an all-ones polynomial
# `phi_n = 1 + t + ... + t^(n-1)`, so the fiber gcd only depends on the gcd `d`
# of the run lengths. The gcd of `phi_m` and `phi_n` is `phi_gcd(m, n)`, which
# is the product of the cyclotomic polynomials `Phi_e` over divisors `e > 1` of
# the gcd, not `Phi_d` alone once `d` is composite.

# %%
from gridcover.unipoly import all_ones, cyclotomic, gcd

for m, n in [(4, 6), (4, 8), (6, 12), (9, 15)]:
    print(m, n, gcd(all_ones(m), all_ones(n)))
print("Phi_4 =", cyclotomic(4), " Phi_2 * Phi_4 =", cyclotomic(2) * cyclotomic(4))

# %% [markdown]
# The specialised classifier agrees with the general one on random convex shapes.

# %%
import random

from gridcover.covering import CoveringProblem, classify, classify_convex
from gridcover.geometry import convex_hull, in_hull

rng = random.Random(0)
mismatches = 0
for _ in range(20):
    seeds = {(rng.randrange(7), rng.randrange(7)) for _ in range(4)}
    hull = convex_hull(seeds)
    D = {(x, y) for x in range(7) for y in range(7) if in_hull(hull, (x, y))}
    for b in range(len(D) + 1):
        for a in range(len(D) + 1):
            p = CoveringProblem(D, b, a)
            mismatches += classify(p).verdict is not classify_convex(p).verdict
print("mismatches:", mismatches)
