# %% [markdown]
# # Fibers and line-polynomial factors
#
# A Laurent polynomial splits into fibers along any primitive direction `v`.
# Each fiber reads as a one-variable polynomial in `t = X^v` once shifted to
# start at `t^0`. The polynomial has a factor supported on a line parallel to
# `v` exactly when those one-variable polynomials share a nonconstant factor.

# %%
from gridcover.fibers import fiber_set, fibers
from gridcover.geometry import candidate_line_directions, outer_edge_directions
from gridcover.laurent import parse_poly
from gridcover.line_factors import divide_by_line_poly, line_factors

f = parse_poly("3x + y + x*y^2 + x*y + x^3*y^3 + x^4*y^4")
for base, fib in fibers(f, (1, 1)):
    print(base, fib)
print(sorted(str(p) for p in fiber_set(f, (1, 1)).all_forms))

# %% [markdown]
# The constant fiber `3` already rules out a factor along `(1, 1)`.
# Only directions that are outer edges in both orientations can carry a factor.

# %%
print(sorted(outer_edge_directions(f)))
print(sorted(candidate_line_directions(f)))
print(line_factors(f).entries)

# %% [markdown]
# A product of two line polynomials has a factor along each of their directions.

# %%
g = parse_poly("x + y") * parse_poly("1 + x*y")
for v, phi in line_factors(g).entries:
    print(v, phi, "quotient:", divide_by_line_poly(g, v, phi))
