"""
Möbius parameters of random graph laws
======================================

A law P on labelled graphs with n nodes is the same information as the
table Z(F) = P(F is a subgraph of the random graph).  This walks through the
transform, its inverse, and what goes wrong when Z is not a valid table.
"""

# %%
import numpy as np

from graphlimits import GraphDistribution, LabeledGraph, MobiusParams
from graphlimits.mobius import is_exchangeable, is_valid_mobius, p_from_z, random_exchangeable, z_from_p

rng = np.random.default_rng(0)

# %%
# Erdős–Rényi: every edge set F is present with probability p^e(F)
Z = z_from_p(GraphDistribution.erdos_renyi(3, 0.3))
for F, z in Z.items():
    print(F, round(z, 6))

# %%
# the inverse transform recovers the law
P = random_exchangeable(4, rng)
print("round-trip error:", np.abs(p_from_z(z_from_p(P)).mass - P.mass).max())
print("exchangeable:", bool(is_exchangeable(P)))

# %%
# a table that claims every single edge is certain but no two edges ever
# co-occur cannot come from a law: inverting it puts mass -2 on the empty graph
bad = MobiusParams.from_function(3, lambda F: 1.0 if F.num_edges <= 1 else 0.0)
res = is_valid_mobius(bad)
print("valid:", res.valid, "witness:", res.witness, "mass:", res.mass)
