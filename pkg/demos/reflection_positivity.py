"""
Reflection positivity needs infinite exchangeability
====================================================

For the marginal of an infinitely exchangeable random graph, the matrix
M[U, V] = Z(U + V) over small unlabelled graphs is positive semidefinite.
Exchangeability on a fixed finite node set is not enough.
"""

# %%
import numpy as np

from graphlimits import GraphDistribution, LabeledGraph, SymmetricFunctional
from graphlimits.characters import reflection_matrix
from graphlimits.graphons import random_step_graphon, w_random_distribution
from graphlimits.linalg import is_psd
from graphlimits.mobius import is_exchangeable

rng = np.random.default_rng(1)

# %%
# a W-random law on 6 nodes: basis of all classes on up to 3 nodes
P = w_random_distribution(random_step_graphon(3, rng), 6)
M = reflection_matrix(SymmetricFunctional.from_distribution(P))
print(M.shape, "min eigenvalue", is_psd(M).min_eigenvalue)

# %%
# uniform over the six single-edge graphs on 4 nodes: exchangeable, yet two
# disjoint edges never appear, so Z(K2 + K2) = 0 < Z(K2)^2
single = [LabeledGraph(4, 1 << k) for k in range(6)]
Q = GraphDistribution.from_dict(4, {G: 1 / 6 for G in single})
print("exchangeable:", bool(is_exchangeable(Q)))
res = is_psd(reflection_matrix(SymmetricFunctional.from_distribution(Q)))
print("psd:", res.psd, "min eigenvalue", res.min_eigenvalue)
