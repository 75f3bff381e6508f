"""
Step graphons
=============

A step graphon is a block matrix of edge probabilities on a partition of
[0, 1].  Its homomorphism integrals are characters of the graph semigroup,
the graph G itself is represented by n equal blocks, and W-random graphs are
sampled reproducibly from a seed.
"""

# %%
from fractions import Fraction

from graphlimits import LabeledGraph, StepGraphon
from graphlimits.graphons import graphon_character, mc_estimate_character, sample_w_random, step_graphon_from_graph
from graphlimits.homomorphisms import t_hom

C5 = LabeledGraph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
P3 = LabeledGraph.from_edges(3, [(0, 1), (1, 2)])
W = step_graphon_from_graph(C5)
print("integral:", graphon_character(W, P3), " t_hom:", t_hom(P3, C5))

# %%
# a two-community graphon with exact rational entries
W = StepGraphon((Fraction(1, 3), Fraction(2, 3)),
                ((Fraction(4, 5), Fraction(1, 10)), (Fraction(1, 10), Fraction(1, 2))))
K3 = LabeledGraph.complete(3)
exact = graphon_character(W, K3)
est = mc_estimate_character(W, K3, trials=200_000, seed=7)
print("triangle density", exact, float(exact), "MC", est.estimate, "+/-", est.stderr)

# %%
for seed in range(3):
    print(sample_w_random(W, 8, seed))
