"""
Homomorphism densities and node sampling
========================================

t_hom(F, G) is the chance that a uniformly random map V(F) -> V(G) keeps all
edges; t_inj restricts to injective maps.  Sampling m nodes of G with or
without replacement gives two laws whose Möbius parameters are exactly these
densities, and the gap between them shrinks like m^2 / n.
"""

# %%
from graphlimits import LabeledGraph
from graphlimits.homomorphisms import densities, sampling_gap

K2, K3 = LabeledGraph.parse("2:1"), LabeledGraph.parse("3:111")
r = densities(K2, K3)
print("t_hom =", r.t_hom, " t_inj =", r.t_inj, " gap bound =", r.gap_bound)

# %%
# with replacement a 2-node sample collides with probability 1/3, which is
# exactly the largest atom difference
g = sampling_gap(2, K3)
print("sup gap", g.sup, "envelope", g.envelope, "loose", g.loose_envelope)

# %%
# the envelope decays as the host graph grows
for n in range(3, 8):
    cycle = LabeledGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    g = sampling_gap(3, cycle)
    print(f"C_{n}: sup {float(g.sup):.4f}  envelope {float(g.envelope):.4f}  C(3,2)/n {float(g.loose_envelope):.4f}")
