"""
Finite de Finetti
=================

Take an exchangeable law on n nodes and look at the first m.  Replacing the
induced marginal by the mixture of with-replacement samples costs at most
2 (1 - (n)_m / n^m) <= m (m - 1) / n in twice the largest atom difference.
"""

# %%
import numpy as np

from graphlimits import GraphDistribution
from graphlimits.definetti import definetti_report
from graphlimits.mobius import random_exchangeable

print(definetti_report(GraphDistribution.erdos_renyi(4, 0.5), 2))

# %%
rng = np.random.default_rng(3)
print(" n  m  tv_paper  2R      m(m-1)/n")
for n in range(3, 8):
    P = random_exchangeable(n, rng)
    for m in (2, 3):
        r = definetti_report(P, m)
        print(f"{n:2d} {m:2d}  {r.tv_paper:.5f}  {2 * r.r_bound:.5f} {r.loose_bound:.5f}")
