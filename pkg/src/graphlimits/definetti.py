"""Finite de Finetti approximation for exchangeable random graphs.

Given an exchangeable law P on graphs with n nodes and m <= n, the law of
the induced subgraph G[m] is compared with the mixture over G ~ P of the
with-replacement sampling laws ``p_hom(., G)``.  The mixture is exchangeable
and its Möbius parameters are ``sum_G t_hom(F, G) P(G)``; the two marginals
differ, in twice the largest atom difference, by at most
``2 (1 - (n)_m / n^m) <= m (m - 1) / n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import CapacityError, DomainError
from .graphs import LabeledGraph, class_table, prefix_code_map
from .homomorphisms import draw_counts, envelope, t_hom, t_inj
from .mobius import VALID_TOL, GraphDistribution, is_exchangeable

MAX_N = 7
BOUND_SLACK = 1e-12


def induced_marginal(P: GraphDistribution, m: int) -> GraphDistribution:
    """Law of the subgraph induced on the first m nodes."""
    if not 0 <= m <= P.n:
        raise DomainError(f"need 0 <= m <= n={P.n}, got m={m}")
    codes = prefix_code_map(P.n, m)
    mass = np.bincount(codes, weights=P.mass, minlength=1 << (m * (m - 1) // 2))
    return GraphDistribution(m, mass, atol=1e-9)


def smooth_distribution(P: GraphDistribution, m: int) -> GraphDistribution:
    """Mixture over G ~ P of the law of m nodes sampled from G with replacement.

    ``p_hom(., G)`` depends on G only through its isomorphism class, so the
    mixture is taken over classes weighted by their total mass under P; this
    also holds when P itself is not exchangeable.
    """
    if P.n > MAX_N or m > MAX_N:
        raise CapacityError(f"smoothing supports n, m <= {MAX_N}")
    if m < 0:
        raise DomainError("m must be non-negative")
    if P.n == 0 and m > 0:
        raise DomainError("cannot sample nodes from graphs with no nodes")
    table = class_table(P.n)
    class_mass = table.class_sums(P.mass)
    out = np.zeros(1 << (m * (m - 1) // 2))
    for rep, w in zip(table.reps, class_mass):
        if w == 0:
            continue
        counts = draw_counts(m, LabeledGraph(P.n, int(rep)), replace=True)
        out += w * counts / counts.sum()
    return GraphDistribution(m, out, atol=1e-9)


def _mixture_of_densities(P: GraphDistribution, F: LabeledGraph, density) -> float:
    table = class_table(P.n)
    per_class = np.array([float(density(F, LabeledGraph(P.n, int(r)))) for r in table.reps])
    return float(per_class[table.labels] @ P.mass)


def hom_mixture(P: GraphDistribution, F: LabeledGraph) -> float:
    """sum over G of t_hom(F, G) P(G)."""
    return _mixture_of_densities(P, F, t_hom)


def inj_mixture(P: GraphDistribution, F: LabeledGraph) -> float:
    """sum over G of t_inj(F, G) P(G); equals Z(F) when P is exchangeable."""
    return _mixture_of_densities(P, F, t_inj)


@dataclass(frozen=True)
class DeFinettiReport:
    m: int
    n: int
    tv_half_sum: float
    tv_paper: float
    r_bound: float
    loose_bound: float

    @property
    def bound_holds(self) -> bool:
        return (self.tv_paper <= 2 * self.r_bound + BOUND_SLACK
                and 2 * self.r_bound <= self.loose_bound + BOUND_SLACK)


def definetti_report(P: GraphDistribution, m: int, tol: float = VALID_TOL) -> DeFinettiReport:
    """Distances between the m-marginal of P and its smoothed counterpart.

    ``tv_half_sum`` is half the l1 distance; ``tv_paper`` is twice the
    largest difference over single graphs, the quantity the bound
    ``2 R(m, n) <= m (m - 1) / n`` is stated for.
    """
    if not 0 <= m <= P.n:
        raise DomainError(f"need 0 <= m <= n={P.n}, got m={m}")
    if not is_exchangeable(P, tol):
        raise DomainError("the finite de Finetti bound needs an exchangeable distribution")
    diff = induced_marginal(P, m).mass - smooth_distribution(P, m).mass
    r = envelope(m, P.n)
    return DeFinettiReport(
        m=m,
        n=P.n,
        tv_half_sum=float(np.abs(diff).sum() / 2),
        tv_paper=float(2 * np.abs(diff).max()),
        r_bound=float(r),
        loose_bound=float(Fraction(m * (m - 1), P.n)),
    )
