"""Homomorphism counts, densities and node-sampling distributions.

Densities are normalised by node counts: ``t_hom(F, G) = hom(F, G) / n^m``
and ``t_inj(F, G) = inj(F, G) / (n)_m`` with ``m = v(F)``, ``n = v(G)``.
All densities are returned as exact :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

import numpy as np

from .errors import CapacityError, DomainError
from .graphs import LabeledGraph, _pair_weight_matrix, num_pairs, pairs
from .mobius import GraphDistribution

MAX_DRAWS = 10**7
MAX_SAMPLE_NODES = 7


def falling_factorial(x: int, y: int) -> int:
    """(x)_y = x (x-1) ... (x-y+1); equals 0 when y > x >= 0."""
    out = 1
    for k in range(y):
        out *= x - k
    return out


def _search_order(adj: tuple[int, ...], nodes: list[int]) -> list[int]:
    # BFS within components so that most nodes have an already-placed neighbour
    order, seen = [], set()
    for root in sorted(nodes, key=lambda v: -adj[v].bit_count()):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            nb = adj[u]
            while nb:
                low = nb & -nb
                v = low.bit_length() - 1
                nb ^= low
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return order


def _count_maps(F: LabeledGraph, G: LabeledGraph, injective: bool) -> int:
    adj_f = F.adjacency()
    adj_g = G.adjacency()
    n = G.n
    core = [v for v in range(F.n) if adj_f[v]]
    n_isolated = F.n - len(core)

    order = _search_order(adj_f, core)
    pos = {v: k for k, v in enumerate(order)}
    # for the k-th placed node, the positions of its earlier-placed neighbours
    back = [[pos[u] for u in range(F.n) if adj_f[v] >> u & 1 and pos[u] < k]
            for k, v in enumerate(order)]
    everything = (1 << n) - 1
    image = [0] * len(order)

    def extend(k: int, used: int) -> int:
        if k == len(order):
            return 1
        cand = everything
        for b in back[k]:
            cand &= adj_g[image[b]]
        if injective:
            cand &= ~used
        total = 0
        while cand:
            low = cand & -cand
            cand ^= low
            image[k] = low.bit_length() - 1
            total += extend(k + 1, used | low)
        return total

    count = extend(0, 0)
    if injective:
        return count * falling_factorial(n - len(core), n_isolated)
    return count * n**n_isolated


def hom_count(F: LabeledGraph, G: LabeledGraph) -> int:
    """Number of edge-preserving maps V(F) -> V(G)."""
    return _count_maps(F, G, injective=False)


def inj_count(F: LabeledGraph, G: LabeledGraph) -> int:
    """Number of injective edge-preserving maps V(F) -> V(G)."""
    if F.n > G.n:
        return 0
    return _count_maps(F, G, injective=True)


@dataclass(frozen=True)
class DensityReport:
    hom_count: int
    inj_count: int
    t_hom: Fraction
    t_inj: Fraction
    gap_bound: Fraction
    inj_defined: bool = True


def t_hom(F: LabeledGraph, G: LabeledGraph) -> Fraction:
    if G.n == 0 and F.n > 0:
        raise DomainError("t_hom(F, G) needs a non-empty G when F is non-empty")
    return Fraction(hom_count(F, G), G.n**F.n)


def t_inj(F: LabeledGraph, G: LabeledGraph) -> Fraction:
    if F.n > G.n:
        raise DomainError(f"t_inj undefined: v(F)={F.n} > v(G)={G.n}")
    return Fraction(inj_count(F, G), falling_factorial(G.n, F.n))


def envelope(m: int, n: int) -> Fraction:
    """1 - (n)_m / n^m: chance that m draws with replacement from n collide."""
    return 1 - Fraction(falling_factorial(n, m), n**m)


def loose_envelope(m: int, n: int) -> Fraction:
    return Fraction(math.comb(m, 2), n)


def densities(F: LabeledGraph, G: LabeledGraph) -> DensityReport:
    """Both counts and densities of F in G.

    When ``v(F) > v(G)`` the injective density is reported as 0 with
    ``inj_defined=False``.
    """
    hom = hom_count(F, G)
    th = t_hom(F, G)
    if F.n <= G.n:
        inj = inj_count(F, G)
        return DensityReport(hom, inj, th, t_inj(F, G), envelope(F.n, G.n))
    return DensityReport(hom, 0, th, Fraction(0), Fraction(1), inj_defined=False)


def _draws(m: int, n: int, replace: bool) -> np.ndarray:
    size = n**m if replace else falling_factorial(n, m)
    if size > MAX_DRAWS:
        raise CapacityError(f"{size} node draws exceeds the limit {MAX_DRAWS}")
    if replace:
        return np.indices((n,) * m).reshape(m, size).T
    return np.array(list(permutations(range(n), m)), dtype=np.intp).reshape(size, m)


def draw_counts(m: int, G: LabeledGraph, replace: bool) -> np.ndarray:
    """Integer counts, per code on m nodes, over all ordered node draws from G.

    Draw ``(d_0, ..., d_{m-1})`` yields the graph with ``a ~ b`` iff ``d_a``
    and ``d_b`` are adjacent in G; a repeated node is never adjacent to itself.
    """
    if m < 0:
        raise DomainError("m must be non-negative")
    if m > MAX_SAMPLE_NODES:
        raise CapacityError(f"sampling supports m <= {MAX_SAMPLE_NODES}, got {m}")
    if not replace and m > G.n:
        raise DomainError(f"cannot draw {m} distinct nodes from {G.n}")
    if replace and G.n == 0 and m > 0:
        raise DomainError("cannot draw nodes from the empty graph")
    d = _draws(m, G.n, replace)
    A = G.adjacency_matrix()
    w = _pair_weight_matrix(m)
    codes = np.zeros(len(d), dtype=np.int64)
    for a, b in pairs(m):
        codes += A[d[:, a], d[:, b]] * w[a, b]
    return np.bincount(codes, minlength=1 << num_pairs(m))


def sample_dist_hom(m: int, G: LabeledGraph) -> GraphDistribution:
    """Exact law of the graph on m nodes sampled from G with replacement."""
    c = draw_counts(m, G, replace=True)
    return GraphDistribution(m, c / c.sum())


def sample_dist_inj(m: int, G: LabeledGraph) -> GraphDistribution:
    """Exact law of the graph induced on m distinct nodes drawn in order from G."""
    c = draw_counts(m, G, replace=False)
    return GraphDistribution(m, c / c.sum())


@dataclass(frozen=True)
class SamplingGap:
    sup: Fraction
    envelope: Fraction
    loose_envelope: Fraction
    argmax: LabeledGraph


def sampling_gap(m: int, G: LabeledGraph) -> SamplingGap:
    """Exact sup over F on m nodes of |p_hom(F, G) - p_inj(F, G)|."""
    if m > G.n:
        raise DomainError(f"m={m} exceeds v(G)={G.n}")
    n = G.n
    ch = draw_counts(m, G, replace=True).astype(object)
    ci = draw_counts(m, G, replace=False).astype(object)
    n_hom, n_inj = n**m, falling_factorial(n, m)
    diff = [abs(a * n_inj - b * n_hom) for a, b in zip(ch, ci)]
    k = max(range(len(diff)), key=diff.__getitem__)
    return SamplingGap(
        Fraction(diff[k], n_hom * n_inj),
        envelope(m, n),
        loose_envelope(m, n),
        LabeledGraph(m, k),
    )
