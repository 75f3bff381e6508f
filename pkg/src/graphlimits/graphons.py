"""Step graphons: exact homomorphism integrals, W-random graphs, Monte Carlo.

A step graphon splits [0, 1) into k consecutive blocks of lengths
``weights`` and takes the constant value ``values[a][b]`` on block a × b.
Weights and values may be floats or :class:`fractions.Fraction`; exact
evaluation keeps whatever number type it is given, so rational inputs give
rational integrals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import NamedTuple

import numpy as np

from .errors import CapacityError, DomainError
from .graphs import LabeledGraph, class_table, num_pairs, pairs
from .homomorphisms import _search_order
from .mobius import GraphDistribution, MobiusParams, p_from_z

WEIGHT_ATOL = 1e-12
MAX_EXACT_NODES = 10
MAX_EXACT_TERMS = 10**7
MC_CHUNK = 1 << 18


@dataclass(frozen=True)
class StepGraphon:
    weights: tuple[Real, ...]
    values: tuple[tuple[Real, ...], ...]

    def __post_init__(self):
        k = len(self.weights)
        if k == 0:
            raise DomainError("a step graphon needs at least one block")
        if any(not w > 0 for w in self.weights):
            raise DomainError("block weights must be positive")
        if abs(sum(self.weights) - 1) > WEIGHT_ATOL:
            raise DomainError(f"block weights sum to {sum(self.weights)}, not 1")
        if len(self.values) != k or any(len(row) != k for row in self.values):
            raise DomainError(f"values must be a {k}x{k} matrix")
        for a in range(k):
            for b in range(k):
                v = self.values[a][b]
                if not 0 <= v <= 1:
                    raise DomainError(f"value {v} at ({a}, {b}) outside [0, 1]")
                if v != self.values[b][a]:
                    raise DomainError(f"values not symmetric at ({a}, {b})")

    @classmethod
    def from_arrays(cls, weights, values) -> StepGraphon:
        return cls(tuple(weights), tuple(tuple(row) for row in values))

    @classmethod
    def constant(cls, p: Real) -> StepGraphon:
        return cls((1,), ((p,),))

    @property
    def k(self) -> int:
        return len(self.weights)

    def __call__(self, u: float, v: float) -> Real:
        return self.values[self.block_of(u)][self.block_of(v)]

    def block_of(self, u: float) -> int:
        edges = np.cumsum(np.asarray(self.weights, dtype=float))
        return int(min(np.searchsorted(edges, u, side="right"), self.k - 1))

    def _float_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return (np.asarray(self.weights, dtype=float),
                np.asarray(self.values, dtype=float))


def step_graphon_from_graph(G: LabeledGraph) -> StepGraphon:
    """W_G: n equal blocks, value 1 on block i × block j iff i ~ j in G."""
    if G.n == 0:
        raise DomainError("the empty graph has no block partition")
    w = Fraction(1, G.n)
    A = G.adjacency_matrix()
    return StepGraphon(
        tuple(w for _ in range(G.n)),
        tuple(tuple(int(A[i, j]) for j in range(G.n)) for i in range(G.n)),
    )


def graphon_character(W: StepGraphon, F: LabeledGraph) -> Real:
    """Exact value of the integral of prod_{ij in E(F)} W(u_i, u_j) over [0,1]^v(F).

    The integral is the sum over block assignments a: V(F) -> [k] of
    ``prod_edges values[a_i][a_j] * prod_nodes weights[a_i]``; assignments are
    enumerated node by node and abandoned as soon as a factor is zero.
    """
    if F.n > MAX_EXACT_NODES:
        raise CapacityError(f"exact evaluation supports v(F) <= {MAX_EXACT_NODES}, got {F.n}")
    if W.k**F.n > MAX_EXACT_TERMS:
        raise CapacityError(f"{W.k}^{F.n} block assignments exceeds {MAX_EXACT_TERMS}")
    adj = F.adjacency()
    core = [v for v in range(F.n) if adj[v]]
    order = _search_order(adj, core)
    pos = {v: k for k, v in enumerate(order)}
    back = [[pos[u] for u in range(F.n) if adj[v] >> u & 1 and pos[u] < k]
            for k, v in enumerate(order)]
    blocks = range(W.k)
    assign = [0] * len(order)
    total_weight = sum(W.weights)

    def extend(k: int):
        if k == len(order):
            return 1
        acc = 0
        for a in blocks:
            term = W.weights[a]
            for b in back[k]:
                term = term * W.values[a][assign[b]]
                if term == 0:
                    break
            if term == 0:
                continue
            assign[k] = a
            acc = acc + term * extend(k + 1)
        return acc

    # an isolated node integrates to the total block weight
    return extend(0) * total_weight ** (F.n - len(core))


def w_random_mobius(W: StepGraphon, n: int) -> MobiusParams:
    """Möbius parameters of the W-random graph on n nodes: Z(F) = graphon_character(W, F)."""
    table = class_table(n)
    per_class = np.array([float(graphon_character(W, LabeledGraph(n, int(r)))) for r in table.reps])
    return MobiusParams(n, per_class[table.labels])


def w_random_distribution(W: StepGraphon, n: int) -> GraphDistribution:
    """Exact law of :func:`sample_w_random` on n nodes."""
    P = p_from_z(w_random_mobius(W, n))
    # inversion round-off can leave tiny negative masses
    mass = np.clip(P.mass, 0.0, None)
    return GraphDistribution(n, mass / mass.sum())


def _rng_streams(seed: int) -> tuple[np.random.Generator, np.random.Generator]:
    node_seq, edge_seq = np.random.SeedSequence(seed).spawn(2)
    return np.random.Generator(np.random.PCG64(node_seq)), np.random.Generator(np.random.PCG64(edge_seq))


def sample_w_random(W: StepGraphon, n: int, seed: int) -> LabeledGraph:
    """A W-random graph on n nodes.

    Reproducible per seed: the seed's first spawned stream draws the latent
    uniforms u_0..u_{n-1} in node order, the second draws one uniform per node
    pair in bitstring order, and the pair is an edge iff that uniform falls
    below ``W(u_i, u_j)``.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    node_rng, edge_rng = _rng_streams(seed)
    weights, values = W._float_arrays()
    u = node_rng.random(n)
    block = np.minimum(np.searchsorted(np.cumsum(weights), u, side="right"), W.k - 1)
    coins = edge_rng.random(num_pairs(n))
    code = 0
    N = num_pairs(n)
    for k, (i, j) in enumerate(pairs(n)):
        if coins[k] < values[block[i], block[j]]:
            code |= 1 << (N - 1 - k)
    return LabeledGraph(n, code)


class MCEstimate(NamedTuple):
    estimate: float
    stderr: float


def mc_estimate_character(W: StepGraphon, F: LabeledGraph, trials: int, seed: int) -> MCEstimate:
    """Monte Carlo estimate of :func:`graphon_character` with its standard error.

    Each trial draws u uniformly from [0,1]^v(F) and records the product of
    ``W(u_i, u_j)`` over the edges of F.
    """
    if trials < 1:
        raise DomainError("trials must be at least 1")
    edges = F.edges()
    if not edges:
        return MCEstimate(1.0, 0.0)
    rng = np.random.default_rng(seed)
    weights, values = W._float_arrays()
    cuts = np.cumsum(weights)
    # chunk means and squared deviations merged with Chan's update, which stays
    # exact for constant integrands where sum-of-squares cancels
    mean = m2 = 0.0
    done = 0
    while done < trials:
        size = min(MC_CHUNK, trials - done)
        u = rng.random((size, F.n))
        block = np.minimum(np.searchsorted(cuts, u, side="right"), W.k - 1)
        prod = np.ones(size)
        for i, j in edges:
            prod *= values[block[:, i], block[:, j]]
        if prod.min() == prod.max():
            c_mean, c_m2 = prod[0], 0.0
        else:
            c_mean = prod.mean()
            c_m2 = float(((prod - c_mean) ** 2).sum())
        total = done + size
        delta = c_mean - mean
        mean += delta * size / total
        m2 += c_m2 + delta**2 * done * size / total
        done = total
    mean = float(mean)
    if trials == 1:
        return MCEstimate(mean, math.nan)
    var = m2 / (trials - 1)
    return MCEstimate(mean, math.sqrt(var / trials))


def random_step_graphon(k: int, rng: np.random.Generator) -> StepGraphon:
    """Random block weights (Dirichlet(1,...,1)) and symmetric uniform values."""
    weights = rng.dirichlet(np.ones(k))
    weights = weights / weights.sum()
    upper = rng.random((k, k))
    values = np.triu(upper) + np.triu(upper, 1).T
    return StepGraphon.from_arrays(weights.tolist(), values.tolist())
