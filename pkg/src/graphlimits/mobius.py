"""Distributions on labelled graphs and their Möbius parameters.

For a random graph G on n nodes the Möbius parameter of an edge set F is
``Z(F) = P(F ⊆ G)``, the total mass above F in the subgraph lattice of
K_n.  Both objects are stored as dense float arrays indexed by graph code
(see :mod:`graphlimits.graphs`), so the transform pair reduces to the
superset-sum (zeta) transform and its inverse on the Boolean lattice of
edge bits.
"""

from __future__ import annotations

from typing import Callable, Iterator, Mapping, NamedTuple

import numpy as np

from .errors import CapacityError, DomainError
from .graphs import (
    MAX_ENUMERATE,
    LabeledGraph,
    class_table,
    embed,
    num_pairs,
)

SUM_ATOL = 1e-12
VALID_TOL = 1e-9


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_ENUMERATE:
        raise CapacityError(f"dense tables support 0 <= n <= {MAX_ENUMERATE}, got {n}")


def _lookup_code(n: int, G: LabeledGraph) -> int:
    return embed(G, n).code if G.n != n else G.code


class GraphDistribution:
    """A probability mass function on all labelled graphs with n nodes.

    ``mass[code]`` is the probability of the graph with that code.  With
    ``check=False`` the masses are taken as given, which is how
    :func:`p_from_z` returns signed inversions of invalid parameters.
    """

    def __init__(self, n: int, mass, *, check: bool = True, atol: float = SUM_ATOL):
        _check_n(n)
        mass = np.asarray(mass, dtype=float)
        if mass.shape != (1 << num_pairs(n),):
            raise DomainError(
                f"expected {1 << num_pairs(n)} masses for n={n}, got shape {mass.shape}"
            )
        if check:
            if (mass < 0).any():
                raise DomainError("probabilities must be non-negative")
            total = mass.sum()
            if abs(total - 1.0) > atol:
                raise DomainError(f"masses sum to {total!r}, not 1")
        self.n = n
        self.mass = mass
        self.mass.setflags(write=False)

    @classmethod
    def from_dict(cls, n: int, masses: Mapping[LabeledGraph, float], **kw) -> GraphDistribution:
        arr = np.zeros(1 << num_pairs(n))
        for G, p in masses.items():
            if G.n != n:
                raise DomainError(f"{G} is not a graph on {n} nodes")
            arr[G.code] += p
        return cls(n, arr, **kw)

    @classmethod
    def point_mass(cls, G: LabeledGraph) -> GraphDistribution:
        arr = np.zeros(1 << num_pairs(G.n))
        arr[G.code] = 1.0
        return cls(G.n, arr)

    @classmethod
    def uniform(cls, n: int) -> GraphDistribution:
        size = 1 << num_pairs(n)
        return cls(n, np.full(size, 1.0 / size))

    @classmethod
    def erdos_renyi(cls, n: int, p: float) -> GraphDistribution:
        """Independent edges, each present with probability p."""
        _check_n(n)
        N = num_pairs(n)
        e = edge_counts(n)
        return cls(n, p**e * (1.0 - p) ** (N - e))

    def __getitem__(self, G: LabeledGraph) -> float:
        if G.n != self.n:
            raise DomainError(f"{G} is not a graph on {self.n} nodes")
        return float(self.mass[G.code])

    def __len__(self) -> int:
        return len(self.mass)

    def items(self) -> Iterator[tuple[LabeledGraph, float]]:
        """(graph, mass) for every graph with non-zero mass."""
        for code in np.flatnonzero(self.mass):
            yield LabeledGraph(self.n, int(code)), float(self.mass[code])

    def __repr__(self) -> str:
        return f"GraphDistribution(n={self.n}, support={np.count_nonzero(self.mass)})"


def mixture(dists, weights) -> GraphDistribution:
    """Convex combination of distributions on the same node count."""
    dists = list(dists)
    weights = np.asarray(weights, dtype=float)
    if len(dists) != len(weights) or not dists:
        raise DomainError("need one weight per distribution")
    n = dists[0].n
    if any(d.n != n for d in dists):
        raise DomainError("all distributions must share the node count")
    return GraphDistribution(n, sum(w * d.mass for w, d in zip(weights, dists)))


class MobiusParams:
    """``z[code] = P(F ⊆ G)`` for every edge set F of K_n.

    Indexing accepts graphs on fewer nodes (padded with isolated nodes) or
    on more nodes provided the surplus nodes are isolated: Z only depends on
    the edge set.
    """

    def __init__(self, n: int, z, *, atol: float = VALID_TOL):
        _check_n(n)
        z = np.asarray(z, dtype=float)
        if z.shape != (1 << num_pairs(n),):
            raise DomainError(
                f"expected {1 << num_pairs(n)} values for n={n}, got shape {z.shape}"
            )
        if abs(z[0] - 1.0) > atol:
            raise DomainError(f"Z(empty graph) must be 1, got {z[0]!r}")
        self.n = n
        self.z = z
        self.z.setflags(write=False)

    @classmethod
    def from_function(cls, n: int, f: Callable[[LabeledGraph], float]) -> MobiusParams:
        return cls(n, [f(LabeledGraph(n, c)) for c in range(1 << num_pairs(n))])

    @classmethod
    def from_dict(cls, n: int, values: Mapping[LabeledGraph, float]) -> MobiusParams:
        arr = np.zeros(1 << num_pairs(n))
        for F, v in values.items():
            arr[_lookup_code(n, F)] = v
        return cls(n, arr)

    def __getitem__(self, F: LabeledGraph) -> float:
        return float(self.z[_lookup_code(self.n, F)])

    def items(self) -> Iterator[tuple[LabeledGraph, float]]:
        for code, v in enumerate(self.z):
            yield LabeledGraph(self.n, code), float(v)

    def __repr__(self) -> str:
        return f"MobiusParams(n={self.n})"


def edge_counts(n: int) -> np.ndarray:
    """Number of edges of every code on n nodes."""
    N = num_pairs(n)
    codes = np.arange(1 << N, dtype=np.int64)
    e = np.zeros_like(codes)
    for b in range(N):
        e += (codes >> b) & 1
    return e


def _lattice_transform(values: np.ndarray, N: int, sign: float) -> np.ndarray:
    # in-place pass over each bit: a[bit=0] += sign * a[bit=1]
    a = np.array(values, dtype=float).reshape((2,) * N)
    for axis in range(N):
        lo = [slice(None)] * N
        hi = [slice(None)] * N
        lo[axis], hi[axis] = 0, 1
        a[tuple(lo)] += sign * a[tuple(hi)]
    return a.reshape(-1)


def z_from_p(P: GraphDistribution) -> MobiusParams:
    """Z(F) = sum of P(B) over all B containing F."""
    return MobiusParams(P.n, _lattice_transform(P.mass, num_pairs(P.n), 1.0))


def p_from_z(Z: MobiusParams) -> GraphDistribution:
    """Inclusion-exclusion inverse of :func:`z_from_p`.

    Entries may come out negative when Z is not a valid parameter; they are
    returned unchecked so that :func:`is_valid_mobius` can report them.
    """
    mass = _lattice_transform(Z.z, num_pairs(Z.n), -1.0)
    return GraphDistribution(Z.n, mass, check=False)


class MobiusValidity(NamedTuple):
    valid: bool
    witness: LabeledGraph | None
    mass: float

    def __bool__(self) -> bool:
        return self.valid


def is_valid_mobius(Z: MobiusParams, tol: float = VALID_TOL) -> MobiusValidity:
    """Check that every inverted mass is >= -tol.

    On failure the witness is the graph with the most negative mass.
    """
    mass = p_from_z(Z).mass
    worst = int(np.argmin(mass))
    if mass[worst] >= -tol:
        return MobiusValidity(True, None, float(mass[worst]))
    return MobiusValidity(False, LabeledGraph(Z.n, worst), float(mass[worst]))


def mass_is_symmetric(P: GraphDistribution, tol: float = VALID_TOL) -> bool:
    """mass(H) == mass(H_sigma) within tol for every H and every relabelling sigma.

    Relabellings of H are exactly the members of its isomorphism class, so
    this compares all pairs within each class via the class spread.
    """
    return bool((class_table(P.n).class_spread(P.mass) <= tol).all())


def mobius_is_symmetric(Z: MobiusParams, tol: float = VALID_TOL) -> bool:
    """Z factors through the canonical form: constant on isomorphism classes."""
    return bool((class_table(Z.n).class_spread(Z.z) <= tol).all())


def is_exchangeable(P: GraphDistribution, tol: float = VALID_TOL) -> bool:
    """Relabelling invariance, checked on the masses and on the Möbius parameters."""
    by_mass = mass_is_symmetric(P, tol)
    by_mobius = mobius_is_symmetric(z_from_p(P), tol)
    return by_mass and by_mobius


def symmetrize(P: GraphDistribution) -> GraphDistribution:
    """Average of P over all n! relabellings (mass spread evenly over each class)."""
    table = class_table(P.n)
    class_mass = table.class_sums(P.mass)
    return GraphDistribution(P.n, (class_mass / table.sizes)[table.labels])


def random_exchangeable(n: int, rng: np.random.Generator) -> GraphDistribution:
    """I.i.d. exponential masses, normalised, then symmetrised; full support."""
    _check_n(n)
    raw = rng.exponential(size=1 << num_pairs(n))
    return symmetrize(GraphDistribution(n, raw / raw.sum(), atol=1e-9))
