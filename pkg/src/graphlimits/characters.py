"""Functionals on unlabelled graphs: characters, positive definiteness, dissociation.

Unlabelled graphs under node-disjoint union form a commutative semigroup
with the empty graph as identity.  A *character* is a multiplicative
functional with value 1 at the identity; a functional phi is positive
definite when every matrix ``[phi(U_j + U_k)]`` is positive semidefinite.
For an exchangeable random graph, ``phi([F]) = P(F ⊆ G)`` is positive
definite (reflection positivity), and it is a character exactly when the
law is dissociated.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Real
from typing import Callable, Literal, Mapping, NamedTuple, Sequence, Union

import numpy as np

from .errors import CapacityError, DegenerateFamilyError, DomainError
from .graphs import (
    MAX_ENUMERATE,
    LabeledGraph,
    UnlabeledGraph,
    canonical_form,
    class_table,
    classes_up_to,
    disjoint_union,
    num_pairs,
)
from .homomorphisms import t_hom
from .linalg import PSD_TOL, PSDCheck, is_psd
from .mobius import (
    VALID_TOL,
    GraphDistribution,
    MobiusParams,
    mobius_is_symmetric,
    z_from_p,
)

Source = Literal["from-distribution", "from-graph-character", "from-graphon", "user-supplied"]
GraphLike = Union[LabeledGraph, UnlabeledGraph]

CHARACTER_TOL = 1e-12


def _canon(F: GraphLike) -> LabeledGraph:
    return F.canon if isinstance(F, UnlabeledGraph) else canonical_form(F)


class SymmetricFunctional:
    """A real functional on all unlabelled graphs with at most ``n_max`` nodes.

    Values are keyed by canonical representative; calling the functional
    accepts labelled graphs (canonicalised on the fly) or unlabelled ones.
    """

    def __init__(self, n_max: int, values: Mapping[LabeledGraph, Real], source: Source = "user-supplied"):
        if not 0 <= n_max <= MAX_ENUMERATE:
            raise CapacityError(f"functionals support 0 <= n_max <= {MAX_ENUMERATE}, got {n_max}")
        self.n_max = n_max
        self.values = {canonical_form(F): v for F, v in values.items()}
        self.source = source
        missing = [U for U in classes_up_to(n_max) if U.canon not in self.values]
        if missing:
            raise DomainError(f"no value for {len(missing)} classes, e.g. {missing[0]}")

    def __call__(self, F: GraphLike) -> Real:
        if F.n > self.n_max:
            raise CapacityError(f"{F} has more than n_max={self.n_max} nodes")
        return self.values[_canon(F)]

    def __repr__(self) -> str:
        return f"SymmetricFunctional(n_max={self.n_max}, source={self.source!r})"

    @classmethod
    def from_function(cls, f: Callable[[UnlabeledGraph], Real], n_max: int,
                      source: Source = "user-supplied") -> SymmetricFunctional:
        return cls(n_max, {U.canon: f(U) for U in classes_up_to(n_max)}, source)

    @classmethod
    def from_mobius(cls, Z: MobiusParams, tol: float = VALID_TOL) -> SymmetricFunctional:
        """phi([F]) = Z(F); Z must be constant on isomorphism classes."""
        if not mobius_is_symmetric(Z, tol):
            raise DomainError("Möbius parameters are not relabelling invariant")
        return cls.from_function(lambda U: Z[U.canon], Z.n, "from-distribution")

    @classmethod
    def from_distribution(cls, P: GraphDistribution, tol: float = VALID_TOL) -> SymmetricFunctional:
        return cls.from_mobius(z_from_p(P), tol)

    @classmethod
    def from_graph(cls, G: GraphLike, n_max: int) -> SymmetricFunctional:
        """The character rho_[G] = t_hom(., G), with exact rational values."""
        rep = G.canon if isinstance(G, UnlabeledGraph) else G
        return cls.from_function(lambda U: t_hom(U.canon, rep), n_max, "from-graph-character")

    @classmethod
    def from_graphon(cls, W, n_max: int) -> SymmetricFunctional:
        from .graphons import graphon_character

        return cls.from_function(lambda U: graphon_character(W, U.canon), n_max, "from-graphon")

    @classmethod
    def edge_power(cls, p: Real, n_max: int) -> SymmetricFunctional:
        """phi([F]) = p ** e(F), the Erdős–Rényi character."""
        return cls.from_function(lambda U: p**U.num_edges, n_max, "user-supplied")

    def restrict(self, n_max: int) -> SymmetricFunctional:
        if n_max > self.n_max:
            raise CapacityError(f"cannot extend from n_max={self.n_max} to {n_max}")
        return SymmetricFunctional(
            n_max, {U.canon: self(U) for U in classes_up_to(n_max)}, self.source
        )


def mixture(functionals: Sequence[SymmetricFunctional], weights: Sequence[Real]) -> SymmetricFunctional:
    """Pointwise convex combination, on the common range of node counts."""
    if len(functionals) != len(weights) or not functionals:
        raise DomainError("need one weight per functional")
    n_max = min(f.n_max for f in functionals)
    return SymmetricFunctional.from_function(
        lambda U: sum(w * f(U) for f, w in zip(functionals, weights)), n_max
    )


def rho_from_graph(G: GraphLike, F: GraphLike) -> Fraction:
    """rho_[G]([F]) = t_hom(F, G)."""
    rep_g = G.canon if isinstance(G, UnlabeledGraph) else G
    rep_f = F.canon if isinstance(F, UnlabeledGraph) else F
    return t_hom(rep_f, rep_g)


class MultiplicativityCheck(NamedTuple):
    passed: bool
    violation: float
    pair: tuple[UnlabeledGraph, UnlabeledGraph] | None

    def __bool__(self) -> bool:
        return self.passed


def _worst_factorisation(phi: SymmetricFunctional, classes: list[UnlabeledGraph]):
    worst, pair = 0.0, None
    for a, U in enumerate(classes):
        for V in classes[a:]:
            if U.n + V.n > phi.n_max:
                continue
            gap = abs(phi(disjoint_union(U, V)) - phi(U) * phi(V))
            if gap > worst:
                worst, pair = gap, (U, V)
    return float(worst), pair


def check_character(phi: SymmetricFunctional, tol: float = CHARACTER_TOL) -> MultiplicativityCheck:
    """phi(U + V) == phi(U) phi(V) for all classes with |U| + |V| <= n_max, and phi(0) == 1."""
    classes = [U for U in classes_up_to(phi.n_max) if U.n > 0]
    worst, pair = _worst_factorisation(phi, classes)
    unit_gap = float(abs(phi(LabeledGraph(0)) - 1))
    if unit_gap > worst:
        worst, pair = unit_gap, (UnlabeledGraph.of(LabeledGraph(0)),) * 2
    return MultiplicativityCheck(worst <= tol, worst, pair)


def _component_split(F: LabeledGraph) -> tuple[LabeledGraph, LabeledGraph] | None:
    # (edges of the component holding the lowest non-isolated node, all other edges)
    adj = F.adjacency()
    start = next((v for v in range(F.n) if adj[v]), None)
    if start is None:
        return None
    comp, frontier = 1 << start, 1 << start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        fresh = adj[low.bit_length() - 1] & ~comp
        comp |= fresh
        frontier |= fresh
    inside = [(i, j) for i, j in F.edges() if comp >> i & 1]
    if len(inside) == F.num_edges:
        return None
    first = LabeledGraph.from_edges(F.n, inside)
    return first, LabeledGraph(F.n, F.code & ~first.code)


def check_dissociated(Z: Union[SymmetricFunctional, MobiusParams],
                      tol: float = CHARACTER_TOL) -> MultiplicativityCheck:
    """Factorisation of Z over node-disjoint subgraphs.

    For a :class:`SymmetricFunctional` this checks ``Z(U + V) = Z(U) Z(V)``
    over classes without isolated nodes.  For :class:`MobiusParams` it works
    on labelled edge sets inside K_n: every F with several components must
    satisfy ``Z(F) = Z(C) Z(F - C)`` with C its first component.
    """
    if isinstance(Z, SymmetricFunctional):
        classes = [
            U for U in classes_up_to(Z.n_max)
            if U.n > 0 and all(U.canon.adjacency())
        ]
        worst, pair = _worst_factorisation(Z, classes)
        return MultiplicativityCheck(worst <= tol, worst, pair)

    worst, pair = 0.0, None
    for code in range(len(Z.z)):
        split = _component_split(LabeledGraph(Z.n, code))
        if split is None:
            continue
        a, b = split
        gap = abs(Z.z[code] - Z.z[a.code] * Z.z[b.code])
        if gap > worst:
            worst, pair = float(gap), (UnlabeledGraph.of(a), UnlabeledGraph.of(b))
    return MultiplicativityCheck(worst <= tol, worst, pair)


def default_basis(n_max: int) -> list[UnlabeledGraph]:
    """All classes on at most min(3, n_max // 2) nodes: pairwise unions stay in range."""
    return classes_up_to(min(3, n_max // 2))


def reflection_matrix(phi: SymmetricFunctional, basis: Sequence[UnlabeledGraph] | None = None) -> np.ndarray:
    """M[u, v] = phi(basis[u] + basis[v])."""
    if basis is None:
        basis = default_basis(phi.n_max)
    basis = list(basis)
    k = len(basis)
    M = np.empty((k, k))
    for a in range(k):
        for b in range(a, k):
            U, V = basis[a], basis[b]
            if U.n + V.n > phi.n_max:
                raise CapacityError(f"{U} + {V} has more than n_max={phi.n_max} nodes")
            M[a, b] = M[b, a] = float(phi(disjoint_union(U, V)))
    return M


def reflection_positivity(phi: SymmetricFunctional,
                          basis: Sequence[UnlabeledGraph] | None = None,
                          tol: float = PSD_TOL) -> PSDCheck:
    return is_psd(reflection_matrix(phi, basis), tol)


def _class_weights(theta, n: int) -> np.ndarray:
    reps = class_table(n).reps
    if isinstance(theta, SymmetricFunctional):
        vals = [float(theta(LabeledGraph(n, int(r)))) for r in reps]
    else:
        vals = [float(theta(UnlabeledGraph.of(LabeledGraph(n, int(r))))) for r in reps]
    vals = np.array(vals)
    if (vals < 0).any():
        raise DomainError("theta must be non-negative")
    return vals


def _base_weights(base, n: int) -> np.ndarray:
    size = 1 << num_pairs(n)
    if base is None:
        return np.ones(size)
    if isinstance(base, GraphDistribution):
        b = base.mass
    elif isinstance(base, Mapping):
        b = np.zeros(size)
        for G, w in base.items():
            b[G.code] = w
    else:
        b = np.asarray(base, dtype=float)
    if b.shape != (size,):
        raise DomainError(f"base weights must cover all {size} graphs on {n} nodes")
    if (b < 0).any():
        raise DomainError("base weights must be non-negative")
    return np.asarray(b, dtype=float)


def laplace_transform(theta, n: int, base=None) -> float:
    """c(theta) = sum over graphs x on n nodes of theta([x]) b(x)."""
    return float((_class_weights(theta, n)[class_table(n).labels] * _base_weights(base, n)).sum())


def gexp_mass(theta, n: int, base=None) -> GraphDistribution:
    """Generalised exponential family: mass(x) = theta([x]) b(x) / c(theta).

    ``theta`` is a :class:`SymmetricFunctional` or any callable on
    :class:`UnlabeledGraph`; it need not be a character.  ``base`` defaults
    to counting measure (b = 1 on every labelled graph).
    """
    w = _class_weights(theta, n)[class_table(n).labels] * _base_weights(base, n)
    c = w.sum()
    if not c > 0:
        raise DegenerateFamilyError("normalising constant c(theta) is zero")
    return GraphDistribution(n, w / c)
