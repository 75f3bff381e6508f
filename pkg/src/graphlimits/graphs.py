"""Small simple graphs as edge bitstrings, with brute-force canonical forms.

A labelled graph on nodes ``0..n-1`` is stored as a single integer ``code``
holding its upper-triangular edge bitstring: pairs are ordered
``(0,1), (0,2), ..., (0,n-1), (1,2), ...`` and the first pair is the most
significant bit.

The canonical form of G is the relabelling whose sorted edge list is
lexicographically smallest.  Isomorphic graphs have equally many edges, and
for equal-size edge sets that order is the reverse of the integer order on
codes, so the canonical form is simply the maximal code over all n!
relabellings: the single edge on three nodes canonicalises to ``"3:100"``.

The text encoding is ``"n:bits"``, e.g. ``"3:111"`` for the triangle and
``"0:"`` for the empty graph.  Nodes are 0-based everywhere in the API.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, DomainError

MAX_ENUMERATE = 7
MAX_CANONICAL = 8


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Node pairs ``(i, j)``, ``i < j``, in bitstring order."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=None)
def _pair_weight_matrix(n: int) -> np.ndarray:
    # w[i, j] = integer weight of the bit for pair {i, j}; zero on the diagonal
    N = num_pairs(n)
    w = np.zeros((n, n), dtype=np.int64)
    for k, (i, j) in enumerate(pairs(n)):
        w[i, j] = w[j, i] = 1 << (N - 1 - k)
    return w


def pair_bit(n: int, i: int, j: int) -> int:
    """Integer weight of the bit for the pair ``{i, j}`` in a graph on n nodes."""
    if i == j:
        raise DomainError("self-loops are not representable")
    return int(_pair_weight_matrix(n)[i, j])


@dataclass(frozen=True, order=True)
class LabeledGraph:
    """A simple graph on nodes ``0..n-1``."""

    n: int
    code: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"node count must be non-negative, got {self.n}")
        if not 0 <= self.code < (1 << num_pairs(self.n)):
            raise DomainError(f"code {self.code} out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> LabeledGraph:
        code = 0
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise DomainError(f"edge ({i}, {j}) outside nodes 0..{n - 1}")
            code |= pair_bit(n, i, j)
        return cls(n, code)

    @classmethod
    def parse(cls, text: str) -> LabeledGraph:
        """Parse the ``n:bits`` encoding."""
        head, sep, bits = text.strip().partition(":")
        if not sep:
            raise DomainError(f"graph encoding needs 'n:bits', got {text!r}")
        try:
            n = int(head)
        except ValueError:
            raise DomainError(f"bad node count in {text!r}") from None
        if n < 0 or len(bits) != num_pairs(n) or set(bits) - {"0", "1"}:
            raise DomainError(
                f"{text!r}: expected {num_pairs(max(n, 0))} binary digits after ':'"
            )
        return cls(n, int(bits, 2) if bits else 0)

    @classmethod
    def empty(cls, n: int = 0) -> LabeledGraph:
        return cls(n, 0)

    @classmethod
    def complete(cls, n: int) -> LabeledGraph:
        return cls(n, (1 << num_pairs(n)) - 1)

    @property
    def bits(self) -> str:
        N = num_pairs(self.n)
        return format(self.code, f"0{N}b") if N else ""

    def __str__(self) -> str:
        return f"{self.n}:{self.bits}"

    @property
    def num_edges(self) -> int:
        return self.code.bit_count()

    def edge_indices(self) -> list[int]:
        """Positions (in bitstring order) of the pairs that are edges."""
        N = num_pairs(self.n)
        return [k for k in range(N) if self.code >> (N - 1 - k) & 1]

    def edges(self) -> list[tuple[int, int]]:
        ps = pairs(self.n)
        return [ps[k] for k in self.edge_indices()]

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool(self.code & pair_bit(self.n, i, j))

    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhoods as bitsets: bit ``v`` of ``adj[u]`` is set iff u ~ v."""
        adj = [0] * self.n
        for i, j in self.edges():
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return tuple(adj)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for i, j in self.edges():
            a[i, j] = a[j, i] = True
        return a

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adjacency()]


@dataclass(frozen=True, order=True)
class UnlabeledGraph:
    """An isomorphism class, held as its canonical representative."""

    canon: LabeledGraph
    class_size: int

    @classmethod
    def of(cls, G: LabeledGraph) -> UnlabeledGraph:
        canon, n_aut = _canonical_and_aut(G)
        return cls(canon, math.factorial(G.n) // n_aut)

    @property
    def n(self) -> int:
        return self.canon.n

    @property
    def num_edges(self) -> int:
        return self.canon.num_edges

    def __str__(self) -> str:
        return str(self.canon)


EMPTY = UnlabeledGraph(LabeledGraph(0, 0), 1)


def enumerate_labeled(n: int) -> list[LabeledGraph]:
    """All labelled graphs on n nodes, in ascending bitstring order."""
    if not 0 <= n <= MAX_ENUMERATE:
        raise CapacityError(f"enumeration supports 0 <= n <= {MAX_ENUMERATE}, got {n}")
    return [LabeledGraph(n, c) for c in range(1 << num_pairs(n))]


@lru_cache(maxsize=None)
def _perm_weights(n: int) -> np.ndarray:
    # row s, column k: bit weight of the image of pair k under permutation s
    w = _pair_weight_matrix(n)
    perms = np.array(list(permutations(range(n))), dtype=np.intp).reshape(math.factorial(n), n)
    ps = pairs(n)
    if not ps:
        return np.zeros((len(perms), 0), dtype=np.int64)
    i = np.array([p[0] for p in ps])
    j = np.array([p[1] for p in ps])
    return w[perms[:, i], perms[:, j]]


def _all_relabelings(G: LabeledGraph) -> np.ndarray:
    if G.n > MAX_CANONICAL:
        raise CapacityError(
            f"brute-force canonicalisation supports n <= {MAX_CANONICAL}, got {G.n}"
        )
    return _perm_weights(G.n)[:, G.edge_indices()].sum(axis=1)


def _canonical_and_aut(G: LabeledGraph) -> tuple[LabeledGraph, int]:
    codes = _all_relabelings(G)
    return LabeledGraph(G.n, int(codes.max())), int((codes == G.code).sum())


def canonical_form(G: LabeledGraph) -> LabeledGraph:
    """Relabelling of G with the lexicographically smallest edge list (brute force over n!)."""
    if G.n > MAX_CANONICAL:
        raise CapacityError(
            f"brute-force canonicalisation supports n <= {MAX_CANONICAL}, got {G.n}"
        )
    if num_pairs(G.n) == 0:
        return G
    return LabeledGraph(G.n, int(_all_relabelings(G).max()))


def automorphism_count(G: LabeledGraph) -> int:
    return _canonical_and_aut(G)[1]


def is_isomorphic(G: LabeledGraph, H: LabeledGraph) -> bool:
    return G.n == H.n and canonical_form(G) == canonical_form(H)


@dataclass(frozen=True)
class ClassTable:
    """Orbit structure of S_n acting on all codes of graphs on n nodes.

    ``labels[code]`` is the ordinal of the class containing ``code``;
    ``reps[c]`` is the canonical code of class ``c`` and ``sizes[c]`` its
    number of labelled members.  Classes are ordered by edge count, then by
    canonical edge list.
    """

    n: int
    labels: np.ndarray
    reps: np.ndarray
    sizes: np.ndarray

    @property
    def num_classes(self) -> int:
        return len(self.reps)

    def class_sums(self, values: np.ndarray) -> np.ndarray:
        return np.bincount(self.labels, weights=values, minlength=self.num_classes)

    def class_spread(self, values: np.ndarray) -> np.ndarray:
        """max - min of ``values`` within each class."""
        hi = np.full(self.num_classes, -np.inf)
        lo = np.full(self.num_classes, np.inf)
        np.maximum.at(hi, self.labels, values)
        np.minimum.at(lo, self.labels, values)
        return hi - lo


@lru_cache(maxsize=None)
def class_table(n: int) -> ClassTable:
    if not 0 <= n <= MAX_ENUMERATE:
        raise CapacityError(f"class tables support 0 <= n <= {MAX_ENUMERATE}, got {n}")
    N = num_pairs(n)
    total = 1 << N
    pw = _perm_weights(n)
    shifts = np.array([N - 1 - k for k in range(N)], dtype=np.int64)
    labels = np.full(total, -1, dtype=np.int64)
    reps, sizes = [], []
    for code in range(total - 1, -1, -1):
        if labels[code] >= 0:
            continue
        # every larger code is already labelled, so `code` is its orbit maximum
        set_bits = np.flatnonzero((code >> shifts) & 1)
        orbit = np.unique(pw[:, set_bits].sum(axis=1))
        labels[orbit] = len(reps)
        reps.append(code)
        sizes.append(len(orbit))
    # order classes by edge count, then by edge list
    order = sorted(range(len(reps)), key=lambda c: (reps[c].bit_count(), -reps[c]))
    rank = np.empty(len(reps), dtype=np.int64)
    rank[order] = np.arange(len(reps))
    labels = rank[labels]
    labels.setflags(write=False)
    return ClassTable(
        n,
        labels,
        np.array([reps[c] for c in order], dtype=np.int64),
        np.array([sizes[c] for c in order], dtype=np.int64),
    )


def isomorphism_classes(n: int) -> list[UnlabeledGraph]:
    """One entry per isomorphism class on n nodes, ordered by edge count then edge list."""
    table = class_table(n)
    return [
        UnlabeledGraph(LabeledGraph(n, int(r)), int(s))
        for r, s in zip(table.reps, table.sizes)
    ]


def classes_up_to(n_max: int) -> list[UnlabeledGraph]:
    return [U for k in range(n_max + 1) for U in isomorphism_classes(k)]


def labeled_disjoint_union(F1: LabeledGraph, F2: LabeledGraph) -> LabeledGraph:
    """Place F2 after F1: nodes of F2 are shifted by ``F1.n``."""
    n = F1.n + F2.n
    shift = F1.n
    edges = F1.edges() + [(i + shift, j + shift) for i, j in F2.edges()]
    return LabeledGraph.from_edges(n, edges)


@lru_cache(maxsize=65536)
def disjoint_union(U: UnlabeledGraph, V: UnlabeledGraph) -> UnlabeledGraph:
    """Node-disjoint union, the semigroup operation on unlabelled graphs."""
    n = U.n + V.n
    if n > MAX_CANONICAL:
        raise CapacityError(
            f"union has {n} nodes; canonicalisation supports n <= {MAX_CANONICAL}"
        )
    return UnlabeledGraph.of(labeled_disjoint_union(U.canon, V.canon))


def induced_subgraph(G: LabeledGraph, nodes: Iterable[int]) -> LabeledGraph:
    """Subgraph induced by ``nodes``, relabelled to ``0..|A|-1`` in increasing order."""
    A = sorted(nodes)
    if len(set(A)) != len(A) or any(not 0 <= a < G.n for a in A):
        raise DomainError(f"{A} is not a subset of the nodes 0..{G.n - 1}")
    pos = {a: k for k, a in enumerate(A)}
    return LabeledGraph.from_edges(
        len(A), [(pos[i], pos[j]) for i, j in G.edges() if i in pos and j in pos]
    )


def relabel(G: LabeledGraph, sigma: Sequence[int]) -> LabeledGraph:
    """G_sigma: the pair {sigma[i], sigma[j]} is an edge iff {i, j} is an edge of G."""
    if sorted(sigma) != list(range(G.n)):
        raise DomainError(f"{list(sigma)} is not a permutation of 0..{G.n - 1}")
    return LabeledGraph.from_edges(G.n, [(sigma[i], sigma[j]) for i, j in G.edges()])


def edge_subset_contains(F: LabeledGraph, G: LabeledGraph) -> bool:
    """True iff every edge of F is an edge of G (same node set)."""
    if F.n != G.n:
        raise DomainError(f"node counts differ: {F.n} vs {G.n}")
    return F.code & ~G.code == 0


def strip_isolated(F: LabeledGraph) -> LabeledGraph:
    """Drop degree-0 nodes, keeping the relative order of the others."""
    return induced_subgraph(F, [v for v, a in enumerate(F.adjacency()) if a])


def embed(F: LabeledGraph, n: int) -> LabeledGraph:
    """The same edge set viewed on nodes ``0..n-1``.

    Extra nodes are appended as isolated nodes.  Shrinking is allowed only
    when every dropped node is isolated.
    """
    if n == F.n:
        return F
    if n < F.n and any(a for a in F.adjacency()[n:]):
        raise CapacityError(f"{F} has edges among nodes >= {n}; cannot view it on {n} nodes")
    return LabeledGraph.from_edges(n, F.edges())


@lru_cache(maxsize=None)
def prefix_code_map(n: int, m: int) -> np.ndarray:
    """``out[code]`` is the code of ``G[0..m-1]`` for the graph G with that code on n nodes."""
    if not 0 <= m <= n:
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={n}")
    N = num_pairs(n)
    codes = np.arange(1 << N, dtype=np.int64)
    out = np.zeros_like(codes)
    w_n = _pair_weight_matrix(n)
    w_m = _pair_weight_matrix(m)
    for i, j in pairs(m):
        src = int(w_n[i, j]).bit_length() - 1
        out |= ((codes >> src) & 1) * int(w_m[i, j])
    out.setflags(write=False)
    return out
