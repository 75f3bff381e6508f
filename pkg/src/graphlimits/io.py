"""Text formats for graph tables and step graphons.

Graph tables (distributions and Möbius parameters) hold one
``<n:bits> <value>`` pair per line; missing graphs have value 0, blank lines
and ``#`` comments are ignored.  A graphon file holds ``k``, then the k block
weights, then k rows of k values, all whitespace separated.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import DomainError
from .graphons import StepGraphon
from .graphs import LabeledGraph, num_pairs
from .mobius import GraphDistribution, MobiusParams

FILE_SUM_ATOL = 1e-9


def format_real(x) -> str:
    """12 significant digits."""
    return f"{float(x):.12g}"


def _lines(source) -> list[str]:
    if isinstance(source, (str, Path)):
        return Path(source).read_text().splitlines()
    return source.read().splitlines()


def read_table(source) -> tuple[int, np.ndarray]:
    entries = []
    for lineno, raw in enumerate(_lines(source), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DomainError(f"line {lineno}: expected '<graph> <value>', got {raw!r}")
        try:
            value = float(parts[1])
        except ValueError:
            raise DomainError(f"line {lineno}: bad number {parts[1]!r}") from None
        entries.append((LabeledGraph.parse(parts[0]), value))
    if not entries:
        raise DomainError("table is empty")
    n = entries[0][0].n
    table = np.zeros(1 << num_pairs(n))
    seen = set()
    for G, value in entries:
        if G.n != n:
            raise DomainError(f"mixed node counts: {G} in a table for n={n}")
        if G.code in seen:
            raise DomainError(f"{G} listed twice")
        seen.add(G.code)
        table[G.code] = value
    return n, table


def read_distribution(source) -> GraphDistribution:
    """Parse a distribution file; masses must sum to 1 within 1e-9."""
    n, table = read_table(source)
    return GraphDistribution(n, table, atol=FILE_SUM_ATOL)


def read_mobius(source) -> MobiusParams:
    n, table = read_table(source)
    return MobiusParams(n, table)


def format_table(n: int, values: Iterable[float], skip_zeros: bool = True) -> str:
    lines = []
    for code, v in enumerate(values):
        if skip_zeros and v == 0:
            continue
        lines.append(f"{LabeledGraph(n, code)} {format_real(v)}")
    return "\n".join(lines) + "\n"


def format_distribution(P: GraphDistribution) -> str:
    return format_table(P.n, P.mass)


def format_mobius(Z: MobiusParams) -> str:
    return format_table(Z.n, Z.z)


def read_graphon(source) -> StepGraphon:
    tokens = " ".join(line.split("#", 1)[0] for line in _lines(source)).split()
    try:
        k = int(tokens[0])
        nums = [float(t) for t in tokens[1:]]
    except (IndexError, ValueError):
        raise DomainError("graphon file must start with an integer block count") from None
    if k < 1 or len(nums) != k + k * k:
        raise DomainError(f"expected {k} weights and {k * k} values, got {len(nums)} numbers")
    weights = nums[:k]
    total = sum(weights)
    # decimal text loses the last digits; renormalise if it is close to 1
    if abs(total - 1) > FILE_SUM_ATOL:
        raise DomainError(f"block weights sum to {total}, not 1")
    weights = [w / total for w in weights]
    values = [nums[k + a * k: k + (a + 1) * k] for a in range(k)]
    return StepGraphon.from_arrays(weights, values)


def format_graphon(W: StepGraphon) -> str:
    rows = [str(W.k), " ".join(format_real(w) for w in W.weights)]
    rows += [" ".join(format_real(v) for v in row) for row in W.values]
    return "\n".join(rows) + "\n"
