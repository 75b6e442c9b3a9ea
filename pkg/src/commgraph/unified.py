"""The move graph of a pair of full transformations.

Its vertices are the ground-set points; two points are joined when either map
sends one to the other.  Connectivity of this graph certifies that the empty
map is the only strictly partial transformation commuting with both maps:
along any edge, membership in the domain of a common commuting element
propagates, so one missing point empties the whole domain.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from .commuting import Universe, commute_mask, row_of, universe_elements, ptrans_of_row
from .ptrans import PTrans


class UnionFind:
    """Disjoint sets over {0..n-1} with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        i, j = self.find(i), self.find(j)
        if i == j:
            return
        if self.size[i] < self.size[j]:
            i, j = j, i
        self.parent[j] = i
        self.size[i] += self.size[j]

    def component_count(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if self.find(i) == i)


@dataclass(frozen=True)
class UnifiedGraph:
    """Undirected graph on the ground set; {x,y} is an edge iff one of the two
    generating maps moves x to y or y to x."""

    n: int
    edges: frozenset[tuple[int, int]]


def build_unified(a: PTrans, b: PTrans) -> UnifiedGraph:
    if not (a.is_full() and b.is_full()):
        raise ValueError("the move graph is defined for full transformations only")
    if a.n != b.n:
        raise ValueError("both maps must act on the same ground set")
    edges = set()
    for t in (a, b):
        for x, y in enumerate(t.images):
            if x != y:
                edges.add((min(x, y), max(x, y)))
    return UnifiedGraph(a.n, frozenset(edges))


def is_connected(u: UnifiedGraph) -> bool:
    uf = UnionFind(u.n)
    for x, y in u.edges:
        uf.union(x, y)
    return uf.component_count() == 1


class ConnectorVerdict(Enum):
    PROVEN_EMPTY_ONLY = "proven-empty-only"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ConnectorCertificate:
    verdict: ConnectorVerdict
    gamma_connected: bool


def certify_no_partial_connector(a: PTrans, b: PTrans) -> ConnectorCertificate:
    """Sound one-sided certificate: a connected move graph proves that the only
    strictly partial map commuting with both inputs is the empty map.  A
    disconnected move graph proves nothing either way."""
    connected = is_connected(build_unified(a, b))
    verdict = ConnectorVerdict.PROVEN_EMPTY_ONLY if connected else ConnectorVerdict.INCONCLUSIVE
    return ConnectorCertificate(verdict, connected)


def partial_connector_bruteforce(a: PTrans, b: PTrans) -> list[PTrans]:
    """Every strictly partial map commuting with both inputs, by exhaustive scan.

    This is the independent oracle for the certificate; limited to n <= 5.
    """
    if a.n != b.n:
        raise ValueError("both maps must act on the same ground set")
    n = a.n
    if n > 5:
        raise ValueError(f"the brute-force connector scan is limited to n <= 5, got n={n}")
    rows, ids = universe_elements(n, Universe.STRICTLY_PARTIAL)
    mask = commute_mask(rows, row_of(a)) & commute_mask(rows, row_of(b))
    picked = rows[mask]
    order = np.argsort(ids[mask])
    return [ptrans_of_row(picked[i], n) for i in order]


def export_dot(u: UnifiedGraph, labels: Mapping[int, str] | Sequence[str] | None = None) -> str:
    """Undirected DOT text; nodes carry 1-based numerals unless labels are given."""

    def name(x: int) -> str:
        if labels is None:
            return str(x + 1)
        return labels[x]

    lines = ["graph G {"]
    for x in range(u.n):
        lines.append(f'  "{name(x)}";')
    for x, y in sorted(u.edges):
        lines.append(f'  "{name(x)}" -- "{name(y)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
