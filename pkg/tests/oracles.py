"""Independent brute-force reference implementations for cross-checking.

Partial maps are plain dicts over 1-based labels here, composed by definition,
so none of the package's representation or scan machinery is shared.
"""

from itertools import product

import networkx as nx

from commgraph import PTrans, UNDEF


def to_dict(t: PTrans) -> dict[int, int]:
    return {x + 1: v + 1 for x, v in enumerate(t.images) if v != UNDEF}


def from_dict(n: int, d: dict[int, int]) -> PTrans:
    return PTrans.from_pairs(n, {x - 1: v - 1 for x, v in d.items()})


def compose_naive(a: dict, b: dict) -> dict:
    return {x: b[a[x]] for x in a if a[x] in b}


def commutes_naive(a: dict, b: dict) -> bool:
    return compose_naive(a, b) == compose_naive(b, a)


def all_partial_dicts(n: int):
    for digits in product(range(n + 1), repeat=n):
        yield {x + 1: digits[x] + 1 for x in range(n) if digits[x] < n}


def commuting_graph_nx(n: int, full_only: bool = False) -> nx.Graph:
    ident = {x: x for x in range(1, n + 1)}
    elems = [d for d in all_partial_dicts(n) if not full_only or len(d) == n]
    verts = [frozenset(d.items()) for d in elems if d not in ({}, ident)]
    G = nx.Graph()
    G.add_nodes_from(verts)
    for i in range(len(verts)):
        di = dict(verts[i])
        for j in range(i + 1, len(verts)):
            if commutes_naive(di, dict(verts[j])):
                G.add_edge(verts[i], verts[j])
    return G


def node_of(t: PTrans) -> frozenset:
    return frozenset(to_dict(t).items())
