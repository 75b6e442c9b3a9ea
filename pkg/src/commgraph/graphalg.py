"""Distances, components and diameters over the implicit commuting graph.

BFS never materialises the graph except in exact-diameter mode; neighbor sets
come either from vectorised whole-universe scans (fast at small n) or from the
backtracking centralizer enumerator (wins when centralizers are tiny compared
to the universe).
"""

from __future__ import annotations

import math
import multiprocessing
import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .commuting import (
    BudgetExceededError,
    CommGraph,
    NotAVertexError,
    Universe,
    center_ids,
    check_scan_budget,
    commute_masks_batch,
    commutes,
    element_budget,
    is_vertex,
    ptrans_of_row,
    universe_size,
    _backtrack_images,
    _universe_elements,
)
from .ptrans import PTrans

INFINITE = math.inf


class _ExceedsCap:
    __slots__ = ()

    def __repr__(self) -> str:
        return "EXCEEDS_CAP"


EXCEEDS_CAP = _ExceedsCap()

_BATCH = 128


@dataclass(frozen=True)
class PathCertificate:
    """A checked walk in the commuting graph; consecutive vertices must commute."""

    vertices: tuple[PTrans, ...]
    claimed_length: int

    @classmethod
    def from_vertices(cls, vertices: Sequence[PTrans]) -> "PathCertificate":
        return cls(tuple(vertices), len(vertices) - 1)


def verify_path(g: CommGraph, cert: PathCertificate) -> bool:
    """True iff the certificate is a genuine path of its claimed length in ``g``."""
    vs = cert.vertices
    if not vs or cert.claimed_length != len(vs) - 1:
        return False
    centers = center_ids(g)
    ids = []
    for t in vs:
        if t.n != g.n:
            return False
        if g.semigroup is Universe.FULL and not t.is_full():
            return False
        tid = t.encode()
        if tid in centers:
            return False
        ids.append(tid)
    interior = ids[1:-1]
    if len(set(interior)) != len(interior):
        return False
    if len(ids) > 1 and (ids[0] in interior or ids[-1] in interior):
        return False
    edges = set()
    for a, b in zip(vs, vs[1:]):
        if a == b or not commutes(a, b):
            return False
        edge = frozenset((a.encode(), b.encode()))
        if edge in edges:
            return False
        edges.add(edge)
    return True


# -- BFS machinery ---------------------------------------------------------------


class _GraphContext:
    """Vertex rows/ids of a graph, in increasing element id order."""

    def __init__(self, g: CommGraph):
        rows, ids = _universe_elements(g.n, g.semigroup)
        centers = np.fromiter(sorted(center_ids(g)), dtype=np.int64)
        keep = ~np.isin(ids, centers)
        self.g = g
        self.rows = rows[keep]
        self.ids = ids[keep]

    def index_of(self, t: PTrans) -> int:
        pos = int(np.searchsorted(self.ids, t.encode()))
        if pos >= len(self.ids) or self.ids[pos] != t.encode():
            raise NotAVertexError(f"{t!r} is not a vertex")
        return pos

    def ptrans_at(self, idx: int) -> PTrans:
        return ptrans_of_row(self.rows[idx], self.g.n)


def _choose_strategy(g: CommGraph, strategy: str) -> str:
    if strategy == "auto":
        return "scan" if universe_size(g.n, g.semigroup) <= element_budget() else "backtrack"
    if strategy not in ("scan", "backtrack"):
        raise ValueError(f"unknown neighbor strategy {strategy!r}")
    return strategy


def _expand_scan(ctx: _GraphContext, frontier: np.ndarray, dist: np.ndarray, parent: np.ndarray | None):
    """One BFS level via batched commute scans restricted to unvisited columns."""
    unvisited = np.nonzero(dist < 0)[0]
    if len(unvisited) == 0:
        return np.empty(0, dtype=np.int64)
    sub = ctx.rows[unvisited]
    found = np.zeros(len(unvisited), dtype=bool)
    for start in range(0, len(frontier), _BATCH):
        chunk = frontier[start : start + _BATCH]
        masks = commute_masks_batch(sub, ctx.rows[chunk])
        anym = masks.any(axis=0)
        new = anym & ~found
        if parent is not None and new.any():
            first = masks[:, new].argmax(axis=0)
            parent[unvisited[new]] = chunk[first]
        found |= anym
    return unvisited[found]


def _expand_backtrack(ctx: _GraphContext, frontier: np.ndarray, dist: np.ndarray, parent: np.ndarray | None):
    out = []
    for v in frontier:
        t = ctx.ptrans_at(int(v))
        for sol in _backtrack_images(t, ctx.g.semigroup):
            u = PTrans(ctx.g.n, sol)
            uid = u.encode()
            pos = int(np.searchsorted(ctx.ids, uid))
            if pos >= len(ctx.ids) or ctx.ids[pos] != uid:
                continue
            if dist[pos] < 0:
                dist[pos] = -2  # claimed this level, final value set by caller
                if parent is not None:
                    parent[pos] = v
                out.append(pos)
    res = np.array(sorted(out), dtype=np.int64)
    dist[res] = -1
    return res


def _bfs(
    ctx: _GraphContext,
    source: int,
    *,
    target: int | None = None,
    cap: int | None = None,
    need_parents: bool = False,
    strategy: str = "scan",
):
    """Level BFS from ``source``; returns (dist, parent, stopped_at_cap)."""
    V = len(ctx.rows)
    dist = np.full(V, -1, dtype=np.int64)
    parent = np.full(V, -1, dtype=np.int64) if need_parents else None
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    expand = _expand_scan if strategy == "scan" else _expand_backtrack
    while len(frontier):
        if target is not None and dist[target] >= 0:
            break
        if cap is not None and level >= cap:
            return dist, parent, True
        nxt = expand(ctx, frontier, dist, parent)
        level += 1
        dist[nxt] = level
        frontier = nxt
    return dist, parent, False


def bfs_distance(
    g: CommGraph,
    a: PTrans,
    b: PTrans,
    cap: int | None = None,
    strategy: str = "auto",
):
    """Exact distance between two vertices; INFINITE if unreachable,
    EXCEEDS_CAP if every path is longer than ``cap``."""
    for t in (a, b):
        if not is_vertex(g, t):
            raise NotAVertexError(f"{t!r} is central, not a vertex")
    if a == b:
        return 0
    ctx = _GraphContext(g)
    src, tgt = ctx.index_of(a), ctx.index_of(b)
    dist, _, capped = _bfs(ctx, src, target=tgt, cap=cap, strategy=_choose_strategy(g, strategy))
    if dist[tgt] >= 0:
        return int(dist[tgt])
    return EXCEEDS_CAP if capped else INFINITE


def shortest_path(
    g: CommGraph,
    a: PTrans,
    b: PTrans,
    strategy: str = "auto",
) -> Optional[PathCertificate]:
    """A shortest path as a certificate, or None when no path exists."""
    for t in (a, b):
        if not is_vertex(g, t):
            raise NotAVertexError(f"{t!r} is central, not a vertex")
    if a == b:
        return PathCertificate.from_vertices([a])
    ctx = _GraphContext(g)
    src, tgt = ctx.index_of(a), ctx.index_of(b)
    dist, parent, _ = _bfs(
        ctx, src, target=tgt, need_parents=True, strategy=_choose_strategy(g, strategy)
    )
    if dist[tgt] < 0:
        return None
    chain = [tgt]
    while chain[-1] != src:
        chain.append(int(parent[chain[-1]]))
    return PathCertificate.from_vertices([ctx.ptrans_at(i) for i in reversed(chain)])


@dataclass(frozen=True)
class ComponentSummary:
    count: int
    sizes: tuple[int, ...]
    representatives: tuple[PTrans, ...]
    labels: np.ndarray  # component index per vertex, aligned with vertex id order


def connected_components(g: CommGraph, strategy: str = "auto") -> ComponentSummary:
    """Partition of the vertex set by reachability; representatives are the
    minimum-id vertices, components ordered by representative."""
    check_scan_budget(g.n, g.semigroup)
    ctx = _GraphContext(g)
    strategy = _choose_strategy(g, strategy)
    V = len(ctx.rows)
    labels = np.full(V, -1, dtype=np.int64)
    reps = []
    sizes = []
    comp = 0
    for seed in range(V):
        if labels[seed] >= 0:
            continue
        dist, _, _ = _bfs(ctx, seed, strategy=strategy)
        members = dist >= 0
        labels[members] = comp
        reps.append(ctx.ptrans_at(seed))
        sizes.append(int(members.sum()))
        comp += 1
    return ComponentSummary(comp, tuple(sizes), tuple(reps), labels)


# -- diameter --------------------------------------------------------------------


@dataclass(frozen=True)
class DiameterReport:
    n: int
    semigroup: Universe
    exact: bool
    diameter: int | None  # exact value, or the certified lower bound in lower-only mode
    connected: bool | None
    component_count: int | None
    component_sizes: tuple[int, ...] | None
    witness_pair: tuple[PTrans, PTrans] | None
    elapsed_s: float


def _adjacency(ctx: _GraphContext) -> np.ndarray:
    V = len(ctx.rows)
    adj = np.zeros((V, V), dtype=bool)
    for start in range(0, V, _BATCH):
        adj[start : start + _BATCH] = commute_masks_batch(ctx.rows, ctx.rows[start : start + _BATCH])
    np.fill_diagonal(adj, False)
    return adj


def _ecc_block(adj: np.ndarray, sources: range) -> tuple[int, int, int, bool]:
    """(ecc, source, target, all_reached) maximised over the sources, smallest ids on ties."""
    best = (-1, -1, -1)
    all_reached = True
    V = len(adj)
    for s in sources:
        visited = np.zeros(V, dtype=bool)
        visited[s] = True
        frontier = visited.copy()
        level = 0
        last_new = np.array([s])
        while True:
            nxt = adj[np.nonzero(frontier)[0]].any(axis=0) & ~visited
            if not nxt.any():
                break
            level += 1
            visited |= nxt
            frontier = nxt
            last_new = np.nonzero(nxt)[0]
        if not visited.all():
            all_reached = False
        if level > best[0]:
            best = (level, s, int(last_new.min()))
    return best[0], best[1], best[2], all_reached


_WORKER_ADJ: np.ndarray | None = None


def _diameter_worker_init(adj: np.ndarray) -> None:
    global _WORKER_ADJ
    _WORKER_ADJ = adj


def _diameter_worker(args: tuple[int, int]) -> tuple[int, int, int, bool]:
    lo, hi = args
    assert _WORKER_ADJ is not None
    return _ecc_block(_WORKER_ADJ, range(lo, hi))


def diameter(
    g: CommGraph,
    mode: str = "exact",
    seeds: Sequence[PTrans] = (),
    workers: int = 1,
    long_run: bool = False,
    strategy: str = "auto",
) -> DiameterReport:
    """Exact diameter by all-sources BFS, or a certified lower bound from seeds."""
    t0 = time.perf_counter()
    if mode == "exact":
        limit = 5 if g.semigroup is Universe.FULL else 4
        if g.n > limit and not long_run:
            raise BudgetExceededError(
                f"exact diameter for this semigroup is budgeted to n <= {limit}; "
                "pass long_run=True to force it"
            )
        ctx = _GraphContext(g)
        adj = _adjacency(ctx)
        V = len(adj)
        if workers > 1:
            bounds = np.linspace(0, V, workers * 4 + 1, dtype=int)
            spans = [(int(a), int(b)) for a, b in zip(bounds, bounds[1:]) if a < b]
            with multiprocessing.get_context("fork").Pool(
                workers, initializer=_diameter_worker_init, initargs=(adj,)
            ) as pool:
                parts = pool.map(_diameter_worker, spans)
        else:
            parts = [_ecc_block(adj, range(0, V))]
        best = min(parts, key=lambda p: (-p[0], p[1], p[2]))
        connected = all(p[3] for p in parts)
        if not connected:
            comps = connected_components(g, strategy=strategy)
            return DiameterReport(
                g.n, g.semigroup, True, None, False, comps.count, comps.sizes, None,
                time.perf_counter() - t0,
            )
        ecc, s, t = best[0], best[1], best[2]
        return DiameterReport(
            g.n, g.semigroup, True, ecc, True, 1, (V,),
            (ctx.ptrans_at(s), ctx.ptrans_at(t)), time.perf_counter() - t0,
        )
    if mode != "lower-only":
        raise ValueError(f"unknown diameter mode {mode!r}")
    if not seeds:
        raise ValueError("lower-only mode needs at least one seed vertex")
    ctx = _GraphContext(g)
    strategy = _choose_strategy(g, strategy)
    bound = -1
    witness: tuple[PTrans, PTrans] | None = None
    connected: bool | None = None
    for seed in seeds:
        if not is_vertex(g, seed):
            raise NotAVertexError(f"{seed!r} is central, not a vertex")
        src = ctx.index_of(seed)
        dist, _, _ = _bfs(ctx, src, strategy=strategy)
        reached = dist >= 0
        connected = bool(reached.all()) if connected is None else connected and bool(reached.all())
        ecc = int(dist.max())
        if ecc > bound:
            bound = ecc
            far = int(np.nonzero(dist == ecc)[0].min())
            witness = (seed, ctx.ptrans_at(far))
    return DiameterReport(
        g.n, g.semigroup, False, bound, connected, None, None, witness,
        time.perf_counter() - t0,
    )
