"""Colourings of exact distance graphs of chordal graphs.

Fix a root per component and split the component into BFS levels. Two
vertices at distance ``d <= p`` lie at most ``d`` levels apart, so the level
index mod ``p+1`` separates every such pair on different levels. Inside one
level, a pair at distance ``d >= 2`` is separated by looking ``d // 2`` levels
down. There, the ancestor sets of the two vertices are cliques, and the
clique colouring from :mod:`exactchroma.accolor` tells them apart. For even
``d``, it is combined with an injective port label at the first vertex of
the clique.

The final colour of ``u`` is the tuple ``(level mod (p+1), g_1(u), ...,
g_s(u))`` with one per-level colour for each distance in ``S``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Collection, Hashable, Sequence

from .accolor import PredecessorColoring, clique_color, mu_of_clique, predecessor_coloring
from .bounds import bound_main1, bound_main2, validate_distance_set
from .chordal import (
    clique_number_chordal,
    greedy_proper_coloring,
    mcs_order,
    require_chordal,
)
from .graph import Graph, GraphError, connected_components, exact_distance_graph, max_degree, union_graphs
from .leveling import LevelPartition, LevelSubgraph, ancestor_clique, level_partition, level_subgraph
from .oracle import verify_proper


@dataclass(frozen=True)
class TupleColoring:
    """Per-vertex colour tuples and their dense renumbering.

    ``tuples[u][0]`` is the level index mod ``p+1``; the remaining entries
    follow the sorted members of ``S``. ``dense`` numbers the distinct tuples
    in sorted order.
    """

    p: int
    S: tuple[int, ...]
    tuples: tuple[tuple[int, ...], ...]
    dense: tuple[int, ...]
    colors_used: int

    @classmethod
    def from_tuples(cls, p: int, S: Sequence[int], tuples: Sequence[tuple[int, ...]]) -> "TupleColoring":
        palette = {c: i for i, c in enumerate(sorted(set(tuples)))}
        return cls(p, tuple(S), tuple(tuples), tuple(palette[c] for c in tuples), len(palette))


@dataclass(frozen=True)
class BoundReport:
    t: int
    delta: int
    p: int
    S: tuple[int, ...]
    q: int
    bound: int
    colors_used: int
    proper: bool

    @property
    def within_bound(self) -> bool:
        return self.proper and self.colors_used <= self.bound


class LevelCache:
    """Per-level induced subgraphs and their colourings for one partition.

    Built lazily and shared by every distance in ``S``.
    """

    def __init__(self, G: Graph, P: LevelPartition) -> None:
        self.G = G
        self.P = P
        self._sub: dict[int, LevelSubgraph] = {}
        self._pred: dict[int, PredecessorColoring] = {}
        self._greedy: dict[int, list[int]] = {}

    def subgraph(self, l: int) -> LevelSubgraph:
        if l not in self._sub:
            self._sub[l] = level_subgraph(self.G, self.P, l)
        return self._sub[l]

    def predecessor_coloring(self, l: int) -> PredecessorColoring:
        if l not in self._pred:
            H = self.subgraph(l).graph
            self._pred[l] = predecessor_coloring(H, mcs_order(H))
        return self._pred[l]

    def greedy(self, l: int) -> list[int]:
        if l not in self._greedy:
            H = self.subgraph(l).graph
            self._greedy[l] = greedy_proper_coloring(H, mcs_order(H))
        return self._greedy[l]


def _cache_for(G: Graph, P: LevelPartition, cache: LevelCache | None) -> LevelCache:
    if cache is None:
        return LevelCache(G, P)
    if cache.G is not G or cache.P is not P:
        raise ValueError("level cache belongs to a different graph or partition")
    return cache


def _ancestor_clique_color(cache: LevelCache, y: int, j: int) -> tuple[int, int]:
    """Colour of the level-``j`` ancestor clique of ``y`` and its first vertex (global id)."""
    sub = cache.subgraph(j)
    a = cache.predecessor_coloring(j)
    local = [sub.index[v] for v in ancestor_clique(cache.G, cache.P, y, j)]
    return clique_color(a, local), sub.vertices[mu_of_clique(local, a.order)]


def level_coloring_odd(
    G: Graph, P: LevelPartition, l: int, p: int, cache: LevelCache | None = None
) -> dict[int, int]:
    """Colour level ``l`` so that same-level pairs at odd distance ``p`` differ."""
    if p < 3 or p % 2 == 0:
        raise ValueError(f"level_coloring_odd needs odd p >= 3, got {p}")
    cache = _cache_for(G, P, cache)
    k = p // 2
    layer = P.layer(l)
    if l < k:
        return {y: 0 for y in layer}
    return {y: _ancestor_clique_color(cache, y, l - k)[0] for y in layer}


def sigma_vertex(G: Graph, P: LevelPartition, y: int, mu: int, k: int) -> int:
    """Smallest-id vertex at distance ``k-1`` from ``y`` that is adjacent to ``mu``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k == 1:
        if not G.has_edge(y, mu):
            raise GraphError(f"{mu} is not an ancestor of {y} one level down")
        return y
    dist = {y: 0}
    queue = deque([y])
    found = []
    while queue:
        v = queue.popleft()
        if dist[v] == k - 1:
            if G.has_edge(v, mu):
                found.append(v)
            continue
        for u in G.adj[v]:
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    if not found:
        raise GraphError(f"no vertex at distance {k - 1} from {y} adjacent to {mu}")
    return min(found)


def injective_port_label(G: Graph, w: int) -> dict[int, int]:
    """Rank the neighbours of ``w`` by id, starting from 1."""
    return {u: i for i, u in enumerate(G.adj[w], start=1)}


def level_coloring_even(
    G: Graph, P: LevelPartition, l: int, p: int, cache: LevelCache | None = None
) -> dict[int, tuple[int, int]]:
    """Colour level ``l`` so that same-level pairs at even distance ``p`` differ.

    Colours are pairs ``(clique colour, port label)``. Below level ``p/2``
    every vertex gets ``(0, 0)``.
    """
    if p < 2 or p % 2 == 1:
        raise ValueError(f"level_coloring_even needs even p >= 2, got {p}")
    cache = _cache_for(G, P, cache)
    k = p // 2
    layer = P.layer(l)
    if l < k:
        return {y: (0, 0) for y in layer}
    colors = {}
    ports: dict[int, dict[int, int]] = {}
    for y in layer:
        c, mu = _ancestor_clique_color(cache, y, l - k)
        if mu not in ports:
            ports[mu] = injective_port_label(G, mu)
        colors[y] = (c, ports[mu][sigma_vertex(G, P, y, mu, k)])
    return colors


def _level_coloring(cache: LevelCache, l: int, d: int) -> dict[int, Hashable]:
    if d == 1:
        sub = cache.subgraph(l)
        g = cache.greedy(l)
        return {v: g[i] for i, v in enumerate(sub.vertices)}
    if d % 2:
        return level_coloring_odd(cache.G, cache.P, l, d, cache)
    return level_coloring_even(cache.G, cache.P, l, d, cache)


def _compress(colors: dict[int, Hashable]) -> dict[int, int]:
    # renumber by first appearance in id order; never adds colours
    ids: dict[Hashable, int] = {}
    return {v: ids.setdefault(colors[v], len(ids)) for v in sorted(colors)}


def _resolve_roots(G: Graph, roots: Sequence[int] | None) -> list[int]:
    comps = connected_components(G)
    if roots is None:
        return [comp[0] for comp in comps]
    owner = {v: i for i, comp in enumerate(comps) for v in comp}
    picked = sorted(roots, key=lambda r: owner.get(r, -1))
    if len(picked) != len(comps) or [owner.get(r) for r in picked] != list(range(len(comps))):
        raise GraphError("roots must contain exactly one vertex of every component")
    return picked


def combined_coloring(
    G: Graph,
    S: Collection[int],
    p: int,
    roots: Sequence[int] | None = None,
) -> TupleColoring:
    """Colour ``G`` properly for every exact distance graph with distance in ``S``.

    ``roots`` gives one root per component (default: the smallest vertex of
    each). Raises :class:`~exactchroma.chordal.NotChordalError` on non-chordal
    input. For ``S == {1}`` the target graph is ``G`` itself, which is coloured
    optimally along its elimination order.
    """
    members = validate_distance_set(S, p)
    L = require_chordal(G)
    if members == (1,):
        return TupleColoring.from_tuples(p, members, [(0, c) for c in greedy_proper_coloring(G, L)])

    tuples: list[tuple[int, ...]] = [()] * G.n
    for root in _resolve_roots(G, roots):
        P = level_partition(G, root)
        cache = LevelCache(G, P)
        for l, layer in enumerate(P.layers):
            per_distance = [_compress(_level_coloring(cache, l, d)) for d in members]
            f = l % (p + 1)
            for y in layer:
                tuples[y] = (f, *(g[y] for g in per_distance))
    return TupleColoring.from_tuples(p, members, tuples)


def target_graph(G: Graph, S: Collection[int]) -> Graph:
    """Union of the exact distance graphs of ``G`` for the distances in ``S``."""
    return union_graphs([exact_distance_graph(G, d) for d in sorted(set(S))])


def _report(G: Graph, coloring: TupleColoring, main1: bool) -> BoundReport:
    p, S = coloring.p, coloring.S
    t = clique_number_chordal(G, mcs_order(G))
    delta = max_degree(G)
    q = sum(1 for d in S if d % 2 == 0)
    if t < 2:
        # edgeless: every exact distance graph is edgeless
        bound = 1
    elif main1:
        bound = bound_main1(t, p, delta)
    else:
        bound = bound_main2(t, p, S, delta)
    proper, _ = verify_proper(target_graph(G, S), coloring.dense)
    return BoundReport(t, delta, p, S, q, bound, coloring.colors_used, proper)


def exact_color(G: Graph, p: int) -> tuple[TupleColoring, BoundReport]:
    """Colour the exact distance-``p`` graph of chordal ``G`` and check it."""
    coloring = combined_coloring(G, [p], p)
    return coloring, _report(G, coloring, main1=True)


def color_distances(G: Graph, p: int, S: Collection[int]) -> tuple[TupleColoring, BoundReport]:
    """Like :func:`exact_color` for a set of distances, checked against the union bound."""
    coloring = combined_coloring(G, S, p)
    return coloring, _report(G, coloring, main1=False)


def coloring_report(G: Graph, coloring: TupleColoring, report: BoundReport) -> dict:
    """JSON-ready report; key order is part of the output format."""
    return {
        "n": G.n,
        "p": report.p,
        "S": list(report.S),
        "t": report.t,
        "delta": report.delta,
        "bound": report.bound,
        "colors_used": report.colors_used,
        "proper": report.proper,
        "colors": list(coloring.dense),
    }
