"""Colouring cliques of a chordal graph so that adjacent cliques differ.

Two cliques are *adjacent* when they are disjoint and some edge joins them.
Given a perfect elimination order ``L``, colour each vertex differently from
its predecessors and from the predecessors of those predecessors. A clique
then takes the colour of its ``L``-first vertex, and adjacent cliques always
get distinct colours. At most ``C(w+1, 2)`` colours are used, where ``w`` is
the clique number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Sequence

from .chordal import EliminationOrder, require_perfect_elimination, predecessors
from .graph import Graph, GraphError, from_edge_list


class NotACliqueError(GraphError):
    pass


@dataclass(frozen=True)
class PredecessorColoring:
    graph: Graph
    order: EliminationOrder
    a: tuple[int, ...]
    palette_size: int

    def __getitem__(self, v: int) -> int:
        return self.a[v]


def predecessor_coloring(G: Graph, L: EliminationOrder) -> PredecessorColoring:
    require_perfect_elimination(G, L)
    preds = [predecessors(G, L, v) for v in range(G.n)]
    a = [-1] * G.n
    for v in L.order:
        forbidden = set()
        for u in preds[v]:
            forbidden.add(a[u])
            forbidden.update(a[w] for w in preds[u])
        c = 0
        while c in forbidden:
            c += 1
        a[v] = c
    return PredecessorColoring(G, L, tuple(a), len(set(a)))


def _require_clique(G: Graph, K: Collection[int]) -> None:
    if not K:
        raise NotACliqueError("empty clique")
    for v in K:
        if not 0 <= v < G.n:
            raise NotACliqueError(f"vertex {v} out of range")
    if not G.is_clique(K):
        raise NotACliqueError(f"{sorted(K)} is not a clique")


def mu_of_clique(K: Collection[int], L: EliminationOrder) -> int:
    """The vertex of ``K`` that comes first in ``L``."""
    if not K:
        raise NotACliqueError("empty clique has no first vertex")
    return min(K, key=L.pos.__getitem__)


def clique_color(a: PredecessorColoring, K: Collection[int]) -> int:
    _require_clique(a.graph, K)
    return a.a[mu_of_clique(K, a.order)]


def cliques_adjacent(G: Graph, K: Collection[int], K_star: Collection[int]) -> bool:
    _require_clique(G, K)
    _require_clique(G, K_star)
    if set(K) & set(K_star):
        return False
    return any(G.has_edge(u, v) for u in K for v in K_star)


def ac_graph(G: Graph, family: Sequence[Collection[int]]) -> Graph:
    """Adjacent-cliques graph restricted to ``family``; vertex ``i`` is ``family[i]``."""
    for K in family:
        _require_clique(G, K)
    sets = [frozenset(K) for K in family]
    edges = []
    for i, K in enumerate(sets):
        # vertices adjacent to K, including K itself
        reach = set(K).union(*(G.neighbor_set(v) for v in K))
        for j in range(i + 1, len(sets)):
            Kj = sets[j]
            if not (K & Kj) and (reach & Kj):
                edges.append((i, j))
    return from_edge_list(len(sets), edges)
