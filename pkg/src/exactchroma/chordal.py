"""Chordality via maximum cardinality search.

Orders follow the "earlier neighbours form a clique" convention: in a
perfect elimination order, the neighbours of ``v`` placed before ``v`` are
pairwise adjacent. The MCS visit order has this property for every chordal
graph, so it is used as is.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph


class InvalidOrderError(ValueError):
    """An elimination order is malformed or not perfect for the graph."""


class NotChordalError(ValueError):
    """Input graph is not chordal. ``witness`` is an induced cycle (length >= 4) when found."""

    def __init__(self, message: str, witness: list[int] | None = None) -> None:
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class EliminationOrder:
    order: tuple[int, ...]
    pos: tuple[int, ...]

    @classmethod
    def from_sequence(cls, order: Sequence[int]) -> "EliminationOrder":
        n = len(order)
        pos = [-1] * n
        for i, v in enumerate(order):
            if not 0 <= v < n or pos[v] != -1:
                raise InvalidOrderError(f"{list(order)} is not a permutation of 0..{n - 1}")
            pos[v] = i
        return cls(tuple(order), tuple(pos))

    def __len__(self) -> int:
        return len(self.order)

    def before(self, u: int, v: int) -> bool:
        return self.pos[u] < self.pos[v]


def mcs_order(G: Graph) -> EliminationOrder:
    """Maximum cardinality search; ties go to the smallest vertex id."""
    weight = [0] * G.n
    done = [False] * G.n
    heap = [(0, v) for v in range(G.n)]
    order = []
    while heap:
        w, v = heapq.heappop(heap)
        if done[v] or -w != weight[v]:
            continue
        done[v] = True
        order.append(v)
        for u in G.adj[v]:
            if not done[u]:
                weight[u] += 1
                heapq.heappush(heap, (-weight[u], u))
    return EliminationOrder.from_sequence(order)


def predecessors(G: Graph, L: EliminationOrder, v: int) -> list[int]:
    """Neighbours of ``v`` that come before it in ``L``, in ``L`` order."""
    return sorted((u for u in G.adj[v] if L.pos[u] < L.pos[v]), key=L.pos.__getitem__)


def _check_permutation(G: Graph, L: EliminationOrder) -> None:
    if len(L) != G.n:
        raise InvalidOrderError(f"order has {len(L)} vertices, graph has {G.n}")


def peo_violation(G: Graph, L: EliminationOrder) -> tuple[int, int, int] | None:
    """First ``(v, u, w)`` with ``u, w`` non-adjacent predecessors of ``v``, else None."""
    _check_permutation(G, L)
    for v in L.order:
        preds = predecessors(G, L, v)
        for i, u in enumerate(preds):
            for w in preds[i + 1 :]:
                if not G.has_edge(u, w):
                    return v, u, w
    return None


def is_perfect_elimination(G: Graph, L: EliminationOrder) -> bool:
    return peo_violation(G, L) is None


def is_chordal(G: Graph) -> bool:
    return is_perfect_elimination(G, mcs_order(G))


def _path_avoiding(G: Graph, start: int, goal: int, blocked: set[int]) -> list[int] | None:
    parent = {start: start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == goal:
            path = [v]
            while path[-1] != start:
                path.append(parent[path[-1]])
            return path[::-1]
        for u in G.adj[v]:
            if u not in parent and u not in blocked:
                parent[u] = v
                queue.append(u)
    return None


def chordless_cycle(G: Graph, L: EliminationOrder | None = None) -> list[int] | None:
    """An induced cycle of length >= 4, or None if ``G`` is chordal.

    Each PEO violation ``(v, u, w)`` is closed into a cycle through ``v`` by a
    shortest ``u``-``w`` path that avoids every other neighbour of ``v``.
    """
    L = mcs_order(G) if L is None else L
    _check_permutation(G, L)
    # Predecessor pairs first (short, L-local witnesses), then every
    # non-adjacent neighbour pair; any vertex of an induced cycle has one.
    for pairs_of in (lambda v: predecessors(G, L, v), lambda v: list(G.adj[v])):
        for v in L.order:
            nbrs = pairs_of(v)
            for i, u in enumerate(nbrs):
                for w in nbrs[i + 1 :]:
                    if G.has_edge(u, w):
                        continue
                    blocked = (set(G.adj[v]) - {u, w}) | {v}
                    path = _path_avoiding(G, u, w, blocked)
                    if path is not None:
                        return [v] + path
    return None


def require_chordal(G: Graph) -> EliminationOrder:
    """MCS order of ``G``; raises :class:`NotChordalError` with a witness otherwise."""
    L = mcs_order(G)
    if not is_perfect_elimination(G, L):
        cycle = chordless_cycle(G, L)
        raise NotChordalError(f"graph is not chordal; induced cycle {cycle}", cycle)
    return L


def require_perfect_elimination(G: Graph, L: EliminationOrder) -> None:
    bad = peo_violation(G, L)
    if bad is not None:
        v, u, w = bad
        raise InvalidOrderError(
            f"not a perfect elimination order: predecessors {u} and {w} of {v} are non-adjacent"
        )


def clique_number_chordal(G: Graph, L: EliminationOrder) -> int:
    require_perfect_elimination(G, L)
    if G.n == 0:
        return 0
    return 1 + max(sum(1 for u in G.adj[v] if L.pos[u] < L.pos[v]) for v in range(G.n))


def greedy_proper_coloring(G: Graph, L: EliminationOrder) -> list[int]:
    """Smallest-available colouring along ``L``; optimal when ``L`` is a PEO."""
    require_perfect_elimination(G, L)
    color = [-1] * G.n
    for v in L.order:
        used = {color[u] for u in G.adj[v] if color[u] >= 0}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color
