"""BFS level partitions around a root and the structure they carry.

For a root ``x``, level ``l`` is the set of vertices at distance ``l`` from
``x``. In a connected chordal graph the set of level-``l`` neighbours of any
connected piece of the graph above level ``l`` is a clique ("shadow
completeness"), and so are the ancestor sets used by the colourings.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphError

#: Level of a vertex outside the root's component.
OUTSIDE = -1


@dataclass(frozen=True)
class LevelPartition:
    root: int
    level: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]

    @property
    def depth(self) -> int:
        """Index of the last non-empty layer."""
        return len(self.layers) - 1

    def layer(self, l: int) -> tuple[int, ...]:
        return self.layers[l] if 0 <= l < len(self.layers) else ()

    def above(self, l: int) -> list[int]:
        return [v for layer in self.layers[l + 1 :] for v in layer]


@dataclass(frozen=True)
class LevelSubgraph:
    """Induced graph on one layer with id maps in both directions."""

    graph: Graph
    vertices: tuple[int, ...]
    index: dict[int, int]


@dataclass(frozen=True)
class ShadowCheck:
    ok: bool
    level: int | None = None
    component: tuple[int, ...] | None = None
    pair: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def level_partition(G: Graph, x: int) -> LevelPartition:
    if not 0 <= x < G.n:
        raise GraphError(f"root {x} out of range for n={G.n}")
    level = [OUTSIDE] * G.n
    level[x] = 0
    layers: list[list[int]] = [[x]]
    queue = deque([x])
    while queue:
        v = queue.popleft()
        lv = level[v] + 1
        for u in G.adj[v]:
            if level[u] == OUTSIDE:
                level[u] = lv
                if lv == len(layers):
                    layers.append([])
                layers[lv].append(u)
                queue.append(u)
    return LevelPartition(x, tuple(level), tuple(tuple(sorted(layer)) for layer in layers))


def level_subgraph(G: Graph, P: LevelPartition, l: int) -> LevelSubgraph:
    if not 0 <= l <= P.depth:
        raise GraphError(f"level {l} outside 0..{P.depth}")
    H, ids = G.induced_subgraph(P.layers[l])
    return LevelSubgraph(H, ids, {v: i for i, v in enumerate(ids)})


def _components_within(G: Graph, vertices: Iterable[int]) -> list[tuple[int, ...]]:
    allowed = set(vertices)
    seen: set[int] = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if u in allowed and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def upper_components(G: Graph, P: LevelPartition, l: int) -> list[tuple[int, ...]]:
    """Connected components of the graph induced by the levels above ``l``."""
    return _components_within(G, P.above(l))


def shadow(G: Graph, P: LevelPartition, component: Iterable[int], l: int) -> set[int]:
    """Level-``l`` vertices having a neighbour in ``component``."""
    return {
        u
        for v in component
        for u in G.adj[v]
        if P.level[u] == l
    }


def check_shadow_complete(G: Graph, P: LevelPartition) -> ShadowCheck:
    """Check that every level-``l`` shadow of every upper component is a clique.

    On failure the first offending level, component and non-adjacent pair
    are reported.
    """
    for l in range(P.depth + 1):
        for comp in upper_components(G, P, l):
            sh = sorted(shadow(G, P, comp, l))
            for i, u in enumerate(sh):
                for v in sh[i + 1 :]:
                    if not G.has_edge(u, v):
                        return ShadowCheck(False, l, comp, (u, v))
    return ShadowCheck(True)


def ancestor_clique(G: Graph, P: LevelPartition, y: int, target_level: int) -> set[int]:
    """Vertices of level ``target_level`` joined to ``y`` by a level-descending path."""
    ly = P.level[y]
    if ly == OUTSIDE:
        raise GraphError(f"vertex {y} is not in the component of root {P.root}")
    if not 0 <= target_level <= ly:
        raise GraphError(f"target level {target_level} outside 0..{ly}")
    current = {y}
    for j in range(ly - 1, target_level - 1, -1):
        current = {u for v in current for u in G.adj[v] if P.level[u] == j}
    return current
