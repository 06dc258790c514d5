"""Simple undirected graphs on dense vertex ids, distances and derived graphs.

Everything else in the package consumes :class:`Graph`. Vertices are the
integers ``0..n-1``; neighbor lists are kept sorted so that iteration order,
and therefore every algorithm built on top, is deterministic.
"""

from __future__ import annotations

import math
import os
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

#: Distance to a vertex in another connected component.
INF = math.inf

DEFAULT_MATERIALIZE_LIMIT = 4096


class GraphError(ValueError):
    """Malformed graph input (bad vertex id, size mismatch, parse failure)."""


class LoopError(GraphError):
    """A self-loop ``(v, v)`` was supplied; graphs here are loop-free."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph in adjacency-list form.

    ``adj[v]`` is the ascending tuple of neighbors of ``v``. Build instances
    with :func:`from_edge_list` rather than by hand; the constructor only
    validates, it does not normalize.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    _sets: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        sets = tuple(frozenset(row) for row in self.adj)
        for v, row in enumerate(self.adj):
            if len(sets[v]) != len(row) or list(row) != sorted(row):
                raise GraphError(f"neighbor list of {v} is not sorted and duplicate-free")
            for u in row:
                if u == v:
                    raise LoopError(f"self-loop at vertex {v}")
                if not 0 <= u < self.n or v not in sets[u]:
                    raise GraphError(f"asymmetric or out-of-range edge ({v}, {u})")
        object.__setattr__(self, "_sets", sets)

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertices``, relabelled in ascending id order.

        Returns the subgraph and the tuple mapping local ids to original ids.
        """
        ids = tuple(sorted(set(vertices)))
        local = {v: i for i, v in enumerate(ids)}
        adj = tuple(
            tuple(local[u] for u in self.adj[v] if u in local) for v in ids
        )
        return Graph(len(ids), adj), ids

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices, dropping duplicate and reversed edges."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise LoopError(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def empty_graph(n: int) -> Graph:
    return Graph(n, tuple(() for _ in range(n)))


def bfs_distances(G: Graph, source: int) -> list[float]:
    """Distances from ``source``; vertices in other components get :data:`INF`."""
    if not 0 <= source < G.n:
        raise GraphError(f"source {source} out of range for n={G.n}")
    dist: list[float] = [INF] * G.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for u in G.adj[v]:
            if dist[u] == INF:
                dist[u] = dv
                queue.append(u)
    return dist


def _thread_cap() -> int:
    raw = os.environ.get("EXACTCHROMA_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


class DistanceOracle:
    """All-pairs distance lookups for one graph.

    Rows are precomputed when ``n <= materialize_limit``, otherwise each
    query runs a fresh BFS. Passing ``rows`` installs a precomputed table
    (used by the brute-force cross-check). Rows are built on up to
    ``threads`` workers (default from ``EXACTCHROMA_THREADS``); results do
    not depend on scheduling.
    """

    def __init__(
        self,
        G: Graph,
        *,
        materialize_limit: int = DEFAULT_MATERIALIZE_LIMIT,
        rows: Sequence[Sequence[float]] | None = None,
        threads: int | None = None,
    ) -> None:
        self.graph = G
        self._rows: tuple[tuple[float, ...], ...] | None = None
        if rows is not None:
            if len(rows) != G.n or any(len(r) != G.n for r in rows):
                raise GraphError("distance table shape does not match graph")
            self._rows = tuple(tuple(r) for r in rows)
        elif G.n <= materialize_limit:
            workers = threads if threads is not None else _thread_cap()
            if workers > 1 and G.n > 1:
                with ThreadPoolExecutor(max_workers=workers) as pool:
                    built = list(pool.map(lambda s: tuple(bfs_distances(G, s)), range(G.n)))
            else:
                built = [tuple(bfs_distances(G, s)) for s in range(G.n)]
            self._rows = tuple(built)

    @property
    def materialized(self) -> bool:
        return self._rows is not None

    def row(self, source: int) -> tuple[float, ...]:
        if self._rows is not None:
            return self._rows[source]
        return tuple(bfs_distances(self.graph, source))

    def distance(self, u: int, v: int) -> float:
        return self.row(u)[v]

    def rows(self) -> list[tuple[float, ...]]:
        return [self.row(s) for s in range(self.graph.n)]


def _check_p(p: int) -> None:
    if p < 1:
        raise ValueError(f"distance parameter p must be >= 1, got {p}")


def exact_distance_graph(G: Graph, p: int) -> Graph:
    """The graph joining exactly the pairs at distance ``p`` in ``G``."""
    _check_p(p)
    edges = []
    for s in range(G.n):
        dist = bfs_distances(G, s)
        edges.extend((s, v) for v in range(s + 1, G.n) if dist[v] == p)
    return from_edge_list(G.n, edges)


def power_graph(G: Graph, p: int) -> Graph:
    """The ``p``-th power: pairs at distance between 1 and ``p``."""
    _check_p(p)
    edges = []
    for s in range(G.n):
        dist = bfs_distances(G, s)
        edges.extend((s, v) for v in range(s + 1, G.n) if dist[v] <= p)
    return from_edge_list(G.n, edges)


def union_graphs(graphs: Sequence[Graph]) -> Graph:
    if not graphs:
        raise GraphError("union of an empty list of graphs")
    n = graphs[0].n
    if any(H.n != n for H in graphs):
        raise GraphError("union requires graphs on the same vertex set")
    return from_edge_list(n, (e for H in graphs for e in H.edges()))


def max_degree(G: Graph) -> int:
    return max((len(row) for row in G.adj), default=0)


def connected_components(G: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * G.n
    comps = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in G.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps
