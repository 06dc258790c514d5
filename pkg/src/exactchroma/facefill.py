"""Distance-preserving gadgets for filling faces and removing cut vertices.

Both operations add vertices and edges to a graph without shrinking any
distance between the original vertices, so the exact distance graphs of
the original graph reappear as induced subgraphs of those of the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, bfs_distances, from_edge_list


@dataclass(frozen=True)
class FaceFillGadget:
    """Outer ``C_k`` on ``0..k-1`` with a triangulated ring down to an inner ``C_{k-1}``.

    Inner vertex ``w_j`` has id ``k + j``; inner edge ``e_i`` joins ``w_{i-1}``
    and ``w_i`` (indices mod ``k-1``), so ``w_0`` is shared by ``e_1`` and
    ``e_{k-1}``. Outer ``z_i`` (``i >= 1``) sees both ends of ``e_i``, and
    ``z_0`` sees ``w_0``.
    """

    k: int
    graph: Graph
    outer: tuple[int, ...]
    inner: tuple[int, ...]


def face_fill_gadget(k: int) -> FaceFillGadget:
    if k < 4:
        raise ValueError(f"face fill needs an outer cycle of length >= 4, got {k}")
    outer = tuple(range(k))
    inner = tuple(range(k, 2 * k - 1))
    r = k - 1
    edges = [(outer[i], outer[(i + 1) % k]) for i in range(k)]
    edges += [(inner[j], inner[(j + 1) % r]) for j in range(r)]
    for i in range(1, k):
        edges += [(outer[i], inner[(i - 1) % r]), (outer[i], inner[i % r])]
    edges.append((outer[0], inner[0]))
    return FaceFillGadget(k, from_edge_list(2 * k - 1, edges), outer, inner)


def verify_distance_preservation(g: FaceFillGadget) -> bool:
    """True iff every pair of outer vertices is as far apart as on the bare cycle."""
    k = g.k
    for i, z in enumerate(g.outer):
        dist = bfs_distances(g.graph, z)
        for j, w in enumerate(g.outer):
            if dist[w] != min(abs(i - j), k - abs(i - j)):
                return False
    return True


def patch_cut_vertex(G: Graph, y: int, cyclic_order: Sequence[int]) -> Graph:
    """Join cyclically consecutive neighbours of ``y`` by new paths of length 2.

    A pair that is already adjacent is skipped, and with two neighbours the
    single pair is patched once. New vertices get ids ``G.n, G.n+1, ...``.
    """
    if not 0 <= y < G.n:
        raise GraphError(f"vertex {y} out of range")
    nbrs = list(cyclic_order)
    if G.degree(y) < 2:
        raise GraphError(f"vertex {y} has degree {G.degree(y)}, need >= 2")
    if sorted(nbrs) != list(G.adj[y]):
        raise GraphError(f"{nbrs} is not an ordering of the neighbours of {y}")
    edges = G.edges()
    n = G.n
    done: set[frozenset[int]] = set()
    for i, a in enumerate(nbrs):
        b = nbrs[(i + 1) % len(nbrs)]
        pair = frozenset((a, b))
        if pair in done or G.has_edge(a, b):
            continue
        done.add(pair)
        edges += [(a, n), (n, b)]
        n += 1
    return from_edge_list(n, edges)
