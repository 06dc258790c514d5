"""Brute-force ground truth for small graphs.

Nothing here shares code paths with the constructions it checks: distances
come from a synchronous all-pairs bitset expansion rather than per-source
BFS, and chordality from enumerating induced cycles rather than from an
elimination order.
"""

from __future__ import annotations

from typing import Sequence

from .graph import INF, DistanceOracle, Graph, GraphError


class TooLargeError(GraphError):
    """Input exceeds the size limit of an exponential-time routine."""


def _limit(G: Graph, max_n: int, what: str) -> None:
    if G.n > max_n:
        raise TooLargeError(f"{what} limited to n <= {max_n}, got n={G.n}")


def _masks(G: Graph) -> list[int]:
    return [sum(1 << u for u in G.adj[v]) for v in range(G.n)]


def verify_proper(H: Graph, coloring: Sequence[int]) -> tuple[bool, tuple[int, int] | None]:
    """``(True, None)`` if no edge of ``H`` is monochromatic, else ``(False, edge)``."""
    if len(coloring) != H.n:
        raise GraphError(f"coloring covers {len(coloring)} vertices, graph has {H.n}")
    for u, v in H.edges():
        if coloring[u] == coloring[v]:
            return False, (u, v)
    return True, None


def _greedy_clique(H: Graph, masks: list[int]) -> int:
    best = 0
    for start in range(H.n):
        cand = masks[start]
        size = 1
        while cand:
            # densest remaining candidate
            v = max(
                (u for u in range(H.n) if cand >> u & 1),
                key=lambda u: (masks[u] & cand).bit_count(),
            )
            size += 1
            cand &= masks[v]
        best = max(best, size)
    return best


def brute_chromatic_number(H: Graph, max_n: int = 16) -> int:
    """Exact chromatic number by branch and bound.

    Vertices are coloured in descending-degree order; a colour class may only
    be opened in increasing index order, and branches that cannot beat the
    incumbent are cut. The greedy clique size is a lower bound that stops the
    search as soon as it is matched.
    """
    _limit(H, max_n, "brute_chromatic_number")
    if H.n == 0:
        return 0
    if H.m == 0:
        return 1
    masks = _masks(H)
    order = sorted(range(H.n), key=lambda v: (-H.degree(v), v))
    lower = _greedy_clique(H, masks)

    color = [-1] * H.n
    upper = 0
    for v in order:
        used = {color[u] for u in H.adj[v]}
        c = 0
        while c in used:
            c += 1
        color[v] = c
        upper = max(upper, c + 1)
    best = upper
    if best == lower:
        return best

    color = [-1] * H.n

    def search(i: int, used_colors: int) -> bool:
        nonlocal best
        if used_colors >= best:
            return False
        if i == H.n:
            best = used_colors
            return best == lower
        v = order[i]
        taken = {color[u] for u in H.adj[v] if color[u] >= 0}
        for c in range(min(used_colors + 1, best - 1)):
            if c in taken:
                continue
            color[v] = c
            if search(i + 1, max(used_colors, c + 1)):
                return True
            color[v] = -1
        return False

    search(0, 0)
    return best


def brute_is_chordal(G: Graph, max_n: int = 12) -> bool:
    """True iff no vertex subset of size >= 4 induces a cycle."""
    _limit(G, max_n, "brute_is_chordal")
    masks = _masks(G)
    for subset in range(1 << G.n):
        if subset.bit_count() < 4:
            continue
        members = [v for v in range(G.n) if subset >> v & 1]
        if any((masks[v] & subset).bit_count() != 2 for v in members):
            continue
        # 2-regular: a cycle iff connected
        start = members[0]
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in range(G.n):
                if frontier >> v & 1:
                    nxt |= masks[v] & subset
            frontier = nxt & ~seen
            seen |= nxt
        if seen == subset:
            return False
    return True


def brute_all_pairs(G: Graph, max_n: int = 512) -> DistanceOracle:
    """All-pairs distances by growing every ball simultaneously.

    ``reach[v]`` after round ``r`` is the set of vertices within distance
    ``r`` of ``v``; a vertex first entering the ball in round ``r`` is at
    distance exactly ``r``.
    """
    _limit(G, max_n, "brute_all_pairs")
    masks = _masks(G)
    reach = [1 << v for v in range(G.n)]
    dist: list[list[float]] = [[INF] * G.n for _ in range(G.n)]
    for v in range(G.n):
        dist[v][v] = 0
    r = 0
    changed = True
    while changed:
        r += 1
        changed = False
        grown = []
        for v in range(G.n):
            ball = reach[v] | masks[v]
            for u in G.adj[v]:
                ball |= reach[u]
            grown.append(ball)
        for v in range(G.n):
            new = grown[v] & ~reach[v]
            if new:
                changed = True
                for u in range(G.n):
                    if new >> u & 1:
                        dist[v][u] = r
        reach = grown
    return DistanceOracle(G, rows=dist)
