"""Seeded graph families for tests, benchmarks and the CLI.

Randomness comes from :class:`random.Random` (Mersenne Twister), whose
output for a given integer seed is fixed across platforms and Python
versions. Every random generator here takes its own seed and never touches
global state.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, from_edge_list


def _rng(seed: int) -> random.Random:
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return random.Random(seed)


def random_ktree(n: int, k: int, seed: int) -> Graph:
    """Random k-tree: start from ``K_{k+1}``, then attach each new vertex to a
    uniformly chosen k-clique among all k-cliques created so far."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n <= k:
        raise ValueError(f"a {k}-tree needs n >= {k + 1}, got n={n}")
    rng = _rng(seed)
    base = list(range(k + 1))
    edges = [(u, v) for i, u in enumerate(base) for v in base[i + 1 :]]
    cliques = [tuple(u for u in base if u != drop) for drop in base]
    for v in range(k + 1, n):
        chosen = cliques[rng.randrange(len(cliques))]
        edges.extend((u, v) for u in chosen)
        cliques.extend(tuple(sorted((*(u for u in chosen if u != drop), v))) for drop in chosen)
    return from_edge_list(n, edges)


def interval_graph(intervals: Sequence[tuple[float, float]]) -> Graph:
    """Intersection graph of closed intervals ``[lo, hi]``."""
    for lo, hi in intervals:
        if lo > hi:
            raise ValueError(f"interval [{lo}, {hi}] is empty")
    edges = [
        (i, j)
        for i, (a, b) in enumerate(intervals)
        for j in range(i + 1, len(intervals))
        if intervals[j][0] <= b and a <= intervals[j][1]
    ]
    return from_edge_list(len(intervals), edges)


def random_interval_graph(n: int, seed: int) -> Graph:
    """``n`` random integer intervals inside ``[0, 2n)``, mostly short."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = _rng(seed)
    span = 2 * n
    intervals = []
    for _ in range(n):
        lo = rng.randrange(span)
        length = min(rng.randrange(1, 5) if rng.random() < 0.85 else rng.randrange(1, n + 1), span - 1 - lo)
        intervals.append((lo, lo + length))
    return interval_graph(intervals)


def complete_dary_tree(delta: int, radius: int) -> Graph:
    """Root with ``delta`` children, every other internal vertex with ``delta-1``."""
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    if radius < 0:
        raise ValueError(f"radius must be >= 0, got {radius}")
    edges = []
    frontier = [0]
    n = 1
    for depth in range(radius):
        children = delta if depth == 0 else delta - 1
        nxt = []
        for v in frontier:
            for _ in range(children):
                edges.append((v, n))
                nxt.append(n)
                n += 1
        frontier = nxt
    return from_edge_list(n, edges)


def _min_size(name: str, n: int, least: int) -> None:
    if n < least:
        raise ValueError(f"{name} needs n >= {least}, got {n}")


def path(n: int) -> Graph:
    _min_size("path", n, 1)
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _min_size("cycle", n, 3)
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star on ``n`` vertices: centre 0 and ``n-1`` leaves."""
    _min_size("star", n, 2)
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    _min_size("complete", n, 1)
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def triangle_strip(n: int) -> Graph:
    """Path ``0..n-1`` plus the chords ``(i, i+2)``: a strip of triangles."""
    _min_size("triangle_strip", n, 3)
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)] + [(i, i + 2) for i in range(n - 2)])


MODELS = ("ktree", "interval", "dary", "path", "cycle", "star", "complete", "strip")


@dataclass(frozen=True)
class GenSpec:
    model: str
    params: dict[str, int] = field(default_factory=dict)
    seed: int = 0

    def build(self) -> Graph:
        return generate(self)


def generate(spec: GenSpec) -> Graph:
    p = spec.params

    def need(*names: str) -> list[int]:
        missing = [name for name in names if p.get(name) is None]
        if missing:
            raise ValueError(f"model {spec.model!r} needs {', '.join(missing)}")
        return [int(p[name]) for name in names]

    if spec.model == "ktree":
        n, k = need("n", "k")
        return random_ktree(n, k, spec.seed)
    if spec.model == "interval":
        (n,) = need("n")
        return random_interval_graph(n, spec.seed)
    if spec.model == "dary":
        delta, radius = need("delta", "radius")
        return complete_dary_tree(delta, radius)
    simple = {"path": path, "cycle": cycle, "star": star, "complete": complete, "strip": triangle_strip}
    if spec.model in simple:
        (n,) = need("n")
        return simple[spec.model](n)
    raise ValueError(f"unknown model {spec.model!r}; choose from {', '.join(MODELS)}")
