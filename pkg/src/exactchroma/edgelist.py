"""Plain-text edge-list format.

Layout::

    n m
    u v
    ...

Vertex ids are 0-based. Anything after ``#`` on a line is ignored, as are
blank lines. :func:`dumps` writes edges with ``u < v`` in sorted order, so
``dumps(loads(dumps(G))) == dumps(G)``.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, from_edge_list


def loads(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
    if not rows:
        raise GraphError("missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if n < 0 or m < 0:
        raise GraphError(f"negative header values n={n} m={m}")
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return from_edge_list(n, edges)


def dumps(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read(path: str | Path) -> Graph:
    return loads(Path(path).read_text(encoding="utf-8"))


def write(G: Graph, path: str | Path) -> None:
    Path(path).write_text(dumps(G), encoding="utf-8")
