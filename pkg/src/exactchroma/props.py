"""Executable checks of the structural facts the colourings rely on.

Each check runs over a graph (every root, unless ``roots`` is given) and
returns a :class:`CheckResult` carrying the first counterexample it met.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Collection, Iterable, Sequence

from .accolor import clique_color, mu_of_clique, predecessor_coloring
from .chordal import chordless_cycle, clique_number_chordal, is_chordal, is_perfect_elimination, mcs_order
from .graph import DistanceOracle, Graph, connected_components
from .leveling import check_shadow_complete, level_partition, level_subgraph

SUITES = ("shadow", "desce", "path", "adj", "aic")


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    checked: int = 0
    witness: dict | None = field(default=None)

    def as_dict(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "checked": self.checked, "witness": self.witness}


def _roots(G: Graph, roots: Iterable[int] | None) -> list[int]:
    return list(range(G.n)) if roots is None else list(roots)


def _component_omega(G: Graph) -> dict[int, int | None]:
    """Clique number of each vertex's component, None for non-chordal components."""
    omega: dict[int, int | None] = {}
    for comp in connected_components(G):
        H, _ = G.induced_subgraph(comp)
        L = mcs_order(H)
        value = clique_number_chordal(H, L) if is_perfect_elimination(H, L) else None
        omega.update((v, value) for v in comp)
    return omega


def check_shadow(G: Graph, roots: Iterable[int] | None = None) -> CheckResult:
    """Shadow completeness, plus: every level graph is chordal with smaller clique number."""
    omega = _component_omega(G)
    checked = 0
    for x in _roots(G, roots):
        P = level_partition(G, x)
        sc = check_shadow_complete(G, P)
        checked += 1
        if not sc:
            return CheckResult(
                "shadow", False, checked,
                {"root": x, "level": sc.level, "component": list(sc.component), "pair": list(sc.pair)},
            )
        t = omega[x]
        if t is None:
            return CheckResult("shadow", False, checked, {"root": x, "not_chordal": chordless_cycle(G)})
        for l in range(1, P.depth + 1):
            H = level_subgraph(G, P, l).graph
            L = mcs_order(H)
            if not is_perfect_elimination(H, L):
                return CheckResult("shadow", False, checked, {"root": x, "level": l, "level_not_chordal": True})
            w = clique_number_chordal(H, L)
            if t >= 2 and w >= t:
                return CheckResult(
                    "shadow", False, checked, {"root": x, "level": l, "level_clique_number": w, "t": t}
                )
    return CheckResult("shadow", True, checked)


def _ancestor_sweep(G: Graph, level: Sequence[int], y: int) -> list[set[int]]:
    """Ancestor sets of ``y`` at levels ``level[y]-1, ..., 0``."""
    sets = []
    current = {y}
    for j in range(level[y] - 1, -1, -1):
        current = {u for v in current for u in G.adj[v] if level[u] == j}
        sets.append(current)
    return sets


def check_ancestor_cliques(G: Graph, roots: Iterable[int] | None = None) -> CheckResult:
    """Ancestors of one vertex on any one lower level are pairwise adjacent."""
    checked = 0
    for x in _roots(G, roots):
        P = level_partition(G, x)
        for layer in P.layers[2:]:
            for y in layer:
                for K in _ancestor_sweep(G, P.level, y)[:-1]:
                    checked += 1
                    if not G.is_clique(K):
                        return CheckResult(
                            "desce", False, checked,
                            {"root": x, "vertex": y, "level": P.level[next(iter(K))], "ancestors": sorted(K)},
                        )
    return CheckResult("desce", True, checked)


def check_level_paths(G: Graph, roots: Iterable[int] | None = None) -> CheckResult:
    """Same-level pairs at distance ``d >= 2``: ancestor sets ``d // 2`` levels down
    are adjacent (odd ``d``) or adjacent-or-intersecting (even ``d``)."""
    D = DistanceOracle(G)
    checked = 0
    for x in _roots(G, roots):
        P = level_partition(G, x)
        for l, layer in enumerate(P.layers):
            if len(layer) < 2:
                continue
            sweeps = {y: _ancestor_sweep(G, P.level, y) for y in layer}
            for u, v in combinations(layer, 2):
                d = D.distance(u, v)
                if d < 2:
                    continue
                k = int(d) // 2
                checked += 1
                witness = {"root": x, "pair": [u, v], "distance": int(d), "level": l}
                if l < k:
                    return CheckResult("path", False, checked, {**witness, "reason": "level below d//2"})
                Ku = sweeps[u][k - 1] if k else {u}
                Kv = sweeps[v][k - 1] if k else {v}
                meet = bool(Ku & Kv)
                joined = not meet and any(G.has_edge(a, b) for a in Ku for b in Kv)
                if not (joined or (d % 2 == 0 and meet)):
                    return CheckResult(
                        "path", False, checked, {**witness, "K_u": sorted(Ku), "K_v": sorted(Kv)}
                    )
    return CheckResult("path", True, checked)


def small_clique_family(G: Graph) -> list[tuple[int, ...]]:
    """All vertices, edges and triangles of ``G``."""
    family: list[tuple[int, ...]] = [(v,) for v in range(G.n)]
    family += G.edges()
    family += [
        (u, v, w)
        for u, v in G.edges()
        for w in G.adj[v]
        if w > v and G.has_edge(u, w)
    ]
    return family


def _colored_family(G: Graph, family: Sequence[Collection[int]] | None):
    L = mcs_order(G)
    if not is_perfect_elimination(G, L):
        return None, None, None
    a = predecessor_coloring(G, L)
    family = small_clique_family(G) if family is None else family
    by_color: dict[int, list[frozenset[int]]] = defaultdict(list)
    for K in family:
        by_color[clique_color(a, K)].append(frozenset(K))
    return a, L, by_color


def check_adjacent_cliques(G: Graph, family: Sequence[Collection[int]] | None = None) -> CheckResult:
    """Clique colours separate adjacent cliques of ``family`` and stay within ``C(w+1, 2)``."""
    a, L, by_color = _colored_family(G, family)
    if a is None:
        return CheckResult("adj", False, 0, {"not_chordal": chordless_cycle(G)})
    t = clique_number_chordal(G, L)
    if a.palette_size > comb(t + 1, 2):
        return CheckResult("adj", False, 0, {"palette": a.palette_size, "limit": comb(t + 1, 2)})
    checked = 0
    for color, cliques in sorted(by_color.items()):
        for K, K2 in combinations(cliques, 2):
            checked += 1
            if not (K & K2) and any(G.has_edge(u, v) for u in K for v in K2):
                return CheckResult(
                    "adj", False, checked, {"color": color, "cliques": [sorted(K), sorted(K2)]}
                )
    return CheckResult("adj", True, checked)


def check_intersecting_cliques(G: Graph, family: Sequence[Collection[int]] | None = None) -> CheckResult:
    """Intersecting cliques of equal colour share their first vertex."""
    a, L, by_color = _colored_family(G, family)
    if a is None:
        return CheckResult("aic", False, 0, {"not_chordal": chordless_cycle(G)})
    checked = 0
    for color, cliques in sorted(by_color.items()):
        for K, K2 in combinations(cliques, 2):
            if K & K2:
                checked += 1
                if mu_of_clique(K, L) != mu_of_clique(K2, L):
                    return CheckResult(
                        "aic", False, checked, {"color": color, "cliques": [sorted(K), sorted(K2)]}
                    )
    return CheckResult("aic", True, checked)


_CHECKS = {
    "shadow": check_shadow,
    "desce": check_ancestor_cliques,
    "path": check_level_paths,
}


def run_suite(G: Graph, suite: str, roots: Iterable[int] | None = None) -> list[CheckResult]:
    """Run one named suite, or all of them for ``suite == "all"``."""
    names = SUITES if suite == "all" else (suite,)
    results = []
    for name in names:
        if name in _CHECKS:
            results.append(_CHECKS[name](G, None if roots is None else list(roots)))
        elif name == "adj":
            results.append(check_adjacent_cliques(G))
        elif name == "aic":
            results.append(check_intersecting_cliques(G))
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return results
