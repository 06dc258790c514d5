from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from exactchroma.generators import (
    complete,
    complete_dary_tree,
    interval_graph,
    path,
    random_interval_graph,
    random_ktree,
    star,
    triangle_strip,
)
from exactchroma.graph import from_edge_list


def pendant_triangle():
    """Triangle r=0, a=1, b=2 with pendants c=3 on a and d=4 on b."""
    return from_edge_list(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])


def two_triangles():
    """Triangles 0-1-2 and 1-2-3 sharing the edge 12."""
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def small_chordal_corpus():
    """Chordal graphs with n <= 12, named for test ids."""
    corpus = []
    for seed in range(24):
        k = 1 + seed % 4
        n = random.Random(seed).randint(k + 1, 12)
        corpus.append((f"ktree-n{n}-k{k}-s{seed}", random_ktree(n, k, seed)))
    for seed in range(10):
        n = 4 + seed % 9
        corpus.append((f"interval-n{n}-s{seed}", random_interval_graph(n, seed)))
    corpus += [
        ("path6", path(6)),
        ("star7", star(7)),
        ("strip9", triangle_strip(9)),
        ("dary-3-2", complete_dary_tree(3, 2)),
        ("dary-2-3", complete_dary_tree(2, 3)),
        ("K5", complete(5)),
        ("pendant-triangle", pendant_triangle()),
        ("two-triangles", two_triangles()),
        ("intervals-mixed", interval_graph([(0, 3), (1, 2), (2, 6), (5, 7), (8, 9), (8, 12), (10, 11)])),
    ]
    return corpus


def ktree_corpus(count=200, max_n=60):
    """Seeded k-trees, k in 1..4, 10 <= n <= max_n."""
    corpus = []
    for seed in range(count):
        k = 1 + seed % 4
        n = random.Random(10_000 + seed).randint(10, max_n)
        corpus.append(random_ktree(n, k, seed))
    return corpus


@st.composite
def ktrees(draw, max_n=30, max_k=4):
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(k + 1, max(k + 1, max_n)))
    return random_ktree(n, k, draw(st.integers(0, 2**64 - 1)))


@st.composite
def chordal_graphs(draw, max_n=30):
    kind = draw(st.sampled_from(["ktree", "interval"]))
    if kind == "ktree":
        return draw(ktrees(max_n=max_n))
    return random_interval_graph(draw(st.integers(1, max_n)), draw(st.integers(0, 2**32)))


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    if n < 2:
        return from_edge_list(n, [])
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, keep in zip(pairs, chosen) if keep])


# -- acceptance reporting ------------------------------------------------------

_ACCEPTANCE: dict[str, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion reported in the summary")


def pytest_runtest_logreport(report):
    label = report.user_properties and dict(report.user_properties).get("acceptance")
    if not label:
        return
    if report.when == "call" or report.outcome != "passed":
        previous = _ACCEPTANCE.get(label, "PASS")
        _ACCEPTANCE[label] = "PASS" if previous == "PASS" and report.outcome == "passed" else "FAIL"


@pytest.fixture(autouse=True)
def _tag_acceptance(request):
    marker = request.node.get_closest_marker("acceptance")
    if marker:
        request.node.user_properties.append(("acceptance", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_ACCEPTANCE, key=lambda s: int(s.split(".")[0])):
        terminalreporter.write_line(f"[{_ACCEPTANCE[label]}] {label}")
