import itertools

import pytest
from hypothesis import given, settings

from conftest import graphs
from exactchroma.generators import complete, cycle, path, star
from exactchroma.graph import INF, GraphError, exact_distance_graph, from_edge_list
from exactchroma.oracle import (
    TooLargeError,
    brute_all_pairs,
    brute_chromatic_number,
    brute_is_chordal,
    verify_proper,
)


def test_verify_proper_examples():
    K3 = complete(3)
    assert verify_proper(K3, [0, 1, 2]) == (True, None)
    assert verify_proper(K3, [0, 0, 1]) == (False, (0, 1))
    assert verify_proper(from_edge_list(4, []), [0] * 4) == (True, None)
    with pytest.raises(GraphError):
        verify_proper(K3, [0, 1])


def test_chromatic_examples():
    assert brute_chromatic_number(cycle(5)) == 3
    assert brute_chromatic_number(complete(4)) == 4
    assert brute_chromatic_number(exact_distance_graph(star(7), 2)) == 6
    assert brute_chromatic_number(from_edge_list(0, [])) == 0
    assert brute_chromatic_number(from_edge_list(3, [])) == 1


def test_chromatic_size_limit():
    with pytest.raises(TooLargeError):
        brute_chromatic_number(path(17))


def _chromatic_by_enumeration(G):
    for k in range(1, G.n + 1):
        for colors in itertools.product(range(k), repeat=G.n):
            if verify_proper(G, colors)[0]:
                return k
    return 0


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_chromatic_matches_enumeration(G):
    assert brute_chromatic_number(G) == _chromatic_by_enumeration(G)


def test_chromatic_on_harder_instances():
    # Petersen has chi 3; the complement of C7 has independence number 2, so chi 4
    petersen = from_edge_list(
        10,
        [(i, (i + 1) % 5) for i in range(5)]
        + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        + [(i, i + 5) for i in range(5)],
    )
    assert brute_chromatic_number(petersen) == 3
    c7 = cycle(7)
    comp = from_edge_list(7, [(u, v) for u in range(7) for v in range(u + 1, 7) if not c7.has_edge(u, v)])
    assert brute_chromatic_number(comp) == 4


def test_brute_is_chordal_examples():
    assert not brute_is_chordal(cycle(4))
    assert brute_is_chordal(from_edge_list(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]))
    # C6 plus the long chord 0-3 leaves two induced 4-cycles
    assert not brute_is_chordal(from_edge_list(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)]))
    with pytest.raises(TooLargeError):
        brute_is_chordal(path(13))


def test_brute_all_pairs_examples():
    assert brute_all_pairs(path(5)).row(0) == (0, 1, 2, 3, 4)
    D = brute_all_pairs(from_edge_list(4, [(0, 1), (2, 3)]))
    assert D.distance(0, 3) == INF and D.distance(2, 3) == 1
    K5 = brute_all_pairs(complete(5))
    assert all(K5.distance(u, v) == (0 if u == v else 1) for u in range(5) for v in range(5))
    with pytest.raises(TooLargeError):
        brute_all_pairs(path(513))
