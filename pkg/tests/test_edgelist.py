import pytest
from hypothesis import given

from conftest import graphs
from exactchroma import edgelist
from exactchroma.graph import GraphError, from_edge_list


def test_parse_with_comments_and_blank_lines():
    text = "# a path\n4 3\n0 1\n\n1 2  # middle\n2 3\n"
    G = edgelist.loads(text)
    assert G.n == 4 and G.edges() == [(0, 1), (1, 2), (2, 3)]


def test_dump_format():
    G = from_edge_list(3, [(2, 1), (0, 1)])
    assert edgelist.dumps(G) == "3 2\n0 1\n1 2\n"


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 2\n0 1\n", "2 1\n0 5\n", "2 1\n1 1\n", "2 1\nx y\n"],
)
def test_bad_input(text):
    with pytest.raises(GraphError):
        edgelist.loads(text)


@given(graphs(max_n=15))
def test_round_trip_is_bit_exact(G):
    text = edgelist.dumps(G)
    assert edgelist.loads(text) == G
    assert edgelist.dumps(edgelist.loads(text)) == text


def test_file_round_trip(tmp_path):
    G = from_edge_list(5, [(0, 4), (1, 3)])
    target = tmp_path / "g.el"
    edgelist.write(G, target)
    assert edgelist.read(target) == G
