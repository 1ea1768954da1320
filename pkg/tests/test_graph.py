import pytest
from hypothesis import given

from intchrom.cycles import enumerate_simple_cycles
from intchrom.generators import cycle_graph, disjoint_union, edgeless_graph, path_graph
from intchrom.graph import Graph, GraphFormatError, components, is_forest, parse_graph, serialize_graph

from helpers import graphs


def test_dimacs_triangle_is_one_indexed():
    g = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", "dimacs")
    assert g.n == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))


def test_edgelist_path():
    g = parse_graph("3 2\n0 1\n1 2\n", "edgelist")
    assert g == path_graph(3)


def test_comments_skipped():
    text = "c a comment\n# another\np edge 2 1\nc inline\ne 2 1\n"
    assert parse_graph(text, "dimacs").edges == ((0, 1),)
    assert parse_graph("# hi\n2 1\nc x\n1 0\n", "edgelist").edges == ((0, 1),)


@pytest.mark.parametrize(
    "text, fmt, line, fragment",
    [
        ("p edge 2 1\ne 1 1\n", "dimacs", 2, "self-loop"),
        ("p edge 3 2\ne 1 2\ne 2 1\n", "dimacs", 3, "duplicate"),
        ("p edge 3 1\ne 1 4\n", "dimacs", 2, "out of range"),
        ("e 1 2\n", "dimacs", 1, "before"),
        ("p edge x 1\n", "dimacs", 1, "integers"),
        ("p edge 3 1\nq 1 2\n", "dimacs", 2, "unknown"),
        ("3 1\n0 1 2\n", "edgelist", 2, "two integers"),
        ("3 1\n0 0\n", "edgelist", 2, "self-loop"),
        ("3 1\n0 3\n", "edgelist", 2, "out of range"),
    ],
)
def test_malformed_input_reports_line(text, fmt, line, fragment):
    with pytest.raises(GraphFormatError) as info:
        parse_graph(text, fmt)
    assert info.value.line == line
    assert fragment in str(info.value)


def test_edge_count_mismatch():
    with pytest.raises(GraphFormatError, match="declares 2"):
        parse_graph("p edge 3 2\ne 1 2\n", "dimacs")


def test_missing_header():
    with pytest.raises(GraphFormatError, match="header"):
        parse_graph("c nothing here\n", "dimacs")


def test_constructor_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, ((1, 0),))
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(2, 2)])


def test_edgeless_graph_is_parseable():
    g = parse_graph("p edge 3 0\n", "dimacs")
    assert g.m == 0 and g.n == 3


@given(graphs(max_n=8))
def test_serialize_round_trip(g):
    for fmt in ("dimacs", "edgelist"):
        assert parse_graph(serialize_graph(g, fmt), fmt) == g


def test_components_examples():
    assert components(path_graph(3)) == [[0, 1, 2]]
    assert components(disjoint_union(path_graph(2), cycle_graph(3))) == [[0, 1], [2, 3, 4]]
    assert components(edgeless_graph(3)) == [[0], [1], [2]]


@given(graphs(max_n=8))
def test_components_partition_nodes(g):
    blocks = components(g)
    assert sorted(v for b in blocks for v in b) == list(range(g.n))
    where = {v: i for i, b in enumerate(blocks) for v in b}
    for u, v in g.edges:
        assert where[u] == where[v]


def test_is_forest_examples():
    assert is_forest(path_graph(3))
    assert not is_forest(cycle_graph(3))
    assert not is_forest(disjoint_union(path_graph(2), cycle_graph(4)))


@given(graphs(max_n=8))
def test_forest_iff_no_cycles(g):
    assert is_forest(g) == (not enumerate_simple_cycles(g))
