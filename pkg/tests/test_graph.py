import random
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from edgewiener.errors import DisconnectedGraphError, GraphError, IndexOverflowError, ParseError
from edgewiener.graph import (
    Graph,
    U64_MAX,
    all_pairs_distances,
    bfs_distances,
    checked,
    complete_bipartite,
    cycle,
    distance_rows,
    edge_distance_hat,
    format_edgelist,
    generate_family,
    is_bipartite,
    parse_edgelist,
    random_tree,
)
from edgewiener.oracle import line_graph


def test_bfs_single_vertex():
    assert bfs_distances(Graph(1, ()), 0).dist == [0]


def test_bfs_path():
    assert bfs_distances(generate_family("path", 3), 0).dist == [0, 1, 2]


@pytest.mark.parametrize("v", range(6))
def test_bfs_hexagon_multiset(v):
    assert Counter(bfs_distances(cycle(6), v).dist) == Counter([0, 1, 1, 2, 2, 3])


def test_bfs_disconnected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError, match="graph not connected"):
        bfs_distances(g, 0)
    with pytest.raises(DisconnectedGraphError):
        all_pairs_distances(g)


def test_edge_distance_hat_cases():
    c6 = cycle(6)
    d = distance_rows(c6)
    assert edge_distance_hat(c6, 2, 2, d) == 0
    assert edge_distance_hat(c6, 0, 3, d) == 2  # opposite edges
    p3 = generate_family("path", 3)
    assert edge_distance_hat(p3, 0, 1, distance_rows(p3)) == 0
    with pytest.raises(GraphError):
        edge_distance_hat(c6, 0, 6, d)


def test_is_bipartite():
    assert is_bipartite(cycle(6)).ok
    assert is_bipartite(complete_bipartite(2, 3)).ok
    res = is_bipartite(cycle(5))
    assert not res.ok and len(res.witness) == 5


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_odd_cycle_witness_is_closed_odd_walk(n):
    # odd cycle with a pendant tree hanging off it
    g = Graph.from_edges(n + 2, [(i, (i + 1) % n) for i in range(n)] + [(0, n), (n, n + 1)])
    res = is_bipartite(g)
    w = res.witness
    assert not res.ok and len(w) % 2 == 1
    edges = {frozenset(e) for e in g.edges}
    assert all(frozenset((w[i], w[(i + 1) % len(w)])) in edges for i in range(len(w)))


def test_bipartite_coloring_is_proper():
    g = generate_family("hypercube", 4)
    res = is_bipartite(g)
    assert all(res.coloring[u] != res.coloring[v] for u, v in g.edges)


def test_generate_family():
    q3 = generate_family("hypercube", 3)
    assert (q3.vertex_count, q3.edge_count) == (8, 12)
    c6 = generate_family("even_cycle", 6)
    assert c6 == cycle(6)
    p4 = generate_family("path", 4)
    assert (p4.vertex_count, p4.edge_count) == (4, 3)
    assert generate_family("star", 3).edge_count == 3
    for kind, size in [("even_cycle", 5), ("even_cycle", 2), ("path", 0), ("torus", 3)]:
        with pytest.raises(GraphError):
            generate_family(kind, size)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_hypercube_hamming_equals_distance(n):
    g = generate_family("hypercube", n)
    d = all_pairs_distances(g)
    for u in range(g.vertex_count):
        for v in range(g.vertex_count):
            assert d[u, v] == (u ^ v).bit_count()


def test_graph_invariants_enforced():
    with pytest.raises(GraphError, match="self-loop"):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(GraphError, match="duplicate"):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 2)])
    g = generate_family("hypercube", 3)
    assert sorted(eid for row in g.adjacency for _, eid in row) == sorted(2 * list(range(12)))


@st.composite
def connected_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    tree = random_tree(n, rng)
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=2 * n))
    edges = {frozenset(e) for e in tree.edges}
    for u, v in extra:
        if u != v:
            edges.add(frozenset((u, v)))
    return Graph.from_edges(n, sorted(tuple(sorted(e)) for e in edges))


@given(connected_graphs())
@settings(max_examples=60, deadline=None)
def test_metric_axioms_and_backends_agree(g):
    rows = distance_rows(g)
    arr = all_pairs_distances(g)
    assert np.array_equal(np.asarray(rows), arr)
    n = g.vertex_count
    for u in range(n):
        assert rows[u][u] == 0
        for v in range(n):
            assert rows[u][v] == rows[v][u]
            for w in range(n):
                assert rows[u][v] <= rows[u][w] + rows[w][v]
    for u, v in g.edges:
        for s in range(n):
            assert abs(rows[s][u] - rows[s][v]) <= 1


@given(connected_graphs(max_n=10))
@settings(max_examples=60, deadline=None)
def test_line_graph_distance_is_hat_plus_one(g):
    if g.edge_count < 2:
        return
    rows = distance_rows(g)
    lg_rows = distance_rows(line_graph(g))
    for e in range(g.edge_count):
        for f in range(g.edge_count):
            if e != f:
                assert lg_rows[e][f] == edge_distance_hat(g, e, f, rows) + 1


def test_edgelist_roundtrip_and_comments():
    g = generate_family("hypercube", 3)
    text = format_edgelist(g, "cube")
    assert text.startswith("# cube\n8 12\n")
    assert parse_edgelist(text) == g


@pytest.mark.parametrize(
    "text, line",
    [
        ("3 2\n0 1\n1 x\n", 3),
        ("3 2\n0 1\n1 5\n", 3),
        ("# c\n3 2\n0 1\n1 1\n", 4),
        ("3 2\n0 1 2\n", 2),
        ("3 1\n0 1\n1 2\n", 3),
    ],
)
def test_edgelist_errors_report_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_edgelist(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_edgelist_rejects_disconnected_and_missing_edges():
    with pytest.raises(DisconnectedGraphError):
        parse_edgelist("4 2\n0 1\n2 3\n")
    with pytest.raises(ParseError, match="declares 3 edges"):
        parse_edgelist("3 3\n0 1\n1 2\n")
    with pytest.raises(ParseError, match="duplicate"):
        parse_edgelist("3 2\n0 1\n1 0\n")
    with pytest.raises(ParseError, match="header"):
        parse_edgelist("# nothing\n")


def test_checked_arithmetic():
    assert checked(U64_MAX) == U64_MAX
    with pytest.raises(IndexOverflowError):
        checked(U64_MAX + 1)
    with pytest.raises(IndexOverflowError):
        checked(-1)


def test_random_tree_is_tree():
    rng = random.Random(3)
    for n in range(1, 30):
        assert random_tree(n, rng).is_tree()
