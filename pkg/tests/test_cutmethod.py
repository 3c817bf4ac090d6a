import random
from dataclasses import replace

import pytest
from hypothesis import given, settings, strategies as st

from edgewiener.cutmethod import (
    IndexReport,
    edge_hyper_wiener_cut,
    edge_wiener_cut,
    tree_edge_hyper_wiener,
    ww_star,
)
from edgewiener.errors import ConsistencyError, GraphError, IndexOverflowError, NotPartialCubeError
from edgewiener.graph import U64_MAX, Graph, complete_bipartite, cycle, generate_family, random_tree
from edgewiener.oracle import edge_indices_naive
from edgewiener.theta import ODD_CYCLE, certify_partial_cube


def sides(g):
    return certify_partial_cube(g).sides


def test_edge_wiener_cut_examples():
    assert edge_wiener_cut(sides(cycle(4))) == (2, 8)
    assert edge_wiener_cut(sides(cycle(6)))[1] == 27
    assert edge_wiener_cut(sides(generate_family("path", 2))) == (0, 0)


def test_ww_star_examples():
    assert ww_star(sides(generate_family("path", 4))) == 0
    assert ww_star(sides(cycle(6))) == 3
    assert ww_star(sides(generate_family("star", 3))) == 0


def test_edge_hyper_wiener_cut_examples():
    assert edge_hyper_wiener_cut(cycle(6)).ww_e == 42
    assert edge_hyper_wiener_cut(cycle(4)).ww_e == 10
    r = edge_hyper_wiener_cut(generate_family("path", 4))
    assert (r.w_e, r.ww_star, r.ww_e, r.method) == (4, 0, 5, "generic-cut")


def test_edge_hyper_wiener_cut_rejects():
    with pytest.raises(NotPartialCubeError) as exc:
        edge_hyper_wiener_cut(cycle(5))
    assert exc.value.rejection.reason == ODD_CYCLE
    with pytest.raises(NotPartialCubeError):
        edge_hyper_wiener_cut(complete_bipartite(2, 3))


def test_degenerate_graphs():
    assert edge_hyper_wiener_cut(generate_family("path", 2)).values() == (1, 0, 0, 0, 0)
    assert edge_hyper_wiener_cut(Graph(1, ())).values() == (0, 0, 0, 0, 0)


def test_tree_fast_path_examples():
    for n in range(1, 8):
        star = generate_family("star", n)
        r = tree_edge_hyper_wiener(star)
        assert r.ww_star == 0 and r.ww_e == 2 * r.w_e - n * (n - 1) // 2
    assert tree_edge_hyper_wiener(generate_family("path", 4)).ww_e == 5
    # P_5: line graph is P_4 with W = 10, WW = 15
    r = tree_edge_hyper_wiener(generate_family("path", 5))
    assert (r.w_e, r.ww_star, r.ww_e, r.method) == (10, 1, 15, "tree")
    assert r.values() == edge_indices_naive(generate_family("path", 5)).values()


def test_tree_fast_path_rejects_non_tree():
    with pytest.raises(GraphError, match="not a tree"):
        tree_edge_hyper_wiener(cycle(4))


def test_trees_exhaustive_agreement():
    rng = random.Random(99)
    for _ in range(500):
        t = random_tree(rng.randint(1, 12), rng)
        expected = edge_indices_naive(t).values()
        assert tree_edge_hyper_wiener(t).values() == expected
        assert edge_hyper_wiener_cut(t).values() == expected


SYMMETRY_GRAPHS = [cycle(8), generate_family("hypercube", 4), random_tree(14, random.Random(4)),
                   Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])]


@given(st.sampled_from(SYMMETRY_GRAPHS), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_ww_star_symmetric_under_order_and_orientation(g, rnd):
    cst = sides(g)
    base = ww_star(cst)
    order = list(range(cst.d))
    rnd.shuffle(order)
    A, B = [cst.A[k] for k in order], [cst.B[k] for k in order]
    for k in range(cst.d):
        if rnd.random() < 0.5:
            A[k], B[k] = B[k], A[k]
    assert ww_star(replace(cst, A=tuple(A), B=tuple(B))) == base


def test_ww_star_thread_count_does_not_matter():
    cst = sides(generate_family("hypercube", 6))
    single = ww_star(cst, threads=1)
    assert all(ww_star(cst, threads=t) == single for t in (2, 3, 4, 7))


def test_count_identities(bz_corpus):
    for g in [generate_family("hypercube", 4), cycle(12), bz_corpus[3][1].graph]:
        cst = sides(g)
        for k in range(cst.d):
            for l in range(cst.d):
                if k == l:
                    continue
                a, b, own_l = cst.A[k], cst.B[k], cst.class_mask[l]
                assert a.bit_count() == (a & cst.A[l]).bit_count() + (a & cst.B[l]).bit_count() + (a & own_l).bit_count()
                assert b.bit_count() == (b & cst.A[l]).bit_count() + (b & cst.B[l]).bit_count() + (b & own_l).bit_count()


def test_report_identities_enforced():
    IndexReport(6, 27, 12, 3, 42, "naive")
    with pytest.raises(ConsistencyError):
        IndexReport(6, 27, 11, 3, 42, "naive")
    with pytest.raises(ConsistencyError):
        IndexReport(6, 27, 12, 3, 41, "naive")
    with pytest.raises(ValueError):
        IndexReport(6, 27, 12, 3, 42, "magic")


def test_report_overflow_is_hard_error():
    with pytest.raises(IndexOverflowError):
        IndexReport.build(2, U64_MAX, 0, "generic-cut")
    with pytest.raises(IndexOverflowError):
        IndexReport.build(2, U64_MAX // 2, 0, "generic-cut")


def test_report_dict_field_names():
    d = edge_hyper_wiener_cut(cycle(6)).to_dict()
    assert list(d) == ["m", "edge_wiener", "edge_wiener_hat", "ww_star", "edge_hyper_wiener", "method", "elapsed_ms"]
