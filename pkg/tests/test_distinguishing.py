import pytest
from hypothesis import given, settings

from dimdist.corpus import trees, unicyclic
from dimdist.distinguishing import (
    Coloring, UnsupportedGraph, basis_coloring, distinguishing_number, is_distinguishing,
    witness_coloring,
)
from dimdist.graph import (
    build_graph, complete, complete_bipartite, cycle, disjoint_union, is_cycle_graph,
    is_path_graph, is_star_graph, path, petersen, star, subdivided_star, wheel,
)
from dimdist.resolving import metric_dimension
from oracles import brute_distinguishing_number, edge_set
from strategies import connected_graphs, graphs


@pytest.mark.parametrize("g,k", [
    (cycle(4), 3), (cycle(6), 2), (complete_bipartite(3, 3), 4), (star(5), 5), (wheel(5), 3),
    (petersen(), 3), (disjoint_union(complete(2), complete(2)), 3), (subdivided_star(3), 1),
    (complete(1), 1), (path(2), 2), (cycle(5), 3),
])
def test_known_values(g, k):
    res = distinguishing_number(g)
    assert res.k == k
    assert is_distinguishing(g, res.witness) and res.witness.k <= k


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=6))
def test_matches_partition_oracle(g):
    assert distinguishing_number(g).k == brute_distinguishing_number(g.n, edge_set(g))


def test_coloring_validation():
    with pytest.raises(ValueError):
        Coloring.of([0, 1])
    with pytest.raises(ValueError):
        is_distinguishing(cycle(4), [1, 2])
    assert Coloring.of([1, 3, 3]).used == 2


@settings(max_examples=80, deadline=None)
@given(connected_graphs(max_n=7))
def test_basis_coloring_is_distinguishing(g):
    # the coloring behind D <= dim + 1
    c = basis_coloring(g, metric_dimension(g).basis)
    assert is_distinguishing(g, c)
    assert c.k <= metric_dimension(g).k + 1


def test_basis_coloring_rejects_non_resolving():
    with pytest.raises(ValueError):
        basis_coloring(path(4), [1])


def test_witness_rejects_extremal_graphs():
    for g in (path(5), star(4), cycle(4), complete(4), disjoint_union(path(2), path(2))):
        with pytest.raises(UnsupportedGraph):
            witness_coloring(g)


def test_tree_witness_one_hub():
    spider = build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    w = witness_coloring(spider)
    assert w.method == "tree-one-hub" and w.colors_used <= 2
    assert is_distinguishing(spider, w.c)


def test_paw_small_cycle_pattern():
    paw = build_graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])
    w = witness_coloring(paw)
    assert w.method == "unicyclic-small-cycle" and w.colors_used == 2


@pytest.mark.parametrize("n", range(4, 11))
def test_tree_witnesses_never_need_fallback(n):
    for t in trees(n):
        if is_path_graph(t) or is_star_graph(t):
            continue
        w = witness_coloring(t)
        assert w.method != "fallback"
        assert is_distinguishing(t, w.c) and w.colors_used <= metric_dimension(t).k


@pytest.mark.parametrize("n", range(4, 9))
def test_unicyclic_witnesses_fit_dimension(n):
    for g in unicyclic(n):
        if is_cycle_graph(g) and n <= 5:
            continue
        w = witness_coloring(g)
        assert is_distinguishing(g, w.c) and w.colors_used <= metric_dimension(g).k
