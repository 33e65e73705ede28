import pytest
from hypothesis import given

from dimdist.graph import (
    UNREACHABLE, Graph, all_pairs_distances, blow_up, build_graph, complement, complete,
    complete_bipartite, compose, cycle, disjoint_union, empty, is_connected, is_path_graph,
    is_star_graph, join, kite, path, petersen, prop_w, standard_family, star, structure_probe,
    subdivided_star, wheel,
)
from oracles import bfs_distances, edge_set
from strategies import graphs


def test_build_rejects_bad_edges():
    with pytest.raises(ValueError, match=r"\(0, 0\)"):
        build_graph(3, [(0, 0)])
    with pytest.raises(ValueError, match=r"\(1, 5\)"):
        build_graph(3, [(1, 5)])
    with pytest.raises(ValueError):
        Graph(2, (2, 0))  # asymmetric rows
    with pytest.raises(ValueError):
        build_graph(65, [])


def test_duplicate_edges_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.num_edges() == 1 and g.edges() == [(0, 1)]


@pytest.mark.parametrize("g,n,m", [
    (path(5), 5, 4), (cycle(6), 6, 6), (complete(5), 5, 10), (empty(4), 4, 0),
    (star(4), 5, 4), (complete_bipartite(2, 3), 5, 6), (wheel(5), 6, 10),
    (petersen(), 10, 15), (kite(), 5, 6),
])
def test_family_sizes(g, n, m):
    assert (g.n, g.num_edges()) == (n, m)


def test_kite_shape():
    assert sorted(kite().degrees()) == [1, 2, 3, 3, 3]


def test_subdivided_star_and_prop_w():
    t = subdivided_star(4)
    assert t.n == 1 + 1 + 2 + 3 + 4 and t.degree(0) == 4
    g = prop_w(2, 4)
    # T_4 (11 vertices) plus K_2 joined to its center
    assert g.n == 13 and g.degree(0) == 6
    with pytest.raises(ValueError):
        prop_w(3, 3)
    with pytest.raises(ValueError):
        subdivided_star(2)


def test_standard_family():
    assert standard_family("kst:2,3").edges() == complete_bipartite(2, 3).edges()
    assert standard_family("petersen").n == 10
    with pytest.raises(ValueError, match="unknown family"):
        standard_family("nope:1")


def test_compositions():
    g = join(complete(1), disjoint_union(complete(2), complete(2)))
    assert g.n == 5 and g.num_edges() == 6
    assert compose("complement", path(3)).edges() == [(0, 2)]
    with pytest.raises(ValueError):
        compose("join", path(2))
    with pytest.raises(ValueError):
        disjoint_union(complete(40), complete(30))


def test_blow_up_signs():
    g = blow_up(path(2), [2, -3])
    assert g.n == 5 and g.num_edges() == 1 + 6


@given(graphs())
def test_complement_involution(g):
    h = complement(g)
    assert complement(h) == g
    assert g.num_edges() + h.num_edges() == g.n * (g.n - 1) // 2


@given(graphs())
def test_distances_match_oracle(g):
    dm = all_pairs_distances(g)
    assert [list(r) for r in dm.d] == bfs_distances(g.n, edge_set(g))
    assert dm.connected == is_connected(g)
    assert (dm.diameter == UNREACHABLE) == (not dm.connected)


def test_structure_and_predicates():
    assert structure_probe(path(4)).tree and structure_probe(cycle(4)).unicyclic
    assert structure_probe(disjoint_union(path(2), path(2))).diameter == UNREACHABLE
    assert is_path_graph(path(1)) and not is_star_graph(path(2)) and is_star_graph(star(2))
