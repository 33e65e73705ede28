import pytest
from hypothesis import given, settings

from dimdist.automorphism import automorphisms
from dimdist.distinguishing import distinguishing_number
from dimdist.graph import build_graph, complete, complete_bipartite, complete_multipartite, cycle, is_connected, path
from dimdist.resolving import metric_dimension
from dimdist.twin import (
    TYPE_1, TYPE_K, TYPE_N, almost_asymmetric_D, are_twins, is_almost_asymmetric, twin_graph,
    twin_partition,
)
from strategies import graphs

PAW = build_graph(4, [(0, 1), (1, 2), (1, 3), (2, 3)])  # pendant 0 on triangle 1,2,3


def test_partitions():
    assert sorted(map(len, twin_partition(complete_bipartite(2, 3)).classes)) == [2, 3]
    assert twin_partition(complete(5)).classes == ((0, 1, 2, 3, 4),)
    assert twin_partition(PAW).classes == ((0,), (1,), (2, 3))


def test_twin_graphs():
    tg = twin_graph(complete_multipartite([1, 2, 2]))
    assert tg.quotient.num_edges() == 3 and tg.types == (TYPE_1, TYPE_N, TYPE_N) and tg.alpha == 2
    tg = twin_graph(cycle(4))
    assert tg.quotient.n == 2 and tg.types == (TYPE_N, TYPE_N)
    tg = twin_graph(path(5))
    assert tg.quotient.n == 5 and tg.alpha == 0
    assert twin_graph(complete(3)).types == (TYPE_K,)


def test_almost_asymmetric():
    assert is_almost_asymmetric(complete_bipartite(2, 3))
    assert not is_almost_asymmetric(complete_bipartite(3, 3))
    assert is_almost_asymmetric(PAW)
    assert almost_asymmetric_D(complete_bipartite(2, 3)) == 3
    assert almost_asymmetric_D(PAW) == 2 == distinguishing_number(PAW).k
    with pytest.raises(ValueError):
        almost_asymmetric_D(complete_multipartite([1, 2, 2]))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_twin_invariants(g):
    part = twin_partition(g)
    assert sorted(v for c in part.classes for v in c) == list(range(g.n))
    for u in range(g.n):
        for v in range(g.n):
            assert are_twins(g, u, v) == (part.class_of[u] == part.class_of[v])
    tg = twin_graph(g)  # raises if cross-class adjacency were partial
    assert sum(tg.sizes) == g.n
    orbits = automorphisms(g).orbits
    for c in part.classes:
        assert any(set(c) <= set(o) for o in orbits)
    if is_connected(g) and g.n > 1:
        assert metric_dimension(g).k >= g.n - len(part)
