import pytest

from dimdist.automorphism import canonical_form
from dimdist.corpus import CorpusSpec, enumerate_corpus, tree_stream, unicyclic_stream
from dimdist.graph import is_connected, labeled_graphs
from dimdist.graph6 import write_file
from oracles import brute_canonical, edge_set

ALL = [1, 2, 4, 11, 34, 156]
TREES = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
UNICYCLIC = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89}


@pytest.mark.parametrize("n", range(1, 6))
def test_all_graphs_cover_labeled_enumeration(n):
    emitted = list(enumerate_corpus(CorpusSpec(n)))
    brute = {brute_canonical(n, edge_set(g)) for g in labeled_graphs(n)}
    assert len(emitted) == len(brute) == ALL[n - 1]
    assert {brute_canonical(n, edge_set(g)) for g in emitted} == brute


def test_n6_count_and_order():
    gs = list(enumerate_corpus(CorpusSpec(6)))
    assert len(gs) == ALL[5]
    keys = [canonical_form(g) for g in gs]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)


@pytest.mark.parametrize("n", range(1, 13))
def test_tree_counts(n):
    ts = list(tree_stream(n))
    assert len(ts) == TREES[n - 1]
    assert len({canonical_form(t) for t in ts}) == len(ts)


@pytest.mark.parametrize("n,count", UNICYCLIC.items())
def test_unicyclic_counts(n, count):
    gs = list(unicyclic_stream(n))
    assert len(gs) == count and all(is_connected(g) and g.num_edges() == n for g in gs)


def test_trees_inside_connected():
    conn = {canonical_form(g) for g in enumerate_corpus(CorpusSpec(6, "connected"))}
    assert {canonical_form(t) for t in tree_stream(6)} <= conn


def test_range_errors():
    with pytest.raises(ValueError):
        CorpusSpec(8, "all")
    with pytest.raises(ValueError):
        list(tree_stream(13))
    with pytest.raises(ValueError):
        list(unicyclic_stream(2))
    with pytest.raises(ValueError):
        CorpusSpec(4, "cubic")


def test_file_source_filters_and_dedups(tmp_path):
    src = list(enumerate_corpus(CorpusSpec(4)))
    p = tmp_path / "c.g6"
    write_file(p, src + [g.relabel([3, 2, 1, 0]) for g in src])
    assert len(list(enumerate_corpus(CorpusSpec(4, "all", str(p))))) == 11
    assert len(list(enumerate_corpus(CorpusSpec(4, "trees", str(p))))) == 2
    with pytest.raises(FileNotFoundError):
        list(enumerate_corpus(CorpusSpec(4, "all", str(tmp_path / "missing.g6"))))
