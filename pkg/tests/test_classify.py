import pytest

from dimdist.automorphism import is_isomorphic
from dimdist.classify import (
    FamilyMatch, HypothesisError, classify, classify_D_extremal, classify_dim_extremal,
    classify_prop_lemn2, d_stratum, hernando_c_template, match_hernando, match_jannesari, realize,
)
from dimdist.corpus import CorpusSpec, enumerate_corpus
from dimdist.graph import (
    blow_up, complete, complete_bipartite, cycle, disjoint_union, empty, join, path, petersen,
    star, union_all,
)
from dimdist.resolving import metric_dimension

labels = lambda ms: sorted(str(m) for m in ms)


def test_dim_extremal_examples():
    assert labels(classify_dim_extremal(complete(6))) == ["Kn(6)"]
    assert labels(classify_dim_extremal(cycle(4))) == ["T3-Kst(2,2)"]
    assert labels(classify_dim_extremal(star(4))) == ["T3-KsNt(1,4)", "T3-Kst(1,4)"]
    with pytest.raises(HypothesisError):
        classify_dim_extremal(empty(3))


def test_lemn2_examples():
    assert labels(classify_prop_lemn2(complete_bipartite(2, 2), 1)) == ["LEMN2-a(1)"]
    # K_{3,1} is also K_1 + co-K_3
    assert labels(classify_prop_lemn2(complete_bipartite(3, 1), 1)) == ["LEMN2-b(1,3)", "LEMN2-c(1,3)"]
    assert "LEMN2-c(2,4)" in labels(classify_prop_lemn2(join(complete(2), empty(4)), 2))
    with pytest.raises(HypothesisError, match="dim = n-2"):
        classify_prop_lemn2(path(5), 1)
    with pytest.raises(ValueError):
        classify_prop_lemn2(cycle(4), 0)


def test_D_extremal_examples():
    assert labels(classify_D_extremal(empty(5))) == ["D-n-empty(5)"]
    assert labels(classify_D_extremal(union_all([complete(2)] * 2))) == ["D-n1-2K2"]
    assert labels(classify_D_extremal(complete_bipartite(4, 2))) == ["D-n2-item7(4)"]
    assert d_stratum("D-n2-item7") == "D-n2" and d_stratum("D-n-empty") == "D-n"
    assert d_stratum("T3-Kst") is None


def test_jannesari_examples():
    assert match_jannesari(cycle(5)).label == "JAN-G4"
    # quotient P3: clique pair, middle independent pair, singleton leaf
    g = blow_up(path(3), [2, -2, 1])
    m = match_jannesari(g)
    assert m.label == "JAN-G2a" and metric_dimension(g).k == g.n - 3
    assert match_jannesari(petersen()) is None
    with pytest.raises(HypothesisError):
        match_jannesari(path(4))


def test_hernando_examples():
    assert match_hernando(path(4)).label == "HER-a1"
    assert match_hernando(path(6)).label == "HER-a1"
    g = hernando_c_template(3, 2)
    assert str(match_hernando(g)).startswith("HER-c(3,2")
    assert metric_dimension(g).k == g.n - 3
    with pytest.raises(HypothesisError):
        match_hernando(cycle(5))


def test_realize_unknown_label():
    with pytest.raises(ValueError):
        realize(FamilyMatch("nope"))


@pytest.mark.parametrize("n", range(1, 7))
def test_every_match_rebuilds_its_graph(n):
    for g in enumerate_corpus(CorpusSpec(n)):
        for m in classify(g):
            assert is_isomorphic(realize(m), g), (g, m)


def test_classify_collects_everything():
    found = labels(classify(complete_bipartite(2, 2)))
    assert "T3-Kst(2,2)" in found and "D-n1-C4" in found and "LEMN2-a(1)" in found
    assert labels(classify(disjoint_union(complete(3), complete(3)))) == ["D-n2-item6"]
