"""Exact metric dimension, distinguishing number and twin structure of small graphs."""
from .automorphism import AutGroup, CanonicalLabel, automorphisms, canonical_form, is_isomorphic
from .classify import FamilyMatch, classify, classify_D_extremal, classify_dim_extremal, classify_prop_lemn2
from .classify import match_hernando, match_jannesari, realize
from .corpus import CorpusSpec, enumerate_corpus, tree_stream, unicyclic_stream
from .distinguishing import Coloring, basis_coloring, distinguishing_number, is_distinguishing, witness_coloring
from .graph import Graph, build_graph, complement, standard_family
from .graph6 import decode, encode
from .harness import Report, compute, verify
from .resolving import MetricBasis, ResolvingSet, is_resolving_set, metric_dimension, tree_dimension
from .twin import TwinGraph, almost_asymmetric_D, is_almost_asymmetric, twin_graph, twin_partition

__all__ = [name for name in dir() if not name.startswith("_")]
