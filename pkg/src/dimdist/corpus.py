"""Non-isomorphic graph corpora.

Every emitted graph is the canonical relabeling of its isomorphism class and
streams are sorted by canonical label, so output is identical run to run.

* all / connected (n <= 7): every graph on ``n`` vertices arises by adding a
  vertex to a graph on ``n - 1`` vertices, so extending each class
  representative by every neighbourhood and deduplicating is complete.
* trees (n <= 12): add a leaf anywhere to each tree on ``n - 1`` vertices.
* unicyclic (3 <= n <= 12): add one missing edge to each tree on ``n`` vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Iterator

from .automorphism import CanonicalLabel, canonical_form, canonical_order
from .graph import Graph, build_graph, is_connected
from .graph6 import read_file

KINDS = ("all", "connected", "trees", "unicyclic")
BUILTIN_LIMIT = {"all": 7, "connected": 7, "trees": 12, "unicyclic": 12}


@dataclass(frozen=True)
class CorpusSpec:
    n: int
    kind: str = "all"
    source: str | None = None  # None means builtin, else a graph6 file

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown corpus class {self.kind!r}; expected one of {KINDS}")
        if self.source is None:
            lo = 3 if self.kind == "unicyclic" else 1
            if not lo <= self.n <= BUILTIN_LIMIT[self.kind]:
                raise ValueError(
                    f"builtin {self.kind} corpus supports {lo} <= n <= {BUILTIN_LIMIT[self.kind]}, got {self.n}"
                )


def canonical_pair(g: Graph) -> tuple[CanonicalLabel, Graph]:
    order = canonical_order(g)
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    h = g.relabel(pos)
    return canonical_form(h), h


def dedup(graphs: Iterable[Graph]) -> list[Graph]:
    """One canonical representative per isomorphism class, sorted by canonical label."""
    seen: dict[CanonicalLabel, Graph] = {}
    for g in graphs:
        key, h = canonical_pair(g)
        seen.setdefault(key, h)
    return [seen[k] for k in sorted(seen)]


def _extend_by_vertex(g: Graph) -> Iterator[Graph]:
    n = g.n
    for nb in range(1 << n):
        adj = list(g.adj)
        for v in range(n):
            if nb >> v & 1:
                adj[v] |= 1 << n
        adj.append(nb)
        yield Graph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (build_graph(1, []),)
    return tuple(dedup(h for g in all_graphs(n - 1) for h in _extend_by_vertex(g)))


@lru_cache(maxsize=None)
def trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (build_graph(1, []),)
    out = []
    for t in trees(n - 1):
        for v in range(t.n):
            out.append(build_graph(n, t.edges() + [(v, n - 1)]))
    return tuple(dedup(out))


@lru_cache(maxsize=None)
def unicyclic(n: int) -> tuple[Graph, ...]:
    out = []
    for t in trees(n):
        for u in range(n):
            for v in range(u + 1, n):
                if not t.has_edge(u, v):
                    out.append(build_graph(n, t.edges() + [(u, v)]))
    return tuple(dedup(out))


def _check_range(kind: str, n: int) -> None:
    CorpusSpec(n, kind)


def tree_stream(n: int) -> Iterator[Graph]:
    _check_range("trees", n)
    yield from trees(n)


def unicyclic_stream(n: int) -> Iterator[Graph]:
    _check_range("unicyclic", n)
    yield from unicyclic(n)


def _matches(kind: str, g: Graph) -> bool:
    if kind == "all":
        return True
    if not is_connected(g):
        return False
    m = g.num_edges()
    return kind == "connected" or (kind == "trees" and m == g.n - 1) or (kind == "unicyclic" and m == g.n)


def enumerate_corpus(spec: CorpusSpec) -> Iterator[Graph]:
    """Stream of pairwise non-isomorphic graphs of the requested kind and order.

    For a graph6 source, graphs of other orders or kinds are skipped and
    isomorphic duplicates are dropped.
    """
    if spec.source is not None:
        if not Path(spec.source).is_file():
            raise FileNotFoundError(f"corpus file {spec.source} not found")
        yield from dedup(g for g in read_file(spec.source) if g.n == spec.n and _matches(spec.kind, g))
        return
    if spec.kind == "trees":
        yield from trees(spec.n)
    elif spec.kind == "unicyclic":
        yield from unicyclic(spec.n)
    else:
        yield from (g for g in all_graphs(spec.n) if _matches(spec.kind, g))
