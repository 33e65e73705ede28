"""Twin classes, the one-step twin quotient, and almost-asymmetric graphs.

``u`` and ``v`` are twins when ``N(u) - {v} == N(v) - {u}``.  A class with at
least two vertices induces either a clique (type ``K``) or an independent set
(type ``N``); singletons are type ``1``.  The type-(K) condition is read as
"induces ``K_r``, ``r >= 2``".
"""
from __future__ import annotations

from dataclasses import dataclass

from .automorphism import automorphisms
from .graph import Graph, build_graph

TYPE_1, TYPE_K, TYPE_N = "1", "K", "N"


@dataclass(frozen=True)
class TwinPartition:
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class TwinGraph:
    partition: TwinPartition
    quotient: Graph
    types: tuple[str, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.partition.classes)

    @property
    def alpha(self) -> int:
        """Number of classes of type K or N."""
        return sum(t != TYPE_1 for t in self.types)

    @property
    def max_class(self) -> int:
        return max(self.sizes, default=0)


def are_twins(g: Graph, u: int, v: int) -> bool:
    return u == v or (g.adj[u] & ~(1 << v)) == (g.adj[v] & ~(1 << u))


def twin_partition(g: Graph) -> TwinPartition:
    class_of = [-1] * g.n
    classes: list[tuple[int, ...]] = []
    for v in range(g.n):
        if class_of[v] >= 0:
            continue
        members = tuple(u for u in range(v, g.n) if class_of[u] < 0 and are_twins(g, u, v))
        for u in members:
            class_of[u] = len(classes)
        classes.append(members)
    return TwinPartition(tuple(classes), tuple(class_of))


def twin_graph(g: Graph) -> TwinGraph:
    part = twin_partition(g)
    reps = [c[0] for c in part.classes]
    k = len(reps)
    edges = []
    for i in range(k):
        for j in range(i + 1, k):
            cross = {g.has_edge(a, b) for a in part.classes[i] for b in part.classes[j]}
            if len(cross) != 1:
                raise AssertionError(f"twin classes {i} and {j} are partially joined")
            if cross == {True}:
                edges.append((i, j))
    types = []
    for c in part.classes:
        if len(c) == 1:
            types.append(TYPE_1)
        else:
            inner = {g.has_edge(a, b) for a in c for b in c if a < b}
            types.append(TYPE_K if inner == {True} else TYPE_N)
    return TwinGraph(part, build_graph(k, edges), tuple(types))


def is_almost_asymmetric(g: Graph) -> bool:
    """True iff every automorphism maps each twin class onto itself.

    Twin classes always lie inside orbits, so this is "orbits == twin classes".
    """
    classes = sorted(list(c) for c in twin_partition(g).classes)
    return automorphisms(g).orbits == classes


def almost_asymmetric_D(g: Graph) -> int:
    if not is_almost_asymmetric(g):
        raise ValueError("graph is not almost asymmetric")
    return twin_graph(g).max_class
