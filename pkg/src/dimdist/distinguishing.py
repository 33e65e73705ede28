"""Distinguishing colorings: predicate, exact distinguishing number, witnesses."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import count, product
from typing import Sequence

from .automorphism import automorphisms, has_nontrivial_automorphism
from .graph import Graph, bits, is_connected, is_cycle_graph, is_path_graph, is_star_graph, is_tree
from .resolving import ResolvingSet, is_resolving_set, metric_dimension, minimum_bases, tree_features
from .twin import twin_partition


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @classmethod
    def of(cls, colors: Sequence[int]) -> "Coloring":
        colors = tuple(colors)
        if any(c < 1 for c in colors):
            raise ValueError("colors are positive integers")
        return cls(colors)

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    @property
    def used(self) -> int:
        return len(set(self.colors))

    def __len__(self) -> int:
        return len(self.colors)


@dataclass(frozen=True)
class DistinguishingResult:
    k: int
    witness: Coloring


@dataclass(frozen=True)
class Witness:
    c: Coloring
    colors_used: int
    method: str


def _colors(g: Graph, c) -> tuple[int, ...]:
    colors = tuple(c.colors if isinstance(c, Coloring) else c)
    if len(colors) != g.n:
        raise ValueError(f"coloring has {len(colors)} entries for {g.n} vertices")
    return colors


def is_distinguishing(g: Graph, c) -> bool:
    return not has_nontrivial_automorphism(g, _colors(g, c))


def _search(g: Graph, order: list[int], twins_before: list[list[int]], k: int) -> list[int] | None:
    colors = [1] * g.n
    m = len(order)

    def rec(i: int, used: int) -> bool:
        if i == m:
            return not has_nontrivial_automorphism(g, colors)
        v = order[i]
        for c in range(1, min(k, used + 1) + 1):
            if any(colors[u] == c for u in twins_before[i]):
                continue
            colors[v] = c
            if rec(i + 1, max(used, c)):
                return True
        colors[v] = 1
        return False

    return colors if rec(0, 0) else None


def distinguishing_number(g: Graph) -> DistinguishingResult:
    """Exact D(G) with a witness coloring.

    Vertices fixed by every automorphism are colored 1 and not branched on;
    the rest are visited orbit by orbit, new colors are introduced in
    increasing order, and two twins never share a color.
    """
    group = automorphisms(g)
    if group.is_trivial:
        return DistinguishingResult(1, Coloring((1,) * g.n))
    part = twin_partition(g)
    order = [v for orbit in sorted(group.orbits, key=lambda o: (-len(o), o)) if len(orbit) > 1 for v in orbit]
    pos = {v: i for i, v in enumerate(order)}
    twins_before = [
        [u for u in part.classes[part.class_of[v]] if u in pos and pos[u] < pos[v]] for v in order
    ]
    for k in count(max(2, max(len(c) for c in part.classes))):
        found = _search(g, order, twins_before, k)
        if found is not None:
            return DistinguishingResult(k, Coloring(tuple(found)))


def basis_coloring(g: Graph, s) -> Coloring:
    """Members of ``s`` get colors ``1..|s|`` in vertex order, every other vertex ``|s|+1``."""
    members = s.vertices if isinstance(s, ResolvingSet) else sorted(s)
    if not is_resolving_set(g, members):
        raise ValueError("basis_coloring needs a resolving set")
    colors = [len(members) + 1] * g.n
    for i, v in enumerate(members, 1):
        colors[v] = i
    return Coloring(tuple(colors))


# -- witness colorings for trees and unicyclic graphs -------------------------


class UnsupportedGraph(ValueError):
    pass


def _tree_witness(t: Graph) -> tuple[list[int], str] | None:
    f = tree_features(t)
    colors = [1] * t.n
    hubs = f.multi_leg_branches
    if len(hubs) == 1:
        # a leaf on a longest leg, so its neighbour is neither b nor a leaf
        p = min(f.leaves, key=lambda x: (-len(next(l for l in f.legs if l[0] == x)), x))
        leg = next(l for l in f.legs if l[0] == p)
        if len(leg) < 3:
            return None
        for i, x in enumerate((x for x in f.leaves if x != p), 1):
            colors[x] = i
        colors[leg[1]] = 2
        return colors, "tree-one-hub"
    for i, b in enumerate(hubs, 1):
        colors[b] = i
        legs = sorted(x for x in f.leaves if f.ancestor.get(x) == b)
        for j, x in enumerate(legs, 1):
            colors[x] = j
    return colors, "tree-hubs"


def _cycle_of(g: Graph) -> list[int]:
    deg = g.degrees()
    alive = (1 << g.n) - 1
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        alive &= ~(1 << v)
        for u in bits(g.adj[v] & alive):
            deg[u] -= 1
            if deg[u] == 1:
                stack.append(u)
    ring = bits(alive)
    cyc = [ring[0]]
    prev, cur = -1, ring[0]
    while True:
        a, b = bits(g.adj[cur] & alive)
        prev, cur = cur, (b if a == prev else a)
        if cur == ring[0]:
            return cyc
        cyc.append(cur)


def _hanging_tree(g: Graph, root: int, cycle_mask: int) -> list[int]:
    seen = 1 << root
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen & ~cycle_mask
        seen |= frontier
    return bits(seen)


# color-1 / color-2 vertex lists of the three small-cycle patterns, as
# (cycle position, on_cycle) pairs: on_cycle False means the neighbour t'_i
_SMALL_CYCLE_PATTERNS = {
    3: ([(0, True), (0, False), (2, True)], [(1, True), (1, False), (2, False)]),
    4: ([(0, True), (0, False), (2, True), (3, False)], [(1, True), (1, False), (2, False), (3, True)]),
    5: (
        [(0, True), (0, False), (2, True), (2, False), (3, False), (4, True)],
        [(1, True), (1, False), (3, True), (4, False)],
    ),
}


def _unicyclic_witnesses(g: Graph):
    """Candidate colorings from the unicyclic constructions, in preference order."""
    cyc = _cycle_of(g)
    m = len(cyc)
    cmask = sum(1 << v for v in cyc)
    trees = {t: _hanging_tree(g, t, cmask) for t in cyc}
    sub = {t: g.induced(trees[t]) for t in cyc}
    all_paths = all(is_path_graph(sub[t]) for t in cyc)
    if all_paths:
        arms = {t: [u for u in g.neighbors(t) if not cmask >> u & 1] for t in cyc}
        if m >= 6:
            colors = [1] * g.n
            for i in (0, 1, 3):
                colors[cyc[i]] = 2
            for t in cyc:
                if len(arms[t]) == 2:
                    colors[arms[t][0]] = 2
            yield colors, "unicyclic-long-cycle"
        else:
            # t'_i is ambiguous when t_i is interior to its path: try both arms
            one, two = _SMALL_CYCLE_PATTERNS[m]
            for pick in product(*(arms[t] or [None] for t in cyc)):
                prime = dict(zip(cyc, pick))
                for shift in range(m):
                    for step in (1, -1):
                        ring = [cyc[(shift + step * i) % m] for i in range(m)]
                        colors = [1] * g.n
                        for color, spots in ((1, one), (2, two)):
                            for i, on_cycle in spots:
                                if on_cycle:
                                    colors[ring[i]] = color
                                elif prime[ring[i]] is not None:
                                    colors[prime[ring[i]]] = color
                        yield colors, "unicyclic-small-cycle"
        return
    t1 = next(t for t in cyc if not is_path_graph(sub[t]))
    inside = set(trees[t1])
    bases = minimum_bases(g)
    bases.sort(key=lambda s: t1 in s.vertices)
    for s in bases:
        members = s.vertices
        ins = [v for v in members if v in inside]
        outs = [v for v in members if v not in inside]
        if not ins or not outs or t1 in members:
            continue
        ordered = [ins[0], outs[0]] + [v for v in members if v not in (ins[0], outs[0])]
        colors = [1] * g.n
        for i, v in enumerate(ordered[1:], 2):
            colors[v] = i
        colors[ordered[0]] = 2
        colors[t1] = 2
        yield colors, "unicyclic-basis"


def witness_coloring(g: Graph) -> Witness:
    """A distinguishing coloring with at most dim(G) colors for trees other than
    paths and stars, and for unicyclic graphs other than C_3, C_4, C_5.

    The explicit constructions are tried first and checked; if none of them is
    distinguishing the exact solver's witness is returned (``method="fallback"``).
    """
    if not is_connected(g):
        raise UnsupportedGraph("witness_coloring needs a connected graph")
    m = g.num_edges()
    if is_tree(g):
        if g.n <= 2 or is_path_graph(g) or is_star_graph(g):
            raise UnsupportedGraph("paths and stars attain D = dim + 1")
        got = _tree_witness(g)
        candidates = [got] if got else []
    elif m == g.n:
        if is_cycle_graph(g) and g.n <= 5:
            raise UnsupportedGraph("C_3, C_4 and C_5 attain D = dim + 1")
        candidates = _unicyclic_witnesses(g)
    else:
        raise UnsupportedGraph("witness_coloring supports trees and unicyclic graphs")
    for colors, method in candidates:
        if is_distinguishing(g, colors):
            c = Coloring(tuple(colors))
            return Witness(c, c.used, method)
    c = distinguishing_number(g).witness
    return Witness(c, c.used, "fallback")
