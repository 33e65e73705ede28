"""Automorphisms, orbits and canonical forms by partition refinement.

The search tree is the usual individualization/refinement tree: refine the
vertex partition to an equitable one, pick the first largest non-singleton
cell, individualize each of its vertices in turn, repeat until the partition
is discrete.  Refinement and cell choice depend only on the graph structure,
so the tree of ``pi(G)`` is the image of the tree of ``G``.

The "left path" always individualizes the smallest vertex of the target cell.
Searching for automorphisms means searching for right paths whose refinement
signatures agree with the left path and whose leaf map preserves adjacency.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .graph import Graph, bits

Cells = list[list[int]]
Permutation = tuple[int, ...]

# complete/empty graphs above this size report n! without listing
LIST_CUTOFF = 8


def _initial_cells(g: Graph, coloring: Sequence[int] | None) -> Cells:
    if coloring is None:
        return [list(range(g.n))] if g.n else []
    if len(coloring) != g.n:
        raise ValueError(f"coloring has {len(coloring)} entries for {g.n} vertices")
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(coloring):
        by_color.setdefault(c, []).append(v)
    return [by_color[c] for c in sorted(by_color)]


def refine(g: Graph, cells: Cells) -> Cells:
    """Coarsest equitable refinement; sub-cells replace their parent in place,
    ordered by their neighbour-count signature."""
    adj = g.adj
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: Cells = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                a = adj[v]
                groups.setdefault(tuple((a & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                split = True
                out.extend(groups[k] for k in sorted(groups))
        cells = out
        if not split:
            return cells


def _signature(g: Graph, cells: Cells) -> tuple:
    masks = [sum(1 << v for v in c) for c in cells]
    return tuple(
        (len(c), tuple((g.adj[c[0]] & m).bit_count() for m in masks)) for c in cells
    )


def _target(cells: Cells) -> int:
    best, size = -1, 1
    for i, c in enumerate(cells):
        if len(c) > size:
            best, size = i, len(c)
    return best


def _individualize(cells: Cells, i: int, v: int) -> Cells:
    rest = [x for x in cells[i] if x != v]
    return cells[:i] + [[v], rest] + cells[i + 1:]


def _preserves(g: Graph, perm: Sequence[int]) -> bool:
    adj = g.adj
    for v in range(g.n):
        img = 0
        for u in bits(adj[v]):
            img |= 1 << perm[u]
        if img != adj[perm[v]]:
            return False
    return True


class _Orbits:
    """Union-find over vertices, fed with permutations."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def add(self, perm: Sequence[int]) -> None:
        for v, w in enumerate(perm):
            a, b = self.find(v), self.find(w)
            if a != b:
                self.parent[max(a, b)] = min(a, b)

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            out.setdefault(self.find(v), []).append(v)
        return sorted(out.values())


class _Tree:
    def __init__(self, g: Graph, coloring: Sequence[int] | None = None):
        self.g = g
        root = refine(g, _initial_cells(g, coloring))
        # levels[i] = (cells before individualizing, target index, left vertex)
        self.levels: list[tuple[Cells, int, int]] = []
        self.sigs: list[tuple] = []
        cells = root
        while (t := _target(cells)) >= 0:
            v = cells[t][0]
            self.levels.append((cells, t, v))
            cells = refine(g, _individualize(cells, t, v))
            self.sigs.append(_signature(g, cells))
        self.root = root
        self.leaf = [c[0] for c in cells]

    def _leaf_map(self, right: Cells) -> Permutation:
        perm = [0] * self.g.n
        for a, c in zip(self.leaf, right):
            perm[a] = c[0]
        return tuple(perm)

    def _descend(self, level: int, cells: Cells, first_only: bool) -> Iterator[Permutation]:
        """Automorphisms whose right path passes through ``cells`` at ``level``."""
        if level == len(self.levels):
            perm = self._leaf_map(cells)
            if _preserves(self.g, perm):
                yield perm
            return
        t = self.levels[level][1]
        for x in cells[t]:
            nxt = refine(self.g, _individualize(cells, t, x))
            if _signature(self.g, nxt) != self.sigs[level]:
                continue
            for perm in self._descend(level + 1, nxt, first_only):
                yield perm
                if first_only:
                    return

    def mapping(self, level: int, w: int) -> Permutation | None:
        """An automorphism fixing the left prefix below ``level`` and sending
        the left vertex at ``level`` to ``w``, or None."""
        cells, t, _ = self.levels[level]
        nxt = refine(self.g, _individualize(cells, t, w))
        if _signature(self.g, nxt) != self.sigs[level]:
            return None
        return next(self._descend(level + 1, nxt, True), None)

    def all_automorphisms(self) -> Iterator[Permutation]:
        if not self.levels:
            yield tuple(range(self.g.n))
            return
        yield from self._descend(0, self.root, False)

    def strong_generators(self, stop_at_first: bool = False):
        """Generators found level by level from the deepest one, plus the
        orbit size of each left vertex in its prefix stabilizer."""
        n = self.g.n
        gens: list[Permutation] = []
        sizes: list[int] = []
        orbits = _Orbits(n)
        for level in reversed(range(len(self.levels))):
            cells, t, v = self.levels[level]
            for w in cells[t]:
                if orbits.find(w) == orbits.find(v):
                    continue
                perm = self.mapping(level, w)
                if perm is not None:
                    gens.append(perm)
                    if stop_at_first:
                        return gens, sizes
                    orbits.add(perm)
            rv = orbits.find(v)
            sizes.append(sum(1 for w in cells[t] if orbits.find(w) == rv))
        return gens, sizes


@dataclass
class AutGroup:
    """Automorphism group of a (possibly vertex-colored) graph."""

    n: int
    order: int
    generators: list[Permutation]
    orbits: list[list[int]]
    _tree: _Tree | None = field(default=None, repr=False)

    @cached_property
    def elements(self) -> list[Permutation]:
        if self._tree is None:
            raise ValueError(f"listing {self.order} automorphisms is disabled for this graph")
        return sorted(self._tree.all_automorphisms())

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def orbit_of(self, v: int) -> list[int]:
        return next(o for o in self.orbits if v in o)


def _is_symmetric_group(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return all(row == 0 for row in g.adj) or all(row | 1 << v == full for v, row in enumerate(g.adj))


def automorphisms(g: Graph, coloring: Sequence[int] | None = None) -> AutGroup:
    """Group of (color-preserving, if ``coloring`` is given) automorphisms.

    ``elements`` lists the whole group on demand; for uncolored complete and
    edgeless graphs with more than ``LIST_CUTOFF`` vertices it refuses.
    """
    if coloring is None and g.n > LIST_CUTOFF and _is_symmetric_group(g):
        gens = []
        if g.n > 1:
            gens = [tuple([1, 0] + list(range(2, g.n))), tuple(list(range(1, g.n)) + [0])]
        return AutGroup(g.n, math.factorial(g.n), gens, [list(range(g.n))])
    tree = _Tree(g, coloring)
    gens, sizes = tree.strong_generators()
    orbits = _Orbits(g.n)
    for p in gens:
        orbits.add(p)
    return AutGroup(g.n, math.prod(sizes), gens, orbits.classes(), tree)


def has_nontrivial_automorphism(g: Graph, coloring: Sequence[int] | None = None) -> bool:
    gens, _ = _Tree(g, coloring).strong_generators(stop_at_first=True)
    return bool(gens)


def is_color_preserving_automorphism(g: Graph, c: Sequence[int], p: Sequence[int]) -> bool:
    if not (len(p) == len(c) == g.n):
        raise ValueError(f"size mismatch: graph {g.n}, coloring {len(c)}, permutation {len(p)}")
    if sorted(p) != list(range(g.n)):
        raise ValueError("p is not a permutation of the vertex set")
    return all(c[p[v]] == c[v] for v in range(g.n)) and _preserves(g, p)


# -- canonical form ---------------------------------------------------------


def _certificate(g: Graph, order: Sequence[int]) -> bytes:
    n = g.n
    pos = [0] * n
    for p, v in enumerate(order):
        pos[v] = p
    nbits = n * (n - 1) // 2
    word = 0
    for p in range(n):
        for u in bits(g.adj[order[p]]):
            q = pos[u]
            if q > p:
                # column-major pair index, first pair most significant
                word |= 1 << (nbits - 1 - (q * (q - 1) // 2 + p))
    return bytes([n]) + word.to_bytes((nbits + 7) // 8, "big")


@dataclass(frozen=True, order=True)
class CanonicalLabel:
    key: bytes

    def __repr__(self) -> str:
        return f"CanonicalLabel({self.key.hex()})"


def canonical_order(g: Graph) -> list[int]:
    """Vertex order (position -> vertex) whose certificate is minimal over the search tree."""
    if g.n <= 1:
        return list(range(g.n))
    tree = _Tree(g)
    gens, _ = tree.strong_generators()
    best: list = [None, None]

    def visit(cells: Cells, prefix: list[int]) -> None:
        t = _target(cells)
        if t < 0:
            order = [c[0] for c in cells]
            cert = _certificate(g, order)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, order
            return
        stab = [p for p in gens if all(p[x] == x for x in prefix)]
        orbits = _Orbits(g.n)
        for p in stab:
            orbits.add(p)
        done: set[int] = set()
        for x in cells[t]:
            r = orbits.find(x)
            if r in done:
                continue
            done.add(r)
            visit(refine(g, _individualize(cells, t, x)), prefix + [x])

    visit(tree.root, [])
    return best[1]


def canonical_form(g: Graph) -> CanonicalLabel:
    return CanonicalLabel(_certificate(g, canonical_order(g)))


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v] = p
    return g.relabel(pos)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges() == h.num_edges() and canonical_form(g) == canonical_form(h)

