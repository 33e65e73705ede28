"""Immutable simple graphs with bitmask adjacency, family constructors and distances.

Vertices are ``0..n-1``; ``adj[v]`` is an int whose bit ``u`` is set iff ``uv``
is an edge.  Graphs are never mutated after construction.

Vertex numbering of the family constructors (tests rely on it):

* ``path(n)``: ``0-1-...-(n-1)``.
* ``cycle(n)``: ``path(n)`` plus the edge ``(n-1, 0)``.
* ``complete(n)``, ``empty(n)``: vertices ``0..n-1``.
* ``star(n)``: ``K_{1,n}`` with center ``0`` and leaves ``1..n``.
* ``complete_bipartite(s, t)``: parts ``0..s-1`` and ``s..s+t-1``.
* ``complete_multipartite(sizes)``: parts numbered consecutively in the given order.
* ``wheel(n)``: ``K_1 + C_n``; hub ``0``, rim ``1..n`` in cyclic order.
* ``kite()``: ``0,1`` adjacent of degree 3 in ``K_4 - e``, ``2,3`` the two
  degree-2 vertices of ``K_4 - e`` (non-adjacent), pendant ``4`` attached to ``2``.
* ``subdivided_star(k)``: center ``0``; leg ``i`` (``i = 0..k-1``) has ``i + 1``
  vertices numbered outwards from the center, legs in increasing ``i``.
* ``prop_w(n, m)``: ``subdivided_star(m - n + 2)`` first, then the ``K_n``
  vertices; the center ``0`` is joined to every ``K_n`` vertex.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_N = 64
UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_N}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            u = row
            while u:
                low = u & -u
                w = low.bit_length() - 1
                if not self.adj[w] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
                u ^= low

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return build_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = list(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return build_graph(
            len(vs), [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        )


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicates and reversed pairs collapse."""
    if not 0 <= n <= MAX_N:
        raise ValueError(f"vertex count {n} outside [0, {MAX_N}]")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has an index outside [0, {n})")
        if u == v:
            raise ValueError(f"edge ({u}, {v}) is a self-loop")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


# -- families ---------------------------------------------------------------


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def path(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 1, "complete graph needs n >= 1")
    return build_graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _need(n >= 1, "empty graph needs n >= 1")
    return build_graph(n, [])


def star(n: int) -> Graph:
    _need(n >= 1, "star needs n >= 1")
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    _need(len(sizes) >= 1 and all(s >= 1 for s in sizes), "part sizes must be >= 1")
    part = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part)
    return build_graph(n, [(u, v) for u, v in combinations(range(n), 2) if part[u] != part[v]])


def complete_bipartite(s: int, t: int) -> Graph:
    return complete_multipartite([s, t])


def wheel(n: int) -> Graph:
    _need(n >= 3, "wheel needs a rim of at least 3 vertices")
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    return build_graph(n + 1, rim + [(0, i) for i in range(1, n + 1)])


def kite() -> Graph:
    return build_graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)])


def subdivided_star(k: int) -> Graph:
    _need(k >= 3, "subdivided star needs k >= 3")
    edges = []
    nxt = 1
    for i in range(k):
        prev = 0
        for _ in range(i + 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_graph(nxt, edges)


def prop_w(n: int, m: int) -> Graph:
    """``G_{n,m}``: subdivided star ``T_{m-n+2}`` with its center joined to a ``K_n``."""
    _need(2 <= n < m, "prop_w needs 2 <= n < m")
    tree = subdivided_star(m - n + 2)
    joined = disjoint_union(tree, complete(n))
    return build_graph(
        joined.n, joined.edges() + [(0, tree.n + i) for i in range(n)]
    )


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


FAMILIES = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "star": star,
    "kst": complete_bipartite,
    "multipartite": lambda *sizes: complete_multipartite(sizes),
    "wheel": wheel,
    "kite": kite,
    "subdivided-star": subdivided_star,
    "prop-w": prop_w,
    "petersen": petersen,
}


def standard_family(spec: str) -> Graph:
    """Build a named family from ``"name"`` or ``"name:p1,p2,..."``, e.g. ``"kst:2,3"``."""
    name, _, params = spec.partition(":")
    try:
        builder = FAMILIES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}") from None
    args = [int(p) for p in params.split(",") if p.strip()] if params else []
    return builder(*args)


# -- composition ------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_N:
        raise ValueError(f"combined vertex count {g.n + h.n} exceeds {MAX_N}")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    gmask = (1 << g.n) - 1
    hmask = ((1 << h.n) - 1) << g.n
    return Graph(u.n, tuple(row | (hmask if v < g.n else gmask) for v, row in enumerate(u.adj)))


def compose(op: str, g: Graph, h: Graph | None = None) -> Graph:
    op = op.lower()
    if op == "complement":
        if h is not None:
            raise ValueError("complement takes a single graph")
        return complement(g)
    if h is None:
        raise ValueError(f"{op} takes two graphs")
    if op in ("union", "disjoint_union", "disjointunion"):
        return disjoint_union(g, h)
    if op == "join":
        return join(g, h)
    raise ValueError(f"unknown composition {op!r}")


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph(0, ())
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def blow_up(template: Graph, parts: Sequence[int]) -> Graph:
    """Replace template vertex ``i`` by a twin class described by ``parts[i]``.

    ``parts[i] > 0`` gives a clique of that size, ``parts[i] < 0`` an independent
    set of size ``-parts[i]``.  Classes of adjacent template vertices are fully
    joined.
    """
    sizes = [abs(p) for p in parts]
    _need(len(parts) == template.n and all(s >= 1 for s in sizes), "bad blow-up parts")
    start = [sum(sizes[:i]) for i in range(len(sizes))]
    edges = []
    for i, p in enumerate(parts):
        if p > 1:
            edges += combinations(range(start[i], start[i] + p), 2)
    for i, j in template.edges():
        edges += [(a, b) for a in range(start[i], start[i] + sizes[i])
                  for b in range(start[j], start[j] + sizes[j])]
    return build_graph(sum(sizes), edges)


# -- distances --------------------------------------------------------------


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    d: tuple[tuple[int, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        return self.d[uv[0]][uv[1]]

    @property
    def connected(self) -> bool:
        return all(x != UNREACHABLE for row in self.d for x in row)

    @property
    def diameter(self) -> int:
        if not self.connected:
            return UNREACHABLE
        return max((x for row in self.d for x in row), default=0)


def bfs_layers(g: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    level = 0
    while frontier:
        level += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        seen |= nxt
        for v in bits(nxt):
            dist[v] = level
        frontier = nxt
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(bfs_layers(g, v)) for v in range(g.n)))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def components(g: Graph) -> list[list[int]]:
    left = (1 << g.n) - 1
    out = []
    while left:
        seen = frontier = left & -left
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(bits(seen))
        left &= ~seen
    return out


@dataclass(frozen=True)
class Structure:
    connected: bool
    tree: bool
    unicyclic: bool
    diameter: int


def structure_probe(g: Graph) -> Structure:
    dm = all_pairs_distances(g)
    conn = dm.connected
    m = g.num_edges()
    return Structure(conn, conn and m == g.n - 1, conn and m == g.n, dm.diameter)


def is_tree(g: Graph) -> bool:
    return g.num_edges() == g.n - 1 and is_connected(g)


def is_path_graph(g: Graph) -> bool:
    if not is_tree(g):
        return False
    return max(g.degrees(), default=0) <= 2


def is_star_graph(g: Graph) -> bool:
    """``K_{1,m}`` with ``m >= 2``."""
    if g.n < 3 or not is_tree(g):
        return False
    return max(g.degrees()) == g.n - 1


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(d == 2 for d in g.degrees())


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices (``2**C(n,2)`` of them)."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if code >> i & 1])
