"""Resolving sets and metric dimension.

A minimum resolving set is a minimum hitting set of the resolver sets
``R(u, v) = {s : d(s, u) != d(s, v)}`` over all vertex pairs.  Resolving sets
are taken to be non-empty, so the one-vertex graph has dimension 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .graph import Graph, all_pairs_distances, bits, is_path_graph, is_tree, mask_of
from .twin import twin_partition


class DisconnectedGraphError(ValueError):
    pass


@dataclass(frozen=True)
class ResolvingSet:
    members: int  # bitmask

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "ResolvingSet":
        return cls(mask_of(vertices))

    @property
    def vertices(self) -> list[int]:
        return bits(self.members)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class MetricBasis:
    k: int
    basis: ResolvingSet


def _distances(g: Graph):
    dm = all_pairs_distances(g)
    if not dm.connected:
        raise DisconnectedGraphError("metric dimension is only defined here for connected graphs")
    return dm.d


def _as_mask(s) -> int:
    if isinstance(s, ResolvingSet):
        return s.members
    if isinstance(s, int):
        return s
    return mask_of(s)


def is_resolving_set(g: Graph, s) -> bool:
    d = _distances(g)
    members = bits(_as_mask(s))
    if not members:
        return g.n <= 1
    seen = set()
    for v in range(g.n):
        vec = tuple(d[x][v] for x in members)
        if vec in seen:
            return False
        seen.add(vec)
    return True


def resolver_masks(g: Graph) -> list[int]:
    """Resolver set of every unordered pair, as bitmasks (pair order u < v)."""
    d = _distances(g)
    out = []
    for u, v in combinations(range(g.n), 2):
        m = 0
        for s in range(g.n):
            if d[s][u] != d[s][v]:
                m |= 1 << s
        out.append(m)
    return out


def _reduce(masks: list[int]) -> list[int]:
    # drop duplicates and supersets: hitting a subset hits the superset
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _disjoint_bound(masks: list[int], allowed: int) -> int:
    used = 0
    count = 0
    for m in sorted(masks, key=lambda m: (m & allowed).bit_count()):
        m &= allowed
        if not m:
            return 1 << 30
        if not m & used:
            used |= m
            count += 1
    return count


def _greedy(masks: list[int], n: int) -> int:
    chosen = 0
    left = masks
    while left:
        v = max(range(n), key=lambda x: sum(m >> x & 1 for m in left))
        chosen |= 1 << v
        left = [m for m in left if not m >> v & 1]
    return chosen


def _twin_bound(g: Graph) -> int:
    return sum(len(c) - 1 for c in twin_partition(g).classes)


def minimum_hitting_set_size(masks: list[int], n: int, lower: int = 0) -> int:
    masks = _reduce(masks)
    full = (1 << n) - 1
    best = [_greedy(masks, n).bit_count()]

    def rec(count: int, left: list[int], forbidden: int) -> None:
        if not left:
            best[0] = min(best[0], count)
            return
        allowed = full & ~forbidden
        if count + max(_disjoint_bound(left, allowed), lower - count) >= best[0]:
            return
        pick = min(left, key=lambda m: (m & allowed).bit_count())
        for v in bits(pick & allowed):
            rec(count + 1, [m for m in left if not m >> v & 1], forbidden)
            forbidden |= 1 << v
            allowed &= ~(1 << v)

    rec(0, masks, 0)
    return best[0]


def _lex_least(masks: list[int], n: int, k: int) -> int:
    """Lexicographically least (as a sorted tuple) hitting set of size <= k."""

    def rec(i: int, chosen: int, count: int, left: list[int]) -> int | None:
        if not left:
            return chosen
        if count == k or i == n:
            return None
        tail = ((1 << n) - 1) >> i << i
        if _disjoint_bound(left, tail) > k - count:
            return None
        hit = [m for m in left if not m >> i & 1]
        if len(hit) < len(left):
            found = rec(i + 1, chosen | 1 << i, count + 1, hit)
            if found is not None:
                return found
        return rec(i + 1, chosen, count, left)

    found = rec(0, 0, 0, _reduce(masks))
    if found is None:
        raise AssertionError("no hitting set of the optimal size found")
    return found


def metric_dimension(g: Graph) -> MetricBasis:
    """Exact metric dimension with the lexicographically least metric basis."""
    if g.n == 0:
        raise ValueError("empty graph")
    _distances(g)
    if g.n == 1:
        return MetricBasis(1, ResolvingSet(1))
    masks = resolver_masks(g)
    k = minimum_hitting_set_size(masks, g.n, lower=_twin_bound(g))
    return MetricBasis(k, ResolvingSet(_lex_least(masks, g.n, k)))


def minimum_bases(g: Graph, k: int | None = None) -> list[ResolvingSet]:
    """All metric bases, in lexicographic order (small graphs only)."""
    if k is None:
        k = metric_dimension(g).k
    return [ResolvingSet.of(c) for c in combinations(range(g.n), k) if is_resolving_set(g, c)]


# -- trees ------------------------------------------------------------------


@dataclass(frozen=True)
class TreeFeatures:
    leaves: tuple[int, ...]
    branches: tuple[int, ...]
    terminal_degree: dict[int, int] = field(hash=False)
    external_branches: tuple[int, ...]
    ancestor: dict[int, int] = field(hash=False)
    legs: tuple[tuple[int, ...], ...]

    @property
    def num_leaves(self) -> int:
        return len(self.leaves)

    @property
    def num_external(self) -> int:
        return len(self.external_branches)

    @property
    def multi_leg_branches(self) -> tuple[int, ...]:
        """Branches owning two or more legs (these carry the tree colorings)."""
        return tuple(b for b in self.branches if self.terminal_degree[b] >= 2)


def tree_features(t: Graph) -> TreeFeatures:
    if not is_tree(t):
        raise ValueError("tree_features needs a tree")
    deg = t.degrees()
    leaves = tuple(v for v in range(t.n) if deg[v] == 1)
    branches = tuple(v for v in range(t.n) if deg[v] >= 3)
    d = all_pairs_distances(t).d
    terminal = {
        b: sum(all(d[x][b] < d[x][o] for o in branches if o != b) for x in leaves)
        for b in branches
    }
    ancestor: dict[int, int] = {}
    legs = []
    if branches:
        for x in leaves:
            leg = [x]
            prev, cur = -1, x
            while deg[cur] < 3:
                nxt = next(u for u in t.neighbors(cur) if u != prev)
                prev, cur = cur, nxt
                leg.append(cur)
            ancestor[x] = cur
            legs.append(tuple(leg))
    # a branch owning at least one leg counts as external; with a threshold of
    # two the formula undercounts on trees like G??HmG
    external = tuple(b for b in branches if terminal[b] >= 1)
    return TreeFeatures(leaves, branches, terminal, external, ancestor, tuple(legs))


def tree_dimension(t: Graph) -> int:
    """``leaves - external branches``; valid for trees other than paths."""
    if is_path_graph(t):
        raise ValueError("tree_dimension is not defined for paths (their dimension is 1)")
    f = tree_features(t)
    return f.num_leaves - f.num_external
