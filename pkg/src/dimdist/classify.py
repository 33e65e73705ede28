"""Recognizers for the graph families that appear in the dim/D classifications.

Concrete families (complete bipartite, joins, unions, ...) are recognized by
building every parameter choice compatible with ``n`` and comparing canonical
forms.  The twin-quotient shapes (labels ``JAN-*`` and ``HER-*``) are matched
by enumerating embeddings of a small template onto the typed twin quotient.

Every match carries enough parameters for :func:`realize` to rebuild a graph
isomorphic to the input.  For quotient shapes the parameters hold one signed
class size per template vertex: ``+r`` a clique of size ``r`` (or a singleton
when ``r == 1``), ``-r`` an independent set of size ``r``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .automorphism import CanonicalLabel, canonical_form
from .graph import (
    Graph,
    all_pairs_distances,
    blow_up,
    build_graph,
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty,
    is_connected,
    join,
    path,
    union_all,
)
from .resolving import metric_dimension
from .twin import TYPE_1, TYPE_K, TYPE_N, twin_graph


class HypothesisError(ValueError):
    """The input is outside the domain of the classification."""


@dataclass(frozen=True)
class FamilyMatch:
    label: str
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"{self.label}({','.join(map(str, self.params))})" if self.params else self.label


def _join0(a: int, b: Graph) -> Graph:
    # K_a + b, where K_0 + b == b
    return join(complete(a), b) if a else b


def _union0(a: int, b: Graph) -> Graph:
    return disjoint_union(complete(a), b) if a else b


# label -> builder from params (shape labels are handled in realize)
_BUILDERS: dict[str, Callable[..., Graph]] = {
    "Kn": complete,
    "T3-Kst": complete_bipartite,
    "T3-KsNt": lambda s, t: join(complete(s), empty(t)),
    "T3-KsK1Kt": lambda s, t: join(complete(s), disjoint_union(complete(1), complete(t))),
    "LEMN2-a": lambda l: complete_bipartite(l + 1, l + 1),
    "LEMN2-b": lambda l, t: complete_bipartite(t, l),
    "LEMN2-c": lambda l, t: join(complete(l), empty(t)),
    "LEMN2-d": lambda l, t: join(complete(t), empty(l)),
    "LEMN2-e": lambda l, t: _join0(l - 1, disjoint_union(complete(t), complete(1))),
    "LEMN2-f": lambda l, t: join(complete(t), _union0(l - 1, complete(1))),
    "D-n-complete": complete,
    "D-n-empty": empty,
    "D-n1-C4": lambda: cycle(4),
    "D-n1-2K2": lambda: union_all([complete(2)] * 2),
    "D-n1-Kt1": lambda t: complete_bipartite(t, 1),
    "D-n1-KtK1": lambda t: disjoint_union(complete(t), complete(1)),
    "D-n2-item1": lambda: cycle(5),
    "D-n2-item2": lambda: path(4),
    "D-n2-item3": lambda: complete_multipartite([1, 2, 2]),
    "D-n2-item4": lambda: union_all([complete(2), complete(2), complete(1)]),
    "D-n2-item5": lambda: complete_bipartite(3, 3),
    "D-n2-item6": lambda: union_all([complete(3)] * 2),
    "D-n2-item7": lambda t: complete_bipartite(t, 2),
    "D-n2-item8": lambda t: disjoint_union(complete(t), complete(2)),
    "D-n2-item9": lambda t: join(complete(2), empty(t)),
    "D-n2-item10": lambda t: disjoint_union(complete(t), empty(2)),
    "D-n2-item11": lambda t: join(complete(t), empty(2)),
    "D-n2-item12": lambda t: disjoint_union(empty(t), complete(2)),
    "D-n2-item13": lambda t: join(complete(1), disjoint_union(complete(t), complete(1))),
    "D-n2-item14": lambda t: disjoint_union(complete_bipartite(t, 1), complete(1)),
}


@lru_cache(maxsize=None)
def _family_form(label: str, params: tuple[int, ...]) -> CanonicalLabel:
    return canonical_form(_BUILDERS[label](*params))


def _first_matching(g: Graph, cf: CanonicalLabel, candidates: Sequence[FamilyMatch]) -> list[FamilyMatch]:
    out = []
    for m in candidates:
        if _family_form(m.label, m.params) == cf:
            out.append(m)
    return out


def _require_connected(g: Graph) -> int:
    dm = all_pairs_distances(g)
    if not dm.connected:
        raise HypothesisError("input graph must be connected")
    return dm.diameter


# -- dim = n-1 and dim = n-2 --------------------------------------------------


def classify_dim_extremal(g: Graph) -> list[FamilyMatch]:
    """Graphs with dim = n-1 (``Kn``) and the three dim = n-2 families (n >= 4)."""
    _require_connected(g)
    if g.n < 2:
        raise HypothesisError("needs n >= 2")
    n = g.n
    cands = [FamilyMatch("Kn", (n,))]
    if n >= 4:
        cands += [FamilyMatch("T3-Kst", (s, n - s)) for s in range(1, n // 2 + 1)]
        cands += [FamilyMatch("T3-KsNt", (s, n - s)) for s in range(1, n - 1)]
        cands += [FamilyMatch("T3-KsK1Kt", (s, n - 1 - s)) for s in range(1, n - 1)]
    return _first_matching(g, canonical_form(g), cands)


def classify_prop_lemn2(g: Graph, ell: int, dim: int | None = None) -> list[FamilyMatch]:
    """Families (a)-(f) for D = n - ell among connected graphs with dim = n-2 >= 2."""
    if ell < 1:
        raise ValueError("ell must be positive")
    _require_connected(g)
    n = g.n
    if dim is None:
        dim = metric_dimension(g).k
    if not (dim == n - 2 and dim >= 2):
        raise HypothesisError(f"needs dim = n-2 >= 2, got dim={dim}, n={n}")
    t = n - ell
    cands = []
    if n == 2 * ell + 2:
        cands.append(FamilyMatch("LEMN2-a", (ell,)))
    if t >= ell + 1:
        cands.append(FamilyMatch("LEMN2-b", (ell, t)))
    if t >= ell:
        cands.append(FamilyMatch("LEMN2-c", (ell, t)))
    if t >= ell >= 2:
        cands.append(FamilyMatch("LEMN2-d", (ell, t)))
    if t >= max(2, ell - 1):
        cands.append(FamilyMatch("LEMN2-e", (ell, t)))
        cands.append(FamilyMatch("LEMN2-f", (ell, t)))
    return _first_matching(g, canonical_form(g), cands)


# -- D = n, n-1, n-2 ------------------------------------------------------------


def _d_extremal_candidates(n: int) -> list[FamilyMatch]:
    cands = [FamilyMatch("D-n-complete", (n,)), FamilyMatch("D-n-empty", (n,))]
    if n == 4:
        cands += [FamilyMatch("D-n1-C4"), FamilyMatch("D-n1-2K2")]
    if n - 1 >= 2:
        cands += [FamilyMatch("D-n1-Kt1", (n - 1,)), FamilyMatch("D-n1-KtK1", (n - 1,))]
    if n >= 4:
        fixed = {4: ["item2"], 5: ["item1", "item3", "item4"], 6: ["item5", "item6"]}
        cands += [FamilyMatch("D-n2-" + item) for item in fixed.get(n, [])]
        t = n - 2
        for item, lo in ((7, 3), (8, 3), (9, 2), (10, 2), (11, 2), (12, 2), (13, 2), (14, 2)):
            if t >= lo:
                cands.append(FamilyMatch(f"D-n2-item{item}", (t,)))
    return cands


def classify_D_extremal(g: Graph) -> list[FamilyMatch]:
    """All labels among the D = n, D = n-1 and D = n-2 (n >= 4) lists."""
    return _first_matching(g, canonical_form(g), _d_extremal_candidates(g.n))


def d_stratum(label: str) -> str | None:
    """``D-n``, ``D-n1`` or ``D-n2`` for a D-extremal label, else None."""
    for prefix in ("D-n2", "D-n1", "D-n"):
        if label.startswith(prefix + "-"):
            return prefix
    return None


# -- typed twin-quotient shapes -------------------------------------------------

Types = Sequence[str]
_1K = {TYPE_1, TYPE_K}
_1N = {TYPE_1, TYPE_N}
_KN = {TYPE_K, TYPE_N}


def _embeddings(t: Graph, q: Graph) -> Iterator[tuple[int, ...]]:
    """Isomorphisms from template ``t`` onto ``q`` (as template -> quotient maps)."""
    if t.n != q.n or t.num_edges() != q.num_edges():
        return
    n = t.n
    tdeg, qdeg = t.degrees(), q.degrees()
    phi = [-1] * n
    used = [False] * n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(phi)
            return
        for x in range(n):
            if used[x] or qdeg[x] != tdeg[i]:
                continue
            if all(t.has_edge(i, j) == q.has_edge(x, phi[j]) for j in range(i)):
                phi[i] = x
                used[x] = True
                yield from rec(i + 1)
                used[x] = False
        phi[i] = -1

    yield from rec(0)


def _g6_ok(ty: Types) -> bool:
    # hub 4, path 0-1-2-3
    if not all(ty[i] in _1K for i in range(4)):
        return False
    if any(ty[a] == TYPE_K and ty[b] == TYPE_K for a, b in ((0, 2), (0, 3), (1, 3))):
        return False
    edges = [(0, 1), (1, 2), (2, 3)] + [(i, 4) for i in range(4)]
    return not any({ty[a], ty[b]} == _KN for a, b in edges)


def _g3_ok(ty: Types) -> bool:
    # triangle 0,1,2; leaf 3 on 2
    if not (ty[0] == TYPE_N and ty[1] in _1K and ty[3] in _1N):
        return False
    return ty[1] != TYPE_K or (ty[3] != TYPE_N and ty[2] != TYPE_N)


_DIAMOND = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]

# label, template, predicate on the template-ordered type tuple
JANNESARI_SHAPES: list[tuple[str, Graph, Callable[[Types], bool]]] = [
    ("JAN-G1", complete(3), lambda ty: sum(x in _1K for x in ty) <= 1),
    ("JAN-G2a", path(3), lambda ty: ty[1] == TYPE_N and ty[0] == TYPE_K),
    ("JAN-G2b", path(3), lambda ty: ty[0] == TYPE_K and ty[2] in _KN),
    ("JAN-G3", build_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)]), _g3_ok),
    ("JAN-G4", cycle(5), lambda ty: all(x == TYPE_1 for x in ty)),
    (
        "JAN-G5",
        build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]),
        lambda ty: ty[0] == ty[4] == TYPE_1 and all(ty[i] in _1K for i in (1, 2, 3)),
    ),
    ("JAN-G6", build_graph(5, [(0, 1), (1, 2), (2, 3)] + [(i, 4) for i in range(4)]), _g6_ok),
    (
        "JAN-G7",
        build_graph(5, _DIAMOND + [(0, 4)]),
        lambda ty: ty[4] == TYPE_1 and ty[0] in _1K and ty[1] in _1K and ty[2] == TYPE_K and ty[3] == TYPE_1,
    ),
    (
        "JAN-G8",
        build_graph(4, _DIAMOND),
        lambda ty: ty[2] == TYPE_K and ty[3] == TYPE_1 and ty[0] == TYPE_N and ty[1] in _1K,
    ),
    (
        "JAN-G9",
        cycle(4),
        lambda ty: ty[0] == ty[1] == TYPE_K and ty[2] == ty[3] == TYPE_1,
    ),
    (
        "JAN-G10",
        build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0)] + [(i, 4) for i in range(4)]),
        lambda ty: ty[0] == ty[1] == TYPE_K and ty[4] in _1K and ty[2] == ty[3] == TYPE_1,
    ),
]


def _signed(sizes: Sequence[int], types: Types, phi: Sequence[int]) -> tuple[int, ...]:
    return tuple(-sizes[x] if types[x] == TYPE_N else sizes[x] for x in phi)


def _match_shape(label, template, ok, tg, prefix=()) -> FamilyMatch | None:
    for phi in _embeddings(template, tg.quotient):
        ty = [tg.types[x] for x in phi]
        if ok(ty):
            return FamilyMatch(label, tuple(prefix) + _signed(tg.sizes, tg.types, phi))
    return None


def match_jannesari(g: Graph) -> FamilyMatch | None:
    """First twin-quotient shape G1..G10 matching a connected diameter-2 graph.

    Shapes G7 and G8 are built on the diamond ``K_4 - e``.
    """
    if _require_connected(g) != 2:
        raise HypothesisError("needs diameter 2")
    tg = twin_graph(g)
    for label, template, ok in JANNESARI_SHAPES:
        found = _match_shape(label, template, ok, tg)
        if found:
            return found
    return None


def _hernando_path_ok(ty: Types) -> str | None:
    odd = [i for i, x in enumerate(ty) if x != TYPE_1]
    last = len(ty) - 1
    if len(odd) <= 1:
        return "HER-a1"
    if len(odd) == 2:
        a, b = odd
        if b - a == 1:
            leaf_k = [i for i in odd if i in (0, last) and ty[i] == TYPE_K]
            if all(ty[j] == TYPE_K for i in leaf_k for j in odd if j != i):
                return "HER-a2"
        if b - a == 2 and ty[a] == ty[b] == TYPE_N:
            return "HER-a3"
        return None
    if len(odd) == 3:
        for i in range(1, last):
            if ty[i] in _KN and ty[i - 1] == TYPE_N and ty[i + 1] == TYPE_N:
                return "HER-a4"
    return None


def hernando_b_template(d: int, k: int) -> Graph:
    return build_graph(d + 2, [(i, i + 1) for i in range(d)] + [(k - 1, d + 1)])


def hernando_c_template(d: int, k: int) -> Graph:
    return build_graph(d + 2, [(i, i + 1) for i in range(d)] + [(k - 1, d + 1), (k, d + 1)])


def match_hernando(g: Graph) -> FamilyMatch | None:
    """Twin-quotient shapes (a1)-(a4), (b), (c) for connected graphs of diameter >= 3."""
    d = _require_connected(g)
    if d < 3:
        raise HypothesisError("needs diameter >= 3")
    tg = twin_graph(g)
    for phi in _embeddings(path(d + 1), tg.quotient):
        label = _hernando_path_ok([tg.types[x] for x in phi])
        if label:
            return FamilyMatch(label, (d,) + _signed(tg.sizes, tg.types, phi))
    for k in range(3, d):

        def ok(ty, k=k):
            # u_{k-1} free, its three neighbours (1N), everything else (1)
            return all(
                ty[i] in _1N if i in (k - 2, k, d + 1) else ty[i] == TYPE_1
                for i in range(d + 2)
                if i != k - 1
            )

        found = _match_shape("HER-b", hernando_b_template(d, k), ok, tg, (d, k))
        if found:
            return found
    for k in range(2, d):

        def ok(ty, k=k):
            return all(ty[i] in _1K if i in (k - 1, k, d + 1) else ty[i] == TYPE_1 for i in range(d + 2))

        found = _match_shape("HER-c", hernando_c_template(d, k), ok, tg, (d, k))
        if found:
            return found
    return None


# -- reconstruction ---------------------------------------------------------------


def realize(m: FamilyMatch) -> Graph:
    """A graph of the family named by ``m`` (isomorphic to the graph it matched)."""
    if m.label in _BUILDERS:
        return _BUILDERS[m.label](*m.params)
    if m.label.startswith("JAN-"):
        template = next(t for label, t, _ in JANNESARI_SHAPES if label == m.label)
        return blow_up(template, m.params)
    if m.label.startswith("HER-a"):
        d, *parts = m.params
        return blow_up(path(d + 1), parts)
    if m.label in ("HER-b", "HER-c"):
        d, k, *parts = m.params
        make = hernando_b_template if m.label == "HER-b" else hernando_c_template
        return blow_up(make(d, k), parts)
    raise ValueError(f"unknown family label {m.label!r}")


def classify(g: Graph, dim: int | None = None, diameter: int | None = None) -> list[FamilyMatch]:
    """Every label that applies to ``g`` across all recognizers."""
    out = classify_D_extremal(g)
    if not is_connected(g) or g.n < 2:
        return out
    out += classify_dim_extremal(g)
    if dim is None:
        dim = metric_dimension(g).k
    if dim == g.n - 2 >= 2:
        for ell in range(1, g.n):
            out += classify_prop_lemn2(g, ell, dim)
    if diameter is None:
        diameter = all_pairs_distances(g).diameter
    if diameter == 2:
        found = match_jannesari(g)
    elif diameter >= 3:
        found = match_hernando(g)
    else:
        found = None
    if found:
        out.append(found)
    return out
