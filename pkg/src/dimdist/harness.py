"""Exhaustive verification driver and the one-graph ``compute`` record.

Each check id maps to a predicate over one graph (or one cell of the
``prop-w`` parameter grid).  A predicate returns ``None`` when the statement
holds and a short diagnostic otherwise.  Work is fanned out per graph and the
results are collected in corpus order (n ascending, then canonical label), so
serial and parallel runs give the same report.
"""
from __future__ import annotations

import json
import signal
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator

from .automorphism import automorphisms
from .classify import (
    HypothesisError,
    classify,
    classify_D_extremal,
    classify_prop_lemn2,
    d_stratum,
    match_hernando,
    match_jannesari,
)
from .corpus import BUILTIN_LIMIT, CorpusSpec, enumerate_corpus
from .distinguishing import distinguishing_number, is_distinguishing, witness_coloring
from .graph import (
    Graph,
    all_pairs_distances,
    complement,
    is_connected,
    is_cycle_graph,
    is_path_graph,
    is_star_graph,
    prop_w,
    subdivided_star,
)
from .graph6 import decode, encode
from .resolving import metric_dimension, tree_dimension
from .twin import is_almost_asymmetric, twin_graph

DEFAULT_TIMEOUT_MS = 10_000
LEMN2_ELLS = (1, 2, 3)
COMPLEMENT_TS = tuple(range(1, 7))
OBS_TWIN_MS = (1, 2, 3)


class CheckTimeout(Exception):
    pass


class IncompatibleCorpus(ValueError):
    pass


# -- per-graph predicates -------------------------------------------------------


def _D(g: Graph) -> int:
    return distinguishing_number(g).k


def _check_prop_main(g: Graph) -> str | None:
    d, dim = _D(g), metric_dimension(g).k
    return None if d <= dim + 1 else f"D={d} > dim+1={dim + 1}"


def _check_eq_tree_dim(g: Graph) -> str | None:
    formula, brute = tree_dimension(g), metric_dimension(g).k
    return None if formula == brute else f"leaves-ex={formula} but dim={brute}"


def _witness_problem(g: Graph, dim: int) -> str | None:
    w = witness_coloring(g)
    if not is_distinguishing(g, w.c):
        return f"witness ({w.method}) is not distinguishing"
    if w.colors_used > dim:
        return f"witness ({w.method}) uses {w.colors_used} > dim={dim} colors"
    return None


def _check_thm_trees(g: Graph) -> str | None:
    dim = 1 if is_path_graph(g) else tree_dimension(g)
    d = _D(g)
    expected = g.n >= 2 and (is_path_graph(g) or is_star_graph(g))
    if (d == dim + 1) != expected:
        return f"D={d} dim={dim} path_or_star={expected}"
    if d > dim + 1:
        return f"D={d} > dim+1={dim + 1}"
    return None if expected or g.n == 1 else _witness_problem(g, dim)


def _check_thm_unicyclic(g: Graph) -> str | None:
    dim, d = metric_dimension(g).k, _D(g)
    expected = is_cycle_graph(g) and g.n <= 5
    if (d == dim + 1) != expected:
        return f"D={d} dim={dim} small_cycle={expected}"
    if d > dim + 1:
        return f"D={d} > dim+1={dim + 1}"
    return None if expected else _witness_problem(g, dim)


def _stratum_check(stratum: str, offset: int) -> Callable[[Graph], str | None]:
    def check(g: Graph) -> str | None:
        d = _D(g)
        labels = [str(m) for m in classify_D_extremal(g) if d_stratum(m.label) == stratum]
        if (d == g.n - offset) != bool(labels):
            return f"D={d} n={g.n} labels={labels}"
        return None

    return check


def _lemn2_check(ells: tuple[int, ...]) -> Callable[[Graph], str | None]:
    def check(g: Graph) -> str | None:
        dim = metric_dimension(g).k
        d = _D(g)
        bad = []
        for ell in ells:
            labels = [str(m) for m in classify_prop_lemn2(g, ell, dim)]
            if (d == g.n - ell) != bool(labels):
                bad.append(f"ell={ell}: D={d} n={g.n} labels={labels}")
        return "; ".join(bad) or None

    return check


def _check_jannesari(g: Graph) -> str | None:
    dim = metric_dimension(g).k
    m = match_jannesari(g)
    if (dim == g.n - 3) != (m is not None):
        return f"dim={dim} n={g.n} match={m}"
    return None


def _check_hernando(g: Graph) -> str | None:
    dim = metric_dimension(g).k
    diam = all_pairs_distances(g).diameter
    m = match_hernando(g)
    if (dim == g.n - diam) != (m is not None):
        return f"dim={dim} n={g.n} diam={diam} match={m}"
    return None


def _check_complement(g: Graph) -> str | None:
    h = complement(g)
    dg, dh = _D(g), _D(h)
    if dg != dh:
        return f"D(G)={dg} D(co-G)={dh}"
    g_conn, h_conn = is_connected(g), is_connected(h)
    for t in COMPLEMENT_TS:
        lhs = not g_conn and dg == t
        rhs = h_conn and dh == t and not (g_conn and dg == t)
        if lhs != rhs:
            return f"t={t}: disconnected-with-D=t {lhs}, complement side {rhs}"
    return None


def _check_obs_twin(g: Graph) -> str | None:
    d = _D(g)
    tg = twin_graph(g)
    sizes = tg.sizes
    for m in OBS_TWIN_MS:
        for i, s in enumerate(sizes):
            if d == s and g.n - s != m and d == g.n - m:
                return f"m={m}: class {i} has size D={d}, rest {g.n - s}, yet D=n-m"
    if is_almost_asymmetric(g) and d != tg.max_class:
        return f"almost asymmetric, D={d} but max class={tg.max_class}"
    return None


def prop_w_graph(n: int, m: int) -> Graph:
    """``G_{n,m}``; the n=1 column is the subdivided star ``T_{m+1}``."""
    return subdivided_star(m + 1) if n == 1 else prop_w(n, m)


def _check_prop_w_cell(cell: tuple[int, int]) -> str | None:
    n, m = cell
    g = prop_w_graph(n, m)
    d, dim = _D(g), metric_dimension(g).k
    return None if (d, dim) == (n, m) else f"G_{{{n},{m}}}: D={d} dim={dim}, expected D={n} dim={m}"


# -- check registry ---------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    id: str
    kind: str  # corpus class the predicate runs on
    default_max_n: int
    predicate: Callable[[Graph], str | None]
    domain: Callable[[Graph], bool] = lambda g: True
    domain_note: str = ""
    min_n: int = 1


def _diam(g: Graph) -> int:
    return all_pairs_distances(g).diameter


def _dim_n2(g: Graph) -> bool:
    return g.n >= 4 and metric_dimension(g).k == g.n - 2


CHECKS: dict[str, Check] = {
    c.id: c
    for c in (
        Check("prop-main", "connected", 7, _check_prop_main),
        Check("eq-tree-dim", "trees", 10, _check_eq_tree_dim,
              lambda g: not is_path_graph(g), "paths excluded"),
        Check("thm-trees", "trees", 12, _check_thm_trees),
        Check("thm-unicyclic", "unicyclic", 9, _check_thm_unicyclic, min_n=3, domain_note="n >= 3"),
        Check("cor-D-n", "all", 7, _stratum_check("D-n", 0)),
        Check("thm-D-n1", "all", 7, _stratum_check("D-n1", 1)),
        Check("thm-D-n2", "all", 7, _stratum_check("D-n2", 2), min_n=4, domain_note="n >= 4"),
        Check("jannesari", "connected", 7, _check_jannesari,
              lambda g: _diam(g) == 2, "diameter 2"),
        Check("hernando", "connected", 7, _check_hernando,
              lambda g: _diam(g) >= 3, "diameter >= 3"),
        Check("complement", "all", 6, _check_complement),
        Check("obs-twin", "all", 7, _check_obs_twin),
    )
}
GRID_CHECKS = {"prop-w": 5}
CHECK_IDS = tuple(CHECKS) + ("prop-w", "prop-lemn2")


def parse_check(check_id: str) -> tuple[str, tuple[int, ...]]:
    """``prop-lemn2``, ``prop-lemn2:2`` and ``prop-lemn2(2)`` select ell values."""
    name = check_id.strip()
    for sep in (":", "("):
        if name.startswith("prop-lemn2" + sep):
            raw = name[len("prop-lemn2") + 1:].rstrip(")")
            ells = tuple(int(x) for x in raw.split(",") if x.strip())
            if not ells or min(ells) < 1:
                raise ValueError(f"bad ell list in {check_id!r}")
            return "prop-lemn2", ells
    if name == "prop-lemn2":
        return name, LEMN2_ELLS
    if name not in CHECKS and name not in GRID_CHECKS:
        raise ValueError(f"unknown check {check_id!r}; known: {', '.join(CHECK_IDS)}")
    return name, ()


def _resolve(check_id: str) -> Check:
    name, ells = parse_check(check_id)
    if name == "prop-lemn2":
        return Check(check_id, "connected", 7, _lemn2_check(ells), _dim_n2, "dim = n-2 >= 2")
    return CHECKS[name]


# -- running ------------------------------------------------------------------------


@dataclass
class Report:
    check: str
    corpus: dict
    examined: int
    violations: list[dict] = field(default_factory=list)
    inconclusive: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0
    config: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.inconclusive

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _alarm(signum, frame):
    raise CheckTimeout


def _run_one(job: tuple[str, str, int]) -> tuple[str, str | None]:
    """Evaluate one item in a worker.  Returns (status, detail)."""
    check_id, item, timeout_ms = job
    check = None if check_id == "prop-w" else _resolve(check_id)
    old = signal.signal(signal.SIGALRM, _alarm)
    signal.setitimer(signal.ITIMER_REAL, timeout_ms / 1000)
    try:
        if check is None:
            n, m = map(int, item.split(","))
            return "done", _check_prop_w_cell((n, m))
        g = decode(item)
        if not check.domain(g):
            return "skip", None
        return "done", check.predicate(g)
    except CheckTimeout:
        return "timeout", f"no answer within {timeout_ms} ms"
    except HypothesisError as exc:
        return "done", f"hypothesis error: {exc}"
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _corpus_items(check: Check, max_n: int, source: str | None) -> Iterator[str]:
    hi = max_n if source is not None else min(max_n, BUILTIN_LIMIT[check.kind])
    for n in range(check.min_n, hi + 1):
        for g in enumerate_corpus(CorpusSpec(n, check.kind, source)):
            yield encode(g)


def _map(fn, jobs: list, workers: int) -> Iterable:
    if workers <= 1:
        return map(fn, jobs)
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        return list(pool.map(fn, jobs, chunksize=max(1, len(jobs) // (8 * workers))))
    finally:
        pool.shutdown()


def verify(
    check_id: str,
    max_n: int | None = None,
    corpus: str | None = None,
    jobs: int = 1,
    timeout_ms: int = DEFAULT_TIMEOUT_MS,
) -> Report:
    """Run one check over its corpus (or the ``prop-w`` grid) and collect a report."""
    start = time.perf_counter()
    name, _ = parse_check(check_id)
    if name == "prop-w":
        if corpus is not None:
            raise IncompatibleCorpus("prop-w runs on a parameter grid, not a graph corpus")
        top = max_n or GRID_CHECKS["prop-w"]
        items = [f"{n},{m}" for m in range(2, top + 1) for n in range(1, m)]
        header = {"class": "grid", "n": top, "domain": "1 <= n < m <= max"}
    else:
        check = _resolve(check_id)
        top = max_n or check.default_max_n
        if corpus is None and top > BUILTIN_LIMIT[check.kind]:
            raise IncompatibleCorpus(
                f"builtin {check.kind} corpus stops at n={BUILTIN_LIMIT[check.kind]}; pass --corpus for more"
            )
        items = list(_corpus_items(check, top, corpus))
        header = {"class": check.kind, "n": top, "domain": check.domain_note or "all"}
    results = _map(_run_one, [(check_id, it, timeout_ms) for it in items], jobs)
    report = Report(check_id, header, 0, config={"timeout_ms": timeout_ms, "jobs": jobs})
    for item, (status, detail) in zip(items, results):
        if status == "skip":
            continue
        report.examined += 1
        if status == "timeout":
            report.inconclusive.append({"graph6": item, "detail": detail})
        elif detail is not None:
            report.violations.append({"graph6": item, "detail": detail})
    report.elapsed_ms = round((time.perf_counter() - start) * 1000)
    return report


# -- one graph, everything ----------------------------------------------------------


def compute(g: Graph) -> dict:
    """Every invariant the toolkit knows for ``g``; inapplicable fields are None."""
    dm = all_pairs_distances(g)
    rec: dict = {
        "graph6": encode(g),
        "n": g.n,
        "edges": g.edges(),
        "connected": dm.connected,
        "diameter": dm.diameter if dm.connected else None,
        "dim": None,
        "basis": None,
    }
    dim = None
    if dm.connected:
        mb = metric_dimension(g)
        dim = mb.k
        rec["dim"], rec["basis"] = mb.k, mb.basis.vertices
    dres = distinguishing_number(g)
    rec["D"], rec["D_witness"] = dres.k, list(dres.witness.colors)
    group = automorphisms(g)
    rec["aut_order"] = group.order
    rec["orbits"] = group.orbits
    tg = twin_graph(g)
    rec["twin"] = {
        "classes": [list(c) for c in tg.partition.classes],
        "types": list(tg.types),
        "quotient_edges": tg.quotient.edges(),
        "alpha": tg.alpha,
        "max_class": tg.max_class,
    }
    rec["almost_asymmetric"] = is_almost_asymmetric(g)
    rec["families"] = [str(m) for m in classify(g, dim, rec["diameter"])]
    return rec
