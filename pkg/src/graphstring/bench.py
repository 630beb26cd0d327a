"""Desk-scale experiment harness: correlation, scaling and neighbourhood runs.

CSV columns (stable):

* correlation pairs: ``graph_i, graph_j, ged, lev_canonical, lev_greedy_min,
  lev_greedy_rnd`` (methods that were not run are left empty)
* scaling rows: ``n, family, method, instance, seconds, timed_out``
* neighbourhood rows: ``direction, item, lev, ged, isomorphic``
"""

from __future__ import annotations

import logging
import math
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .canonical import canonical_string
from .encoder import graph_to_string_greedy_min, graph_to_string_greedy_rnd
from .errors import BudgetExceeded, SizeLimitError
from .generators import (GraphSpec, edit_neighbors_1ged_labeled, generate,
                         string_neighbors_1lev)
from .graph import Graph
from .metrics import DistanceReport, levenshtein, ols_fit
from .oracles import ged_exact, is_isomorphic
from .rng import SplitMix64
from .vm import string_to_graph

log = logging.getLogger(__name__)

METHODS = ("canonical", "greedy_min", "greedy_rnd")
CORRELATION_COLUMNS = ["graph_i", "graph_j", "ged"] + [f"lev_{m}" for m in METHODS]
SCALING_COLUMNS = ["n", "family", "method", "instance", "seconds", "timed_out"]
NEIGHBORHOOD_COLUMNS = ["direction", "item", "lev", "ged", "isomorphic"]

Encoder = Callable[[Graph, float], str]


@dataclass
class ExperimentConfig:
    corpus: list[Graph] = field(default_factory=list)
    names: list[str] = field(default_factory=list)
    methods: Sequence[str] = METHODS
    seed: int = 42
    timeout_per_encode: float = 60.0
    repeats: int = 5
    ged_cap: int = 8

    def __post_init__(self) -> None:
        if self.repeats < 1:
            raise ValueError("repeats must be >= 1")
        if self.timeout_per_encode <= 0:
            raise ValueError("timeout_per_encode must be positive")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")
        if not self.names:
            self.names = [f"g{i}" for i in range(len(self.corpus))]


def make_encoders(seed: int) -> dict[str, Encoder]:
    def canonical(g: Graph, timeout: float) -> str:
        return canonical_string(g, time_limit=timeout).w_star

    def greedy_min(g: Graph, timeout: float) -> str:
        return graph_to_string_greedy_min(g).w

    def greedy_rnd(g: Graph, timeout: float) -> str:
        return graph_to_string_greedy_rnd(g, seed).w

    return {"canonical": canonical, "greedy_min": greedy_min, "greedy_rnd": greedy_rnd}


@dataclass
class CorrelationResult:
    reports: dict[str, DistanceReport]
    rows: list[dict]
    histograms: dict[str, dict[tuple[int, int], int]]
    strings: dict[str, list[str]]

    def summary(self) -> dict:
        return {m: {"pairs": r.pair_count, "rho": r.rho, "p_value": r.p_value,
                    "beta": r.beta, "note": r.note}
                for m, r in self.reports.items()}


def run_correlation(cfg: ExperimentConfig) -> CorrelationResult:
    too_big = [name for name, g in zip(cfg.names, cfg.corpus) if g.node_count > cfg.ged_cap]
    if too_big:
        raise SizeLimitError(f"graphs exceed the GED oracle cap of {cfg.ged_cap}: {too_big}")
    graphs = cfg.corpus
    k = len(graphs)
    rng = SplitMix64(cfg.seed)
    seeds = [rng.next_u64() for _ in range(k)]
    strings: dict[str, list[str]] = {}
    for method in cfg.methods:
        out = []
        for i, g in enumerate(graphs):
            enc = make_encoders(seeds[i])[method]
            out.append(enc(g, cfg.timeout_per_encode))
        strings[method] = out
    rows = []
    points: dict[str, list[tuple[int, int]]] = {m: [] for m in cfg.methods}
    for i in range(k):
        for j in range(i + 1, k):
            ged = ged_exact(graphs[i], graphs[j], size_cap=cfg.ged_cap)
            row = {"graph_i": cfg.names[i], "graph_j": cfg.names[j], "ged": ged}
            for m in METHODS:
                row[f"lev_{m}"] = ""
            for m in cfg.methods:
                lev = levenshtein(strings[m][i], strings[m][j])
                row[f"lev_{m}"] = lev
                if ged > 0 and lev > 0:
                    points[m].append((ged, lev))
            rows.append(row)
    reports = {m: DistanceReport.from_points(points[m]) for m in cfg.methods}
    hists = {}
    for m in cfg.methods:
        cells: dict[tuple[int, int], int] = {}
        for p in points[m]:
            cells[p] = cells.get(p, 0) + 1
        hists[m] = dict(sorted(cells.items()))
    return CorrelationResult(reports, rows, hists, strings)


def _median_iqr(values: Sequence[float]) -> tuple[float, float]:
    if len(values) == 1:
        return values[0], 0.0
    q = statistics.quantiles(values, n=4, method="inclusive")
    return statistics.median(values), q[2] - q[0]


@dataclass
class ScalingResult:
    rows: list[dict]
    table: list[dict]
    fits: dict[str, dict]


def fit_power_law(ns: Sequence[float], ts: Sequence[float]) -> tuple[float, float]:
    """Exponent and R^2 of ``T = c * n**alpha`` fitted on log-log data."""
    pts = [(math.log(n), math.log(t)) for n, t in zip(ns, ts) if t > 0]
    alpha, _, r2 = ols_fit(pts)
    return alpha, r2


def run_scaling(sizes: Sequence[int], families: Sequence[tuple[str, float]],
                cfg: ExperimentConfig, instances: int = 5,
                encoders: dict[str, Encoder] | None = None,
                max_n: dict[str, int] | None = None) -> ScalingResult:
    """Median process-CPU encode time per (n, family, method) and a log-log fit per method.

    A method is dropped for larger ``n`` once every instance at some ``n``
    timed out; timed-out rows never enter the fit.
    """
    encoders = encoders or {m: e for m, e in make_encoders(cfg.seed).items() if m in cfg.methods}
    max_n = {"canonical": 12, **(max_n or {})}
    rows = []
    exhausted: set[str] = set()
    rng = SplitMix64(cfg.seed)
    for n in sizes:
        for fam, param in families:
            for inst in range(instances):
                g = generate(GraphSpec(fam, n, param, rng.next_u64()))
                for method, enc in encoders.items():
                    if method in exhausted or n > max_n.get(method, n):
                        continue
                    times = []
                    timed_out = False
                    for _ in range(cfg.repeats):
                        t0 = time.process_time()
                        try:
                            enc(g, cfg.timeout_per_encode)
                        except BudgetExceeded:
                            timed_out = True
                        dt = time.process_time() - t0
                        if dt > cfg.timeout_per_encode:
                            timed_out = True
                        if timed_out:
                            break
                        times.append(dt)
                    rows.append({"n": n, "family": f"{fam}_{param:g}", "method": method,
                                 "instance": inst,
                                 "seconds": statistics.median(times) if times else "",
                                 "timed_out": timed_out})
        for method in encoders:
            at_n = [r for r in rows if r["n"] == n and r["method"] == method]
            if at_n and all(r["timed_out"] for r in at_n):
                log.info("%s timed out on every instance at n=%d; dropping larger sizes", method, n)
                exhausted.add(method)
    table = []
    fits = {}
    for method in encoders:
        ns, ts = [], []
        for n in sizes:
            vals = [r["seconds"] for r in rows
                    if r["n"] == n and r["method"] == method and not r["timed_out"]]
            timeouts = sum(1 for r in rows if r["n"] == n and r["method"] == method and r["timed_out"])
            if not vals:
                if timeouts:
                    table.append({"n": n, "method": method, "median_seconds": None,
                                  "iqr": None, "timed_out": timeouts})
                continue
            med, iqr = _median_iqr(vals)
            table.append({"n": n, "method": method, "median_seconds": med, "iqr": iqr,
                          "timed_out": timeouts})
            ns.append(n)
            ts.append(med)
        if len(ns) >= 2:
            alpha, r2 = fit_power_law(ns, ts)
        else:
            alpha, r2 = None, None
        first_timeout = min((r["n"] for r in rows if r["method"] == method and r["timed_out"]),
                            default=None)
        fits[method] = {"alpha": alpha, "r2": r2, "points": len(ns),
                        "first_timeout_n": first_timeout}
    return ScalingResult(rows, table, fits)


@dataclass
class NeighborhoodReport:
    base_string: str
    edit_rows: list[dict]
    string_rows: list[dict]
    distinct_edit_classes: int
    flagged: list[dict]

    @property
    def deletions(self) -> int:
        return sum(1 for r in self.edit_rows if r["kind"] == "delete")

    @property
    def insertions(self) -> int:
        return sum(1 for r in self.edit_rows if r["kind"] == "insert")

    def csv_rows(self) -> list[dict]:
        out = [{"direction": "ged1", "item": f"{r['kind']} {r['edge'][0]}-{r['edge'][1]}",
                "lev": r["lev"], "ged": 1, "isomorphic": False} for r in self.edit_rows]
        out += [{"direction": "lev1", "item": r["string"], "lev": 1, "ged": r["ged"],
                 "isomorphic": r["ged"] == 0} for r in self.string_rows]
        return out


def run_neighborhood(base: GraphSpec | Graph, ged_cap: int = 10, ged_bound: int = 2,
                     time_limit: float | None = None) -> NeighborhoodReport:
    """Both directions of the locality check around ``base``.

    (a) each one-edge-edit neighbour vs. the base canonical string (Levenshtein);
    (b) each decoded one-character edit of that string vs. the base graph (GED).
    Decodes with GED above ``ged_bound`` are collected in ``flagged``.
    """
    g = generate(base) if isinstance(base, GraphSpec) else base
    w = canonical_string(g, time_limit=time_limit).w_star
    edit_rows = []
    reps: list[Graph] = []
    for kind, edge, h in edit_neighbors_1ged_labeled(g):
        hw = canonical_string(h, time_limit=time_limit).w_star
        edit_rows.append({"kind": kind, "edge": edge, "string": hw, "lev": levenshtein(w, hw)})
        if not any(is_isomorphic(h, r) for r in reps):
            reps.append(h)
    string_rows = []
    flagged = []
    for s in string_neighbors_1lev(w):
        d = string_to_graph(s)
        ged = ged_exact(g, d, size_cap=ged_cap)
        row = {"string": s, "ged": ged, "nodes": d.node_count, "edges": d.edge_count}
        string_rows.append(row)
        if ged > ged_bound:
            flagged.append(row)
    if flagged:
        log.warning("%d one-character edits decode beyond GED %d", len(flagged), ged_bound)
    return NeighborhoodReport(w, edit_rows, string_rows, len(reps), flagged)
