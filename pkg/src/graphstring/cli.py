"""Command-line entry point: ``graphstring <subcommand> ...``.

Exit status: 0 success, 1 usage error, 2 domain error (unreachable nodes,
exhausted search budget, oversized oracle input, malformed input files).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import bench
from .canonical import DEFAULT_BUDGET, canonical_string
from .edgelist import read_edgelist, serialize_edgelist, write_csv, write_edgelist
from .encoder import (graph_to_string_greedy, graph_to_string_greedy_min,
                      graph_to_string_greedy_rnd)
from .errors import GraphStringError, SizeLimitError
from .generators import FAMILIES, GraphSpec, generate
from .graph import Graph
from .metrics import levenshtein
from .oracles import ged_exact
from .rng import SplitMix64
from .vm import string_to_graph

DEFAULT_SEED = 42


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _encode(g: Graph, method: str, start: int | None, seed: int, budget: int | None = None) -> str:
    if method == "greedy":
        return graph_to_string_greedy(g, 0 if start is None else start).w
    if method == "greedy-min":
        return graph_to_string_greedy_min(g).w
    if method == "greedy-rnd":
        return graph_to_string_greedy_rnd(g, seed).w
    if method == "canonical":
        return canonical_string(g, budget).w_star
    raise UsageError(f"unknown method {method!r}")


def _parse_sizes(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _parse_families(text: str) -> list[tuple[str, float]]:
    fams = []
    for part in text.split(","):
        name, _, param = part.partition(":")
        if name not in FAMILIES:
            raise UsageError(f"unknown family {name!r}")
        fams.append((name, float(param) if param else 0.0))
    return fams


def _outdir(path: str) -> Path:
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p


def _dump_json(obj, path: Path) -> None:
    path.write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", newline="\n")


def cmd_encode(args) -> int:
    g = read_edgelist(args.input)
    print(_encode(g, args.method, args.start, args.seed))
    return 0


def cmd_decode(args) -> int:
    g = string_to_graph(args.string, directed=args.directed)
    if args.out:
        write_edgelist(g, args.out)
    else:
        sys.stdout.write(serialize_edgelist(g))
    return 0


def cmd_canon(args) -> int:
    g = read_edgelist(args.input)
    print(canonical_string(g, args.budget, strict=args.strict).w_star)
    return 0


def cmd_dist(args) -> int:
    g = read_edgelist(args.a)
    h = read_edgelist(args.b)
    wa = _encode(g, args.method, None, args.seed)
    wb = _encode(h, args.method, None, args.seed)
    print(f"lev {levenshtein(wa, wb)}")
    try:
        print(f"ged {ged_exact(g, h)}")
    except (SizeLimitError, ValueError) as exc:
        logging.info("GED skipped: %s", exc)
    return 0


def _corpus(args) -> tuple[list[Graph], list[str]]:
    if args.inputs:
        return [read_edgelist(p) for p in args.inputs], [Path(p).stem for p in args.inputs]
    rng = SplitMix64(args.seed)
    graphs, names = [], []
    fams = _parse_families(args.families)
    for i in range(args.count):
        fam, param = fams[i % len(fams)]
        n = args.n_min + rng.randbelow(args.n_max - args.n_min + 1)
        spec = GraphSpec(fam, n, param, rng.next_u64())
        graphs.append(generate(spec))
        names.append(f"{i:03d}_{spec.label}")
    return graphs, names


def cmd_bench_corr(args) -> int:
    graphs, names = _corpus(args)
    cfg = bench.ExperimentConfig(graphs, names, methods=args.methods.split(","), seed=args.seed,
                                 timeout_per_encode=args.timeout)
    res = bench.run_correlation(cfg)
    out = _outdir(args.out)
    write_csv(res.rows, bench.CORRELATION_COLUMNS, out / "pairs.csv")
    hist_rows = [{"method": m, "ged": k[0], "lev": k[1], "count": c}
                 for m, cells in res.histograms.items() for k, c in cells.items()]
    write_csv(hist_rows, ["method", "ged", "lev", "count"], out / "histogram.csv")
    _dump_json(res.summary(), out / "summary.json")
    for m, r in res.reports.items():
        print(f"{m}: pairs={r.pair_count} rho={r.rho} p={r.p_value} beta={r.beta} {r.note}".rstrip())
    return 0


def cmd_bench_scale(args) -> int:
    cfg = bench.ExperimentConfig(methods=args.methods.split(","), seed=args.seed,
                                 timeout_per_encode=args.timeout, repeats=args.repeats)
    res = bench.run_scaling(_parse_sizes(args.sizes), _parse_families(args.families), cfg,
                            instances=args.instances,
                            max_n={"canonical": args.canonical_max_n})
    out = _outdir(args.out)
    write_csv(res.rows, bench.SCALING_COLUMNS, out / "scaling.csv")
    _dump_json({"fits": res.fits, "table": res.table}, out / "scaling_summary.json")
    for m, fit in res.fits.items():
        print(f"{m}: alpha={fit['alpha']} r2={fit['r2']} first_timeout_n={fit['first_timeout_n']}")
    return 0


def cmd_neighborhood(args) -> int:
    base = read_edgelist(args.input) if args.input else generate(
        GraphSpec(args.family, args.n, args.param, args.seed))
    rep = bench.run_neighborhood(base)
    out = _outdir(args.out)
    write_csv(rep.csv_rows(), bench.NEIGHBORHOOD_COLUMNS, out / "neighborhood.csv")
    levs = [r["lev"] for r in rep.edit_rows]
    geds = [r["ged"] for r in rep.string_rows]
    summary = {
        "base_string": rep.base_string,
        "ged1_neighbors": len(rep.edit_rows),
        "deletions": rep.deletions,
        "insertions": rep.insertions,
        "ged1_isomorphism_classes": rep.distinct_edit_classes,
        "lev_range": [min(levs), max(levs)] if levs else None,
        "lev1_neighbors": len(rep.string_rows),
        "ged_range": [min(geds), max(geds)] if geds else None,
        "flagged_over_bound": len(rep.flagged),
    }
    _dump_json(summary, out / "neighborhood_summary.json")
    print(json.dumps(summary, sort_keys=True))
    return 0


def cmd_gen(args) -> int:
    g = generate(GraphSpec(args.family, args.n, args.param, args.seed))
    if args.out:
        write_edgelist(g, args.out)
    else:
        sys.stdout.write(serialize_edgelist(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graphstring", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker count (only 1 is supported)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("encode", help="encode an edge-list file")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--method", choices=["greedy", "greedy-min", "greedy-rnd"], default="greedy-min")
    s.add_argument("--start", type=int)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("decode", help="decode an instruction string")
    s.add_argument("--string", required=True)
    s.add_argument("--directed", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_decode)

    s = sub.add_parser("canon", help="canonical string of an edge-list file")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    s.add_argument("--strict", action="store_true")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("dist", help="Levenshtein (and exact GED when small) between two graphs")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("--method", choices=["canonical", "greedy", "greedy-min", "greedy-rnd"],
                   default="canonical")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_dist)

    s = sub.add_parser("bench-corr", help="GED vs Levenshtein correlation")
    s.add_argument("--in", dest="inputs", nargs="*")
    s.add_argument("--families", default="erdos_renyi:0.3")
    s.add_argument("--count", type=int, default=30)
    s.add_argument("--n-min", type=int, default=4)
    s.add_argument("--n-max", type=int, default=7)
    s.add_argument("--methods", default=",".join(bench.METHODS))
    s.add_argument("--timeout", type=float, default=60.0)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_bench_corr)

    s = sub.add_parser("bench-scale", help="encoding-time scaling")
    s.add_argument("--sizes", default="3-12")
    s.add_argument("--families",
                   default="barabasi_albert:1,barabasi_albert:2,erdos_renyi:0.3,erdos_renyi:0.5")
    s.add_argument("--methods", default=",".join(bench.METHODS))
    s.add_argument("--instances", type=int, default=5)
    s.add_argument("--repeats", type=int, default=5)
    s.add_argument("--timeout", type=float, default=60.0)
    s.add_argument("--canonical-max-n", type=int, default=12)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_bench_scale)

    s = sub.add_parser("neighborhood", help="1-GED / 1-Levenshtein neighbourhood of a graph")
    s.add_argument("--in", dest="input")
    s.add_argument("--family", choices=FAMILIES, default="house")
    s.add_argument("--n", type=int, default=5)
    s.add_argument("--param", type=float, default=0.0)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_neighborhood)

    s = sub.add_parser("gen", help="generate a graph as an edge list")
    s.add_argument("--family", choices=FAMILIES, required=True)
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--param", type=float, default=0.0)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            stream=sys.stderr, format="%(levelname)s %(message)s")
        if args.jobs != 1:
            raise UsageError("--jobs: only a single worker is supported")
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except (GraphStringError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
