#!/usr/bin/env python3
"""One-edit neighbourhood of a graph in both directions (GED->Levenshtein, Levenshtein->GED).

    python scripts/run_neighborhood.py --family house --out results/house
"""

import argparse
import json
import logging
from collections import Counter
from pathlib import Path

from graphstring import bench
from graphstring.edgelist import write_csv
from graphstring.generators import FAMILIES, GraphSpec


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--family", choices=FAMILIES, default="house")
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--param", type=float, default=0.0)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--out", default="results/neighborhood")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")

    rep = bench.run_neighborhood(GraphSpec(args.family, args.n, args.param, args.seed))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_csv(rep.csv_rows(), bench.NEIGHBORHOOD_COLUMNS, out / "neighborhood.csv")
    summary = {
        "base_string": rep.base_string,
        "edit_neighbors": len(rep.edit_rows),
        "deletions": rep.deletions,
        "insertions": rep.insertions,
        "isomorphism_classes": rep.distinct_edit_classes,
        "lev_histogram": dict(sorted(Counter(r["lev"] for r in rep.edit_rows).items())),
        "string_neighbors": len(rep.string_rows),
        "ged_histogram": dict(sorted(Counter(r["ged"] for r in rep.string_rows).items())),
        "flagged": len(rep.flagged),
    }
    (out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    print(json.dumps(summary, indent=2))


if __name__ == "__main__":
    main()
