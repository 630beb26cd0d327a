"""Plain-text edge-list format.

::

    undirected            <- header: "undirected" or "directed"
    # nodes 4             <- optional node-count annotation (needed for isolated nodes)
    0 1
    1 2

Lines are LF-terminated, fields separated by one space, ``#`` starts a
comment.  Node ids are remapped to ``0..N-1`` in order of first appearance.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable

from .errors import EdgeListParseError
from .graph import Graph


def parse_edgelist(text: str) -> Graph:
    header = None
    declared = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "nodes":
                try:
                    declared = int(parts[1])
                except ValueError:
                    raise EdgeListParseError(f"bad node count {parts[1]!r}", lineno) from None
            continue
        if header is None:
            if line not in ("undirected", "directed"):
                raise EdgeListParseError(f"expected 'undirected' or 'directed', got {line!r}", lineno)
            header = line
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"expected two node ids, got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(f"non-integer node id in {line!r}", lineno) from None
        if u == v:
            raise EdgeListParseError(f"self-loop on node {u}", lineno)
        edges.append((u, v))
    if header is None:
        raise EdgeListParseError("missing header line", 1)
    index: dict[int, int] = {}
    for u, v in edges:
        for x in (u, v):
            if x not in index:
                index[x] = len(index)
    n = max(len(index), declared)
    return Graph.from_edges(n, ((index[u], index[v]) for u, v in edges),
                            directed=header == "directed")


def serialize_edgelist(g: Graph) -> str:
    lines = ["directed" if g.directed else "undirected"]
    edges = list(g.edges())
    touched = {x for e in edges for x in e}
    # isolated or trailing nodes would be lost without an explicit count
    if len(touched) != g.node_count or (touched and max(touched) != g.node_count - 1) or not edges:
        lines.append(f"# nodes {g.node_count}")
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_edgelist(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def write_edgelist(g: Graph, path: str | Path) -> None:
    Path(path).write_text(serialize_edgelist(g), newline="\n")


def write_csv(rows: Iterable[dict], columns: list[str], path: str | Path | None = None) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    text = buf.getvalue()
    if path is not None:
        Path(path).write_text(text, newline="\n")
    return text


def read_csv(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))
