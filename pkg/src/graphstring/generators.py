"""Seeded graph families and one-edit neighbourhoods.

Conventions: ``star`` with ``n`` nodes has hub 0 and ``n-1`` leaves;
``wheel`` has hub 0 and a rim cycle on ``1..n-1``; ``cycle`` with fewer
than 3 nodes degenerates to a path.  Barabasi-Albert starts from a clique
on ``m`` nodes and attaches each new node to ``m`` distinct targets drawn
proportionally to degree (uniformly while every degree is zero), redrawing
duplicates.  Erdos-Renyi keeps the largest connected component (ties go to
the component holding the smaller node id), relabelled in ascending order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .rng import SplitMix64
from .vm import ALPHABET

FAMILIES = ("path", "cycle", "complete", "star", "wheel", "random_tree",
            "petersen", "house", "barabasi_albert", "erdos_renyi")


@dataclass(frozen=True)
class GraphSpec:
    family: str
    n: int = 0
    param: float = 0
    seed: int = 42

    @property
    def label(self) -> str:
        parts = [self.family, str(self.n)]
        if self.family in ("barabasi_albert", "erdos_renyi"):
            parts.append(f"{self.param:g}")
        if self.family in ("random_tree", "barabasi_albert", "erdos_renyi"):
            parts.append(f"s{self.seed}")
        return "_".join(parts)


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        return path(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(n: int) -> Graph:
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def wheel(n: int) -> Graph:
    if n < 4:
        return complete(n)
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def house() -> Graph:
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)])


def random_tree(n: int, rng: SplitMix64) -> Graph:
    """Uniform labelled tree via a random Pruefer sequence."""
    if n <= 2:
        return path(n)
    seq = [rng.randbelow(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def barabasi_albert(n: int, m: int, rng: SplitMix64) -> Graph:
    if not 1 <= m < n:
        raise ValueError(f"barabasi_albert needs 1 <= m < n, got m={m}, n={n}")
    g = complete(m)
    # one entry per edge endpoint: sampling from it is degree-proportional
    ends = [u for e in g.edges() for u in e]
    for new in range(m, n):
        targets: set[int] = set()
        while len(targets) < m:
            t = rng.choice(ends) if ends else rng.randbelow(new)
            targets.add(t)
        g.add_node()
        for t in sorted(targets):
            g.add_edge(new, t)
            ends.extend((new, t))
    return g


def erdos_renyi(n: int, p: float, rng: SplitMix64) -> Graph:
    if not 0 < p <= 1:
        raise ValueError(f"erdos_renyi needs 0 < p <= 1, got {p}")
    g = Graph.from_edges(n, [])
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                g.add_edge(i, j)
    return largest_component(g)


def largest_component(g: Graph) -> Graph:
    seen = [-1] * g.node_count
    comps: list[list[int]] = []
    for s in range(g.node_count):
        if seen[s] >= 0:
            continue
        comp = [s]
        seen[s] = len(comps)
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if seen[w] < 0:
                    seen[w] = len(comps)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    if not comps:
        return g.copy()
    biggest = max(comps, key=len)  # first maximal one holds the smallest id
    index = {u: i for i, u in enumerate(biggest)}
    return Graph.from_edges(len(biggest), ((index[u], index[v]) for u, v in g.edges()
                                           if u in index))


def generate(spec: GraphSpec) -> Graph:
    fam, n = spec.family, spec.n
    if fam not in FAMILIES:
        raise ValueError(f"unknown family {fam!r}")
    if fam == "petersen":
        return petersen()
    if fam == "house":
        return house()
    if n < 1:
        raise ValueError(f"{fam} needs n >= 1, got {n}")
    rng = SplitMix64(spec.seed)
    if fam == "path":
        return path(n)
    if fam == "cycle":
        return cycle(n)
    if fam == "complete":
        return complete(n)
    if fam == "star":
        return star(n)
    if fam == "wheel":
        return wheel(n)
    if fam == "random_tree":
        return random_tree(n, rng)
    if fam == "barabasi_albert":
        return barabasi_albert(n, int(spec.param), rng)
    return erdos_renyi(n, float(spec.param), rng)


def _bridges(g: Graph) -> set[tuple[int, int]]:
    """Bridges of an undirected graph as (min, max) pairs."""
    disc = [-1] * g.node_count
    low = [0] * g.node_count
    out: set[tuple[int, int]] = set()
    timer = 0
    for root in range(g.node_count):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if w != parent:
                    low[u] = min(low[u], disc[w])
            if not advanced:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[u])
                    if low[u] > disc[parent]:
                        out.add((min(u, parent), max(u, parent)))
    return out


def edit_neighbors_1ged(g: Graph) -> list[Graph]:
    """Connected graphs one edge insertion or non-bridge deletion away, by endpoint pair."""
    return [h for _, _, h in edit_neighbors_1ged_labeled(g)]


def edit_neighbors_1ged_labeled(g: Graph) -> list[tuple[str, tuple[int, int], Graph]]:
    bridges = _bridges(g)
    out = []
    for u in range(g.node_count):
        for v in range(u + 1, g.node_count):
            if g.has_edge(u, v):
                if (u, v) in bridges:
                    continue
                h = g.copy()
                h.remove_edge(u, v)
                out.append(("delete", (u, v), h))
            else:
                h = g.copy()
                h.add_edge(u, v)
                out.append(("insert", (u, v), h))
    return out


def string_neighbors_1lev(w: str) -> list[str]:
    """All distinct strings exactly one deletion, substitution or insertion from ``w``."""
    seen: dict[str, None] = {}
    for i in range(len(w)):
        seen[w[:i] + w[i + 1:]] = None
    for i in range(len(w)):
        for ch in ALPHABET:
            if ch != w[i]:
                seen[w[:i] + ch + w[i + 1:]] = None
    for i in range(len(w) + 1):
        for ch in ALPHABET:
            seen[w[:i] + ch + w[i:]] = None
    seen.pop(w, None)
    return list(seen)
