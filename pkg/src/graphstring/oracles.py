"""Exact, brute-force ground truth: unit-cost GED and graph isomorphism.

Both are exponential and guarded by a node cap.  Node substitution is free
(unlabelled graphs); node insertion/deletion and edge insertion/deletion
each cost 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import SizeLimitError
from .graph import Graph


@dataclass(frozen=True)
class GedCosts:
    node_ins: int = 1
    node_del: int = 1
    node_sub: int = 0
    edge_ins: int = 1
    edge_del: int = 1


UNIT_COSTS = GedCosts()


def _cap(g: Graph, h: Graph, size_cap: int) -> None:
    big = max(g.node_count, h.node_count)
    if big > size_cap:
        raise SizeLimitError(f"graph with {big} nodes exceeds oracle cap of {size_cap}")


def ged_exact(g: Graph, h: Graph, size_cap: int = 8) -> int:
    """Exact graph edit distance by depth-first branch and bound.

    Each node of ``g`` is mapped to an unused node of ``h`` or deleted; the
    search is exhaustive over injective partial mappings, pruned only by a
    lower bound that never exceeds the true completion cost.
    """
    if g.directed or h.directed:
        raise ValueError("ged_exact supports undirected graphs only")
    _cap(g, h, size_cap)
    ng, nh = g.node_count, h.node_count
    gadj = [frozenset(s) for s in g.adj]
    hadj = [frozenset(s) for s in h.adj]
    hedges = list(h.edges())
    # deg-descending order finds good mappings early
    order = sorted(range(ng), key=lambda u: -len(gadj[u]))
    phi = [-1] * ng
    used = [False] * nh
    best = [g.edge_count + h.edge_count + ng + nh]

    def finish(cost: int) -> int:
        # remaining h nodes are inserted with every edge that touches them
        extra = sum(1 for x in range(nh) if not used[x])
        extra += sum(1 for x, y in hedges if not (used[x] and used[y]))
        return cost + extra

    def rec(i: int, cost: int, free_h: int) -> None:
        remaining = ng - i
        # every unmatched h node beyond what is left of g must be inserted
        if cost + max(0, free_h - remaining) >= best[0]:
            return
        if i == ng:
            best[0] = min(best[0], finish(cost))
            return
        u = order[i]
        prev = order[:i]
        for x in range(nh + 1):
            if x < nh:
                if used[x]:
                    continue
                delta = 0
                for w in prev:
                    y = phi[w]
                    ge = w in gadj[u]
                    he = y >= 0 and y in hadj[x]
                    if ge != he:
                        delta += 1
                phi[u] = x
                used[x] = True
                rec(i + 1, cost + delta, free_h - 1)
                used[x] = False
            else:
                # deletion removes the node and its edges to already placed nodes
                delta = 1 + sum(1 for w in prev if w in gadj[u])
                phi[u] = -1
                rec(i + 1, cost + delta, free_h)
        phi[u] = -1

    rec(0, 0, nh)
    return best[0]


def ged_bruteforce(g: Graph, h: Graph, size_cap: int = 5) -> int:
    """Reference GED enumerating every injective partial mapping without pruning."""
    _cap(g, h, size_cap)
    ng, nh = g.node_count, h.node_count
    gedges = g.edge_set()
    hedges = h.edge_set()
    best = None
    for k in range(min(ng, nh) + 1):
        for src in combinations(range(ng), k):
            for dst in permutations(range(nh), k):
                phi = dict(zip(src, dst))
                cost = (ng - k) + (nh - k)
                mapped = set()
                for u, v in gedges:
                    if u in phi and v in phi:
                        a, b = sorted((phi[u], phi[v]))
                        if (a, b) in hedges:
                            mapped.add((a, b))
                            continue
                    cost += 1
                cost += len(hedges) - len(mapped)
                if best is None or cost < best:
                    best = cost
    return best


def _degree_signature(g: Graph) -> list[tuple[int, int]]:
    if g.directed:
        return sorted((len(g.adj[u]), len(g.radj[u])) for u in range(g.node_count))
    return sorted((len(g.adj[u]), 0) for u in range(g.node_count))


def is_isomorphic(g: Graph, h: Graph, size_cap: int = 10) -> bool:
    """Permutation search with degree-compatible candidates and edge consistency."""
    if g.directed != h.directed:
        return False
    if g.node_count != h.node_count or g.edge_count != h.edge_count:
        return False
    if _degree_signature(g) != _degree_signature(h):
        return False
    _cap(g, h, size_cap)
    n = g.node_count
    directed = g.directed

    def sig(gr: Graph, u: int) -> tuple[int, int]:
        return (len(gr.adj[u]), len(gr.radj[u]) if directed else 0)

    gsig = [sig(g, u) for u in range(n)]
    hsig = [sig(h, x) for x in range(n)]
    # BFS-ish order: each next node has as many placed neighbours as possible
    order: list[int] = []
    placed = set()
    while len(order) < n:
        cand = max((u for u in range(n) if u not in placed),
                   key=lambda u: (sum(1 for w in g.adj[u] if w in placed), gsig[u]))
        order.append(cand)
        placed.add(cand)
    phi = [-1] * n
    used = [False] * n

    def ok(u: int, x: int, i: int) -> bool:
        for w in order[:i]:
            y = phi[w]
            if (w in g.adj[u]) != (y in h.adj[x]):
                return False
            if directed and (u in g.adj[w]) != (x in h.adj[y]):
                return False
        return True

    def rec(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        for x in range(n):
            if not used[x] and hsig[x] == gsig[u] and ok(u, x, i):
                phi[u] = x
                used[x] = True
                if rec(i + 1):
                    return True
                used[x] = False
        phi[u] = -1
        return False

    return rec(0)
