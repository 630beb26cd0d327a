"""Simple graph container and the array-backed circular doubly-linked list."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import InvalidNodeError


@dataclass
class Graph:
    """Finite simple graph on nodes ``0..node_count-1``.

    ``adj`` holds out-neighbours for directed graphs; ``radj`` mirrors the
    in-neighbours and is only populated when ``directed`` is set.
    """

    directed: bool = False
    node_count: int = 0
    adj: list[set[int]] = field(default_factory=list)
    radj: list[set[int]] = field(default_factory=list)

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]],
                   directed: bool = False) -> "Graph":
        g = cls(directed=directed)
        for _ in range(node_count):
            g.add_node()
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def add_node(self) -> int:
        u = self.node_count
        self.adj.append(set())
        if self.directed:
            self.radj.append(set())
        self.node_count += 1
        return u

    def _check(self, u: int) -> None:
        if not 0 <= u < self.node_count:
            raise InvalidNodeError(f"node {u} out of range for graph with {self.node_count} nodes")

    def add_edge(self, u: int, v: int) -> bool:
        """Insert edge ``u -> v`` (both directions when undirected).

        Self-loops and duplicates are silently ignored; returns whether the
        edge set changed.
        """
        self._check(u)
        self._check(v)
        if u == v or v in self.adj[u]:
            return False
        self.adj[u].add(v)
        if self.directed:
            self.radj[v].add(u)
        else:
            self.adj[v].add(u)
        return True

    def remove_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        if v not in self.adj[u]:
            return False
        self.adj[u].discard(v)
        if self.directed:
            self.radj[v].discard(u)
        else:
            self.adj[v].discard(u)
        return True

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors_sorted(self, u: int) -> list[int]:
        self._check(u)
        return sorted(self.adj[u])

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges in ascending order; undirected edges reported once as (min, max)."""
        for u in range(self.node_count):
            for v in sorted(self.adj[u]):
                if self.directed or u < v:
                    yield (u, v)

    @property
    def edge_count(self) -> int:
        total = sum(len(s) for s in self.adj)
        return total if self.directed else total // 2

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def copy(self) -> "Graph":
        return Graph(self.directed, self.node_count,
                     [set(s) for s in self.adj], [set(s) for s in self.radj])

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with node ``u`` renamed to ``perm[u]``."""
        if sorted(perm) != list(range(self.node_count)):
            raise ValueError("perm must be a permutation of the node ids")
        return Graph.from_edges(self.node_count,
                                ((perm[u], perm[v]) for u, v in self.edges()),
                                self.directed)

    def all_reachable_from(self, v0: int) -> bool:
        return not self.unreachable_from(v0)

    def unreachable_from(self, v0: int) -> list[int]:
        """Nodes not reachable from ``v0`` along (out-)edges, ascending."""
        self._check(v0)
        seen = [False] * self.node_count
        seen[v0] = True
        queue = deque([v0])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        return [u for u in range(self.node_count) if not seen[u]]

    def is_connected(self) -> bool:
        if self.node_count == 0:
            return True
        if not self.directed:
            return self.all_reachable_from(0)
        undirected = Graph.from_edges(self.node_count, self.edges(), directed=False)
        return undirected.all_reachable_from(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.directed == other.directed and self.node_count == other.node_count
                and self.adj == other.adj)

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return f"Graph({kind}, n={self.node_count}, edges={list(self.edges())})"


def add_node(g: Graph) -> int:
    return g.add_node()


def add_edge(g: Graph, u: int, v: int) -> bool:
    return g.add_edge(u, v)


def neighbors_sorted(g: Graph, u: int) -> list[int]:
    return g.neighbors_sorted(u)


def all_reachable_from(g: Graph, v0: int) -> bool:
    return g.all_reachable_from(v0)


class Cdll:
    """Circular doubly-linked list stored in parallel arrays.

    Indices returned by :meth:`insert_after` are stable handles; nodes are
    never removed.
    """

    __slots__ = ("payload", "next", "prev")

    def __init__(self) -> None:
        self.payload: list[int] = []
        self.next: list[int] = []
        self.prev: list[int] = []

    @property
    def size(self) -> int:
        return len(self.payload)

    def __len__(self) -> int:
        return len(self.payload)

    def insert_after(self, anchor: int | None, payload: int) -> int:
        idx = len(self.payload)
        if anchor is None:
            if idx:
                raise ValueError("anchor may only be None for an empty list")
            self.payload.append(payload)
            self.next.append(idx)
            self.prev.append(idx)
            return idx
        if not 0 <= anchor < idx:
            raise IndexError(f"cdll index {anchor} is not live")
        after = self.next[anchor]
        self.payload.append(payload)
        self.next.append(after)
        self.prev.append(anchor)
        self.next[anchor] = idx
        self.prev[after] = idx
        return idx

    def walk(self, start: int, steps: int) -> int:
        node = start
        if steps > 0:
            for _ in range(steps % self.size):
                node = self.next[node]
        elif steps < 0:
            for _ in range((-steps) % self.size):
                node = self.prev[node]
        return node

    def val(self, idx: int) -> int:
        return self.payload[idx]

    def order(self, start: int = 0) -> list[int]:
        """Payloads in circular order beginning at cdll index ``start``."""
        if not self.payload:
            return []
        out = [self.payload[start]]
        node = self.next[start]
        while node != start:
            out.append(self.payload[node])
            node = self.next[node]
        return out

    def copy(self) -> "Cdll":
        other = Cdll()
        other.payload = self.payload.copy()
        other.next = self.next.copy()
        other.prev = self.prev.copy()
        return other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cdll):
            return NotImplemented
        return (self.payload == other.payload and self.next == other.next
                and self.prev == other.prev)

    def __repr__(self) -> str:
        return f"Cdll({self.order()})"


def cdll_insert_after(lst: Cdll, anchor: int | None, payload: int) -> int:
    return lst.insert_after(anchor, payload)


def cdll_walk(lst: Cdll, start: int, a: int) -> int:
    return lst.walk(start, a)
