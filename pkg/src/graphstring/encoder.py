"""Greedy graph-to-string encoding and its two start-node wrappers."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .errors import EncodeError
from .graph import Cdll, Graph
from .rng import SplitMix64

# Total order on the alphabet used for every lexicographic tie-break.
SYMBOL_ORDER = "CNPVWcnpv"
_LEX_TABLE = str.maketrans(SYMBOL_ORDER, "abcdefghi")


def lex_key(w: str) -> str:
    """Sort key realising C < N < P < V < W < c < n < p < v."""
    return w.translate(_LEX_TABLE)


@dataclass(frozen=True, order=True)
class DisplacementPair:
    a: int
    b: int

    @property
    def cost(self) -> int:
        return abs(self.a) + abs(self.b)


@lru_cache(maxsize=64)
def _pairs(m: int) -> tuple[tuple[int, int], ...]:
    raw = [(a, b) for a in range(-m, m + 1) for b in range(-m, m + 1)]
    raw.sort(key=lambda ab: (abs(ab[0]) + abs(ab[1]), abs(ab[0]), ab[0], ab[1]))
    return tuple(raw)


def sorted_pairs(m: int) -> list[DisplacementPair]:
    """All ``(a, b)`` in ``[-m, m]^2`` ordered by ``(|a|+|b|, |a|, a, b)``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return [DisplacementPair(a, b) for a, b in _pairs(m)]


def moves(a: int, which: str) -> str:
    """Pointer-move fragment for ``a`` steps of the ``primary``/``secondary`` pointer."""
    if which == "primary":
        fwd, back = "N", "P"
    elif which == "secondary":
        fwd, back = "n", "p"
    else:
        raise ValueError(f"unknown pointer {which!r}")
    return fwd * a if a >= 0 else back * (-a)


@dataclass
class EncodeResult:
    w: str
    iota: dict[int, int]
    iota_inv: dict[int, int]
    move_cost: int
    start: int = 0
    steps: list[tuple[int, int, str]] = field(default_factory=list, repr=False)


@dataclass(frozen=True)
class Commit:
    """One greedy decision: displacement pair, operation and its pointer targets."""

    a: int
    b: int
    op: str
    l1: int
    l2: int

    def fragment(self) -> str:
        if self.op == "V":
            return moves(self.a, "primary") + "V"
        if self.op == "v":
            return moves(self.b, "secondary") + "v"
        return moves(self.a, "primary") + moves(self.b, "secondary") + self.op

    @property
    def move_cost(self) -> int:
        if self.op == "V":
            return abs(self.a)
        if self.op == "v":
            return abs(self.b)
        return abs(self.a) + abs(self.b)


class EncoderState:
    """Mutable working state of one encoding run, with single-step undo.

    CDLL payloads are output-node ids; ``inv[u]`` is the input node mapped
    to output node ``u`` and ``iota[x]`` the reverse (``-1`` if unmapped).
    """

    def __init__(self, g: Graph, v0: int):
        self.g = g
        self.directed = g.directed
        self.cdll = Cdll()
        root = self.cdll.insert_after(None, 0)
        self.p1 = root
        self.p2 = root
        self.iota = [-1] * g.node_count
        self.iota[v0] = 0
        self.inv = [v0]
        self.out_adj: list[set[int]] = [set()]
        self.n_left = g.node_count - 1
        self.e_left = g.edge_count
        self.start = v0

    # ---- queries -------------------------------------------------------
    def done(self) -> bool:
        return self.n_left == 0 and self.e_left == 0

    def unmapped_neighbors(self, x: int) -> list[int]:
        iota = self.iota
        return sorted(c for c in self.g.adj[x] if iota[c] < 0)

    def _has_unmapped(self, x: int) -> bool:
        iota = self.iota
        for c in self.g.adj[x]:
            if iota[c] < 0:
                return True
        return False

    def _positions(self, start: int, m: int) -> dict[int, int]:
        nxt, prv = self.cdll.next, self.cdll.prev
        pos = {0: start}
        f = b = start
        for k in range(1, m + 1):
            f = nxt[f]
            b = prv[b]
            pos[k] = f
            pos[-k] = b
        return pos

    def applicable(self) -> Iterator[Commit]:
        """Yield every applicable (pair, operation) in greedy priority order."""
        m = len(self.inv)
        pos1 = self._positions(self.p1, m)
        pos2 = self._positions(self.p2, m)
        payload, inv, out_adj, adj = self.cdll.payload, self.inv, self.out_adj, self.g.adj
        node_ok = self.n_left > 0
        cache: dict[int, bool] = {}
        for a, b in _pairs(m):
            l1 = pos1[a]
            l2 = pos2[b]
            u1 = payload[l1]
            u2 = payload[l2]
            v1 = inv[u1]
            v2 = inv[u2]
            if node_ok:
                h1 = cache.get(v1)
                if h1 is None:
                    h1 = cache[v1] = self._has_unmapped(v1)
                if h1:
                    yield Commit(a, b, "V", l1, l2)
                h2 = cache.get(v2)
                if h2 is None:
                    h2 = cache[v2] = self._has_unmapped(v2)
                if h2:
                    yield Commit(a, b, "v", l1, l2)
            if v2 in adj[v1] and u2 not in out_adj[u1]:
                yield Commit(a, b, "C", l1, l2)
            if self.directed and v1 in adj[v2] and u1 not in out_adj[u2]:
                yield Commit(a, b, "c", l1, l2)

    def next_commit(self) -> Commit:
        for commit in self.applicable():
            return commit
        raise EncodeError("no applicable operation; input graph is not encodable from this start")

    # ---- mutation ------------------------------------------------------
    def apply(self, commit: Commit, neighbor: int | None = None) -> tuple:
        """Apply ``commit``; returns an undo token for :meth:`undo`."""
        token = (commit, self.p1, self.p2)
        op = commit.op
        if op in "Vv":
            anchor = commit.l1 if op == "V" else commit.l2
            u = len(self.inv)
            self.iota[neighbor] = u
            self.inv.append(neighbor)
            self.out_adj.append(set())
            src = self.cdll.payload[anchor]
            self.out_adj[src].add(u)
            if not self.directed:
                self.out_adj[u].add(src)
            self.cdll.insert_after(anchor, u)
            if op == "V":
                self.p1 = commit.l1
            else:
                self.p2 = commit.l2
            self.n_left -= 1
        else:
            x = self.cdll.payload[commit.l1]
            y = self.cdll.payload[commit.l2]
            if op == "c":
                x, y = y, x
            self.out_adj[x].add(y)
            if not self.directed:
                self.out_adj[y].add(x)
            self.p1 = commit.l1
            self.p2 = commit.l2
        self.e_left -= 1
        return token

    def undo(self, token: tuple) -> None:
        commit, p1, p2 = token
        op = commit.op
        if op in "Vv":
            u = len(self.inv) - 1
            x = self.inv.pop()
            self.iota[x] = -1
            self.out_adj.pop()
            anchor = commit.l1 if op == "V" else commit.l2
            src = self.cdll.payload[anchor]
            self.out_adj[src].discard(u)
            # the new node is always the last arena slot
            cd = self.cdll
            idx = len(cd.payload) - 1
            before, after = cd.prev[idx], cd.next[idx]
            cd.next[before] = after
            cd.prev[after] = before
            cd.payload.pop()
            cd.next.pop()
            cd.prev.pop()
            self.n_left += 1
        else:
            x = self.cdll.payload[commit.l1]
            y = self.cdll.payload[commit.l2]
            if op == "c":
                x, y = y, x
            self.out_adj[x].discard(y)
            if not self.directed:
                self.out_adj[y].discard(x)
        self.p1, self.p2 = p1, p2
        self.e_left += 1


def _check_start(g: Graph, v0: int) -> None:
    if g.node_count == 0:
        raise ValueError("cannot encode the empty graph")
    if not 0 <= v0 < g.node_count:
        raise ValueError(f"start node {v0} out of range")
    missing = g.unreachable_from(v0)
    if missing:
        raise EncodeError(f"node {missing[0]} is not reachable from start node {v0}", node=missing[0])


def graph_to_string_greedy(g: Graph, v0: int = 0) -> EncodeResult:
    """Greedy encoding from ``v0``; the smallest unmapped neighbour id is taken at V/v."""
    _check_start(g, v0)
    st = EncoderState(g, v0)
    parts: list[str] = []
    move_cost = 0
    steps = []
    while not st.done():
        commit = st.next_commit()
        neighbor = None
        if commit.op == "V":
            neighbor = st.unmapped_neighbors(st.inv[st.cdll.payload[commit.l1]])[0]
        elif commit.op == "v":
            neighbor = st.unmapped_neighbors(st.inv[st.cdll.payload[commit.l2]])[0]
        st.apply(commit, neighbor)
        parts.append(commit.fragment())
        move_cost += commit.move_cost
        steps.append((commit.a, commit.b, commit.op))
    iota = {x: u for x, u in enumerate(st.iota)}
    iota_inv = {u: x for u, x in enumerate(st.inv)}
    return EncodeResult("".join(parts), iota, iota_inv, move_cost, v0, steps)


def valid_starts(g: Graph) -> list[int]:
    if g.node_count == 0:
        raise ValueError("cannot encode the empty graph")
    return [v for v in range(g.node_count) if g.all_reachable_from(v)]


def graph_to_string_greedy_min(g: Graph) -> EncodeResult:
    """Shortest greedy string over all valid starts.

    Ties: lexicographic minimum under :data:`SYMBOL_ORDER`, then smallest start.
    """
    starts = valid_starts(g)
    if not starts:
        raise EncodeError("no start node reaches every node")
    best = None
    best_key = None
    for v0 in starts:
        res = graph_to_string_greedy(g, v0)
        key = (len(res.w), lex_key(res.w))
        if best_key is None or key < best_key:
            best, best_key = res, key
    return best


def graph_to_string_greedy_rnd(g: Graph, seed: int) -> EncodeResult:
    starts = valid_starts(g)
    if not starts:
        raise EncodeError("no start node reaches every node")
    rng = SplitMix64(seed)
    v0 = starts[rng.randbelow(len(starts))]
    return graph_to_string_greedy(g, v0)
