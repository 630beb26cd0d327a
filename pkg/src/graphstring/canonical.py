"""Canonical strings by exhaustive backtracking over the greedy encoder.

The default search branches over the start node and over the choice of
unmapped neighbour at every V/v commit; pair order and operation priority
stay those of the greedy encoder.  ``strict=True`` additionally branches
over every applicable (pair, operation) combination, which is only
tractable for very small graphs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .encoder import EncoderState, graph_to_string_greedy_min, lex_key, valid_starts
from .errors import BudgetExceeded, EncodeError
from .graph import Graph

DEFAULT_BUDGET = 10**8


@dataclass
class CanonicalResult:
    w_star: str
    length: int
    explored: int


class _Search:
    def __init__(self, g: Graph, budget: int | None, deadline: float | None,
                 strict: bool, prune: bool):
        self.g = g
        self.budget = DEFAULT_BUDGET if budget is None else budget
        self.deadline = deadline
        self.strict = strict
        self.prune = prune
        self.explored = 0
        self.best: str | None = None
        self.best_key = ""
        self.collect: set[str] | None = None
        self.cap = -1

    def _tick(self) -> None:
        self.explored += 1
        if self.explored > self.budget:
            raise BudgetExceeded(f"search budget of {self.budget} nodes exhausted",
                                 self.best, self.explored)
        if self.deadline is not None and not self.explored & 0x3FF:
            if time.process_time() > self.deadline:
                raise BudgetExceeded("search time limit exceeded", self.best, self.explored)

    def _children(self, st: EncoderState):
        if self.strict:
            commits = []
            for commit in st.applicable():
                # V ignores b and v ignores a: keep one representative pair
                if (commit.op == "V" and commit.b) or (commit.op == "v" and commit.a):
                    continue
                commits.append(commit)
        else:
            commits = [st.next_commit()]
        for commit in commits:
            if commit.op == "V":
                for c in st.unmapped_neighbors(st.inv[st.cdll.payload[commit.l1]]):
                    yield commit, c
            elif commit.op == "v":
                for c in st.unmapped_neighbors(st.inv[st.cdll.payload[commit.l2]]):
                    yield commit, c
            else:
                yield commit, None

    def dfs(self, st: EncoderState, parts: list[str], length: int) -> None:
        self._tick()
        if st.done():
            w = "".join(parts)
            if self.collect is not None:
                if length <= self.cap:
                    self.collect.add(w)
                return
            key = lex_key(w)
            if self.best is None or length < len(self.best) or (
                    length == len(self.best) and key < self.best_key):
                self.best, self.best_key = w, key
            return
        # every remaining edge costs at least one instruction
        bound = length + st.e_left
        if self.collect is not None:
            if bound > self.cap:
                return
        elif self.prune and self.best is not None:
            best_len = len(self.best)
            if bound > best_len:
                return
            if bound == best_len:
                prefix = lex_key("".join(parts))
                if prefix > self.best_key[:len(prefix)]:
                    return
        for commit, neighbor in self._children(st):
            frag = commit.fragment()
            token = st.apply(commit, neighbor)
            parts.append(frag)
            try:
                self.dfs(st, parts, length + len(frag))
            finally:
                parts.pop()
                st.undo(token)

    def run(self) -> None:
        starts = valid_starts(self.g)
        if not starts:
            raise EncodeError("no start node reaches every node")
        for v0 in starts:
            self.dfs(EncoderState(self.g, v0), [], 0)


def canonical_string(g: Graph, budget: int | None = None, *, time_limit: float | None = None,
                     strict: bool = False, prune: bool = True, seed_with_greedy: bool = True
                     ) -> CanonicalResult:
    """Lexicographically smallest among the shortest strings the search can produce.

    ``budget`` caps visited search nodes and ``time_limit`` caps process CPU
    seconds; exceeding either raises :class:`BudgetExceeded`.
    """
    if g.node_count == 0:
        raise ValueError("cannot encode the empty graph")
    deadline = None if time_limit is None else time.process_time() + time_limit
    search = _Search(g, budget, deadline, strict, prune)
    if prune and seed_with_greedy and not strict:
        # greedy output is one leaf of the search tree, so it is a sound upper bound
        try:
            seed = graph_to_string_greedy_min(g).w
        except EncodeError:
            seed = None
        if seed is not None:
            search.best, search.best_key = seed, lex_key(seed)
    search.run()
    return CanonicalResult(search.best, len(search.best), search.explored)


def enumerate_strings(g: Graph, length_cap: int, *, strict: bool = False,
                      budget: int | None = None) -> set[str]:
    """Every string the search produces with length at most ``length_cap``."""
    if g.node_count == 0:
        raise ValueError("cannot encode the empty graph")
    search = _Search(g, budget, None, strict, prune=False)
    search.collect = set()
    search.cap = length_cap
    search.run()
    return search.collect


def is_canonical_equal(g: Graph, h: Graph, **kwargs) -> bool:
    return canonical_string(g, **kwargs).w_star == canonical_string(h, **kwargs).w_star
