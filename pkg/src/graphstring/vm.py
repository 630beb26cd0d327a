"""The instruction-string virtual machine (decoder)."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InstructionParseError
from .graph import Cdll, Graph

ALPHABET = "NnPpVvCcW"


class Instruction(str, Enum):
    N = "N"  # primary forward
    P = "P"  # primary backward
    n = "n"  # secondary forward
    p = "p"  # secondary backward
    V = "V"  # new node attached to primary
    v = "v"  # new node attached to secondary
    C = "C"  # edge primary -> secondary
    c = "c"  # edge secondary -> primary
    W = "W"  # no-op

    def render(self) -> str:
        return self.value


def parse(text: str) -> list[Instruction]:
    out = []
    for i, ch in enumerate(text):
        if ch not in ALPHABET:
            raise InstructionParseError(text, i)
        out.append(Instruction(ch))
    return out


def validate(text: str) -> str:
    for i, ch in enumerate(text):
        if ch not in ALPHABET:
            raise InstructionParseError(text, i)
    return text


def render(instructions: list[Instruction]) -> str:
    return "".join(i.value for i in instructions)


@dataclass
class InterpreterState:
    g: Graph
    l: Cdll  # noqa: E741
    p1: int
    p2: int

    def copy(self) -> "InterpreterState":
        return InterpreterState(self.g.copy(), self.l.copy(), self.p1, self.p2)

    def order(self) -> list[int]:
        """CDLL payloads in circular order, starting from the root node."""
        return self.l.order(0)


def initial_state(directed: bool = False) -> InterpreterState:
    g = Graph(directed=directed)
    u0 = g.add_node()
    lst = Cdll()
    root = lst.insert_after(None, u0)
    return InterpreterState(g, lst, root, root)


def _apply(s: InterpreterState, op: str) -> None:
    lst = s.l
    if op == "N":
        s.p1 = lst.next[s.p1]
    elif op == "P":
        s.p1 = lst.prev[s.p1]
    elif op == "n":
        s.p2 = lst.next[s.p2]
    elif op == "p":
        s.p2 = lst.prev[s.p2]
    elif op == "V":
        u = s.g.add_node()
        s.g.add_edge(lst.payload[s.p1], u)
        lst.insert_after(s.p1, u)
    elif op == "v":
        u = s.g.add_node()
        s.g.add_edge(lst.payload[s.p2], u)
        lst.insert_after(s.p2, u)
    elif op == "C":
        s.g.add_edge(lst.payload[s.p1], lst.payload[s.p2])
    elif op == "c":
        s.g.add_edge(lst.payload[s.p2], lst.payload[s.p1])
    elif op != "W":
        raise InstructionParseError(op, 0)


def step(s: InterpreterState, instruction: Instruction | str) -> InterpreterState:
    """Return the successor state; ``s`` itself is left untouched."""
    out = s.copy()
    _apply(out, Instruction(instruction).value)
    return out


def run(text: str, directed: bool = False) -> InterpreterState:
    """Execute ``text`` from the initial state, mutating one working state."""
    validate(text)
    s = initial_state(directed)
    for ch in text:
        _apply(s, ch)
    return s


def string_to_graph(text: str, directed: bool = False) -> Graph:
    return run(text, directed).g


def decode_with_trace(text: str, directed: bool = False) -> list[InterpreterState]:
    validate(text)
    s = initial_state(directed)
    trace = [s.copy()]
    for ch in text:
        _apply(s, ch)
        trace.append(s.copy())
    return trace
