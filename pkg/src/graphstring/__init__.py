"""Graphs as strings over a nine-instruction alphabet.

Decoding runs a small virtual machine (a graph, a circular doubly-linked
list of node references and two pointers); encoding is a greedy search over
pointer displacements, and an exhaustive variant yields a canonical string.
"""

from .canonical import CanonicalResult, canonical_string, enumerate_strings, is_canonical_equal
from .encoder import (SYMBOL_ORDER, DisplacementPair, EncodeResult, graph_to_string_greedy,
                      graph_to_string_greedy_min, graph_to_string_greedy_rnd, moves,
                      sorted_pairs)
from .errors import (BudgetExceeded, EdgeListParseError, EncodeError, GraphStringError,
                     InstructionParseError, SizeLimitError, StatisticsError)
from .graph import Cdll, Graph
from .metrics import d_isalgraph, levenshtein, ols_slope, spearman
from .oracles import ged_exact, is_isomorphic
from .vm import ALPHABET, Instruction, InterpreterState, decode_with_trace, initial_state, step, string_to_graph

__all__ = [
    "ALPHABET", "SYMBOL_ORDER", "BudgetExceeded", "CanonicalResult", "Cdll", "DisplacementPair",
    "EdgeListParseError", "EncodeError", "EncodeResult", "Graph", "GraphStringError",
    "Instruction", "InstructionParseError", "InterpreterState", "SizeLimitError",
    "StatisticsError", "canonical_string", "d_isalgraph", "decode_with_trace",
    "enumerate_strings", "ged_exact", "graph_to_string_greedy", "graph_to_string_greedy_min",
    "graph_to_string_greedy_rnd", "initial_state", "is_canonical_equal", "is_isomorphic",
    "levenshtein", "moves", "ols_slope", "sorted_pairs", "spearman", "step", "string_to_graph",
]
