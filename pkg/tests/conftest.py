import networkx as nx
import pytest

from graphstring.generators import GraphSpec, generate
from graphstring.graph import Graph
from graphstring.rng import SplitMix64


def to_nx(g: Graph):
    h = nx.DiGraph() if g.directed else nx.Graph()
    h.add_nodes_from(range(g.node_count))
    h.add_edges_from(g.edges())
    return h


def assert_graph_invariants(g: Graph) -> None:
    assert len(g.adj) == g.node_count
    for u in range(g.node_count):
        assert u not in g.adj[u]
        for v in g.adj[u]:
            assert 0 <= v < g.node_count
            if g.directed:
                assert u in g.radj[v]
            else:
                assert u in g.adj[v]


def small_suite(max_n: int = 8, seed: int = 42) -> list[tuple[str, Graph]]:
    """Named connected graphs from every family, all with at most ``max_n`` nodes."""
    specs = []
    for n in range(1, max_n + 1):
        specs += [GraphSpec("path", n), GraphSpec("cycle", n), GraphSpec("star", n)]
        if n <= 6:
            specs.append(GraphSpec("complete", n))
        if n >= 4:
            specs.append(GraphSpec("wheel", n))
    rng = SplitMix64(seed)
    for n in range(3, max_n + 1):
        specs.append(GraphSpec("random_tree", n, 0, rng.next_u64()))
        specs.append(GraphSpec("barabasi_albert", n, 1, rng.next_u64()))
        specs.append(GraphSpec("barabasi_albert", n, 2, rng.next_u64()))
        specs.append(GraphSpec("erdos_renyi", n, 0.3, rng.next_u64()))
        specs.append(GraphSpec("erdos_renyi", n, 0.5, rng.next_u64()))
    specs.append(GraphSpec("house"))
    if max_n >= 10:
        specs.append(GraphSpec("petersen"))
    return [(s.label, generate(s)) for s in specs]


@pytest.fixture(scope="session")
def suite6():
    return small_suite(6)


@pytest.fixture
def house():
    return generate(GraphSpec("house"))
