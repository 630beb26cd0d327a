import pytest
from hypothesis import given, strategies as st

from graphstring.errors import InvalidNodeError
from graphstring.graph import (Cdll, Graph, add_edge, add_node, all_reachable_from,
                               cdll_insert_after, cdll_walk, neighbors_sorted)

from conftest import assert_graph_invariants


def test_add_node_ids_are_contiguous():
    g = Graph()
    assert add_node(g) == 0
    assert add_node(g) == 1
    g3 = Graph.from_edges(3, [])
    assert add_node(g3) == 3
    assert g3.adj[3] == set()


def test_add_edge_semantics():
    g = Graph.from_edges(2, [])
    assert add_edge(g, 0, 1) is True
    assert g.adj[0] == {1} and g.adj[1] == {0}
    assert add_edge(g, 0, 1) is False
    assert add_edge(g, 1, 0) is False
    g3 = Graph.from_edges(3, [(0, 1)])
    before = g3.copy()
    assert add_edge(g3, 2, 2) is False
    assert g3 == before


def test_add_edge_rejects_out_of_range():
    g = Graph.from_edges(2, [])
    with pytest.raises(InvalidNodeError):
        g.add_edge(0, 2)


def test_directed_edges_one_way():
    g = Graph.from_edges(2, [(0, 1)], directed=True)
    assert g.has_edge(0, 1) and not g.has_edge(1, 0)
    assert g.radj[1] == {0}
    assert g.add_edge(1, 0) is True
    assert g.edge_count == 2


def test_neighbors_sorted():
    star = Graph.from_edges(4, [(0, 3), (0, 1), (0, 2)])
    assert neighbors_sorted(star, 0) == [1, 2, 3]
    assert neighbors_sorted(Graph.from_edges(1, []), 0) == []
    assert neighbors_sorted(Graph.from_edges(3, [(0, 1), (1, 2)]), 1) == [0, 2]
    with pytest.raises(InvalidNodeError):
        neighbors_sorted(star, 4)


def test_reachability():
    house = Graph.from_edges(5, [(0, 1), (0, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    assert all(all_reachable_from(house, v) for v in range(5))
    assert not all_reachable_from(Graph.from_edges(4, [(0, 1), (2, 3)]), 0)
    dpath = Graph.from_edges(3, [(0, 1), (1, 2)], directed=True)
    assert not all_reachable_from(dpath, 2)
    assert all_reachable_from(dpath, 0)
    assert dpath.unreachable_from(1) == [0]


def test_cdll_insert_and_order():
    lst = Cdll()
    h = cdll_insert_after(lst, None, 0)
    assert lst.next[h] == h and lst.prev[h] == h
    cdll_insert_after(lst, h, 1)
    assert lst.order(h) == [0, 1]
    cdll_insert_after(lst, h, 2)
    assert lst.order(h) == [0, 2, 1]


def test_cdll_none_anchor_on_nonempty_list():
    lst = Cdll()
    lst.insert_after(None, 0)
    with pytest.raises(ValueError):
        lst.insert_after(None, 1)


def test_cdll_walk():
    lst = Cdll()
    h = lst.insert_after(None, 0)
    a = lst.insert_after(h, 1)
    lst.insert_after(a, 2)
    assert lst.order(h) == [0, 1, 2]
    assert cdll_walk(lst, h, 0) == h
    assert cdll_walk(lst, h, 3) == h
    assert lst.val(cdll_walk(lst, h, -1)) == 2


def _build(ops):
    lst = Cdll()
    lst.insert_after(None, 0)
    for anchor in ops:
        lst.insert_after(anchor % lst.size, lst.size)
    return lst


@given(st.lists(st.integers(min_value=0, max_value=1000), max_size=40))
def test_cdll_full_cycle_and_links(ops):
    lst = _build(ops)
    for start in range(lst.size):
        node = start
        seen = set()
        for _ in range(lst.size):
            seen.add(node)
            node = lst.next[node]
        assert node == start
        assert len(seen) == lst.size
        assert lst.prev[lst.next[start]] == start
        assert lst.next[lst.prev[start]] == start
    assert sorted(lst.payload) == list(range(lst.size))


@given(st.lists(st.integers(min_value=0, max_value=1000), max_size=20),
       st.integers(min_value=-60, max_value=60))
def test_cdll_walk_mod_and_inverse(ops, a):
    lst = _build(ops)
    for start in range(lst.size):
        assert lst.walk(start, a) == lst.walk(start, a % lst.size)
        assert lst.walk(lst.walk(start, a), -a) == start


@given(st.lists(st.tuples(st.booleans(), st.integers(0, 30), st.integers(0, 30)), max_size=60),
       st.booleans())
def test_graph_invariants_under_random_ops(ops, directed):
    g = Graph(directed=directed)
    g.add_node()
    for is_node, u, v in ops:
        if is_node:
            g.add_node()
        else:
            g.add_edge(u % g.node_count, v % g.node_count)
    assert_graph_invariants(g)
