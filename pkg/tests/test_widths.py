import itertools

import networkx as nx
import pytest
from hypothesis import given

from speedcops.budget import BudgetExceeded
from speedcops.generators import gen_ia_gap
from speedcops.graph import Graph, complete_graph, cycle_graph, path_graph
from speedcops.widths import elimination_width, pathwidth, treewidth, vertex_separation
from strategies import graphs


def binary_tree():
    return Graph.from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])


def brute(G, measure):
    return min(measure(G, order) for order in itertools.permutations(range(G.n)))


def test_clique():
    assert pathwidth(complete_graph(4))[0] == 3
    assert treewidth(complete_graph(4))[0] == 3


def test_path_and_cycle():
    assert pathwidth(path_graph(7))[0] == 1
    assert treewidth(cycle_graph(5))[0] == 2


def test_binary_tree_against_all_orders():
    G = binary_tree()
    pw, dec = pathwidth(G)
    assert pw == brute(G, vertex_separation) == 1  # a caterpillar
    assert dec.replay(G) == pw


def test_ia_gap_contains_k4():
    assert treewidth(gen_ia_gap(1, 1, 4))[0] >= 3


@given(graphs(max_n=6, connected=False))
def test_exact_against_all_orders(G):
    pw, pdec = pathwidth(G)
    tw, tdec = treewidth(G)
    assert pw == brute(G, vertex_separation)
    assert tw == brute(G, elimination_width)
    assert pdec.replay(G) == pw and tdec.replay(G) == tw
    assert tw <= pw


@given(graphs(max_n=7))
def test_treewidth_matches_networkx_bound(G):
    H = nx.Graph(G.edges())
    H.add_nodes_from(range(G.n))
    upper, _ = nx.algorithms.approximation.treewidth_min_degree(H)
    assert treewidth(G)[0] <= upper


def test_vertex_limit():
    with pytest.raises(BudgetExceeded):
        pathwidth(path_graph(5), max_vertices=4)
