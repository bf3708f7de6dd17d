import random

import networkx as nx
import pytest

from chromdisc.catalog import all_graphs, random_connected_graph
from chromdisc.chromatic import alpha_from_polynomial
from chromdisc.errors import Disconnected, EdgeNotPresent, InvariantViolation, SizeGuard
from chromdisc.graph import OrderedPartition, complete_graph, empty_graph, new_graph, path_graph
from chromdisc.spanning import (
    EdgeOrder,
    TreePairA,
    TreePairB,
    broken_circuits,
    build_A_trees,
    build_B_trees,
    circuits,
    lex_order,
    phi_tree,
    psi_tree,
    random_edge_order,
    sigma_for_max,
    spanning_trees,
    trees_without_broken_circuits,
)

from oracles import brute_cycles, brute_nbc_tree_count, brute_spanning_trees, matrix_tree_count

A, B, C = (0, 1), (0, 2), (1, 2)  # edges of K3
fs = frozenset


def test_sigma_for_max_examples(k3, single_edge, c4):
    assert sigma_for_max(k3, B).sequence == (A, C, B)
    assert sigma_for_max(single_edge, (0, 1)).sequence == ((0, 1),)
    assert sigma_for_max(c4, (0, 3)).sequence == ((0, 1), (1, 2), (2, 3), (0, 3))
    with pytest.raises(EdgeNotPresent):
        sigma_for_max(k3, (0, 3))


def test_circuits_examples(k3):
    assert list(circuits(path_graph(5))) == []
    assert list(circuits(k3)) == [fs({A, B, C})]
    k4 = list(circuits(complete_graph(4)))
    assert len(k4) == 7
    assert [len(c) for c in k4] == [3, 3, 3, 3, 4, 4, 4]
    with pytest.raises(SizeGuard):
        list(circuits(empty_graph(13)))


@pytest.mark.parametrize("n", range(3, 7))
def test_circuits_match_brute_force(n):
    for g in all_graphs(n):
        got = list(circuits(g))
        assert len(got) == len(set(got))
        assert set(got) == set(brute_cycles(g.n, g.edges))


def test_broken_circuits_examples(k3, c4):
    assert broken_circuits(k3, EdgeOrder((A, B, C))) == {fs({A, B})}
    assert broken_circuits(path_graph(4), lex_order(path_graph(4))) == set()
    bcs = broken_circuits(c4, lex_order(c4))
    assert len(bcs) == 1 and len(next(iter(bcs))) == 3
    with pytest.raises(InvariantViolation):
        broken_circuits(k3, EdgeOrder((A, B)))


def test_spanning_trees_examples(k3, c4):
    assert len(list(spanning_trees(k3))) == 3
    p = path_graph(5)
    assert list(spanning_trees(p)) == [fs(p.edges)]
    assert len(list(spanning_trees(c4))) == 4
    with pytest.raises(Disconnected):
        list(spanning_trees(empty_graph(2)))


@pytest.mark.parametrize("n", range(1, 7))
def test_spanning_trees_match_brute_force(n):
    for g in all_graphs(n, connected=True):
        got = list(spanning_trees(g))
        assert len(got) == len(set(got))
        assert set(got) == set(brute_spanning_trees(g.n, g.edges))


@pytest.mark.parametrize("n", [7, 8])
def test_spanning_tree_count_matches_kirchhoff_large(n):
    rng = random.Random(n)
    gs = [complete_graph(n)] + [random_connected_graph(n, rng.uniform(0.3, 0.8), rng) for _ in range(5)]
    for g in gs:
        det = matrix_tree_count(g.n, g.edges)
        assert round(nx.number_of_spanning_trees(nx.Graph(list(g.edges)))) == det
        assert sum(1 for _ in spanning_trees(g)) == det


def test_trees_without_broken_circuits_examples(k3, c4):
    got = set(trees_without_broken_circuits(k3, EdgeOrder((A, B, C))))
    assert got == {fs({A, C}), fs({B, C})}
    p = path_graph(4)
    assert len(list(trees_without_broken_circuits(p, lex_order(p)))) == 1
    for m in c4.edges:
        trees = list(trees_without_broken_circuits(c4, sigma_for_max(c4, m)))
        assert len(trees) == 3 and all(m in t for t in trees)


@pytest.mark.parametrize("n", range(1, 7))
def test_whitney_count_is_alpha_for_any_order(n):
    rng = random.Random(n)
    for g in all_graphs(n, connected=True):
        a = alpha_from_polynomial(g)
        orders = [lex_order(g)] + [random_edge_order(g, rng) for _ in range(10)]
        for sigma in orders:
            trees = list(trees_without_broken_circuits(g, sigma))
            assert len(trees) == a
            if g.edges:
                assert all(sigma.max_edge in t for t in trees)


@pytest.mark.parametrize("n", range(1, 6))
def test_whitney_count_matches_brute_force(n):
    for g in all_graphs(n, connected=True):
        assert len(list(trees_without_broken_circuits(g, lex_order(g)))) == brute_nbc_tree_count(
            g.n, g.edges, g.edges
        )


def test_phi_tree_examples(k3, single_edge):
    b = phi_tree(k3, C, fs({A, C}))
    assert b == TreePairB(OrderedPartition(fs({0, 1}), fs({2})), C, fs({A}), fs())
    b = phi_tree(single_edge, (0, 1), fs({(0, 1)}))
    assert b == TreePairB(OrderedPartition(fs({0}), fs({1})), (0, 1), fs(), fs())


def test_psi_tree_examples(k3, single_edge):
    b = TreePairB(OrderedPartition(fs({0, 1}), fs({2})), C, fs({A}), fs())
    assert psi_tree(k3, b) == TreePairA(C, fs({A, C}))
    b = TreePairB(OrderedPartition(fs({0}), fs({1})), (0, 1), fs(), fs())
    assert psi_tree(single_edge, b) == ((0, 1), fs({(0, 1)}))


def test_phi_tree_rejects_invalid(k3):
    with pytest.raises(InvariantViolation):
        phi_tree(k3, C, fs({A, B}))  # misses the maximum edge
    with pytest.raises(InvariantViolation):
        # triangle 0-1-2 has broken circuit {01, 02} when 23 is ranked last
        phi_tree(complete_graph(4), (2, 3), fs({A, B, (2, 3)}))
    with pytest.raises(InvariantViolation):
        phi_tree(k3, C, fs({C}))


def test_psi_tree_rejects_invalid(k3):
    with pytest.raises(InvariantViolation):
        # vertex 0 must sit on the first side
        psi_tree(k3, TreePairB(OrderedPartition(fs({2}), fs({0, 1})), C, fs(), fs({A})))
    with pytest.raises(InvariantViolation):
        psi_tree(k3, TreePairB(OrderedPartition(fs({0, 1}), fs({2})), C, fs(), fs()))


def _tree_roundtrip(g, orders=None):
    def order(e):
        return orders[e] if orders else sigma_for_max(g, e)

    A_ = list(build_A_trees(g, orders))
    B_ = list(build_B_trees(g, orders))
    assert len(set(A_)) == len(A_) and len(set(B_)) == len(B_)
    images = [phi_tree(g, e, t, order(e)) for e, t in A_]
    assert all(psi_tree(g, b, order(b.edge)) == a for a, b in zip(A_, images))
    assert all(phi_tree(g, *psi_tree(g, b, order(b.edge)), order(b.edge)) == b for b in B_)
    assert set(images) == set(B_)
    assert len(A_) == g.num_edges * alpha_from_polynomial(g)


@pytest.mark.parametrize("n", range(2, 6))
def test_tree_bijection_roundtrip_exhaustive(n):
    for g in all_graphs(n, connected=True):
        _tree_roundtrip(g)


def test_tree_bijection_with_random_orders():
    rng = random.Random(11)
    for _ in range(10):
        g = random_connected_graph(6, rng.uniform(0.3, 0.9), rng)
        orders = {e: random_edge_order(g, rng, max_edge=e) for e in g.edges}
        _tree_roundtrip(g, orders)
        _tree_roundtrip(g)


def test_build_A_trees_rejects_order_with_wrong_max(k3):
    with pytest.raises(InvariantViolation):
        list(build_A_trees(k3, {e: EdgeOrder((A, B, C)) for e in k3.edges}))
