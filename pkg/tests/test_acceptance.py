"""Exit criteria.  Each test is one criterion; a PASS/FAIL line per criterion
is printed in the terminal summary (see conftest.py).

All comparisons are exact integer equalities.
"""

import io
import json
import math
import random
import time

import pytest

from chromdisc.catalog import all_graphs, graphs_up_to, random_connected_graph
from chromdisc.chromatic import alpha_from_polynomial, chromatic_polynomial, count_proper_colorings
from chromdisc.cli import run
from chromdisc.formats import read_graph6_lines, to_graph6
from chromdisc.graph import complete_graph, contract_edge, cycle_graph, delete_edge, is_connected
from chromdisc.orientations import build_A, build_B, enumerate_all, phi, psi, sinks
from chromdisc.recurrence import peterson_lhs, peterson_rhs, verify_peterson, verify_peterson_unordered
from chromdisc.spanning import (
    build_A_trees,
    build_B_trees,
    lex_order,
    phi_tree,
    psi_tree,
    random_edge_order,
    sigma_for_max,
    spanning_trees,
    trees_without_broken_circuits,
)

from oracles import brute_colorings, chromatic_by_interpolation, matrix_tree_count

pytestmark = pytest.mark.acceptance

MAX_N = 6
RUNTIME_BUDGET_S = 300
RANDOM_ORDERS = 10
RANDOM_N6_GRAPHS = 100


def _cli(argv):
    out = io.StringIO()
    code = run(argv, stdout=out)
    return code, json.loads(out.getvalue()) if out.getvalue() else None


@pytest.mark.criterion("1 three-way alpha agreement, connected n<=6, every sink, canonical + 10 random orders")
def test_criterion_1_three_way_alpha_agreement(tmp_path):
    start = time.perf_counter()
    generated = graphs_up_to(MAX_N, connected=True)
    # the same family ingested through graph6
    cat = tmp_path / "connected.g6"
    cat.write_text("\n".join(to_graph6(g) for g in generated) + "\n")
    ingested = read_graph6_lines(cat.read_text())
    assert ingested == generated

    rng = random.Random(1)
    for g in ingested:
        a = alpha_from_polynomial(g)
        by_sink = [0] * g.n
        for lam in enumerate_all(g):
            s = sinks(g, lam)
            if len(s) == 1:
                by_sink[min(s)] += 1
        assert by_sink == [a] * g.n, g
        orders = [lex_order(g)] + [random_edge_order(g, rng) for _ in range(RANDOM_ORDERS)]
        for sigma in orders:
            assert sum(1 for _ in trees_without_broken_circuits(g, sigma)) == a, (g, sigma)
    assert time.perf_counter() - start <= RUNTIME_BUDGET_S


@pytest.mark.criterion("2 deletion-contraction for alpha, every graph n<=6, every edge")
def test_criterion_2_deletion_contraction():
    checked = 0
    for g in graphs_up_to(MAX_N):
        a = alpha_from_polynomial(g)
        for e in g.edges:
            assert a == alpha_from_polynomial(delete_edge(g, e)) + alpha_from_polynomial(contract_edge(g, e))
            checked += 1
    assert checked > 0


@pytest.mark.criterion("3 ordered and unordered partition recurrences, every graph n<=6, all three backends")
def test_criterion_3_partition_recurrences():
    graphs = graphs_up_to(MAX_N)
    assert any(not is_connected(g) for g in graphs)
    for g in graphs:
        rep = verify_peterson(g, "all")
        assert rep.disagreements == (), g
        assert rep.ordered.holds and rep.unordered.holds, g
        assert rep.ordered.rhs == 2 * rep.unordered.rhs
        for method in ("orientations", "trees"):
            assert peterson_rhs(g, method).rhs == rep.ordered.rhs
            assert verify_peterson_unordered(g, method).rhs == rep.unordered.rhs


def _check_orientation_bijection(g):
    A = list(build_A(g))
    B = list(build_B(g))
    assert len(A) == peterson_lhs(g) == 2 * g.num_edges * alpha_from_polynomial(g)
    assert len(B) == peterson_rhs(g).rhs
    images = [phi(g, a) for a in A]
    assert all(psi(g, b) == a for a, b in zip(A, images))
    assert all(phi(g, psi(g, b)) == b for b in B)
    assert set(images) == set(B)


def _check_tree_bijection(g):
    A = list(build_A_trees(g))
    B = list(build_B_trees(g))
    assert len(A) == g.num_edges * alpha_from_polynomial(g)
    assert len(B) == verify_peterson_unordered(g).rhs
    images = [phi_tree(g, e, t, sigma_for_max(g, e)) for e, t in A]
    assert all(psi_tree(g, b) == a for a, b in zip(A, images))
    assert all(phi_tree(g, *psi_tree(g, b)) == b for b in B)
    assert set(images) == set(B)


@pytest.mark.criterion("4 both bijections round-trip, connected n<=5 and 100 random n=6")
def test_criterion_4_bijection_roundtrips():
    rng = random.Random(4)
    family = graphs_up_to(5, connected=True)
    family += [random_connected_graph(6, rng.uniform(0.25, 0.9), rng) for _ in range(RANDOM_N6_GRAPHS)]
    for g in family:
        _check_orientation_bijection(g)
        _check_tree_bijection(g)


@pytest.mark.criterion("5 closed forms: K_n, C_n, trees, disconnected graphs")
def test_criterion_5_closed_forms():
    for n in range(2, 7):
        g = complete_graph(n)
        oracle = abs(chromatic_by_interpolation(n, list(g.edges))[1])
        assert oracle == math.factorial(n - 1)
        assert alpha_from_polynomial(g) == oracle
    for n in range(3, 8):
        g = cycle_graph(n)
        oracle = abs(chromatic_by_interpolation(n, list(g.edges))[1])
        assert oracle == n - 1
        assert alpha_from_polynomial(g) == oracle
    trees = [g for n in range(1, 8) for g in all_graphs(n, connected=True) if g.num_edges == n - 1]
    assert len(trees) == 1 + 1 + 1 + 2 + 3 + 6 + 11
    for t in trees:
        assert alpha_from_polynomial(t) == 1
        if t.n <= 6:
            assert abs(chromatic_by_interpolation(t.n, list(t.edges))[1]) == 1
    disconnected = [g for g in graphs_up_to(MAX_N) if not is_connected(g)]
    for g in disconnected:
        assert alpha_from_polynomial(g) == 0
        if g.n <= 5:
            assert chromatic_by_interpolation(g.n, list(g.edges))[1] == 0


@pytest.mark.criterion("6 oracles: colorings, acyclic orientation count at q=-1, matrix-tree count")
def test_criterion_6_oracle_cross_checks():
    for g in graphs_up_to(5):
        p = chromatic_polynomial(g)
        for q in range(g.n + 2):
            assert p(q) == count_proper_colorings(g, q) == brute_colorings(g.n, g.edges, q)
        assert sum(1 for _ in enumerate_all(g)) == abs(p(-1))
    rng = random.Random(6)
    family = graphs_up_to(7, connected=True)
    family += [complete_graph(8)] + [random_connected_graph(8, rng.uniform(0.2, 0.8), rng) for _ in range(40)]
    for g in family:
        assert sum(1 for _ in spanning_trees(g)) == matrix_tree_count(g.n, g.edges), g


@pytest.mark.criterion("7 CLI sweep n<=6 exits 0 with all entries holding; any corrupted alpha exits 1")
def test_criterion_7_cli_contract(tmp_path):
    code, cert = _cli(["sweep", "--max-n", str(MAX_N), "--ledger", "--seed", "7"])
    assert code == 0
    entries = cert["results"]["graphs"]
    assert len(entries) == len(graphs_up_to(MAX_N))
    assert all(e["holds"] is True for e in entries)
    assert all(e["peterson"]["holds"] is True for e in entries)

    path = tmp_path / "sweep.json"
    path.write_text(json.dumps(cert))
    assert _cli(["verify", "ledger", str(path)])[0] == 0

    # every single alpha of one certificate, corrupted one at a time
    g_path = tmp_path / "g.txt"
    g_path.write_text("5 6\n0 1\n1 2\n2 3\n3 4\n0 4\n0 2\n")
    code, single = _cli(["verify", "peterson", str(g_path), "--ledger"])
    assert code == 0
    spots = [
        (side, i, key)
        for side in ("ordered", "unordered")
        for i in range(len(single["results"][side]["terms"]))
        for key in ("alpha1", "alpha2")
    ]
    for side, i, key in spots:
        bad = json.loads(json.dumps(single))
        bad["results"][side]["terms"][i][key] += 1
        path.write_text(json.dumps(bad))
        assert _cli(["verify", "ledger", str(path)])[0] == 1, (side, i, key)

    # sampled single corruptions inside the full sweep certificate
    rng = random.Random(77)
    for _ in range(5):
        bad = json.loads(json.dumps(cert))
        nonempty = [e for e in bad["results"]["graphs"] if e["peterson"]["ordered"]["terms"]]
        entry = rng.choice(nonempty)
        term = rng.choice(entry["peterson"]["ordered"]["terms"])
        term[rng.choice(["alpha1", "alpha2"])] += 1
        path.write_text(json.dumps(bad))
        assert _cli(["verify", "ledger", str(path)])[0] == 1
