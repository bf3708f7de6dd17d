"""Circuits, broken circuits, and spanning trees free of broken circuits.

Fix a total order on the edges.  A broken circuit is a circuit with its
largest edge removed; for any order, the spanning trees containing no broken
circuit number ``alpha(G)``.  With the order ``sigma_e`` that ranks ``e``
last, every such tree contains ``e``, and cutting ``e`` splits the tree into
two broken-circuit-free trees of the induced halves (``phi_tree``);
rejoining them through ``e`` inverts the split (``psi_tree``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Mapping, NamedTuple

from .errors import Disconnected, EdgeNotPresent, InvariantViolation, SizeGuard
from .graph import Edge, Graph, OrderedPartition, induced_subgraph, is_connected, straddling_edges, unordered_partitions

MAX_CIRCUIT_N = 12
MAX_TREE_N = 12

SpanningTree = frozenset  # frozenset[Edge]


@dataclass(frozen=True)
class EdgeOrder:
    """A total order on edges; the last element is the maximum."""

    sequence: tuple[Edge, ...]

    @cached_property
    def rank(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.sequence)}

    @property
    def max_edge(self) -> Edge | None:
        return self.sequence[-1] if self.sequence else None

    def restrict(self, edges) -> EdgeOrder:
        keep = set(edges)
        return EdgeOrder(tuple(e for e in self.sequence if e in keep))

    def is_valid_for(self, g: Graph) -> bool:
        return len(self.sequence) == g.num_edges and set(self.sequence) == g.edge_set


class TreePairA(NamedTuple):
    edge: Edge
    tree: frozenset


@dataclass(frozen=True)
class TreePairB:
    """``(e, {T1, T2})``; the side holding the smallest vertex is stored first."""

    partition: OrderedPartition
    edge: Edge
    t1: frozenset
    t2: frozenset

    def to_json(self) -> dict:
        return {
            "partition": self.partition.to_json(),
            "edge": list(self.edge),
            "tree1": [list(e) for e in sorted(self.t1)],
            "tree2": [list(e) for e in sorted(self.t2)],
        }


def lex_order(g: Graph) -> EdgeOrder:
    return EdgeOrder(g.edges)


def sigma_for_max(g: Graph, e: Edge) -> EdgeOrder:
    """Lexicographic order on the other edges, then ``e`` last."""
    e = (min(e), max(e))
    if e not in g.edge_set:
        raise EdgeNotPresent(f"{e} is not an edge of {g}")
    return EdgeOrder(tuple(f for f in g.edges if f != e) + (e,))


def random_edge_order(g: Graph, rng: random.Random, max_edge: Edge | None = None) -> EdgeOrder:
    seq = list(g.edges)
    rng.shuffle(seq)
    if max_edge is not None:
        seq.remove(max_edge)
        seq.append(max_edge)
    return EdgeOrder(tuple(seq))


@lru_cache(maxsize=4096)
def _circuits(g: Graph) -> tuple[frozenset, ...]:
    found = []
    for s in g.vertices:
        # cycles whose smallest vertex is s, each direction counted once
        path = [s]
        on_path = {s}

        def dfs(x: int):
            for y in g.adjacency[x]:
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    cyc = path + [s]
                    found.append(frozenset((min(a, b), max(a, b)) for a, b in zip(cyc, cyc[1:])))
                elif y > s and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    dfs(y)
                    path.pop()
                    on_path.discard(y)

        dfs(s)
    return tuple(sorted(found, key=lambda c: (len(c), sorted(c))))


def circuits(g: Graph, max_n: int = MAX_CIRCUIT_N) -> Iterator[frozenset]:
    """Edge set of every simple cycle, once each, ordered by (size, sorted edges)."""
    if g.n > max_n:
        raise SizeGuard(f"circuit enumeration for n={g.n} exceeds cap n<={max_n}")
    return iter(_circuits(g))


def broken_circuits(g: Graph, sigma: EdgeOrder) -> set[frozenset]:
    if not sigma.is_valid_for(g):
        raise InvariantViolation("edge order does not list every edge of the graph exactly once")
    rank = sigma.rank
    return {c - {max(c, key=rank.__getitem__)} for c in circuits(g)}


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def is_spanning_tree(g: Graph, t) -> bool:
    if len(t) != max(g.n - 1, 0) or not set(t) <= g.edge_set:
        return False
    parent = list(range(g.n))
    for a, b in t:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def _connects(n: int, edges) -> bool:
    parent = list(range(n))
    parts = n
    for a, b in edges:
        ra, rb = _find(parent, a), _find(parent, b)
        if ra != rb:
            parent[ra] = rb
            parts -= 1
    return parts <= 1


def spanning_trees(g: Graph, max_n: int = MAX_TREE_N) -> Iterator[frozenset]:
    """Every spanning tree of a connected graph, once each.

    Include/exclude search over ``g.edges``: an edge is included when it
    joins two components of the partial forest, and excluded only when the
    chosen plus remaining edges still connect the graph, so every leaf of
    the search is a tree.
    """
    if g.n > max_n:
        raise SizeGuard(f"spanning tree enumeration for n={g.n} exceeds cap n<={max_n}")
    if not is_connected(g):
        raise Disconnected("spanning trees need a connected graph")
    edges = g.edges
    m, need = len(edges), max(g.n - 1, 0)
    chosen: list[Edge] = []

    def walk(i: int, comp: tuple[int, ...]) -> Iterator[frozenset]:
        if len(chosen) == need:
            yield frozenset(chosen)
            return
        if m - i < need - len(chosen):
            return
        a, b = edges[i]
        ca, cb = comp[a], comp[b]
        if ca != cb:
            chosen.append(edges[i])
            yield from walk(i + 1, tuple(ca if c == cb else c for c in comp))
            chosen.pop()
        if _connects(g.n, chosen + list(edges[i + 1 :])):
            yield from walk(i + 1, comp)

    yield from walk(0, tuple(range(g.n)))


def trees_without_broken_circuits(g: Graph, sigma: EdgeOrder, max_n: int = MAX_TREE_N) -> Iterator[frozenset]:
    bcs = broken_circuits(g, sigma)
    for t in spanning_trees(g, max_n):
        if not any(bc <= t for bc in bcs):
            yield t


def nbc_trees_on(g: Graph, vs, sigma: EdgeOrder) -> list[frozenset]:
    """Broken-circuit-free spanning trees of ``G[vs]`` under ``sigma`` restricted, in ``g``'s labels.

    Empty when ``G[vs]`` is disconnected.
    """
    sub, label = induced_subgraph(g, vs)
    if not is_connected(sub):
        return []
    back = {new: old for old, new in label.items()}
    local = EdgeOrder(
        tuple((label[a], label[b]) for a, b in sigma.sequence if a in label and b in label)
    )
    return [
        frozenset((back[a], back[b]) for a, b in t)
        for t in trees_without_broken_circuits(sub, local)
    ]


def _order_for(g: Graph, e: Edge, orders: Mapping[Edge, EdgeOrder] | None) -> EdgeOrder:
    if orders is None:
        return sigma_for_max(g, e)
    sigma = orders[e]
    if sigma.max_edge != e or not sigma.is_valid_for(g):
        raise InvariantViolation(f"order supplied for {e} does not end with {e}")
    return sigma


def build_A_trees(g: Graph, orders: Mapping[Edge, EdgeOrder] | None = None) -> Iterator[TreePairA]:
    """Pairs ``(e, T)`` with ``T`` broken-circuit free under the order ranking ``e`` last."""
    if not is_connected(g):
        return
    for e in g.edges:
        for t in trees_without_broken_circuits(g, _order_for(g, e, orders)):
            yield TreePairA(e, t)


def build_B_trees(g: Graph, orders: Mapping[Edge, EdgeOrder] | None = None) -> Iterator[TreePairB]:
    """All ``(e, {T1, T2})`` over unordered partitions, ordered by (mask, edge, T1, T2)."""
    for part in unordered_partitions(g):
        for e in straddling_edges(g, part):
            sigma = _order_for(g, e, orders)
            ones = nbc_trees_on(g, part.v1, sigma)
            if not ones:
                continue
            twos = nbc_trees_on(g, part.v2, sigma)
            for t1 in ones:
                for t2 in twos:
                    yield TreePairB(part, e, t1, t2)


def _is_nbc_tree_on(g: Graph, vs: frozenset[int], t: frozenset, sigma: EdgeOrder) -> bool:
    sub, label = induced_subgraph(g, vs)
    if any(a not in label or b not in label for a, b in t):
        return False
    local_t = frozenset((label[a], label[b]) for a, b in t)
    if not is_spanning_tree(sub, local_t):
        return False
    local = EdgeOrder(tuple((label[a], label[b]) for a, b in sigma.sequence if a in label and b in label))
    return not any(bc <= local_t for bc in broken_circuits(sub, local))


def check_tree_pair_a(g: Graph, e: Edge, t: frozenset, sigma: EdgeOrder) -> None:
    if not is_spanning_tree(g, t):
        raise InvariantViolation("not a spanning tree of the graph")
    if e not in t:
        raise InvariantViolation(f"tree does not contain the maximum edge {e}")
    if any(bc <= t for bc in broken_circuits(g, sigma)):
        raise InvariantViolation("tree contains a broken circuit")


def check_tree_pair_b(g: Graph, b: TreePairB, sigma: EdgeOrder) -> None:
    part = b.partition
    if not part.is_valid_for(g) or 0 not in part.v1:
        raise InvariantViolation("not a canonical unordered partition (vertex 0 must be on the first side)")
    if b.edge not in g.edge_set or (b.edge[0] in part.v1) == (b.edge[1] in part.v1):
        raise InvariantViolation(f"{b.edge} does not straddle the partition")
    for vs, t in ((part.v1, b.t1), (part.v2, b.t2)):
        if not _is_nbc_tree_on(g, vs, t, sigma):
            raise InvariantViolation("side tree is not a broken-circuit-free spanning tree of its side")


def phi_tree(
    g: Graph, e: Edge, t: frozenset, sigma: EdgeOrder | None = None, check: bool = True
) -> TreePairB:
    """Cut ``e`` out of ``t`` and split along the two resulting subtrees."""
    e = (min(e), max(e))
    if sigma is None:
        sigma = sigma_for_max(g, e)
    if check:
        check_tree_pair_a(g, e, t, sigma)
    rest = t - {e}
    parent = list(range(g.n))
    for a, b in rest:
        parent[_find(parent, a)] = _find(parent, b)
    root0 = _find(parent, 0)
    v1 = frozenset(v for v in g.vertices if _find(parent, v) == root0)
    v2 = frozenset(g.vertices) - v1
    t1 = frozenset(f for f in rest if f[0] in v1)
    return TreePairB(OrderedPartition(v1, v2), e, t1, rest - t1)


def psi_tree(g: Graph, b: TreePairB, sigma: EdgeOrder | None = None, check: bool = True) -> TreePairA:
    """Join the two side trees through the straddling edge."""
    if sigma is None:
        sigma = sigma_for_max(g, b.edge)
    if check:
        check_tree_pair_b(g, b, sigma)
    return TreePairA(b.edge, b.t1 | b.t2 | {b.edge})
