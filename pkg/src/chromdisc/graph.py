"""Immutable simple graphs on the vertex labels ``0..n-1``.

Every operation returns a new :class:`Graph`; operations that change the
vertex set also return (or use) an explicit old->new label map so results
can be reported in the labels of the original graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import EdgeNotPresent, EmptyVertexSet, LoopEdge, SizeGuard, VertexOutOfRange

Edge = tuple[int, int]

MAX_PARTITION_N = 20


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to ``(min, max)``."""
    if u == v:
        raise LoopEdge(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise VertexOutOfRange(f"negative vertex count {self.n}")
        prev = None
        for u, v in self.edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise VertexOutOfRange(f"edge ({u}, {v}) not normalized within 0..{self.n - 1}")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be strictly increasing")
            prev = (u, v)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


@dataclass(frozen=True)
class OrderedPartition:
    """An ordered pair ``(v1, v2)`` of nonempty, disjoint, covering vertex sets."""

    v1: frozenset[int]
    v2: frozenset[int]

    @property
    def mask(self) -> int:
        return sum(1 << v for v in self.v1)

    def swapped(self) -> OrderedPartition:
        return OrderedPartition(self.v2, self.v1)

    def is_valid_for(self, g: Graph) -> bool:
        return (
            bool(self.v1)
            and bool(self.v2)
            and not (self.v1 & self.v2)
            and (self.v1 | self.v2) == frozenset(g.vertices)
        )

    def to_json(self) -> list[list[int]]:
        return [sorted(self.v1), sorted(self.v2)]


def new_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph, normalizing each pair to ``u < v`` and dropping duplicates."""
    es = set()
    for u, v in edge_list:
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"vertex {x} not in 0..{n - 1}")
        es.add(edge(u, v))
    return Graph(n, tuple(sorted(es)))


def _require_edge(g: Graph, e: Edge) -> Edge:
    e = (min(e), max(e))
    if e not in g.edge_set:
        raise EdgeNotPresent(f"{e} is not an edge of {g}")
    return e


def delete_edge(g: Graph, e: Edge) -> Graph:
    e = _require_edge(g, e)
    return Graph(g.n, tuple(f for f in g.edges if f != e))


def contract_edge(g: Graph, e: Edge) -> Graph:
    """Identify the ends of ``e``; the merged vertex keeps ``min(u, v)``.

    Loops are dropped and parallel edges merged.  Labels above ``max(u, v)``
    shift down by one so the result is again labeled ``0..n-2``.
    """
    u, v = _require_edge(g, e)

    def relabel(x: int) -> int:
        if x == v:
            x = u
        return x - 1 if x > v else x

    es = set()
    for a, b in g.edges:
        a, b = relabel(a), relabel(b)
        if a != b:
            es.add(edge(a, b))
    return Graph(g.n - 1, tuple(sorted(es)))


def induced_subgraph(g: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vs`` with its order-preserving old->new label map."""
    keep = sorted(set(vs))
    if not keep:
        raise EmptyVertexSet("induced subgraph needs at least one vertex")
    for x in keep:
        if not 0 <= x < g.n:
            raise VertexOutOfRange(f"vertex {x} not in 0..{g.n - 1}")
    label = {old: new for new, old in enumerate(keep)}
    es = tuple(sorted((label[a], label[b]) for a, b in g.edges if a in label and b in label))
    return Graph(len(keep), es), label


def straddling_edges(g: Graph, p: OrderedPartition) -> list[Edge]:
    """Edges with exactly one endpoint in ``p.v1``, in lexicographic order."""
    return [(a, b) for a, b in g.edges if (a in p.v1) != (b in p.v1)]


def partition_from_mask(n: int, mask: int) -> OrderedPartition:
    v1 = frozenset(v for v in range(n) if mask >> v & 1)
    return OrderedPartition(v1, frozenset(range(n)) - v1)


def ordered_partitions(g: Graph, max_n: int = MAX_PARTITION_N) -> Iterator[OrderedPartition]:
    """Every ordered partition ``(S, V - S)``, with ``S`` walked as an increasing bitmask."""
    if g.n > max_n:
        raise SizeGuard(f"{2 ** g.n - 2} ordered partitions for n={g.n} exceeds cap n<={max_n}")
    for mask in range(1, (1 << g.n) - 1):
        yield partition_from_mask(g.n, mask)


def unordered_partitions(g: Graph, max_n: int = MAX_PARTITION_N) -> Iterator[OrderedPartition]:
    """One representative per unordered partition: the side holding vertex 0 comes first."""
    for p in ordered_partitions(g, max_n):
        if 0 in p.v1:
            yield p


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def relabel(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Apply the vertex permutation ``x -> perm[x]``."""
    return new_graph(g.n, ((perm[a], perm[b]) for a, b in g.edges))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.edges + tuple((a + g.n, b + g.n) for a, b in h.edges))


# Named families, used by tests and the CLI examples.

def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((a, b) for a in range(n) for b in range(a + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, ())
