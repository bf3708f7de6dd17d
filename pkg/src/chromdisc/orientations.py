"""Acyclic orientations, unique sinks, reachable sets, and the split/join bijection.

The bijection pairs

* ``A``: pairs ``(arrow, lam)`` where ``arrow`` is an oriented edge of ``G``
  and ``lam`` is an acyclic orientation of ``G`` whose unique sink is the
  arrow's head (``|A| = 2 e(G) alpha(G)``), with
* ``B``: triples ``(partition, e, lam1, lam2)`` where ``e`` straddles the
  ordered partition ``(V1, V2)`` joining ``p1 in V1`` to ``p2 in V2`` and
  ``lam_i`` is an acyclic orientation of ``G[V_i]`` with unique sink ``p_i``.

``phi`` splits ``lam`` along the set of vertices that reach the arrow's tail;
``psi`` glues the halves back, pointing every straddling edge from ``V1``
into ``V2``.  Orientations are stored as arc sets in the labels of the graph
they were taken from, so restrictions to induced subgraphs keep the parent's
labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import InvariantViolation, SizeGuard
from .graph import Edge, Graph, OrderedPartition, induced_subgraph, ordered_partitions, straddling_edges

MAX_ORIENTATION_EDGES = 24


class OrientedEdge(NamedTuple):
    tail: int
    head: int

    @property
    def edge(self) -> Edge:
        return (min(self), max(self))


@dataclass(frozen=True)
class AcyclicOrientation:
    arcs: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, arcs: Iterable[tuple[int, int]]) -> AcyclicOrientation:
        return cls(frozenset((a, b) for a, b in arcs))

    def restrict(self, vs: frozenset[int]) -> AcyclicOrientation:
        return AcyclicOrientation(frozenset(a for a in self.arcs if a[0] in vs and a[1] in vs))

    def to_json(self) -> list[list[int]]:
        return [list(a) for a in sorted(self.arcs)]


@dataclass(frozen=True)
class PairA:
    arrow: OrientedEdge
    lam: AcyclicOrientation

    def to_json(self) -> dict:
        return {"arrow": list(self.arrow), "lambda": self.lam.to_json()}


@dataclass(frozen=True)
class TripleB:
    partition: OrderedPartition
    edge: Edge
    lam1: AcyclicOrientation
    lam2: AcyclicOrientation

    @property
    def p1(self) -> int:
        return self.edge[0] if self.edge[0] in self.partition.v1 else self.edge[1]

    @property
    def p2(self) -> int:
        return self.edge[1] if self.edge[0] in self.partition.v1 else self.edge[0]

    def to_json(self) -> dict:
        return {
            "partition": self.partition.to_json(),
            "edge": list(self.edge),
            "lambda1": self.lam1.to_json(),
            "lambda2": self.lam2.to_json(),
        }


def _successors(n: int, lam: AcyclicOrientation) -> list[list[int]]:
    succ: list[list[int]] = [[] for _ in range(n)]
    for a, b in lam.arcs:
        succ[a].append(b)
    return succ


def _reaches(succ: list[list[int]], src: int, dst: int) -> bool:
    stack, seen = [src], {src}
    while stack:
        x = stack.pop()
        if x == dst:
            return True
        for y in succ[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


def enumerate_all(g: Graph, max_edges: int = MAX_ORIENTATION_EDGES) -> Iterator[AcyclicOrientation]:
    """Every acyclic orientation of ``g`` exactly once.

    Backtracks over ``g.edges`` in order, trying ``u -> v`` before ``v -> u``
    and rejecting an arc as soon as it closes a directed cycle.
    """
    if g.num_edges > max_edges:
        raise SizeGuard(f"e(G)={g.num_edges} exceeds orientation cap {max_edges}")
    succ: list[list[int]] = [[] for _ in range(g.n)]
    arcs: list[tuple[int, int]] = []
    m = g.num_edges

    def extend(i: int) -> Iterator[AcyclicOrientation]:
        if i == m:
            yield AcyclicOrientation(frozenset(arcs))
            return
        u, v = g.edges[i]
        for a, b in ((u, v), (v, u)):
            # a -> b closes a cycle iff b already reaches a
            if _reaches(succ, b, a):
                continue
            succ[a].append(b)
            arcs.append((a, b))
            yield from extend(i + 1)
            arcs.pop()
            succ[a].pop()

    yield from extend(0)


def is_acyclic_orientation(g: Graph, lam: AcyclicOrientation) -> bool:
    """Whether ``lam`` orients every edge of ``g`` exactly once with no directed cycle."""
    if len(lam.arcs) != g.num_edges:
        return False
    if {(min(a), max(a)) for a in lam.arcs} != g.edge_set:
        return False
    # Kahn's algorithm
    indeg = [0] * g.n
    succ = _successors(g.n, lam)
    for _, b in lam.arcs:
        indeg[b] += 1
    ready = [v for v in g.vertices if indeg[v] == 0]
    done = 0
    while ready:
        x = ready.pop()
        done += 1
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    return done == g.n


def sinks(g: Graph, lam: AcyclicOrientation) -> frozenset[int]:
    """Vertices with no outgoing arc; isolated vertices are sinks."""
    tails = {a for a, _ in lam.arcs}
    return frozenset(v for v in g.vertices if v not in tails)


def with_unique_sink(g: Graph, q: int, max_edges: int = MAX_ORIENTATION_EDGES) -> Iterator[AcyclicOrientation]:
    if not 0 <= q < g.n:
        raise ValueError(f"vertex {q} not in graph")
    target = frozenset([q])
    for lam in enumerate_all(g, max_edges):
        if sinks(g, lam) == target:
            yield lam


def reachable_set(g: Graph, lam: AcyclicOrientation, q: int) -> frozenset[int]:
    """All ``p`` with a directed path ``p -> ... -> q`` in ``lam``; always contains ``q``."""
    pred: list[list[int]] = [[] for _ in range(g.n)]
    for a, b in lam.arcs:
        pred[b].append(a)
    seen = {q}
    stack = [q]
    while stack:
        x = stack.pop()
        for y in pred[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def unique_sink_orientations_on(
    g: Graph, vs: Iterable[int], sink: int, max_edges: int = MAX_ORIENTATION_EDGES
) -> list[AcyclicOrientation]:
    """Orientations of ``G[vs]`` with unique sink ``sink``, in ``g``'s labels."""
    sub, label = induced_subgraph(g, vs)
    back = {new: old for old, new in label.items()}
    return [
        AcyclicOrientation(frozenset((back[a], back[b]) for a, b in lam.arcs))
        for lam in with_unique_sink(sub, label[sink], max_edges)
    ]


def build_A(g: Graph, max_edges: int = MAX_ORIENTATION_EDGES) -> Iterator[PairA]:
    """All pairs (oriented edge, orientation whose unique sink is the edge's head)."""
    by_sink: dict[int, list[AcyclicOrientation]] = {}
    if g.edges:
        all_lams = list(enumerate_all(g, max_edges))
        for v in g.vertices:
            by_sink[v] = [lam for lam in all_lams if sinks(g, lam) == {v}]
    for u, v in g.edges:
        for arrow in (OrientedEdge(u, v), OrientedEdge(v, u)):
            for lam in by_sink[arrow.head]:
                yield PairA(arrow, lam)


def build_B(g: Graph, max_edges: int = MAX_ORIENTATION_EDGES) -> Iterator[TripleB]:
    """All triples over every ordered partition, ordered by (mask, edge, lam1, lam2)."""
    cache: dict[tuple[frozenset[int], int], list[AcyclicOrientation]] = {}

    def lams(vs: frozenset[int], sink: int) -> list[AcyclicOrientation]:
        key = (vs, sink)
        if key not in cache:
            cache[key] = unique_sink_orientations_on(g, vs, sink, max_edges)
        return cache[key]

    for part in ordered_partitions(g):
        for e in straddling_edges(g, part):
            p1, p2 = (e[0], e[1]) if e[0] in part.v1 else (e[1], e[0])
            for lam1 in lams(part.v1, p1):
                for lam2 in lams(part.v2, p2):
                    yield TripleB(part, e, lam1, lam2)


def check_pair_a(g: Graph, a: PairA) -> None:
    if not g.has_edge(*a.arrow) or a.arrow.tail == a.arrow.head:
        raise InvariantViolation(f"{a.arrow} is not an oriented edge of the graph")
    if not is_acyclic_orientation(g, a.lam):
        raise InvariantViolation("lambda is not an acyclic orientation of the graph")
    if a.arrow not in a.lam.arcs:
        # unique sink at head forces the arc tail -> head
        raise InvariantViolation(f"lambda does not orient {a.arrow.edge} as {a.arrow.tail}->{a.arrow.head}")
    if sinks(g, a.lam) != {a.arrow.head}:
        raise InvariantViolation(f"head {a.arrow.head} is not the unique sink of lambda")


def check_triple_b(g: Graph, b: TripleB) -> None:
    part = b.partition
    if not part.is_valid_for(g):
        raise InvariantViolation("not an ordered partition of the graph's vertices")
    if b.edge not in g.edge_set or (b.edge[0] in part.v1) == (b.edge[1] in part.v1):
        raise InvariantViolation(f"{b.edge} does not straddle the partition")
    for vs, lam, sink in ((part.v1, b.lam1, b.p1), (part.v2, b.lam2, b.p2)):
        sub, label = induced_subgraph(g, vs)
        if any(x not in label or y not in label for x, y in lam.arcs):
            raise InvariantViolation("orientation has arcs outside its side of the partition")
        local = AcyclicOrientation(frozenset((label[x], label[y]) for x, y in lam.arcs))
        if not is_acyclic_orientation(sub, local):
            raise InvariantViolation("side orientation is not an acyclic orientation of the induced subgraph")
        if sinks(sub, local) != {label[sink]}:
            raise InvariantViolation(f"vertex {sink} is not the unique sink of its side")


def phi(g: Graph, a: PairA, check: bool = True) -> TripleB:
    """Split along the vertices that reach the tail of the marked edge."""
    if check:
        check_pair_a(g, a)
    p, _ = a.arrow
    v1 = reachable_set(g, a.lam, p)
    v2 = frozenset(g.vertices) - v1
    return TripleB(OrderedPartition(v1, v2), a.arrow.edge, a.lam.restrict(v1), a.lam.restrict(v2))


def psi(g: Graph, b: TripleB, check: bool = True) -> PairA:
    """Glue both halves and point every straddling edge from the first side to the second."""
    if check:
        check_triple_b(g, b)
    v1 = b.partition.v1
    cross = ((x, y) if x in v1 else (y, x) for x, y in straddling_edges(g, b.partition))
    lam = AcyclicOrientation(b.lam1.arcs | b.lam2.arcs | frozenset(cross))
    return PairA(OrientedEdge(b.p1, b.p2), lam)
