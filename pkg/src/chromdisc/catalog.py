"""Small-graph catalogs: canonical forms, exhaustive generation, random graphs."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from .errors import SizeGuard
from .graph import Graph, is_connected, new_graph

MAX_CATALOG_N = 8


def _refined_colors(g: Graph) -> list[int]:
    # Iterated degree refinement; colors are isomorphism-invariant because
    # they are ranks of sorted signatures.
    colors = [0] * g.n
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in g.adjacency[v]))) for v in g.vertices]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Graph) -> Graph:
    """Lexicographically least relabeling among those compatible with refined colors.

    Exact isomorphism invariant; cost is the product of factorials of the
    color class sizes, fine for the n <= 8 range it is used on.
    """
    colors = _refined_colors(g)
    classes = [[v for v in g.vertices if colors[v] == c] for c in sorted(set(colors))]
    best = None
    for choice in itertools.product(*(itertools.permutations(cls) for cls in classes)):
        order = [v for block in choice for v in block]
        pos = [0] * g.n
        for i, v in enumerate(order):
            pos[v] = i
        es = tuple(sorted((min(pos[a], pos[b]), max(pos[a], pos[b])) for a, b in g.edges))
        if best is None or es < best:
            best = es
    return Graph(g.n, best if best is not None else ())


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.num_edges == h.num_edges and canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _graphs_on(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    seen = set()
    for base in _graphs_on(n - 1):
        for k in range(n):
            for nbrs in itertools.combinations(range(n - 1), k):
                g = new_graph(n, base.edges + tuple((x, n - 1) for x in nbrs))
                seen.add(canonical_form(g))
    return tuple(sorted(seen, key=lambda h: (h.num_edges, h.edges)))


def all_graphs(n: int, connected: bool = False, max_n: int = MAX_CATALOG_N) -> list[Graph]:
    """One representative of every isomorphism class of graphs on ``n`` vertices."""
    if n > max_n:
        raise SizeGuard(f"exhaustive catalog for n={n} exceeds cap n<={max_n}")
    gs = _graphs_on(n)
    if connected:
        return [g for g in gs if is_connected(g)]
    return list(gs)


def graphs_up_to(max_vertices: int, connected: bool = False, min_vertices: int = 1) -> list[Graph]:
    out = []
    for n in range(min_vertices, max_vertices + 1):
        out.extend(all_graphs(n, connected=connected))
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return new_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    while True:
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g
