"""Chromatic polynomial by deletion-contraction, and the chromatic discriminant."""

from __future__ import annotations

import itertools

from .errors import SizeGuard
from .graph import Graph, connected_components, contract_edge, delete_edge, induced_subgraph
from .polynomial import Polynomial

MAX_CHROMATIC_N = 15
MAX_COLORING_WORK = 10**7

# Exact-match memo: (n, sorted degree sequence, edges) of a compacted graph.
# Entries are immutable and identical for every writer, so sharing is safe.
_memo: dict[tuple, Polynomial] = {}


def _key(g: Graph) -> tuple:
    return (g.n, tuple(sorted(g.degree(v) for v in g.vertices)), g.edges)


def _chi(g: Graph) -> Polynomial:
    if not g.edges:
        return Polynomial.monomial(g.n)
    key = _key(g)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    comps = connected_components(g)
    if len(comps) > 1:
        result = Polynomial([1])
        for comp in comps:
            result = result * _chi(induced_subgraph(g, comp)[0])
    else:
        pivot = g.edges[0]
        result = _chi(delete_edge(g, pivot)) - _chi(contract_edge(g, pivot))
    _memo[key] = result
    return result


def chromatic_polynomial(g: Graph, max_n: int = MAX_CHROMATIC_N) -> Polynomial:
    """``chi(G, q)`` with ``g.n + 1`` stored coefficients, lowest degree first."""
    if g.n > max_n:
        raise SizeGuard(f"chromatic polynomial for n={g.n} exceeds cap n<={max_n}")
    p = _chi(g)
    return Polynomial(p[i] for i in range(g.n + 1))


def alpha_from_polynomial(g: Graph, max_n: int = MAX_CHROMATIC_N) -> int:
    """Absolute value of the linear coefficient of the chromatic polynomial."""
    if g.n < 1:
        raise ValueError("alpha is defined for graphs with at least one vertex")
    return abs(chromatic_polynomial(g, max_n)[1])


def count_proper_colorings(g: Graph, q: int, max_work: int = MAX_COLORING_WORK) -> int:
    """Count colorings ``V -> {1..q}`` with distinct colors on adjacent vertices.

    Tries every one of the ``q**n`` assignments; meant as an oracle.
    """
    if q < 0:
        raise ValueError("number of colors must be nonnegative")
    if q**g.n > max_work:
        raise SizeGuard(f"{q}**{g.n} assignments exceeds work cap {max_work}")
    return sum(
        1
        for colors in itertools.product(range(q), repeat=g.n)
        if all(colors[a] != colors[b] for a, b in g.edges)
    )


def clear_cache() -> None:
    _memo.clear()
