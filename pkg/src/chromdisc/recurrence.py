"""Ledgers for the deletion-contraction and partition recurrences of alpha.

``peterson_rhs`` itemizes ``sum alpha(G1) alpha(G2) e(G1, G2)`` over every
ordered partition so that each summand can be audited; ``audit_ledger``
replays a serialized ledger against its graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .chromatic import alpha_from_polynomial
from .errors import InvariantViolation
from .graph import (
    Edge,
    Graph,
    OrderedPartition,
    contract_edge,
    delete_edge,
    induced_subgraph,
    is_connected,
    ordered_partitions,
    partition_from_mask,
    straddling_edges,
    unordered_partitions,
)
from .orientations import build_A, build_B, phi, psi, with_unique_sink
from .spanning import (
    EdgeOrder,
    build_A_trees,
    build_B_trees,
    lex_order,
    phi_tree,
    psi_tree,
    sigma_for_max,
    trees_without_broken_circuits,
)

METHODS = ("poly", "orientations", "trees")


def alpha_orientations(g: Graph) -> int:
    """Number of acyclic orientations whose unique sink is vertex 0."""
    if g.n < 1:
        raise ValueError("alpha is defined for graphs with at least one vertex")
    return sum(1 for _ in with_unique_sink(g, 0))


def alpha_trees(g: Graph, sigma: EdgeOrder | None = None) -> int:
    """Number of spanning trees free of broken circuits (lexicographic order by default)."""
    if g.n < 1:
        raise ValueError("alpha is defined for graphs with at least one vertex")
    if not is_connected(g):
        return 0
    return sum(1 for _ in trees_without_broken_circuits(g, sigma or lex_order(g)))


BACKENDS: dict[str, Callable[[Graph], int]] = {
    "poly": alpha_from_polynomial,
    "orientations": alpha_orientations,
    "trees": alpha_trees,
}


def alpha(g: Graph, method: str = "poly") -> int:
    """alpha(G) by one backend, or by all three (``"all"``) with an agreement check."""
    if method == "all":
        values = {m: BACKENDS[m](g) for m in METHODS}
        if len(set(values.values())) != 1:
            raise InvariantViolation(f"alpha backends disagree on {g}: {values}")
        return values["poly"]
    try:
        return BACKENDS[method](g)
    except KeyError:
        raise ValueError(f"unknown alpha method {method!r}; expected one of {METHODS + ('all',)}") from None


class SubgraphAlphas:
    """alpha of induced subgraphs of one graph, memoized by vertex bitmask.

    With ``method="all"`` every subgraph is evaluated by all three backends
    and any disagreement is recorded instead of raised.
    """

    def __init__(self, g: Graph, method: str = "poly"):
        if method not in METHODS and method != "all":
            raise ValueError(f"unknown alpha method {method!r}")
        self.g = g
        self.method = method
        self._cache: dict[int, int] = {}
        self.disagreements: list[dict] = []

    def __call__(self, vs) -> int:
        mask = sum(1 << v for v in vs)
        if mask not in self._cache:
            sub = self.g if mask == (1 << self.g.n) - 1 else induced_subgraph(self.g, vs)[0]
            if self.method == "all":
                values = {m: BACKENDS[m](sub) for m in METHODS}
                if len(set(values.values())) != 1:
                    self.disagreements.append({"vertices": sorted(vs), "values": values})
                self._cache[mask] = values["poly"]
            else:
                self._cache[mask] = BACKENDS[self.method](sub)
        return self._cache[mask]

    def whole(self) -> int:
        return self(range(self.g.n)) if self.g.n else 0


@dataclass(frozen=True)
class LedgerTerm:
    partition: OrderedPartition
    alpha1: int
    alpha2: int
    straddling: int

    @property
    def product(self) -> int:
        return self.alpha1 * self.alpha2 * self.straddling

    def to_json(self) -> dict:
        return {
            "mask": self.partition.mask,
            "partition": self.partition.to_json(),
            "alpha1": self.alpha1,
            "alpha2": self.alpha2,
            "straddling": self.straddling,
            "product": self.product,
        }


@dataclass(frozen=True)
class RecurrenceLedger:
    lhs: int
    terms: tuple[LedgerTerm, ...] = field(default=())

    @property
    def rhs(self) -> int:
        return sum(t.product for t in self.terms)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self, with_terms: bool = True) -> dict:
        out = {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}
        if with_terms:
            out["terms"] = [t.to_json() for t in self.terms]
        return out


@dataclass(frozen=True)
class DCReport:
    edge: Edge
    alpha: int
    alpha_deleted: int
    alpha_contracted: int

    @property
    def holds(self) -> bool:
        return self.alpha == self.alpha_deleted + self.alpha_contracted

    def to_json(self) -> dict:
        return {
            "edge": list(self.edge),
            "alpha": self.alpha,
            "alpha_deleted": self.alpha_deleted,
            "alpha_contracted": self.alpha_contracted,
            "holds": self.holds,
        }


@dataclass(frozen=True)
class PetersonReport:
    ordered: RecurrenceLedger
    unordered: RecurrenceLedger
    disagreements: tuple = ()

    @property
    def ordered_is_twice_unordered(self) -> bool:
        return self.ordered.rhs == 2 * self.unordered.rhs

    @property
    def holds(self) -> bool:
        return (
            self.ordered.holds
            and self.unordered.holds
            and self.ordered_is_twice_unordered
            and not self.disagreements
        )

    def to_json(self, with_terms: bool = True) -> dict:
        return {
            "ordered": self.ordered.to_json(with_terms),
            "unordered": self.unordered.to_json(with_terms),
            "ordered_is_twice_unordered": self.ordered_is_twice_unordered,
            "backend_disagreements": list(self.disagreements),
            "holds": self.holds,
        }


def verify_dc(g: Graph, e: Edge, method: str = "poly") -> DCReport:
    """Compare alpha(G) with alpha(G - e) + alpha(G / e)."""
    e = (min(e), max(e))
    deleted = delete_edge(g, e)
    contracted = contract_edge(g, e)
    return DCReport(e, alpha(g, method), alpha(deleted, method), alpha(contracted, method))


def peterson_lhs(g: Graph, method: str = "poly", alphas: SubgraphAlphas | None = None) -> int:
    if not g.edges:
        return 0
    alphas = alphas or SubgraphAlphas(g, method)
    return 2 * g.num_edges * alphas.whole()


def _terms(g: Graph, parts, alphas: SubgraphAlphas) -> tuple[LedgerTerm, ...]:
    terms = []
    for p in parts:
        k = len(straddling_edges(g, p))
        terms.append(LedgerTerm(p, alphas(p.v1), alphas(p.v2), k))
    return tuple(terms)


def peterson_rhs(g: Graph, method: str = "poly", alphas: SubgraphAlphas | None = None) -> RecurrenceLedger:
    """Term-by-term ledger over all ordered partitions, zero terms included."""
    alphas = alphas or SubgraphAlphas(g, method)
    return RecurrenceLedger(peterson_lhs(g, method, alphas), _terms(g, ordered_partitions(g), alphas))


def verify_peterson_unordered(
    g: Graph, method: str = "poly", alphas: SubgraphAlphas | None = None
) -> RecurrenceLedger:
    """``e(G) alpha(G)`` against the sum over unordered partitions."""
    alphas = alphas or SubgraphAlphas(g, method)
    lhs = g.num_edges * alphas.whole() if g.edges else 0
    return RecurrenceLedger(lhs, _terms(g, unordered_partitions(g), alphas))


def verify_peterson(g: Graph, method: str = "poly") -> PetersonReport:
    alphas = SubgraphAlphas(g, method)
    ordered = peterson_rhs(g, method, alphas)
    unordered = verify_peterson_unordered(g, method, alphas)
    return PetersonReport(ordered, unordered, tuple(alphas.disagreements))


def audit_ledger(g: Graph, data: dict, unordered: bool = False) -> list[str]:
    """Replay a serialized ledger against ``g``; return every discrepancy found.

    Each alpha is recomputed from the graph, so corrupting any single value
    (an alpha, a count, a product, or a total) is reported.
    """
    problems = []
    alphas = SubgraphAlphas(g, "poly")
    factor = 1 if unordered else 2
    expected_lhs = factor * g.num_edges * alphas.whole() if g.edges else 0
    if data.get("lhs") != expected_lhs:
        problems.append(f"lhs is {data.get('lhs')}, expected {expected_lhs}")
    parts = list(unordered_partitions(g) if unordered else ordered_partitions(g))
    terms = data.get("terms")
    if terms is None:
        return problems + ["ledger has no terms"]
    if [t.get("mask") for t in terms] != [p.mask for p in parts]:
        problems.append("ledger partitions do not match the graph's partitions")
        return problems
    total = 0
    for t in terms:
        p = partition_from_mask(g.n, t["mask"])
        if t.get("partition") != p.to_json():
            problems.append(f"mask {t['mask']}: partition listing does not match mask")
        want = {"alpha1": alphas(p.v1), "alpha2": alphas(p.v2), "straddling": len(straddling_edges(g, p))}
        for key, value in want.items():
            if t.get(key) != value:
                problems.append(f"mask {t['mask']}: {key} is {t.get(key)}, expected {value}")
        if t.get("product") != t.get("alpha1", 0) * t.get("alpha2", 0) * t.get("straddling", 0):
            problems.append(f"mask {t['mask']}: product does not match its factors")
        total += t.get("product", 0)
    if data.get("rhs") != total:
        problems.append(f"rhs is {data.get('rhs')}, terms sum to {total}")
    if data.get("holds") is not (data.get("lhs") == data.get("rhs")):
        problems.append("holds flag inconsistent with lhs and rhs")
    return problems


def certify_orientation_bijection(g: Graph, roundtrip: bool = True) -> dict:
    """Build both sets, count them, and check that phi and psi are mutually inverse."""
    A = list(build_A(g))
    B = list(build_B(g))
    alphas = SubgraphAlphas(g)
    out = {
        "size_A": len(A),
        "size_B": len(B),
        "expected_A": peterson_lhs(g, alphas=alphas),
        "expected_B": peterson_rhs(g, alphas=alphas).rhs,
    }
    out["counts_ok"] = out["size_A"] == out["expected_A"] and out["size_B"] == out["expected_B"]
    if roundtrip:
        images = [phi(g, a) for a in A]
        out["psi_phi_identity"] = all(psi(g, b) == a for a, b in zip(A, images))
        out["phi_psi_identity"] = all(phi(g, psi(g, b)) == b for b in B)
        out["phi_onto_B"] = set(images) == set(B)
        out["roundtrip_ok"] = out["psi_phi_identity"] and out["phi_psi_identity"] and out["phi_onto_B"]
    out["holds"] = out["counts_ok"] and out.get("roundtrip_ok", True)
    return out


def certify_tree_bijection(g: Graph, orders: dict[Edge, EdgeOrder] | None = None, roundtrip: bool = True) -> dict:
    """Tree version of :func:`certify_orientation_bijection` (unordered partitions)."""
    A = list(build_A_trees(g, orders))
    B = list(build_B_trees(g, orders))
    alphas = SubgraphAlphas(g)
    out = {
        "size_A": len(A),
        "size_B": len(B),
        "expected_A": g.num_edges * alphas.whole() if g.edges else 0,
        "expected_B": verify_peterson_unordered(g, alphas=alphas).rhs,
    }
    out["counts_ok"] = out["size_A"] == out["expected_A"] and out["size_B"] == out["expected_B"]
    if roundtrip:

        def order(e: Edge) -> EdgeOrder:
            return orders[e] if orders is not None else sigma_for_max(g, e)

        images = [phi_tree(g, e, t, order(e)) for e, t in A]
        out["psi_phi_identity"] = all(psi_tree(g, b, order(b.edge)) == a for a, b in zip(A, images))
        out["phi_psi_identity"] = all(phi_tree(g, *psi_tree(g, b, order(b.edge)), order(b.edge)) == b for b in B)
        out["phi_onto_B"] = set(images) == set(B)
        out["roundtrip_ok"] = out["psi_phi_identity"] and out["phi_psi_identity"] and out["phi_onto_B"]
    out["holds"] = out["counts_ok"] and out.get("roundtrip_ok", True)
    return out
