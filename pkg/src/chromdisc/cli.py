"""Command line interface; every command prints one JSON report on stdout.

Exit status: 0 when every checked identity holds, 1 when some identity
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import platform
import random
import sys
import time
from pathlib import Path

from . import __version__
from .catalog import graphs_up_to
from .chromatic import chromatic_polynomial
from .errors import GraphError
from .formats import GRAPH6_HEADER, parse_edge_list, read_graph6_lines, to_graph6
from .graph import Graph, edge, is_connected, new_graph
from .orientations import build_A, build_B, enumerate_all, phi, sinks
from .recurrence import (
    METHODS,
    alpha,
    alpha_trees,
    audit_ledger,
    certify_orientation_bijection,
    certify_tree_bijection,
    verify_dc,
    verify_peterson,
)
from .spanning import EdgeOrder, build_A_trees, build_B_trees, phi_tree, random_edge_order, sigma_for_max

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _is_graph6(path: str, text: str, fmt: str) -> bool:
    if fmt != "auto":
        return fmt == "graph6"
    return path.endswith((".g6", ".graph6")) or text.lstrip().startswith(GRAPH6_HEADER)


def load_graph(path: str, fmt: str = "auto") -> Graph:
    text = _read_text(path)
    if _is_graph6(path, text, fmt):
        graphs = read_graph6_lines(text)
        if len(graphs) != 1:
            raise UsageError(f"{path}: expected exactly one graph6 line, found {len(graphs)}")
        return graphs[0]
    return parse_edge_list(text)


def describe(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_descriptor(d: dict) -> Graph:
    return new_graph(d["n"], [tuple(e) for e in d["edges"]])


def _alpha_report(g: Graph, method: str, orders: int, seed: int) -> dict:
    """alpha by the requested backends; ``all`` also varies the sink and the edge order."""
    if method != "all":
        return {"method": method, "alpha": alpha(g, method), "agree": True}
    poly = alpha(g, "poly")
    lams = list(enumerate_all(g))
    by_sink = [0] * g.n
    for lam in lams:
        s = sinks(g, lam)
        if len(s) == 1:
            by_sink[next(iter(s))] += 1
    rng = random.Random(seed)
    tree_counts = [alpha_trees(g)]
    tree_counts += [alpha_trees(g, random_edge_order(g, rng)) for _ in range(orders)]
    agree = all(c == poly for c in by_sink) and all(c == poly for c in tree_counts)
    return {
        "method": "all",
        "alpha": poly,
        "poly": poly,
        "orientations": by_sink[0],
        "trees": tree_counts[0],
        "orientations_by_sink": by_sink,
        "trees_random_orders": tree_counts[1:],
        "acyclic_orientations": len(lams),
        "agree": agree,
    }


def cmd_alpha(args) -> tuple[dict, bool]:
    g = load_graph(args.file, args.format)
    res = _alpha_report(g, args.method, args.orders, args.seed)
    return {"input": describe(g), "results": res}, res["agree"]


def cmd_chromatic(args) -> tuple[dict, bool]:
    g = load_graph(args.file, args.format)
    p = chromatic_polynomial(g)
    res = {"coefficients": list(p.coeffs), "polynomial": str(p), "alpha": abs(p[1]) if g.n else 0}
    return {"input": describe(g), "results": res}, True


def cmd_verify_dc(args) -> tuple[dict, bool]:
    g = load_graph(args.file, args.format)
    targets = [edge(*args.edge)] if args.edge else list(g.edges)
    reports = [verify_dc(g, e, args.method) for e in targets]
    ok = all(r.holds for r in reports)
    return {"input": describe(g), "results": {"checks": [r.to_json() for r in reports], "holds": ok}}, ok


def cmd_verify_peterson(args) -> tuple[dict, bool]:
    g = load_graph(args.file, args.format)
    rep = verify_peterson(g, args.method)
    res = {"method": args.method, **rep.to_json(with_terms=args.ledger)}
    return {"input": describe(g), "results": res}, rep.holds


def _audit_peterson_results(g: Graph, res: dict) -> list[str]:
    problems = []
    for key, unordered in (("ordered", False), ("unordered", True)):
        if key not in res:
            problems.append(f"missing {key} ledger")
            continue
        problems += [f"{key}: {p}" for p in audit_ledger(g, res[key], unordered=unordered)]
    if res.get("ordered", {}).get("rhs") != 2 * res.get("unordered", {}).get("rhs", 0):
        problems.append("ordered rhs is not twice the unordered rhs")
    if res.get("holds") is not True:
        problems.append("certificate does not claim holds: true")
    return problems


def cmd_verify_ledger(args) -> tuple[dict, bool]:
    try:
        cert = json.loads(_read_text(args.certificate))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.certificate}: not JSON ({exc})") from None
    command = cert.get("command")
    problems: list[str] = []
    if command == "verify peterson":
        g = graph_from_descriptor(cert["input"])
        problems = _audit_peterson_results(g, cert["results"])
        checked = 1
    elif command == "sweep":
        entries = cert["results"]["graphs"]
        checked = 0
        for entry in entries:
            if "peterson" not in entry:
                raise UsageError("sweep certificate was written without --ledger")
            g = graph_from_descriptor(entry)
            problems += [f"graph {entry['index']}: {p}" for p in _audit_peterson_results(g, entry["peterson"])]
            checked += 1
    else:
        raise UsageError(f"cannot audit certificates of command {command!r}")
    ok = not problems
    return {"input": {"certificate": args.certificate}, "results": {"checked": checked, "problems": problems, "holds": ok}}, ok


def _random_orders(g: Graph, seed: int) -> dict[tuple[int, int], EdgeOrder]:
    rng = random.Random(seed)
    return {e: random_edge_order(g, rng, max_edge=e) for e in g.edges}


def cmd_bijection_orientations(args) -> tuple[dict, bool]:
    g = load_graph(args.file, args.format)
    res = certify_orientation_bijection(g, roundtrip=args.roundtrip)
    if args.ledger:
        B = list(build_B(g))
        index = {b: j for j, b in enumerate(B)}
        res["witness"] = [
            {"a_index": i, "b_index": index.get(phi(g, a)), "a": a.to_json(), "b": phi(g, a).to_json()}
            for i, a in enumerate(build_A(g))
        ]
    return {"input": describe(g), "results": res}, res["holds"]


def cmd_bijection_trees(args) -> tuple[dict, bool]:
    g = load_graph(args.file, args.format)
    orders = _random_orders(g, args.seed) if args.seed is not None else None
    res = certify_tree_bijection(g, orders, roundtrip=args.roundtrip)
    res["edge_orders"] = "random" if orders else "lexicographic, marked edge last"
    if args.ledger:
        B = list(build_B_trees(g, orders))
        index = {b: j for j, b in enumerate(B)}
        witness = []
        for i, (e, t) in enumerate(build_A_trees(g, orders)):
            b = phi_tree(g, e, t, orders[e] if orders else sigma_for_max(g, e))
            witness.append(
                {"a_index": i, "b_index": index.get(b), "a": {"edge": list(e), "tree": [list(f) for f in sorted(t)]}, "b": b.to_json()}
            )
        res["witness"] = witness
    return {"input": describe(g), "results": res}, res["holds"]


def sweep_entry(g: Graph, index: int, args) -> dict:
    entry = {"index": index, "graph6": to_graph6(g), **describe(g), "connected": is_connected(g)}
    a = _alpha_report(g, "all", args.orders, args.seed + index)
    entry["alpha"] = {k: a[k] for k in ("poly", "orientations_by_sink", "trees", "trees_random_orders", "agree")}
    dc = [verify_dc(g, e) for e in g.edges]
    entry["dc_holds"] = all(r.holds for r in dc)
    rep = verify_peterson(g, args.method)
    if args.ledger:
        entry["peterson"] = rep.to_json(with_terms=True)
    else:
        entry["peterson"] = rep.to_json(with_terms=False)
    holds = a["agree"] and entry["dc_holds"] and rep.holds
    if args.roundtrip and g.edges and entry["connected"]:
        ob = certify_orientation_bijection(g)
        tb = certify_tree_bijection(g)
        entry["bijections"] = {"orientations": ob["holds"], "trees": tb["holds"]}
        holds = holds and ob["holds"] and tb["holds"]
    entry["holds"] = holds
    return entry


def cmd_sweep(args) -> tuple[dict, bool]:
    if args.catalog:
        source = args.catalog
        graphs = [g for g in read_graph6_lines(_read_text(args.catalog)) if g.n <= args.max_n]
    else:
        source = "internal"
        graphs = graphs_up_to(args.max_n)
    entries = [sweep_entry(g, i, args) for i, g in enumerate(graphs)]
    failed = [e["index"] for e in entries if not e["holds"]]
    res = {"count": len(entries), "failed": failed, "holds": not failed, "graphs": entries}
    return {"input": {"source": source, "max_n": args.max_n, "seed": args.seed}, "results": res}, not failed


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chromdisc", description="Chromatic discriminant calculator and recurrence checker.")
    p.add_argument("--version", action="version", version=f"chromdisc {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(sp, methods=True):
        sp.add_argument("file", help="edge-list or graph6 file, '-' for stdin")
        sp.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="auto")
        sp.add_argument("--json", action="store_true", default=True, help="emit JSON (always on)")
        if methods:
            sp.add_argument("--method", choices=METHODS + ("all",), default="poly")

    sp = sub.add_parser("alpha", help="alpha(G) by one or all methods")
    graph_cmd(sp)
    sp.add_argument("--orders", type=int, default=10, help="random edge orders tried with --method all")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_alpha)

    sp = sub.add_parser("chromatic", help="chromatic polynomial coefficients")
    graph_cmd(sp, methods=False)
    sp.set_defaults(func=cmd_chromatic)

    verify = sub.add_parser("verify", help="check an identity").add_subparsers(
        dest="identity", required=True, parser_class=_Parser
    )
    sp = verify.add_parser("dc", help="deletion-contraction for alpha")
    graph_cmd(sp)
    sp.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    sp.set_defaults(func=cmd_verify_dc, command_name="verify dc")
    sp = verify.add_parser("peterson", help="partition recurrence, ordered and unordered")
    graph_cmd(sp)
    sp.add_argument("--ledger", action="store_true", help="include every partition term")
    sp.set_defaults(func=cmd_verify_peterson, command_name="verify peterson")
    sp = verify.add_parser("ledger", help="re-audit a certificate written with --ledger")
    sp.add_argument("certificate")
    sp.set_defaults(func=cmd_verify_ledger, command_name="verify ledger")

    bij = sub.add_parser("bijection", help="build and check a bijection").add_subparsers(
        dest="kind", required=True, parser_class=_Parser
    )
    sp = bij.add_parser("orientations", help="acyclic orientation split/join")
    graph_cmd(sp, methods=False)
    sp.add_argument("--roundtrip", action="store_true")
    sp.add_argument("--ledger", action="store_true", help="list every pair with its image")
    sp.set_defaults(func=cmd_bijection_orientations, command_name="bijection orientations")
    sp = bij.add_parser("trees", help="spanning tree cut/join")
    graph_cmd(sp, methods=False)
    sp.add_argument("--roundtrip", action="store_true")
    sp.add_argument("--ledger", action="store_true", help="list every pair with its image")
    sp.add_argument("--seed", type=int, default=None, help="use random edge orders seeded with this value")
    sp.set_defaults(func=cmd_bijection_trees, command_name="bijection trees")

    sp = sub.add_parser("sweep", help="check every identity on all small graphs")
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--catalog", help="graph6 file to read instead of generating graphs")
    sp.add_argument("--method", choices=METHODS + ("all",), default="poly")
    sp.add_argument("--orders", type=int, default=10, help="random edge orders per graph")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--ledger", action="store_true")
    sp.add_argument("--roundtrip", action="store_true", help="also check both bijections on connected graphs")
    sp.add_argument("--json", action="store_true", default=True)
    sp.set_defaults(func=cmd_sweep, command_name="sweep")
    return p


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        body, ok = args.func(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except (GraphError, OSError, KeyError, TypeError) as exc:
        print(f"chromdisc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {
        "command": getattr(args, "command_name", args.command),
        **body,
        "meta": {
            "version": __version__,
            "python": platform.python_version(),
            "elapsed_ms": round((time.perf_counter() - start) * 1000, 3),
        },
    }
    stdout.write(json.dumps(report, indent=2) + "\n")
    stdout.flush()
    return EXIT_OK if ok else EXIT_FAILED


def main() -> None:
    sys.exit(run())
