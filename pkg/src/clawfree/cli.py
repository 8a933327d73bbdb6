"""Command-line entry point.  Every command prints one JSON document.

Exit status: 0 on success (including non-member verdicts and obstructions),
1 when a verification sweep finds a violation, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .detect import h3
from .edgegraph import OddWalk, bipartition, edge_graph
from .graph import GraphError
from .harness import PROPERTIES, verify
from .io import emit_graph6, parse_literal
from .recon import hypomorphic_utc, iso_utc, sweep_prop_down, sweep_reconstructible
from .theorems import Decomposition, all_decompositions, classify, condition3, decompose


def _graph_json(g) -> dict:
    return {"n": g.n, "graph6": emit_graph6(g), "edges": [list(e) for e in g.edges()]}


def cmd_classify(args) -> tuple[dict, int]:
    u = parse_literal(args.graph)
    return classify(u).to_json(), 0


def cmd_decompose(args) -> tuple[dict, int]:
    u = parse_literal(args.graph)
    d = decompose(u)
    if not isinstance(d, Decomposition):
        return d.to_json(), 0
    if args.all:
        ds = all_decompositions(u, dedup=args.dedup)
        return {"count": len(ds), "decompositions": [x.to_json() for x in ds]}, 0
    return d.to_json(), 0


def cmd_h3(args) -> tuple[dict, int]:
    u = parse_literal(args.graph)
    hyper = h3(u)
    return {"n": u.n, "count": len(hyper), "hyperedges": [list(t) for t in hyper.sorted_edges()]}, 0


def cmd_edge_graph(args) -> tuple[dict, int]:
    u = parse_literal(args.graph)
    s = edge_graph(u)
    out = {
        "vertices": [list(e) for e in s.vertices],
        "edges": [list(e) for e in s.edges()],
    }
    b = bipartition(s)
    if isinstance(b, OddWalk):
        out["bipartite"] = False
        out["odd_cycle"] = list(b.cycle)
    else:
        out["bipartite"] = True
        out["color"] = list(b.color)
    return out, 0


def cmd_condition3(args) -> tuple[dict, int]:
    return condition3(parse_literal(args.graph)).to_json(), 0


def cmd_show(args) -> tuple[dict, int]:
    return _graph_json(parse_literal(args.graph)), 0


def cmd_verify(args) -> tuple[dict, int]:
    report = verify(args.property, args.n, sample=args.sample, seed=args.seed, jobs=args.jobs)
    print(f"{args.property} n={args.n}: {report.checked} checked in {report.wall_time:.2f}s", file=sys.stderr)
    return report.to_json(timing=args.timing), 0 if report.passed else 1


def cmd_recon(args) -> tuple[dict, int]:
    if args.recon_cmd == "reconstructible":
        return sweep_reconstructible(args.v, args.k).to_json(), 0
    if args.recon_cmd == "hypomorphic":
        g, h = parse_literal(args.g1), parse_literal(args.g2)
        rep = hypomorphic_utc(g, h, args.k)
        return {
            "k": rep.k,
            "hypomorphic": rep.result,
            "failing_subset": list(rep.failing_subset) if rep.failing_subset else None,
            "isomorphic_utc": iso_utc(g, h),
        }, 0
    sweep = sweep_prop_down(args.v, args.k, args.t, jobs=args.jobs)
    return sweep.to_json(), 0 if not sweep.violations else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="clawfree", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    graph_help = "graph literal: catalog name, cycle:<n>, path:<n>, graph6, g6:<..>, edges:<n;u v;..>, or @file"

    for name, func, helptext in (
        ("classify", cmd_classify, "membership certificate"),
        ("h3", cmd_h3, "homogeneous triples"),
        ("edge-graph", cmd_edge_graph, "edge-graph and its two-coloring"),
        ("condition3", cmd_condition3, "structural decomposability condition"),
        ("show", cmd_show, "normalize a graph literal"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("graph", help=graph_help)
        p.set_defaults(func=func)

    p = sub.add_parser("decompose", help="Boolean-sum decomposition")
    p.add_argument("graph", help=graph_help)
    p.add_argument("--all", action="store_true", help="enumerate all component flips")
    p.add_argument("--dedup", action="store_true", help="with --all, treat (G, G2) as unordered")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run a property sweep")
    p.add_argument("property", choices=PROPERTIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sample", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall time in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recon", help="reconstruction up to complementation")
    rsub = p.add_subparsers(dest="recon_cmd", required=True)
    r = rsub.add_parser("reconstructible")
    r.add_argument("--v", type=int, required=True)
    r.add_argument("--k", type=int, required=True)
    r = rsub.add_parser("hypomorphic")
    r.add_argument("g1")
    r.add_argument("g2")
    r.add_argument("--k", type=int, required=True)
    r = rsub.add_parser("propdown")
    r.add_argument("--v", type=int, required=True)
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--t", type=int, required=True)
    r.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_recon)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.func(args)
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(payload))
    return code


if __name__ == "__main__":
    sys.exit(main())
