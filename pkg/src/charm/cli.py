"""Command-line entry point (``charm``)."""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import generate_cubic_catalog
from .connectivity import cyclic_edge_connectivity, find_cyclic_edge_cut, girth, is_bridgeless
from .errors import CharmError
from .families import Kind, classify_ladder_family, is_klee, make_family
from .graph import Circuit, edge
from .harness import demo_counterexample, verify_acyclic_plus, verify_theorem
from .io import load_graphs, write_graph6
from .reductions import (
    build_g1i,
    correspondence_block,
    four_circuit_labels,
    reduce_edge,
    smooth_5circuit,
    split_on_3cut,
)
from .solver import SolveConfig, acyclic_complement, charm_matching


def _pair(text: str) -> tuple[int, int]:
    a, b = text.replace("-", ",").split(",")
    return int(a), int(b)


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _circuits(text: str) -> list[Circuit]:
    return [Circuit(tuple(_ints(part))) for part in text.split(";") if part.strip()]


def _edges(text: str) -> list[tuple[int, int]]:
    """``"0-1,2-3"`` or ``"0,1;2,3"``."""
    parts = text.split(";") if ";" in text else text.split(",")
    return [edge(*_pair(p)) for p in parts if p.strip()]


def _fmt_edges(es) -> str:
    return " ".join(f"{u}-{v}" for u, v in sorted(es))


def _config(args) -> SolveConfig:
    if getattr(args, "threshold", None) is not None:
        return SolveConfig.from_env(brute_force_threshold=args.threshold)
    return SolveConfig.from_env()


# ------------------------------------------------------------ commands


def cmd_analyze(args) -> int:
    for g in load_graphs(args.graph):
        fam = classify_ladder_family(g)
        info = {
            "graph6": write_graph6(g),
            "n": g.n,
            "bridgeless": is_bridgeless(g),
            "cyclic_edge_connectivity": cyclic_edge_connectivity(g),
            "girth": girth(g),
            "klee": is_klee(g) is not None,
            "family": fam.kind.value,
        }
        if args.json:
            print(json.dumps(info))
        else:
            print(" ".join(f"{k}={v}" for k, v in info.items()))
    return 0


def cmd_solve(args) -> int:
    g = load_graphs(args.graph)[0]
    e = _pair(args.edge)
    config = _config(args)
    if args.factor:
        m = acyclic_complement(g, _edges(args.factor), e, config)
        out = {"matching": sorted(m)}
        print(json.dumps(out) if args.json else _fmt_edges(m))
        return 0
    res = charm_matching(g, e, _circuits(args.circuits or ""), config)
    if args.json:
        print(json.dumps({"matching": sorted(res.matching), "trace": [str(s).strip() for s in res.trace]}))
    else:
        print("matching", _fmt_edges(res.matching))
        for step in res.trace:
            print(" ", step)
    return 0


def cmd_verify(args) -> int:
    catalog = load_graphs(args.catalog) if args.catalog else None
    if args.what == "theorem":
        report = verify_theorem(
            catalog, args.nmax, args.mode, args.seed, _config(args), args.jobs, args.samples,
            catalog_id=args.catalog,
        )
        print(report.to_text(), end="")
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(report.to_json())
        return 0 if report.ok else 1
    graphs = catalog if catalog is not None else generate_cubic_catalog(args.nmax)
    bad = 0
    for g in graphs:
        if g.n > args.nmax or not is_bridgeless(g):
            continue
        pair = verify_acyclic_plus(g)
        status = "ok" if pair else "FAILED"
        bad += pair is None
        print(f"{status} {write_graph6(g)}" + (f" M1={_fmt_edges(pair[0])} M2={_fmt_edges(pair[1])}" if pair else ""))
    print(f"failures={bad}")
    return 1 if bad else 0


def cmd_families(args) -> int:
    if args.action == "gen":
        print(write_graph6(make_family(Kind(args.kind), args.size)))
        return 0
    for g in load_graphs(args.graph):
        fam = classify_ladder_family(g)
        print(f"{write_graph6(g)} {fam.kind.value} {fam.k}")
    return 0


def cmd_reduce(args) -> int:
    g = load_graphs(args.graph)[0]
    if args.op == "3cut":
        cut = find_cyclic_edge_cut(g, 3)
        if cut is None or len(cut) != 3:
            print("no cyclic 3-edge-cut", file=sys.stderr)
            return 1
        sp = split_on_3cut(g, cut)
        print(write_graph6(sp.g_prime))
        print(write_graph6(sp.g_dprime))
        extra = {"crossing": list(sp.crossing), "hub_prime": sp.hub_prime, "hub_dprime": sp.hub_dprime}
        print(correspondence_block("3cut", {"prime": sp.vmap_prime, "dprime": sp.vmap_dprime}, extra))
    elif args.op == "4cut":
        if args.circuit:
            side = build_g1i(g, Circuit(tuple(_ints(args.circuit))), args.i)
            sides = [side]
        else:
            cut = find_cyclic_edge_cut(g, 4)
            if cut is None or len(cut) != 4:
                print("no cyclic 4-edge-cut", file=sys.stderr)
                return 1
            sides = list(build_g1i(g, cut, args.i))
        for s in sides:
            print(write_graph6(s.graph))
        for j, s in enumerate(sides):
            extra = {"i": s.i, "x": s.x, "y": s.y, "labels": list(s.labels)}
            print(correspondence_block(f"4cut side{j}", {"side": s.vmap}, extra))
    elif args.op == "edge":
        u, v = _pair(args.edge)
        a, b = _pair(args.pair)
        red = reduce_edge(g, u, v, a, b)
        print(write_graph6(red.graph))
        extra = {"alpha_beta": (red.alpha, red.beta), "gamma_delta": (red.gamma, red.delta), "added": red.added}
        print(correspondence_block("edge", {"reduced": red.vmap}, extra))
    else:
        sm = smooth_5circuit(g, _ints(args.circuit))
        print(write_graph6(sm.graph))
        print(correspondence_block("smooth", {"smoothed": sm.vmap}, {"t": sm.t, "smoothed": sm.smoothed}))
    return 0


def cmd_demo(args) -> int:
    print(demo_counterexample(args.n).to_text(), end="")
    return 0


# -------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="charm", description="Perfect matchings meeting prescribed circuits in cubic graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="connectivity, girth, Klee test and family")
    a.add_argument("--graph", required=True, help="graph6 file or adjacency text")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("solve", help="matching through an edge meeting given circuits")
    s.add_argument("--graph", required=True)
    s.add_argument("--edge", required=True, help="u,v")
    s.add_argument("--circuits", default="", help='vertex cycles, e.g. "0,1,2;5,6,7,8"')
    s.add_argument("--factor", help='1+-factor edges, e.g. "0-1,2-3,..."')
    s.add_argument("--threshold", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="catalog-wide checks")
    v.add_argument("what", choices=["theorem", "conjecture"])
    v.add_argument("--nmax", type=int, default=10)
    v.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--threshold", type=int)
    v.add_argument("--catalog", help="graph6 file instead of the generated catalog")
    v.add_argument("--out", help="write the JSON report here")
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("families", help="ladder families")
    fs = f.add_subparsers(dest="action", required=True)
    fg = fs.add_parser("gen")
    fg.add_argument("--kind", required=True, choices=[k.value for k in Kind if k is not Kind.NONE])
    fg.add_argument("--size", type=int, required=True)
    fc = fs.add_parser("classify")
    fc.add_argument("--graph", required=True)
    f.set_defaults(func=cmd_families)

    r = sub.add_parser("reduce", help="apply one surgery and print the result")
    r.add_argument("op", choices=["3cut", "4cut", "edge", "smooth"])
    r.add_argument("--graph", required=True)
    r.add_argument("--edge", help="u,v for the edge reduction")
    r.add_argument("--pair", help="alpha,beta for the edge reduction")
    r.add_argument("--circuit", help="4-circuit for 4cut, or t1..t5 for smooth")
    r.add_argument("--i", type=int, default=2, choices=[2, 3, 4])
    r.set_defaults(func=cmd_reduce)

    d = sub.add_parser("demo", help="demonstrations")
    d.add_argument("which", choices=["counterexample"])
    d.add_argument("--n", type=int, default=12)
    d.set_defaults(func=cmd_demo)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CharmError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
