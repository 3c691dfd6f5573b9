"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Graph arguments accept a file (text format or graph6), ``g6:<string>``,
or ``family://<kind>?k=<k>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from . import checks
from .classes import FIXED, RAW, StateSpaceTooLarge, count_classes, export_kempe_graph
from .coloring import ColoringError, EdgeColoring, Switch, all_chains, apply_switch, parse_coloring
from .compose import HPlan, PlanError, YPlan, compose, decompose_to_3connected, parse_plan, verify_multiplicativity
from .families import FamilyError, FamilySpec, census, generate, kprime_spectrum
from .graph import GraphFormatError, MultiGraph, format_graph, from_graph6, parse_graph, to_graph6


class UsageError(Exception):
    pass


def load_graph(arg: str) -> MultiGraph:
    if arg.startswith("family://"):
        url = urlparse(arg)
        kind = url.netloc or url.path.lstrip("/")
        query = parse_qs(url.query)
        k = int(query.get("k", ["1"])[0])
        base = load_graph(query["base"][0]) if "base" in query else None
        if "k" not in query and kind in ("moebius_ladder", "ml", "prism", "pr"):
            k = 3
        if "k" not in query and kind in ("crossed_prism", "cpr"):
            k = 2
        return generate(FamilySpec(kind, k, base))
    if arg.startswith("g6:"):
        return from_graph6(arg[3:])
    path = Path(arg)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read graph file {arg!r}: {exc.strerror}") from exc
    return parse_graph(text)


def load_coloring(g: MultiGraph, arg: str, n: int) -> EdgeColoring:
    path = Path(arg)
    if path.exists():
        text = path.read_text()
    elif all(ch.isdigit() or ch in " ," for ch in arg):
        text = arg
    else:
        raise UsageError(f"cannot read colouring {arg!r}")
    return parse_coloring(g, text, n)


def parse_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--pair expects two colours like 0,1, got {text!r}") from exc
    return a, b


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _tri(yes: bool, no: bool) -> bool | None:
    if yes and no:
        raise UsageError("contradictory filters")
    return True if yes else (False if no else None)


# ---------------------------------------------------------------- commands


def cmd_count(args) -> int:
    g = load_graph(args.graph)
    rep = count_classes(g, args.n, FIXED if args.method == "fixed" else RAW)
    print(rep.class_count)
    return 0


def cmd_classes(args) -> int:
    g = load_graph(args.graph)
    rep = count_classes(g, args.n, FIXED if args.method == "fixed" else RAW)
    _write(rep.to_json(), args.out)
    if args.out and not args.no_figure:
        from .plotting import class_size_figure
        class_size_figure(rep, Path(args.out).with_suffix(".png"))
    if args.dot:
        Path(args.dot).write_text(export_kempe_graph(g, args.n))
    return 0


def cmd_chains(args) -> int:
    g = load_graph(args.graph)
    c = load_coloring(g, args.coloring, args.n)
    for ch in all_chains(c, parse_pair(args.pair)):
        print(" ".join(map(str, ch.edge_ids)))
    return 0


def cmd_switch(args) -> int:
    g = load_graph(args.graph)
    c = load_coloring(g, args.coloring, args.n)
    print(apply_switch(c, Switch(parse_pair(args.pair), args.seed)).to_text())
    return 0


def _plan(args, g1: MultiGraph, g2: MultiGraph) -> YPlan | HPlan:
    if args.plan:
        text = Path(args.plan).read_text() if Path(args.plan).exists() else args.plan
        plan = parse_plan(text, g1, g2)
        if (args.op == "y") != isinstance(plan, YPlan):
            raise UsageError(f"plan kind does not match --op {args.op}")
        return plan
    return YPlan.default(g1, g2) if args.op == "y" else HPlan.default(g1, g2)


def cmd_compose(args) -> int:
    g1, g2 = load_graph(args.g1), load_graph(args.g2)
    _write(format_graph(compose(_plan(args, g1, g2))), args.out)
    return 0


def cmd_decompose(args) -> int:
    tree = decompose_to_3connected(load_graph(args.graph))
    _write(tree.to_json(), args.out)
    return 0


def cmd_family(args) -> int:
    base = load_graph(args.base) if args.base else None
    g = generate(FamilySpec(args.kind, args.k, base))
    text = to_graph6(g) if args.graph6 else format_graph(g)
    _write(text, args.out)
    return 0


def cmd_census(args) -> int:
    graphs = census(args.max_n, simple=not args.multigraph,
                    bipartite=_tri(args.bipartite, args.nonbipartite),
                    planar=_tri(args.planar, args.nonplanar), min_n=args.min_n)
    for g in graphs:
        if g.is_simple():
            print(to_graph6(g))
        else:
            print(format_graph(g))
    return 0


def cmd_spectrum(args) -> int:
    rep = kprime_spectrum(args.max_n, simple=not args.multigraph,
                          bipartite=_tri(args.bipartite, args.nonbipartite),
                          planar=_tri(args.planar, args.nonplanar), jobs=args.jobs)
    _write(rep.to_json(), args.out)
    if args.out and not args.no_figure:
        from .plotting import spectrum_figure
        spectrum_figure(rep, Path(args.out).with_suffix(".png"))
    return 0


def cmd_verify(args) -> int:
    if args.suite == "multiplicativity":
        if len(args.graphs) != 2:
            raise UsageError("verify multiplicativity needs two graphs; use random-multiplicativity for sampled plans")
        g1, g2 = (load_graph(a) for a in args.graphs)
        rep = verify_multiplicativity(g1, g2, _plan(args, g1, g2), jobs=args.jobs)
        status = "PASS" if rep.passed else "FAIL"
        print(f"{status} multiplicativity: {rep.a} * {rep.b} = {rep.a * rep.b}, composite K' = {rep.k}, "
              f"class bijection {'ok' if rep.bijection_ok else 'broken'}")
        if rep.counterexample:
            print(json.dumps(rep.counterexample, indent=2))
        return 0 if rep.passed else 1
    if args.graphs:
        raise UsageError(f"verify {args.suite} takes no graph arguments")
    if args.suite == "parity":
        res = checks.parity_suite(args.max_n)
    elif args.suite == "fix":
        res = checks.fix_suite(args.max_n)
    elif args.suite == "normalize":
        res = checks.normalization_suite(args.trials, args.seed)
    elif args.suite == "random-multiplicativity":
        res = checks.multiplicativity_suite(args.trials, args.seed)
    else:
        res = checks.families_suite(args.max_k)
    print(res.line())
    for f in res.failures[:10]:
        print(json.dumps(f))
    return 0 if res.passed else 1


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="edgekempe", description=__doc__.splitlines()[0])
    p.add_argument("--jobs", type=int, default=1, help="worker cap for parallel steps")
    sub = p.add_subparsers(dest="command", required=True)

    def with_palette(sp):
        sp.add_argument("--n", type=int, default=3, help="palette size")

    sp = sub.add_parser("count", help="print K'(G, n)")
    sp.add_argument("graph")
    with_palette(sp)
    sp.add_argument("--method", choices=("fixed", "raw"), default="fixed")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("classes", help="class report as JSON")
    sp.add_argument("graph")
    with_palette(sp)
    sp.add_argument("--method", choices=("fixed", "raw"), default="fixed")
    sp.add_argument("--out", help="write JSON here (and a class-size figure next to it)")
    sp.add_argument("--no-figure", action="store_true")
    sp.add_argument("--dot", help="also write the Kempe graph in DOT format")
    sp.set_defaults(func=cmd_classes)

    sp = sub.add_parser("chains", help="list Kempe chains of a colour pair")
    sp.add_argument("graph")
    sp.add_argument("coloring")
    sp.add_argument("--pair", required=True)
    with_palette(sp)
    sp.set_defaults(func=cmd_chains)

    sp = sub.add_parser("switch", help="apply one Kempe switch")
    sp.add_argument("graph")
    sp.add_argument("coloring")
    sp.add_argument("--pair", required=True)
    sp.add_argument("--seed", type=int, required=True)
    with_palette(sp)
    sp.set_defaults(func=cmd_switch)

    sp = sub.add_parser("compose", help="Y or H composition of two cubic graphs")
    sp.add_argument("--op", choices=("y", "h"), required=True)
    sp.add_argument("g1")
    sp.add_argument("g2")
    sp.add_argument("--plan", help="plan text or file; default plan if omitted")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("decompose", help="decomposition tree over 2-edge cuts as JSON")
    sp.add_argument("graph")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("family", help="generate a named graph")
    sp.add_argument("kind")
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--base", help="base graph for y_power_of")
    sp.add_argument("--graph6", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_family)

    def with_filters(sp):
        sp.add_argument("--max-n", type=int, required=True)
        sp.add_argument("--multigraph", action="store_true", help="include graphs with parallel edges")
        sp.add_argument("--bipartite", action="store_true")
        sp.add_argument("--nonbipartite", action="store_true")
        sp.add_argument("--planar", action="store_true")
        sp.add_argument("--nonplanar", action="store_true")

    sp = sub.add_parser("census", help="stream connected cubic graphs")
    with_filters(sp)
    sp.add_argument("--min-n", type=int, default=2)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("spectrum", help="K' values over the census")
    with_filters(sp)
    sp.add_argument("--out", help="write JSON here (and a bar chart next to it)")
    sp.add_argument("--no-figure", action="store_true")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("verify", help="run a property suite")
    sp.add_argument("suite", choices=("multiplicativity", "parity", "fix", "families",
                                      "normalize", "random-multiplicativity"))
    sp.add_argument("graphs", nargs="*")
    sp.add_argument("--op", choices=("y", "h"), default="y")
    sp.add_argument("--plan")
    sp.add_argument("--max-n", type=int, default=10)
    sp.add_argument("--max-k", type=int, default=8)
    sp.add_argument("--trials", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, ColoringError, PlanError, FamilyError,
            StateSpaceTooLarge, ValueError) as exc:
        print(f"edgekempe: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
