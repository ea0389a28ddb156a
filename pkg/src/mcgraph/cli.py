"""Command-line front end: ``python -m mcgraph <command> ...``.

Exit status is 0 when everything checked out, 1 when a verification found
failures, and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from .bricks import classify_edges, is_cubic_brick, is_essentially_4ec_cubic
from .catalog import NAMES, catalog
from .corpus import generate_cubic
from .graph import GraphError, Multigraph
from .graph6 import from_graph6, read_graph6_file, to_graph6
from .tightcuts import tight_cut_decomposition
from .verify import THEOREMS, VerifyOptions, analyze, build_corpus, verify_theorem

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _add_graph_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="graph6 string")
    src.add_argument("--file", help="file holding a graph6 line or a JSON edge list")
    src.add_argument("--catalog", choices=NAMES, help="named graph")


def _load_graph(args) -> Multigraph:
    if args.g6 is not None:
        return from_graph6(args.g6)
    if args.catalog is not None:
        return catalog(args.catalog).graph
    with open(args.file) as fh:
        text = fh.read().strip()
    if text.startswith("{"):
        return Multigraph.from_json(text)
    graphs = read_graph6_file(args.file)
    if len(graphs) != 1:
        raise GraphError(f"expected one graph in {args.file}, found {len(graphs)}")
    return graphs[0]


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_analyze(args) -> int:
    rep = analyze(_load_graph(args))
    if args.json:
        _emit(rep)
        return EXIT_OK
    keys = ["n", "m", "cubic", "matching_covered", "brick", "brace", "b", "efec", "near_bipartite",
            "three_edge_colorable", "snark", "verdicts"]
    for k in keys:
        if k in rep:
            print(f"{k}: {rep[k]}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = _load_graph(args)
    tree = tight_cut_decomposition(g, policy=args.policy)
    if args.json:
        _emit(tree.to_dict())
        return EXIT_OK

    def show(t, depth):
        pad = "  " * depth
        if t.is_leaf:
            print(f"{pad}{t.verdict} on {t.graph.n} vertices, {t.graph.m} edges")
            return
        print(f"{pad}{t.kind.tag if t.kind else 'cut'} shore={sorted(t.cut.shore)} size={t.cut.size}")
        for ch in t.children:
            show(ch, depth + 1)

    show(tree, 0)
    print(f"b = {len(tree.bricks())}")
    return EXIT_OK


def cmd_classify(args) -> int:
    g = _load_graph(args)
    if not (g.is_cubic() and is_cubic_brick(g)):
        raise GraphError("edge classification needs a cubic brick")
    relaxed = not is_essentially_4ec_cubic(g)
    rows = [c.to_dict() for c in classify_edges(g, relaxed=relaxed)]
    if args.json:
        _emit(rows)
        return EXIT_OK
    for r in rows:
        extra = f" partner={r['partner']}" if "partner" in r else f" b={r['b']}" if "b" in r else ""
        print(f"{r['edge']:>3} {r['ends'][0]}-{r['ends'][1]}  {r['verdict']}{extra}")
    print(dict(sorted(Counter(r["verdict"] for r in rows).items())))
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.n and not args.corpus:
        raise GraphError("verify needs --n or --corpus")
    corpus = build_corpus(args.n or (), args.corpus)
    opts = VerifyOptions(seed=args.seed, jobs=args.jobs, orders=args.orders)
    failed = False
    for tid in args.theorem:
        rep = verify_theorem(tid, corpus, opts)
        failed |= not rep.ok
        text = rep.to_jsonl()
        if args.out:
            with open(args.out, "a") as fh:
                fh.write(text)
            _emit(rep.summary())
        elif args.all_lines:
            sys.stdout.write(text)
        else:
            for line in rep.lines:
                if line["status"] == "fail":
                    _emit(line)
            _emit(rep.summary())
    return EXIT_FAIL if failed else EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in NAMES:
            e = catalog(name)
            print(f"{name:<11} n={e.graph.n:<3} m={e.graph.m:<3} {e.provenance}")
        return EXIT_OK
    if not args.name:
        raise GraphError("catalog show needs a name")
    e = catalog(args.name)
    _emit({"name": e.name, "graph": e.graph.to_dict(), "names": e.names,
           "known_facts": e.known_facts, "marks": {k: v for k, v in e.marks.items()}})
    return EXIT_OK


def cmd_generate(args) -> int:
    lines = "".join(to_graph6(g) + "\n" for g in generate_cubic(args.n))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(lines)
    else:
        sys.stdout.write(lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcgraph", description="Matching covered graph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full report for one graph")
    _add_graph_source(a)
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    d = sub.add_parser("decompose", help="tight cut decomposition")
    _add_graph_source(d)
    d.add_argument("--policy", default="det", help="det or seed:N")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_decompose)

    c = sub.add_parser("classify-edges", help="edge table of a cubic brick")
    _add_graph_source(c)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="run theorem checks over a corpus")
    v.add_argument("--theorem", action="append", required=True, choices=THEOREMS)
    v.add_argument("--n", type=int, nargs="+", help="generate cubic graphs of these orders")
    v.add_argument("--corpus", help="graph6 file")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--orders", type=int, default=100, help="decomposition orders per graph for T1.1")
    v.add_argument("--out", help="append JSON Lines reports here")
    v.add_argument("--all-lines", action="store_true", help="print passing graphs too")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("catalog", help="named graphs")
    k.add_argument("action", nargs="?", choices=("list", "show"), default="list")
    k.add_argument("name", nargs="?")
    k.set_defaults(func=cmd_catalog)

    gen = sub.add_parser("generate", help="connected cubic graphs as graph6")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--out")
    gen.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
