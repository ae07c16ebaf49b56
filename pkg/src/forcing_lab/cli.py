"""Command-line surface.

Subcommands: solve, closure, bounds, verify, lemmas trees, lemmas known.
Graphs arrive inline (--graph6, --family name:params) or from files
(--input: graph6 lines, or the "n m" edge-list format). Every run echoes
its full configuration (seed, budgets, version, backend) to stderr as one
JSON line, which is enough to reproduce it.

Exit codes: 0 success, 1 counterexample or property failure, 2 input
error, 3 resource-budget abort.
"""

import argparse
import json
import os
import sys

from . import __version__, _kernels
from .engine import trace
from .enumeration import enumerate_connected, labeled_trees, random_trees
from .graph6 import Graph6Error, parse_graph6
from .graphs import VertexSet, generate, parse_edge_list
from .solver import (DEFAULT_NODE_BUDGET, BudgetExceeded, solve,
                     solve_connected_complement)
from .verifier import run_known_values, run_tree_leaf_suite, verify_stream

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _parse_family_spec(spec):
    if ":" not in spec:
        raise ValueError(f"family spec must look like name:params, got {spec!r}")
    name, _, params = spec.partition(":")
    try:
        values = [int(p) for p in params.split(",") if p != ""]
    except ValueError:
        raise ValueError(f"family parameters must be integers: {params!r}") from None
    return generate(name, values)


def _parse_id_csv(text):
    if text.strip() == "":
        return []
    try:
        return [int(p) for p in text.split(",")]
    except ValueError:
        raise ValueError(f"--set must be a comma-separated id list, got {text!r}") from None


def _load_graph(args):
    sources = [s for s in (args.graph6, args.family, args.input) if s]
    if len(sources) != 1:
        raise ValueError("give exactly one of --graph6, --family, --input")
    if args.graph6:
        return parse_graph6(args.graph6)
    if args.family:
        return _parse_family_spec(args.family)
    with open(args.input, encoding="ascii") as fh:
        text = fh.read()
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    head = first.split()
    if len(head) == 2 and all(p.lstrip("-").isdigit() for p in head):
        return parse_edge_list(text)
    return parse_graph6(first)


def _echo_config(args, extra=None):
    config = {
        "command": args.command,
        "version": __version__,
        "backend": _kernels.active_backend(),
        "k": getattr(args, "k", None),
        "seed": getattr(args, "seed", None),
        "node_budget": getattr(args, "node_budget", None),
        "workers": getattr(args, "workers", None),
        "input": getattr(args, "input", None),
        "family": getattr(args, "family", None),
        "graph6": getattr(args, "graph6", None),
        "enumerate": getattr(args, "enumerate", None),
        "out": getattr(args, "out", None),
    }
    if extra:
        config.update(extra)
    print(json.dumps({"config": config}), file=sys.stderr)
    return config


def _add_graph_source(p):
    p.add_argument("--graph6", help="inline graph6 record")
    p.add_argument("--family", help="inline family spec, e.g. cycle:5 or "
                   "complete_bipartite:3,3")
    p.add_argument("--input", help="path to a graph6 or edge-list file")


def _add_common(p, workers=False):
    p.add_argument("--k", type=int, default=1, help="forcing parameter (default 1)")
    p.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET,
                   dest="node_budget", help="search node budget")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    if workers:
        default_workers = int(os.environ.get("FORCING_LAB_WORKERS", "1"))
        p.add_argument("--workers", type=int, default=default_workers,
                       help="parallel workers (env FORCING_LAB_WORKERS)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="forcing-lab",
        description="Exact k-forcing numbers, sharp degree bounds, and "
                    "exhaustive verification of their equality families.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="exact minimum k-forcing set")
    _add_graph_source(p_solve)
    _add_common(p_solve)
    p_solve.add_argument("--constrained", action="store_true",
                         help="restrict to sets with connected complement")

    p_closure = sub.add_parser("closure", help="trace the coloring process "
                                               "from an initial set")
    _add_graph_source(p_closure)
    _add_common(p_closure)
    p_closure.add_argument("--set", required=True, dest="initial",
                           help="comma-separated initial vertex ids")

    p_bounds = sub.add_parser("bounds", help="degree bounds and equality verdict")
    _add_graph_source(p_bounds)
    _add_common(p_bounds)

    p_verify = sub.add_parser("verify", help="sweep a graph6 stream against "
                                             "the bound and its equality families")
    p_verify.add_argument("--input", help="graph6 file (one graph per line); "
                          "'-' for stdin")
    p_verify.add_argument("--enumerate", type=int, dest="enumerate",
                          help="use the built-in connected enumeration at this order")
    p_verify.add_argument("--out", help="output path prefix (writes "
                          "PREFIX.records.jsonl, PREFIX.summary.csv, "
                          "PREFIX.summary.json)")
    _add_common(p_verify, workers=True)

    p_lemmas = sub.add_parser("lemmas", help="property suites")
    lemmas_sub = p_lemmas.add_subparsers(dest="suite", required=True)
    p_trees = lemmas_sub.add_parser("trees", help="leaf-subset forcing on trees")
    p_trees.add_argument("--max-n", type=int, default=8, dest="max_n",
                         help="exhaustive tree orders 2..max_n")
    p_trees.add_argument("--random-count", type=int, default=500,
                         dest="random_count", help="extra random trees")
    p_trees.add_argument("--random-min", type=int, default=9, dest="random_min")
    p_trees.add_argument("--random-max", type=int, default=16, dest="random_max")
    _add_common(p_trees)
    p_known = lemmas_sub.add_parser("known", help="closed-form family values")
    p_known.add_argument("--delta-max", type=int, default=4, dest="delta_max")
    p_known.add_argument("--cycle-max", type=int, default=12, dest="cycle_max")
    _add_common(p_known)

    return parser


def _cmd_solve(args):
    g = _load_graph(args)
    _echo_config(args)
    if args.constrained:
        res = solve_connected_complement(g, args.k, node_budget=args.node_budget)
    else:
        res = solve(g, args.k, node_budget=args.node_budget)
    out = res.to_dict()
    out["n"] = g.n
    if g.name:
        out["graph"] = g.name
    print(json.dumps(out))
    return EXIT_OK


def _cmd_closure(args):
    g = _load_graph(args)
    ids = _parse_id_csv(args.initial)
    initial = VertexSet.from_ids(ids, g.n)
    _echo_config(args)
    tr = trace(g, args.k, initial)
    out = json.loads(tr.to_json_line())
    out["forces"] = tr.forces_all()
    out["colored"] = len(tr.final_state())
    print(json.dumps(out))
    return EXIT_OK


def _cmd_bounds(args):
    from .bounds import build_bound_report, classify_extremal

    g = _load_graph(args)
    _echo_config(args)
    res = solve(g, 1, node_budget=args.node_budget)
    report = build_bound_report(g, args.k, res.value)
    out = report.to_dict()
    out["z"] = res.value
    if args.k != 1:
        f_k = solve(g, args.k, node_budget=args.node_budget).value
        out["f_k"] = f_k
    cls = classify_extremal(g) if report.max_degree >= 2 else None
    out["extremal_class"] = cls.tag if cls else None
    if g.name:
        out["graph"] = g.name
    print(json.dumps(out))
    return EXIT_OK


def _cmd_verify(args):
    if (args.input is None) == (args.enumerate is None):
        raise ValueError("give exactly one of --input or --enumerate")
    _echo_config(args)
    if args.enumerate is not None:
        from .graph6 import encode_graph6
        lines = [encode_graph6(g) for g in enumerate_connected(args.enumerate)]
    elif args.input == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.input, encoding="ascii") as fh:
            lines = fh.read().splitlines()

    run = verify_stream(lines, k=args.k, workers=args.workers,
                        node_budget=args.node_budget)
    summary = dict(run.summary)
    summary["seed"] = args.seed
    summary["version"] = __version__

    if args.out:
        with open(args.out + ".records.jsonl", "w", encoding="ascii") as fh:
            run.write_jsonl(fh)
        with open(args.out + ".summary.csv", "w", encoding="ascii", newline="") as fh:
            run.write_summary_csv(fh)
        with open(args.out + ".summary.json", "w", encoding="ascii") as fh:
            json.dump(summary, fh, indent=2)
            fh.write("\n")
    else:
        run.write_jsonl(sys.stdout)
        run.write_summary_csv(sys.stderr)
    print(json.dumps({"summary": {
        "graphs_verified": summary["graphs_verified"],
        "skipped": len(summary["skipped"]),
        "parse_failures": len(summary["parse_failures"]),
        "extremal": sum(r["extremal_count"] for r in summary["per_n"].values()),
        "counterexamples": len(summary["counterexamples"]),
        "unresolved": len(summary["unresolved"]),
        "structure_failures": len(summary["structure_failures"]),
    }}), file=sys.stderr)

    if summary["counterexamples"] or summary["structure_failures"]:
        return EXIT_FAILURE
    if summary["unresolved"]:
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_lemmas(args):
    _echo_config(args)
    if args.suite == "trees":
        def stream():
            for n in range(2, args.max_n + 1):
                yield from labeled_trees(n)
            yield from random_trees(args.random_count, args.random_min,
                                    args.random_max, args.seed)
        result = run_tree_leaf_suite(stream())
        result["seed"] = args.seed
        print(json.dumps(result))
        return EXIT_OK if not result["failures"] and not result["rejected"] \
            else EXIT_FAILURE
    result = run_known_values(delta_max=args.delta_max,
                              cycle_max=args.cycle_max,
                              node_budget=args.node_budget)
    print(json.dumps(result))
    return EXIT_OK if not result["failures"] else EXIT_FAILURE


def _validate_common(args):
    if getattr(args, "k", 1) < 1:
        raise ValueError("--k must be at least 1")
    if getattr(args, "node_budget", 1) < 1:
        raise ValueError("--node-budget must be positive")
    if getattr(args, "workers", 1) < 1:
        raise ValueError("--workers must be positive")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "solve": _cmd_solve,
        "closure": _cmd_closure,
        "bounds": _cmd_bounds,
        "verify": _cmd_verify,
        "lemmas": _cmd_lemmas,
    }
    try:
        _validate_common(args)
        return handlers[args.command](args)
    except (ValueError, Graph6Error, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
