"""Command-line front end: ``sbetree <command> ...``.

Exit status: 0 success, 2 usage error, 3 node budget exhausted, 1 anything else.
"""

from __future__ import annotations

import argparse
import sys

from . import closed_forms as cf
from .bench import SUMMARY_HEADER, SweepConfig, run_sweep, summarize, to_csv
from .coloring import all_colorings, chromatic_number
from .engine import DEFAULT_NODE_BUDGET, BudgetExceeded, build_sbe_tree, build_usbe_layers
from .enumerate import all_independent_sets
from .graph import FAMILIES, GraphFormatError, format_subset, generate, read_graph, write_graph
from .mis import ORDERINGS, find_mis_with_ordering

EXIT_OK, EXIT_INTERNAL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
COLORING_MAX_N = 24


class UsageError(Exception):
    pass


def _add_graph_args(p: argparse.ArgumentParser):
    src = p.add_argument_group("graph")
    src.add_argument("--input", "-i", help="graph file (edge list or DIMACS)")
    src.add_argument("--family", choices=FAMILIES)
    src.add_argument("--n", type=int)
    src.add_argument("--m", type=int, help="edge count for gnm")
    src.add_argument("--d", type=int, help="degree for regular")
    src.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET, help="node budget")


def _graph(args):
    if args.input:
        return read_graph(args.input)
    if not args.family or args.n is None:
        raise UsageError("give --input FILE or --family and --n")
    return generate(args.family, args.n, m=args.m, d=args.d, seed=args.seed)


def _guard_coloring(g, args):
    if g.n > COLORING_MAX_N and not args.force:
        raise UsageError(f"coloring is limited to n <= {COLORING_MAX_N}; pass --force to override")


def cmd_gen(args, out):
    text = write_graph(_graph(args), args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_mis(args, out):
    g = _graph(args)
    sets, stats = find_mis_with_ordering(g, args.ordering, args.budget)
    if args.csv:
        out.write("n,m,ordering,seed,alpha,delta,mis_depth\n")
        out.write(f"{g.n},{g.m},{args.ordering},{args.seed},{stats.alpha},{stats.delta},{stats.mis_depth}\n")
        return
    for s in sets:
        out.write(f"{format_subset(s)}  alpha={stats.alpha}\n")
    if args.stats:
        widths = ",".join(map(str, stats.layer_widths))
        out.write(f"delta={stats.delta} mis_depth={stats.mis_depth} widths={widths}\n")


def cmd_sizes(args, out):
    if args.closed_form:
        if args.family == "complete":
            out.write(f"{cf.sbe_size_complete(args.n)} {cf.usbe_size_complete(args.n)}\n")
        elif args.family == "path":
            size = cf.path_tree_size(args.n)
            out.write(f"{size} {size}\n")
        else:
            raise UsageError("closed forms exist for --family complete and path only")
        return
    g = _graph(args)
    usbe = build_usbe_layers(g, args.budget).total_size
    _, sbe = build_sbe_tree(g, args.budget)
    out.write(f"{sbe} {usbe}\n")


def cmd_layers(args, out):
    if args.recurrence:
        if args.family != "path" or args.n is None:
            raise UsageError("--recurrence needs --family path --n N")
        widths = cf.path_width_profile(args.n).widths
    else:
        widths = build_usbe_layers(_graph(args), args.budget).layer_widths
    for depth, w in enumerate(widths):
        out.write(f"{depth} {w}\n")
    out.write(f"total {sum(widths)}\n")


def cmd_enum(args, out):
    out.write(all_independent_sets(_graph(args), args.budget).dump())


def cmd_chromatic(args, out):
    g = _graph(args)
    _guard_coloring(g, args)
    k, witness = chromatic_number(g, args.budget)
    out.write(f"chi={k}\n{witness}\n")


def cmd_colorings(args, out):
    g = _graph(args)
    _guard_coloring(g, args)
    k = args.k if args.k is not None else chromatic_number(g, args.budget)[0]
    found = all_colorings(g, k, args.budget)
    out.write(f"k={k} colorings={len(found)}\n")
    for c in found:
        out.write(f"\n{c}\n")


def cmd_bench(args, out):
    config = SweepConfig(
        n=args.n if args.n is not None else 24,
        m_from=args.m_from,
        m_to=args.m_to if args.m_to is not None else args.m_from,
        runs=args.runs,
        orderings=tuple(args.orderings.split(",")),
        base_seed=args.seed,
        node_budget=args.budget,
        family=args.family,
        n_from=args.n_from,
        n_to=args.n_to,
        n_step=args.n_step,
    )
    try:
        rows = run_sweep(config)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = to_csv(rows)
    if args.summarize:
        text += "\n" + to_csv(summarize(rows), SUMMARY_HEADER)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_predict(args, out):
    if args.model == "moebius":
        out.write(f"{cf.moebius_split_prediction(args.n)!r}\n")
    else:
        out.write(f"{cf.random_split_prediction(args.n)!r}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sbetree", description="Split-by-edges trees for independent sets and colorings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated graph")
    _add_graph_args(p)
    p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("mis", help="maximum independent sets")
    _add_graph_args(p)
    p.add_argument("--ordering", choices=ORDERINGS, default="none")
    p.add_argument("--stats", action="store_true", help="also print delta, depth and layer widths")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_mis)

    p = sub.add_parser("sizes", help="SBE and USBE tree sizes")
    _add_graph_args(p)
    p.add_argument("--closed-form", action="store_true")
    p.set_defaults(func=cmd_sizes)

    p = sub.add_parser("layers", help="USBE layer widths")
    _add_graph_args(p)
    p.add_argument("--recurrence", action="store_true", help="path widths without building the tree")
    p.set_defaults(func=cmd_layers)

    p = sub.add_parser("enum", help="all independent sets")
    _add_graph_args(p)
    p.set_defaults(func=cmd_enum)

    for name, func, text in (("chromatic", cmd_chromatic, "chromatic number"), ("colorings", cmd_colorings, "all k-colorings")):
        p = sub.add_parser(name, help=text)
        _add_graph_args(p)
        p.add_argument("--force", action="store_true", help=f"allow n > {COLORING_MAX_N}")
        if name == "colorings":
            p.add_argument("--k", type=int, help="number of classes (default: chromatic number)")
        p.set_defaults(func=func)

    p = sub.add_parser("bench", help="split-count sweep as CSV")
    p.add_argument("--family", choices=("gnm", "moebius"), default="gnm")
    p.add_argument("--n", type=int)
    p.add_argument("--m-from", type=int, default=24)
    p.add_argument("--m-to", type=int)
    p.add_argument("--n-from", type=int)
    p.add_argument("--n-to", type=int)
    p.add_argument("--n-step", type=int, default=2)
    p.add_argument("--runs", type=int, default=1)
    p.add_argument("--orderings", default="none", help="comma-separated subset of " + ",".join(ORDERINGS))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--summarize", action="store_true")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("predict", help="fitted split-count curves")
    p.add_argument("--model", choices=("moebius", "random"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_predict)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        args.func(args, out)
    except (UsageError, GraphFormatError, ValueError) as exc:
        print(f"sbetree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"sbetree: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"sbetree: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        print(f"sbetree: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
