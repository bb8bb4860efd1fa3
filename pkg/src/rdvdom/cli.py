"""``rdvdom`` command line: solve, verify, gen, bench."""

from __future__ import annotations

import argparse
import json
import sys

from . import bench
from .fileformat import FormatError, format_rdv, format_solution, load_rdv, parse_solution, save_rdv
from .generate import gen_interval, gen_paper_example, gen_rdv
from .interval import solve_interval
from .model import InvalidRepresentation, materialize_graph, validate
from .oracle import first_undominated
from .solver import solve, solve_independent_set

EXIT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_NOT_PATH = 3


def _load_valid(path):
    rep = load_rdv(path)
    bad = validate(rep)
    if bad is not None:
        raise InvalidRepresentation(str(bad))
    return rep


def cmd_solve(args) -> int:
    try:
        rep = _load_valid(args.path)
    except (OSError, FormatError, InvalidRepresentation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    if args.algo == "interval":
        if not rep.tree.is_path():
            print("error: --algo interval needs a path host tree", file=sys.stderr)
            return EXIT_NOT_PATH
        sol = solve_interval(rep)
        selected, stats = sol.selected, sol.stats
    elif args.algo == "indset":
        selected = solve_independent_set(rep)
        stats = None
    else:
        sol = solve(rep)
        selected, stats = sol.selected, sol.stats
    ids = sorted(selected)
    if args.json:
        out = {"size": len(ids), "selected": ids}
        if stats is not None:
            out["stats"] = {"pst_ops": stats.pst_ops, "ray_queries": stats.ray_queries,
                            "wall_ns": stats.wall_ns}
        print(json.dumps(out))
    else:
        sys.stdout.write(format_solution(ids))
    return 0


def cmd_verify(args) -> int:
    try:
        rep = _load_valid(args.path)
        with open(args.solution) as fh:
            chosen = parse_solution(fh.read())
    except (OSError, FormatError, InvalidRepresentation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    n = rep.vertex_count
    stray = [z for z in chosen if not 0 <= z < n]
    if stray:
        print(f"error: vertex {stray[0]} does not exist", file=sys.stderr)
        return EXIT_BAD_INPUT
    z = first_undominated(materialize_graph(rep), chosen)
    if z is not None:
        print(f"undominated {z}")
        return EXIT_FAILED
    print("ok")
    return 0


def cmd_gen(args) -> int:
    if args.kind == "paper":
        rep = gen_paper_example()
    elif args.kind == "interval":
        rep = gen_interval(args.seed, args.n, args.tree_nodes)
    else:
        rep = gen_rdv(args.seed, args.n, args.tree_nodes, args.max_path_len)
    if args.out in (None, "-"):
        sys.stdout.write(format_rdv(rep))
    else:
        save_rdv(rep, args.out)
    return 0


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]

    def progress(row):
        print(f"{row.kind} n={row.n} seed={row.seed} {row.wall_ns / 1e9:.2f}s "
              f"size={row.dset_size}", file=sys.stderr)

    try:
        rows = bench.run_bench(args.kind, sizes, args.seeds, args.check_max_n, progress)
    except AssertionError as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if args.csv in (None, "-"):
        bench.write_rows(rows, sys.stdout)
    else:
        bench.write_csv(rows, args.csv)
    if args.plot:
        bench.plot_scaling(rows, args.plot)
    if len(set(sizes)) >= 2:
        print(f"fitted exponent of t/n in log n: {bench.scaling_exponent(rows):.2f}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rdvdom", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="minimum dominating set (or independent set) of an instance")
    p.add_argument("path")
    p.add_argument("--algo", choices=("rdv", "interval", "indset"), default="rdv")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check that a solution file dominates the instance")
    p.add_argument("path")
    p.add_argument("solution")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("--kind", choices=("rdv", "interval", "paper"), default="rdv")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--tree-nodes", type=int, default=10)
    p.add_argument("--max-path-len", type=int, default=bench.SPARSE_PATH_LEN)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="scaling sweep written as CSV")
    p.add_argument("--kind", choices=bench.KINDS, default="dense")
    p.add_argument("--sizes", default="16384,65536,262144,1048576")
    p.add_argument("--seeds", type=int, default=1)
    p.add_argument("--csv")
    p.add_argument("--check-max-n", type=int, default=2048,
                   help="cross-check against the explicit greedy up to this n")
    p.add_argument("--plot", help="also render time per vertex to this image file")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
