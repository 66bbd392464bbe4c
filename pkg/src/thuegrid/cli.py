"""Command-line front end.

Subcommands:

  run    grow the frontier for a family, streaming ``i,n`` rows to stdout;
         exits 0 with a final ``pi >= c+1`` line when the frontier empties,
         2 when the size cap is reached with survivors left
  check  test a coloring file for repetitions; exits 0 (non-repetitive) or
         3 (repetitive, witness printed)
  order  print the vertex-addition order as ``index x y`` lines

All diagnostics go to stderr prefixed ``error:`` and exit with status 1.
"""

from __future__ import annotations

import argparse
import sys

from .checker import MAX_COLORS, Coloring, Witness, find_repetitive
from .enumerator import (
    CheckpointError,
    CountsTable,
    load_checkpoint,
    run as run_search,
)
from .lattice import FAMILIES, build_order, prefix_graph


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; this tool reserves 2 for an
    # inconclusive search, so usage errors are remapped to 1.
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 1


def write_counts_csv(table: CountsTable, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("i,n\n")
        for i, n in table.rows:
            fh.write(f"{i},{n}\n")


def read_counts_csv(path) -> list[tuple[int, int]]:
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "i,n":
            raise ValueError(f"unexpected CSV header {header!r}")
        rows = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            i_str, n_str = line.split(",")
            rows.append((int(i_str), int(n_str)))
    return rows


def _print_witness(w: Witness) -> None:
    print(" ".join(str(v) for v in w.first_half))
    print(" ".join(str(v) for v in w.second_half))
    print(w.joined_at)


def cmd_run(args) -> int:
    family = FAMILIES[args.family]
    if args.colors < 1 or args.colors > MAX_COLORS:
        return _fail(f"--colors must be in 1..{MAX_COLORS}")
    if args.max_vertices < 4:
        return _fail("--max-vertices must be at least 4")
    if args.threads < 1:
        return _fail("--threads must be at least 1")
    start = None
    if args.resume is not None:
        try:
            start, _meta = load_checkpoint(args.resume, family=family, c=args.colors)
        except (OSError, CheckpointError) as exc:
            return _fail(f"cannot resume: {exc}")

    def sink(i: int, n: int) -> None:
        print(f"{i},{n}", flush=True)

    try:
        table = run_search(
            family,
            args.colors,
            args.max_vertices,
            sink,
            threads=args.threads,
            checkpoint_path=args.checkpoint,
            start=start,
        )
    except (OSError, ValueError) as exc:
        return _fail(str(exc))
    if args.output is not None:
        try:
            write_counts_csv(table, args.output)
        except OSError as exc:
            return _fail(str(exc))
    if table.derived_bound is not None:
        print(f"pi >= {table.derived_bound}")
        return 0
    return 2


def cmd_check(args) -> int:
    family = FAMILIES[args.family]
    if args.colors < 1 or args.colors > MAX_COLORS:
        return _fail(f"--colors must be in 1..{MAX_COLORS}")
    try:
        with open(args.coloring, "r", encoding="utf-8") as fh:
            tokens = fh.read().split()
        colors = tuple(int(t) for t in tokens)
    except OSError as exc:
        return _fail(str(exc))
    except ValueError:
        return _fail(f"coloring file {args.coloring} contains a non-integer token")
    if len(colors) < 4:
        return _fail(f"coloring must cover at least the 4 seed vertices, got {len(colors)}")
    try:
        coloring = Coloring(colors, args.colors)
    except ValueError as exc:
        return _fail(str(exc))
    g = prefix_graph(build_order(family, len(colors)), len(colors))
    w = find_repetitive(g, coloring)
    if w is None:
        print("non-repetitive")
        return 0
    _print_witness(w)
    return 3


def cmd_order(args) -> int:
    family = FAMILIES[args.family]
    try:
        order = build_order(family, args.count)
    except ValueError as exc:
        return _fail(str(exc))
    for k, (x, y) in enumerate(order.coords):
        print(f"{k} {x} {y}")
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="thuegrid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family(p):
        p.add_argument("--family", required=True, choices=sorted(FAMILIES))

    p_run = sub.add_parser("run", help="enumerate non-repetitive colorings")
    add_family(p_run)
    p_run.add_argument("--colors", type=int, required=True)
    p_run.add_argument("--max-vertices", type=int, required=True)
    p_run.add_argument("--threads", type=int, default=1)
    p_run.add_argument("--checkpoint", default=None, help="write a checkpoint after every step")
    p_run.add_argument("--resume", default=None, help="resume from a checkpoint file")
    p_run.add_argument("--output", default=None, help="write the counts table as CSV")
    p_run.set_defaults(func=cmd_run)

    p_check = sub.add_parser("check", help="check a coloring file for repetitions")
    add_family(p_check)
    p_check.add_argument("--colors", type=int, required=True)
    p_check.add_argument("coloring", help="file of whitespace-separated color ids")
    p_check.set_defaults(func=cmd_check)

    p_order = sub.add_parser("order", help="print the vertex-addition order")
    add_family(p_order)
    p_order.add_argument("--count", type=int, required=True)
    p_order.set_defaults(func=cmd_order)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
