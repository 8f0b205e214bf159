"""Command-line entry point.

One binary, subcommand style, built for scripting pipelines:

    weakschur verify <file.wsp> [--conditions 1,2,3|all] [--first-only]
    weakschur generate --s <k> [--seed <file.wsp>] [--out <file.wsp>] [--trace]
    weakschur bound --s <k>
    weakschur table --max-s <k> [--markdown]
    weakschur search ws --s <k> [--cap <n>] [--budget <nodes>] [--out <file.wsp>]
    weakschur search seeds --s <k> --n <n> [--limit <c>] [--out-dir <dir>]

Exit codes: 0 success or empty report, 1 violations found or infeasible,
2 usage or parse error, 3 budget or cap exhausted.  ``--json`` turns every
subcommand's stdout into a single JSON document with a stable schema.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .construct import (
    LITERATURE_ORDERS,
    SeedConditionError,
    base_partition,
    bound,
    bound_table,
    iterate,
)
from .partition import (
    WSP_FORMAT_VERSION,
    WspFormatError,
    parse_partition,
    serialize_partition,
)
from .search import DEFAULT_BUDGET, SearchBudgetExceeded, compute_ws, find_seeds
from .verifier import ConditionSet, verify

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _threads(value: str) -> str:
    if value == "auto":
        return value
    try:
        k = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {value!r}")
    if k < 1:
        raise argparse.ArgumentTypeError("thread count must be >= 1")
    return value


def _conditions(value: str) -> ConditionSet:
    try:
        return ConditionSet.from_labels(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    common.add_argument("--quiet", action="store_true", help="suppress informational stderr output")
    common.add_argument(
        "--threads",
        type=_threads,
        default="1",
        metavar="K|auto",
        help="worker limit; execution is sequential either way and 1 is the determinism reference",
    )

    parser = argparse.ArgumentParser(
        prog="weakschur",
        description="Construct, verify and search weak Schur partitions.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"weakschur {__version__} (wsp format {WSP_FORMAT_VERSION})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a .wsp file")
    p.add_argument("file", help="partition file to check")
    p.add_argument(
        "--conditions",
        type=_conditions,
        default=ConditionSet.all(),
        metavar="1,2,3|all",
        help="which conditions to check (default: all)",
    )
    p.add_argument(
        "--first-only",
        action="store_true",
        help="stop at the first violation instead of enumerating them all",
    )

    p = sub.add_parser("generate", parents=[common], help="iterate the construction")
    p.add_argument("--s", type=int, required=True, metavar="K", help="target subset count")
    p.add_argument("--seed", metavar="FILE", help="seed .wsp file (default: built-in order-21 base)")
    p.add_argument("--out", metavar="FILE", help="write the final partition here instead of stdout")
    p.add_argument("--trace", action="store_true", help="report where each step's elements came from")

    p = sub.add_parser("bound", parents=[common], help="closed-form order for a subset count")
    p.add_argument("--s", type=int, required=True, metavar="K", help="subset count (>= 3)")

    p = sub.add_parser("table", parents=[common], help="bound table with literature context")
    p.add_argument("--max-s", type=int, required=True, metavar="K", help="last subset count (>= 3)")
    p.add_argument("--markdown", action="store_true", help="render a markdown table")

    p = sub.add_parser("search", parents=[], help="exhaustive backtracking search")
    search_sub = p.add_subparsers(dest="search_command", required=True)

    q = search_sub.add_parser("ws", parents=[common], help="exact weak Schur number scan")
    q.add_argument("--s", type=int, required=True, metavar="K", help="subset count")
    q.add_argument("--cap", type=int, default=100, metavar="N", help="largest order to scan (default 100)")
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="NODES",
                   help=f"node budget (default {DEFAULT_BUDGET})")
    q.add_argument("--out", metavar="FILE", help="write the best witness as .wsp")

    q = search_sub.add_parser("seeds", parents=[common], help="find iterable seed partitions")
    q.add_argument("--s", type=int, required=True, metavar="K", help="subset count")
    q.add_argument("--n", type=int, required=True, metavar="N", help="order")
    q.add_argument("--limit", type=int, default=10, metavar="C", help="stop after this many seeds (default 10)")
    q.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="NODES",
                   help=f"node budget (default {DEFAULT_BUDGET})")
    q.add_argument("--out-dir", metavar="DIR", help="write each seed as seed_NNNN.wsp in this directory")

    return parser


def _fail(args, code: int, message: str, **fields) -> int:
    if args is not None and getattr(args, "json", False):
        doc = {"error": message, **fields}
        print(json.dumps(doc, sort_keys=True), file=sys.stderr)
    else:
        print(f"error: {message}", file=sys.stderr)
    return code


def _info(args, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def _read_partition(args, path: str):
    """Parse a .wsp file or return (None, exit_code)."""
    try:
        with open(path, encoding="ascii") as fh:
            return parse_partition(fh), None
    except OSError as e:
        return None, _fail(args, EXIT_USAGE, f"cannot read {path}: {e.strerror}")
    except UnicodeDecodeError:
        return None, _fail(args, EXIT_USAGE, f"{path} is not ASCII text")
    except WspFormatError as e:
        return None, _fail(args, EXIT_USAGE, str(e), line=e.line)


def _cmd_verify(args) -> int:
    p, err = _read_partition(args, args.file)
    if p is None:
        return err
    report = verify(p, args.conditions, first_only=args.first_only)
    if args.json:
        print(json.dumps(report.as_json(), sort_keys=True))
    else:
        for v in report.violations:
            print(v.describe())
        status = "ok" if report.passed else f"{len(report.violations)} violation(s)"
        print(f"{args.file}: {status} "
              f"(checked: {', '.join(sorted(report.checked_conditions))})")
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def _cmd_generate(args) -> int:
    if args.seed:
        try:
            with open(args.seed, encoding="ascii") as fh:
                seed = parse_partition(fh)
        except OSError as e:
            return _fail(args, EXIT_USAGE, f"cannot read {args.seed}: {e.strerror}")
        except WspFormatError as e:
            return _fail(args, EXIT_USAGE, str(e), line=e.line)
    else:
        seed = base_partition()
    steps = args.s - seed.s
    if steps < 0:
        return _fail(args, EXIT_USAGE,
                     f"target s={args.s} is below the seed's s={seed.s}")
    try:
        chain = iterate(seed, steps)
    except SeedConditionError as e:
        return _fail(args, EXIT_VIOLATIONS, str(e))
    final = chain[-1][0] if chain else seed
    if not chain:
        # zero steps: still refuse to echo a seed that could not be extended
        report = verify(seed)
        if not report.passed:
            return _fail(args, EXIT_VIOLATIONS,
                         f"seed fails checks: {report.violations[0].describe()}")
    text = serialize_partition(final)
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
        _info(args, f"wrote s={final.s} n={final.n} to {args.out}")
    if args.json:
        doc = {
            "s": final.s,
            "n": final.n,
            "orders": [p.n for p, _ in chain],
            "out": args.out,
            "partition": None if args.out else text,
            "trace": [t.as_json() for _, t in chain] if args.trace else None,
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        if args.trace:
            for k, (_, t) in enumerate(chain, 1):
                refl = sum(len(r) for r in t.reflected_per_subset)
                _info(args,
                      f"step {k}: order {t.input_order} -> {t.output_order}, "
                      f"injected {t.injected[0]} and {t.injected[1]} into subset 1, "
                      f"reflected {refl} elements, new subset of {len(t.new_subset)}")
        if not args.out:
            sys.stdout.write(text)
    return EXIT_OK


def _cmd_bound(args) -> int:
    try:
        value = bound(args.s)
    except ValueError as e:
        return _fail(args, EXIT_USAGE, str(e))
    if args.json:
        print(json.dumps({"s": args.s, "order": value, "source": "construction"},
                         sort_keys=True))
    else:
        print(value)
    return EXIT_OK


def _cmd_table(args) -> int:
    try:
        seq = bound_table(args.max_s)
    except ValueError as e:
        return _fail(args, EXIT_USAGE, str(e))
    rows = []
    for k, order in enumerate(seq.orders):
        s = seq.start_s + k
        lit = [{"order": o, "kind": kind} for o, kind in LITERATURE_ORDERS.get(s, ())]
        rows.append({"s": s, "order": order, "literature": lit})
    if args.json:
        print(json.dumps({"start_s": seq.start_s, "rows": rows}, sort_keys=True))
        return EXIT_OK

    def lit_text(row):
        if not row["literature"]:
            return "-"
        return ", ".join(f"{e['order']} ({e['kind']})" for e in row["literature"])

    if args.markdown:
        print("| s | this construction | literature |")
        print("| --- | --- | --- |")
        for row in rows:
            print(f"| {row['s']} | {row['order']} | {lit_text(row)} |")
    else:
        width = max(len(str(rows[-1]["order"])), len("construction"))
        print(f"{'s':>3}  {'construction':>{width}}  literature")
        for row in rows:
            print(f"{row['s']:>3}  {row['order']:>{width}}  {lit_text(row)}")
    return EXIT_OK


def _cmd_search_ws(args) -> int:
    try:
        result = compute_ws(args.s, args.cap, budget=args.budget)
    except ValueError as e:
        return _fail(args, EXIT_USAGE, str(e))
    witness_text = serialize_partition(result.witness) if result.witness else None
    if args.out and witness_text:
        Path(args.out).write_text(witness_text, encoding="ascii")
        _info(args, f"wrote witness n={result.best_n} to {args.out}")
    if args.json:
        doc = result.as_json()
        doc["witness_path"] = args.out if (args.out and witness_text) else None
        doc["witness"] = None if args.out else witness_text
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"s={result.s} best_n={result.best_n} mode={result.mode} "
              f"exhausted={result.exhausted} nodes={result.nodes_visited} source=search")
    return EXIT_OK if result.mode == "exact" else EXIT_BUDGET


def _cmd_search_seeds(args) -> int:
    try:
        seeds = find_seeds(args.s, args.n, args.limit, budget=args.budget)
    except ValueError as e:
        return _fail(args, EXIT_USAGE, str(e))
    except SearchBudgetExceeded as e:
        return _fail(args, EXIT_BUDGET, str(e), nodes_visited=e.nodes_visited)
    paths = []
    if args.out_dir:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for k, p in enumerate(seeds, 1):
            path = out_dir / f"seed_{k:04d}.wsp"
            path.write_text(serialize_partition(p), encoding="ascii")
            paths.append(str(path))
    if args.json:
        doc = {
            "s": args.s,
            "n": args.n,
            "limit": args.limit,
            "found": len(seeds),
            "source": "search",
            "seeds": paths if args.out_dir else [serialize_partition(p) for p in seeds],
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        print(f"found {len(seeds)} seed(s) at s={args.s} n={args.n}")
        if args.out_dir:
            for path in paths:
                print(path)
        else:
            for k, p in enumerate(seeds, 1):
                print(f"# seed {k}")
                sys.stdout.write(serialize_partition(p))
    return EXIT_OK if seeds else EXIT_VIOLATIONS


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 0 for --help/--version, 2 for usage errors
        return int(e.code or 0)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "generate":
        return _cmd_generate(args)
    if args.command == "bound":
        return _cmd_bound(args)
    if args.command == "table":
        return _cmd_table(args)
    if args.command == "search":
        if args.search_command == "ws":
            return _cmd_search_ws(args)
        return _cmd_search_seeds(args)
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
