"""Command line interface: ``radiolab <subcommand> ...``.

Exit status: 0 success, 1 usage error, 2 when computed results contradict
certified data (grid conflicts, or a pattern document that fails
verification).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import documents
from .bounds import best_bounds
from .cache import ResultCache
from .graph import DistanceFamily, Kind, distance
from .patterns import build_pattern, verify_periodic
from .reference import load_reference
from .report import run_grid
from .search import BudgetExhausted, SearchConfig, exact_value, find_pattern, prove_lower

EXIT_OK, EXIT_USAGE, EXIT_CONFLICT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _family(kind: str, t: str) -> DistanceFamily:
    try:
        return DistanceFamily.parse(kind, t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _range(text: str) -> range:
    """``"2..5"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return range(int(a), int(b) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected A..B") from exc


def _int_list(text: str) -> list[int]:
    try:
        out = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            out.extend(_range(part) if ".." in part else [int(part)])
        return out
    except ValueError as exc:
        raise UsageError(f"bad list {text!r}") from exc


def _config(args) -> SearchConfig:
    return SearchConfig(max_prefix=args.prefix, node_budget=args.nodes, time_budget=args.time,
                        workers=getattr(args, "workers", 1))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_dist(args) -> int:
    fam = _family(args.family, args.t)
    print(distance(fam, args.i, args.j))
    return EXIT_OK


def cmd_bounds(args) -> int:
    fam = _family(args.family, args.t)
    if fam.kind is Kind.GENERAL:
        raise UsageError("bounds needs one of the named families")
    rec = best_bounds(fam, args.k)
    print(f"lower {rec.lower}  [{rec.lower_formula}]")
    print(f"upper {rec.upper}  [{rec.upper_formula}]")
    return EXIT_OK


def cmd_pattern_build(args) -> int:
    fam = _family(args.family, args.t)
    try:
        p = build_pattern(fam, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(documents.dump(documents.pattern_to_doc(p)), args.out)
    return EXIT_OK


def cmd_pattern_verify(args) -> int:
    try:
        p = documents.pattern_from_doc(documents.load(args.file))
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read pattern: {exc}") from exc
    bad = verify_periodic(p)
    if bad is None:
        print(f"accept span={p.span} period={p.period}")
        return EXIT_OK
    print(f"reject i={bad.i} j={bad.j} label_gap={bad.label_gap} dist={bad.dist}")
    return EXIT_CONFLICT


def cmd_prove_lower(args) -> int:
    fam = _family(args.family, args.t)
    out = prove_lower(fam, args.k, args.l, _config(args))
    if out.proven:
        print(f"proven rl_{args.k} > {args.l} (prefix {out.prefix_used}, {out.nodes} nodes)")
    else:
        print(f"inconclusive: {out.reason.value} ({out.nodes} nodes)")
    if args.out:
        documents.dump(documents.proof_to_doc(out), args.out)
    return EXIT_OK


def cmd_find_pattern(args) -> int:
    fam = _family(args.family, args.t)
    periods = _int_list(args.periods) if args.periods else None
    cfg = SearchConfig(node_budget=args.nodes, time_budget=args.time)
    try:
        p = find_pattern(fam, args.k, args.span, periods, cfg)
    except BudgetExhausted:
        print("inconclusive: budget-exhausted")
        return EXIT_OK
    if p is None:
        print("none")
        return EXIT_OK
    _emit(documents.dump(documents.pattern_to_doc(p)), args.out)
    return EXIT_OK


def cmd_exact(args) -> int:
    fam = _family(args.family, args.t)
    res = exact_value(fam, args.k, _config(args))
    r = res.record
    tag = "exact" if r.exact else "range"
    print(f"{tag} {r.lower} {r.upper}  [lower: {r.lower_provenance.value}, upper: {res.pattern.source}]")
    return EXIT_OK


def cmd_table(args) -> int:
    kinds = []
    for name in args.families.split(","):
        try:
            kinds.append(DistanceFamily.parse(name, 3).kind)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    try:
        reference = load_reference(args.ref)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read reference: {exc}") from exc
    cfg = SearchConfig(max_prefix=args.prefix, node_budget=args.nodes, time_budget=args.budget)
    cache = None if args.no_cache else ResultCache()
    report = run_grid(kinds, _range(args.t), _range(args.k), cfg, reference=reference,
                      cache=cache, workers=args.workers)
    text = report.to_json() if args.format == "json" else report.to_csv()
    _emit(text, args.output)
    n = len(report.conflicts)
    print(f"{len(report.rows)} rows, {n} conflicts", file=sys.stderr)
    return EXIT_CONFLICT if n else EXIT_OK


def _budget_flags(p, prefix=True):
    if prefix:
        p.add_argument("--prefix", type=int, default=60, help="number of consecutive vertices to label")
    p.add_argument("--nodes", type=int, default=10_000_000, help="DFS node budget")
    p.add_argument("--time", type=float, default=30.0, help="time budget in seconds")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="radiolab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("dist", help="distance between two vertices")
    p.add_argument("family")
    p.add_argument("t")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.set_defaults(fn=cmd_dist)

    p = sub.add_parser("bounds", help="closed-form lower and upper bounds")
    p.add_argument("family")
    p.add_argument("t")
    p.add_argument("k", type=int)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("pattern", help="build or verify periodic patterns")
    psub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    b = psub.add_parser("build")
    b.add_argument("family")
    b.add_argument("t")
    b.add_argument("k", type=int)
    b.add_argument("-o", "--out")
    b.set_defaults(fn=cmd_pattern_build)
    v = psub.add_parser("verify")
    v.add_argument("file")
    v.set_defaults(fn=cmd_pattern_verify)

    p = sub.add_parser("prove-lower", help="prefix search for rl_k > l")
    p.add_argument("family")
    p.add_argument("t")
    p.add_argument("k", type=int)
    p.add_argument("l", type=int)
    _budget_flags(p)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("-o", "--out", help="write the proof certificate here")
    p.set_defaults(fn=cmd_prove_lower)

    p = sub.add_parser("find-pattern", help="search for a periodic pattern")
    p.add_argument("family")
    p.add_argument("t")
    p.add_argument("k", type=int)
    p.add_argument("span", type=int)
    p.add_argument("--periods", help="comma list, ranges allowed: 7,9..12")
    _budget_flags(p, prefix=False)
    p.add_argument("-o", "--out")
    p.set_defaults(fn=cmd_find_pattern)

    p = sub.add_parser("exact", help="close the gap for one cell")
    p.add_argument("family")
    p.add_argument("t")
    p.add_argument("k", type=int)
    _budget_flags(p)
    p.set_defaults(fn=cmd_exact)

    p = sub.add_parser("table", help="bound grid against the reference tables")
    p.add_argument("--families", default="consecutive,one-and-t,two-consecutive")
    p.add_argument("--t", default="2..9")
    p.add_argument("--k", default="2..9")
    p.add_argument("--budget", type=float, default=30.0, help="seconds per cell")
    p.add_argument("--nodes", type=int, default=10_000_000, help="DFS node budget per search")
    p.add_argument("--prefix", type=int, default=60)
    p.add_argument("--out", dest="format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", help="file to write instead of stdout")
    p.add_argument("--ref", help="reference CSV (defaults to the shipped tables)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(fn=cmd_table)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"radiolab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"radiolab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


cli_main = main

if __name__ == "__main__":
    sys.exit(main())
