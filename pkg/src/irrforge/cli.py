"""Command-line surface.

Subcommands: compute, caterpillar, enumerate, extremal, bounds, falsify,
tables, series.  Exit codes: 0 success, 1 usage error, 2 input validation
error, 3 size cap exceeded.  An optional JSON config file supplies flag
defaults (same keys as the long flag names); explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .bounds import (
    EngineOptions,
    Instance,
    catalog_ids,
    evaluate_bound,
    series_lhs,
    series_rhs,
    verdict_csv_header,
    verdict_csv_row,
    verdict_to_json,
)
from .caterpillar import BackboneArrangement, build_caterpillar, closed_form_irr
from .errors import CapExceeded, IrrforgeError
from .extremal import (
    Interpretation,
    extremal_over_arrangements,
    extremal_over_realizations,
)
from .falsify import Family, SearchSpace, scan
from .report import reproduce_tables
from .treegen import count_labeled_trees, enumerate_labeled_trees, enumerate_unlabeled_trees
from .trees import (
    Tree,
    albertson_index,
    degree_sequence_of,
    format_edge_list,
    parse_degrees,
    parse_edge_list,
    sigma_index,
    total_irregularity,
    variance_form,
)

__all__ = ["main", "cli_main"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse API
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise _UsageError(message)


def _read_config(argv: Sequence[str]) -> dict:
    """Pull --config FILE out-of-band so its values can seed parser defaults."""
    for i, arg in enumerate(argv):
        if arg == "--config":
            if i + 1 >= len(argv):
                return {}
            with open(argv[i + 1]) as fh:
                return json.load(fh)
        if arg.startswith("--config="):
            with open(arg.split("=", 1)[1]) as fh:
                return json.load(fh)
    return {}


def _build_parser() -> _Parser:
    parser = _Parser(prog="irrforge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[], help="indices of an edge-list file")
    p.add_argument("file", help="edge-list file: first line n, then n-1 lines 'u v'")

    p = sub.add_parser("caterpillar", help="spine arrangement to index value")
    p.add_argument("--backbone", required=True, help="comma-separated spine degrees in path order")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--closed-form", action="store_true", help="closed form only")
    g.add_argument("--direct", action="store_true", help="build the tree and sum edges")
    g.add_argument("--both", action="store_true", help="both values (default)")

    p = sub.add_parser("enumerate", help="trees realizing a degree sequence")
    p.add_argument("--degrees", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--labeled", action="store_true", help="labeled realizations (default)")
    g.add_argument("--unlabeled", action="store_true", help="one tree per isomorphism class")
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("extremal", help="min/max index over a family")
    p.add_argument("--degrees", required=True)
    p.add_argument(
        "--family",
        required=True,
        choices=[i.value for i in Interpretation],
    )

    p = sub.add_parser("bounds", help="evaluate cataloged claims on an instance")
    p.add_argument("--degrees")
    p.add_argument("--tree", help="edge-list file")
    p.add_argument("--bounds", help="comma-separated ids, default all")
    p.add_argument("--mode", choices=["literal", "proof"], default="literal")
    p.add_argument("--format", choices=["json", "csv", "md"], default="json")
    p.add_argument(
        "--include-discontinuities",
        action="store_true",
        help="evaluate the series identity even at floor/ceil jumps",
    )

    p = sub.add_parser("falsify", help="scan a family for counterexamples")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--family", choices=[f.value for f in Family], default=Family.ALL_TREES.value)
    p.add_argument("--bounds", help="comma-separated ids, default all")
    p.add_argument("--mode", choices=["literal", "proof"], default="literal")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=["json", "md"], default="json")

    p = sub.add_parser("tables", help="reproduce a fixture table")
    p.add_argument("--which", type=int, choices=[1, 2], required=True)
    p.add_argument(
        "--interpretation",
        choices=[i.value for i in Interpretation],
        default=Interpretation.CATERPILLAR_ARRANGEMENTS.value,
    )
    p.add_argument("--format", choices=["json", "md"], default="json")

    p = sub.add_parser("series", help="truncated series side of the floor/ceil identity")
    p.add_argument("--n", type=float, required=True)
    p.add_argument("--terms", type=int, default=100_000)

    for sp in sub.choices.values():
        sp.add_argument("--config", help="JSON file of flag defaults", default=None)
    return parser


def _seed_config(parser: _Parser, config: dict) -> None:
    """Install config values as subcommand defaults; explicit flags override."""
    if not config:
        return
    sub = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    for sp in set(sub.choices.values()):
        for action in sp._actions:
            key = action.dest.replace("_", "-")
            if key in config or action.dest in config:
                action.default = config.get(key, config.get(action.dest))
                action.required = False


def _parse_ids(raw: Optional[str]) -> Optional[list[str]]:
    if raw is None:
        return None
    ids = [s.strip() for s in raw.split(",") if s.strip()]
    known = set(catalog_ids())
    for bid in ids:
        if bid not in known:
            raise IrrforgeError(f"unknown bound id {bid!r}")
    return ids


def _cmd_compute(args) -> int:
    with open(args.file) as fh:
        t = parse_edge_list(fh.read())
    obj = {
        "n": t.n,
        "m": len(t.edges),
        "degrees": list(degree_sequence_of(t).degrees),
        "albertson": albertson_index(t),
        "total_irregularity": total_irregularity(t),
        "variance_form": variance_form(t),
        "sigma": sigma_index(t),
    }
    print(json.dumps(obj, indent=2))
    return 0


def _cmd_caterpillar(args) -> int:
    spine = tuple(int(s) for s in args.backbone.split(","))
    arrangement = BackboneArrangement(spine)
    want_closed = args.closed_form or args.both or not (args.closed_form or args.direct)
    want_direct = args.direct or args.both or not (args.closed_form or args.direct)
    if want_closed:
        print(f"closed-form {closed_form_irr(arrangement)}")
    if want_direct:
        print(f"direct {albertson_index(build_caterpillar(arrangement))}")
    return 0


def _cmd_enumerate(args) -> int:
    seq = parse_degrees(args.degrees)
    if args.unlabeled:
        trees = enumerate_unlabeled_trees(seq)
        if args.count_only:
            print(len(trees))
            return 0
        print("\n".join(format_edge_list(t) for t in trees), end="")
        return 0
    if args.count_only:
        print(count_labeled_trees(seq))
        return 0
    blocks = [format_edge_list(t) for t in enumerate_labeled_trees(seq)]
    print("\n".join(blocks), end="")
    return 0


def _witness_json(w) -> object:
    if isinstance(w, BackboneArrangement):
        return list(w.spine)
    if isinstance(w, Tree):
        return {"n": w.n, "edges": [list(e) for e in w.edges]}
    return None


def _cmd_extremal(args) -> int:
    seq = parse_degrees(args.degrees)
    if args.family == Interpretation.CATERPILLAR_ARRANGEMENTS.value:
        res = extremal_over_arrangements(seq.degrees)
    else:
        res = extremal_over_realizations(seq)
    obj = {
        "interpretation": res.interpretation.value,
        "min": res.min_value,
        "max": res.max_value,
        "argmin": _witness_json(res.argmin),
        "argmax": _witness_json(res.argmax),
        "examined": res.instances_examined,
    }
    print(json.dumps(obj, indent=2))
    return 0


def _cmd_bounds(args) -> int:
    if args.tree is None and args.degrees is None:
        raise IrrforgeError("need --tree FILE or --degrees LIST")
    if args.tree is not None:
        with open(args.tree) as fh:
            t = parse_edge_list(fh.read())
        inst = Instance.from_tree(t)
        if args.degrees is not None:
            given = parse_degrees(args.degrees)
            if given.degrees != inst.degree_sequence.degrees:
                raise IrrforgeError(
                    f"--degrees {given.degrees} does not match the tree's "
                    f"{inst.degree_sequence.degrees}"
                )
    else:
        inst = Instance.from_degree_sequence(parse_degrees(args.degrees))
    ids = _parse_ids(args.bounds) or catalog_ids()
    options = EngineOptions(include_discontinuities=args.include_discontinuities)
    verdicts = [(bid, evaluate_bound(bid, inst, args.mode, options)) for bid in sorted(ids)]
    if args.format == "json":
        for _bid, v in verdicts:
            print(verdict_to_json(v, inst))
    elif args.format == "csv":
        print(verdict_csv_header())
        for _bid, v in verdicts:
            print(verdict_csv_row(v, inst))
    else:
        print("| bound | status | lhs | rhs | slack |")
        print("|-------|--------|-----|-----|-------|")
        from .bounds import _value_str  # shared formatting

        for bid, v in verdicts:
            print(
                f"| {bid} | {v.status} | {_value_str(v.lhs) or '-'} "
                f"| {_value_str(v.rhs) or '-'} | {_value_str(v.slack) or '-'} |"
            )
    return 0


def _cmd_falsify(args) -> int:
    space = SearchSpace(
        family=Family(args.family),
        n_min=args.min_n,
        n_max=args.max_n,
        mode=args.mode,
    )
    report = scan(space, bounds=_parse_ids(args.bounds), workers=args.workers)
    print(report.to_json() if args.format == "json" else report.to_markdown(), end="")
    print()
    return 0


def _cmd_tables(args) -> int:
    report = reproduce_tables(args.which, Interpretation(args.interpretation))
    print(report.to_json() if args.format == "json" else report.to_markdown(), end="")
    print()
    return 0


def _cmd_series(args) -> int:
    lhs = series_lhs(args.n)
    rhs = series_rhs(args.n, args.terms)
    obj = {
        "n": args.n,
        "terms": args.terms,
        "lhs": lhs,
        "rhs": rhs,
        "abs_diff": abs(lhs - rhs),
    }
    print(json.dumps(obj, indent=2))
    return 0


_COMMANDS = {
    "compute": _cmd_compute,
    "caterpillar": _cmd_caterpillar,
    "enumerate": _cmd_enumerate,
    "extremal": _cmd_extremal,
    "bounds": _cmd_bounds,
    "falsify": _cmd_falsify,
    "tables": _cmd_tables,
    "series": _cmd_series,
}


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand; returns the process exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        config = _read_config(argv)
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"irrforge: config error: {exc}\n")
        return 2
    try:
        _seed_config(parser, config)
        args = parser.parse_args(argv)
    except _UsageError:
        return 1
    try:
        return _COMMANDS[args.command](args)
    except CapExceeded as exc:
        sys.stderr.write(f"irrforge: cap exceeded: {exc}\n")
        return 3
    except (IrrforgeError, OSError, ValueError) as exc:
        sys.stderr.write(f"irrforge: {exc}\n")
        return 2


def main() -> None:
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
