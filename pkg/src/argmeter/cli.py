"""Command-line interface.

Subcommands: measure, semantics, dmeasure, argtree, mus, properties, resolve.
Output is deterministic JSON (sorted keys, canonical fractions) unless a
table view is requested. Exit codes: 0 success, 1 domain error, 2 usage
error. With --json, domain errors are emitted as JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import ArgmeterError
from .extension_measures import EXTENSION_MEASURES
from .formats import (
    MeasureReport,
    fraction_str,
    guess_format,
    measure_report,
    parse_graph,
    parse_instantiated,
    parse_kb,
)
from .instantiated_measures import (
    INSTANTIATED_MEASURES,
    build_argument_tree,
    i_arg,
)
from .logic import min_inconsistent_subsets, parse_formula, render
from .properties import (
    ABSTRACT_MEASURES,
    DEFAULT_SEED,
    OPTIONAL_PROPERTIES,
    check_basic_axioms,
    check_optional_property,
    random_corpus,
    standard_seed_graphs,
)
from .semantics import KINDS, extensions, labellings

ALL_MEASURE_IDS = {**ABSTRACT_MEASURES, **INSTANTIATED_MEASURES}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="argmeter",
        description="Inconsistency measures and guided resolution for argument graphs.",
    )
    parser.add_argument("--json", action="store_true", help="emit errors as JSON on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    measure = sub.add_parser("measure", help="evaluate measures on an abstract graph")
    measure.add_argument("graphfile")
    measure.add_argument(
        "--measures",
        default="dr,in,win,wou,cc,wcc,ic",
        help="comma-separated measure ids (default: the seven structure measures)",
    )
    measure.add_argument("--format", choices=("tgf", "apx"), default=None)
    measure.add_argument("--table", action="store_true", help="human-readable table")
    measure.add_argument("--full", action="store_true", help="full report with timing")

    semantics = sub.add_parser("semantics", help="enumerate extensions or labellings")
    semantics.add_argument("graphfile")
    semantics.add_argument("--kind", choices=KINDS, default="gr")
    semantics.add_argument("--form", choices=("extensions", "labellings"), default="extensions")
    semantics.add_argument("--format", choices=("tgf", "apx"), default=None)

    dmeasure = sub.add_parser("dmeasure", help="evaluate measures on an instantiated graph")
    dmeasure.add_argument("instfile")
    dmeasure.add_argument("--measures", default="cu,C_M,C_#,S_M,S_#")
    dmeasure.add_argument("--table", action="store_true")
    dmeasure.add_argument("--full", action="store_true")

    argtree = sub.add_parser("argtree", help="build an argument tree and measure its root conflict")
    argtree.add_argument("kbfile")
    argtree.add_argument("--root", required=True, help="root premise formula")
    argtree.add_argument("--variant", type=int, choices=(1, 2, 3), default=None)

    mus = sub.add_parser("mus", help="minimal inconsistent subsets of a knowledge base")
    mus.add_argument("kbfile")

    properties = sub.add_parser("properties", help="randomized property report for one measure")
    properties.add_argument("--measure", required=True, choices=sorted(ALL_MEASURE_IDS))
    properties.add_argument("--seed", type=int, default=DEFAULT_SEED)
    properties.add_argument("--trials", type=int, default=200)

    resolve = sub.add_parser("resolve", help="interactive resolution session or HTTP service")
    resolve.add_argument("graphfile", nargs="?")
    resolve.add_argument("--serve", action="store_true", help="start the HTTP service")
    resolve.add_argument("--host", default="127.0.0.1")
    resolve.add_argument("--port", type=int, default=8023)
    resolve.add_argument("--allow-origin", default=None, help="CORS origin for the browser UI")
    resolve.add_argument("--serve-ui", default=None, metavar="DIR", help="serve static UI assets")
    resolve.add_argument("--snapshot-dir", default=None, metavar="DIR")
    resolve.add_argument(
        "--measures", default="in,cc", help="measures tracked during the session"
    )
    return parser


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _load_graph(path: str, fmt: str | None):
    return parse_graph(_read(path), fmt or guess_format(path))


def _split_measures(spec: str, registry: dict) -> dict:
    names = [name.strip() for name in spec.split(",") if name.strip()]
    unknown = [name for name in names if name not in registry]
    if unknown:
        raise ArgmeterError(
            f"unknown measure(s): {', '.join(unknown)}; available: {', '.join(sorted(registry))}"
        )
    return {name: registry[name] for name in names}


def _print_report(report: MeasureReport, args) -> None:
    if args.table:
        print(report.to_table())
    elif args.full:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(json.dumps(
            {name: fraction_str(v) for name, v in report.values.items()}, sort_keys=True
        ))


def cmd_measure(args) -> int:
    g = _load_graph(args.graphfile, args.format)
    registry = _split_measures(args.measures, ABSTRACT_MEASURES)
    report = measure_report(Path(args.graphfile).name, registry, g)
    _print_report(report, args)
    return 0


def cmd_semantics(args) -> int:
    g = _load_graph(args.graphfile, args.format)
    if args.form == "extensions":
        found = extensions(g, args.kind)
        print(json.dumps(sorted(sorted(s) for s in found)))
    else:
        found = labellings(g, args.kind)
        rows = sorted(
            ({a: labelling[a] for a in sorted(labelling)} for labelling in found),
            key=json.dumps,
        )
        print(json.dumps(rows))
    return 0


def cmd_dmeasure(args) -> int:
    ig = parse_instantiated(_read(args.instfile))
    registry = _split_measures(args.measures, INSTANTIATED_MEASURES)
    report = measure_report(Path(args.instfile).name, registry, ig)
    _print_report(report, args)
    return 0


def cmd_argtree(args) -> int:
    base = parse_kb(_read(args.kbfile))
    root = parse_formula(args.root)
    tree = build_argument_tree(base, root)
    variants = (args.variant,) if args.variant else (1, 2, 3)
    payload = {
        "root": render(root),
        "size": tree.size(),
        "height": tree.height(),
        "undercuts": len(tree.root.children),
        "values": {f"arg{v}": fraction_str(i_arg(tree, v)) for v in variants},
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def cmd_mus(args) -> int:
    base = parse_kb(_read(args.kbfile))
    found = min_inconsistent_subsets(base)
    print(json.dumps(sorted(sorted(render(f) for f in mus) for mus in found)))
    return 0


def cmd_properties(args) -> int:
    corpus = random_corpus(args.trials, seed=args.seed) + standard_seed_graphs()
    reports = [check_basic_axioms(args.measure, corpus)]
    for prop in OPTIONAL_PROPERTIES:
        reports.append(check_optional_property(args.measure, prop, corpus, seed=args.seed))
    for report in reports:
        print(report.summary())
        for violation in report.violations[:3]:
            print(f"  e.g. {violation}")
    return 0


def cmd_resolve(args) -> int:
    if args.serve:
        from .service import create_app, run_server

        app = create_app(
            allow_origin=args.allow_origin,
            snapshot_dir=args.snapshot_dir,
            ui_dir=args.serve_ui,
        )
        run_server(app, host=args.host, port=args.port)
        return 0
    if not args.graphfile:
        raise ArgmeterError("resolve needs a graph file (or --serve)")
    from .repl import run_repl

    g = _load_graph(args.graphfile, None)
    registry = _split_measures(args.measures, ABSTRACT_MEASURES)
    return run_repl(g, registry)


COMMANDS = {
    "measure": cmd_measure,
    "semantics": cmd_semantics,
    "dmeasure": cmd_dmeasure,
    "argtree": cmd_argtree,
    "mus": cmd_mus,
    "properties": cmd_properties,
    "resolve": cmd_resolve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ArgmeterError as exc:
        if args.json:
            print(
                json.dumps({"error": type(exc).__name__, "message": str(exc)}),
                file=sys.stderr,
            )
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
