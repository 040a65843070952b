"""Interactive terminal loop for resolution sessions."""

from __future__ import annotations

import sys

from .errors import ArgmeterError
from .formats import fraction_str
from .graphs import ArgumentGraph
from .resolution import (
    apply_answer,
    initial_state,
    is_committed,
    rank_queries,
    reduced_graph,
    undo,
)

HELP = """commands:
  state                 current labelling, reduced graph and measure values
  recommend [measure]   what-if table for the undecided arguments
  answer <arg> <in|out> commit one answer
  undo                  take back the last answer
  help                  this text
  quit                  leave the session"""


def _show_state(state, registry, out) -> None:
    labels = " ".join(f"{a}:{state.labelling[a]}" for a in state.graph.sorted_nodes())
    print(f"labelling: {labels}", file=out)
    reduced = reduced_graph(state)
    arcs = ", ".join(f"{s}->{t}" for s, t in reduced.sorted_arcs()) or "none"
    print(f"reduced graph: nodes {', '.join(reduced.sorted_nodes()) or 'none'}; arcs {arcs}", file=out)
    for name, fn in registry.items():
        print(f"  {name} = {fraction_str(fn(reduced))}", file=out)
    if is_committed(state):
        print("all arguments committed.", file=out)


def run_repl(g: ArgumentGraph, registry, stdin=None, stdout=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    state = initial_state(g)
    default_measure = next(iter(registry))
    print(f"resolution session: {len(g.nodes)} arguments, {len(g.arcs)} attacks", file=out)
    print(HELP, file=out)
    _show_state(state, registry, out)
    for raw in stdin:
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        command, rest = parts[0], parts[1:]
        try:
            if command == "quit":
                break
            elif command == "help":
                print(HELP, file=out)
            elif command == "state":
                _show_state(state, registry, out)
            elif command == "recommend":
                name = rest[0] if rest else default_measure
                if name not in registry:
                    print(f"unknown measure {name!r}", file=out)
                    continue
                table = rank_queries(state, registry[name])
                if not table:
                    print("nothing left to ask.", file=out)
                    continue
                for row in table:
                    print(
                        f"  {row.query}: in->{fraction_str(row.value_if_in)} "
                        f"out->{fraction_str(row.value_if_out)} "
                        f"expected reduction {fraction_str(row.expected_reduction)}",
                        file=out,
                    )
                print(f"recommended query: {table[0].query}", file=out)
            elif command == "answer":
                if len(rest) != 2 or rest[1] not in ("in", "out"):
                    print("usage: answer <arg> <in|out>", file=out)
                    continue
                state = apply_answer(state, rest[0], rest[1])
                _show_state(state, registry, out)
            elif command == "undo":
                state = undo(state)
                _show_state(state, registry, out)
            else:
                print(f"unknown command {command!r}; try 'help'", file=out)
        except (ArgmeterError, ValueError) as exc:
            print(f"error: {exc}", file=out)
    return 0
