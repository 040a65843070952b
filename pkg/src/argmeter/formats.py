"""File formats: TGF and APX for abstract graphs, a line-based format for
instantiated graphs, knowledge-base files, and the measure report.

All renderers sort their output, so parse/render round-trips are exact on the
internal representation and rendered documents are deterministic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .arguments import ATTACK_KINDS, ClassicalArgument, InstantiatedGraph
from .errors import ArgumentConstructionError, ParseError
from .graphs import ArgumentGraph, graph
from .logic import Formula, parse_formula, render

GRAPH_FORMATS = ("tgf", "apx")
INST_HEADER = "argmeter-inst v1"


# ---------------------------------------------------------------------------
# TGF: node ids, one per line, then '#', then 'src dst' lines


def parse_tgf(text: str) -> ArgumentGraph:
    nodes: list[str] = []
    arcs: list[tuple[str, str]] = []
    in_arcs = False
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if in_arcs:
                raise ParseError("second '#' separator", line=number)
            in_arcs = True
            continue
        parts = line.split()
        if not in_arcs:
            if len(parts) != 1:
                raise ParseError(f"expected a single node id, got {line!r}", line=number)
            nodes.append(parts[0])
        else:
            if len(parts) != 2:
                raise ParseError(f"expected 'source target', got {line!r}", line=number)
            src, dst = parts
            for name in (src, dst):
                if name not in nodes:
                    raise ParseError(
                        f"arc endpoint {name!r} is not a declared node",
                        line=number,
                        column=raw.index(name) + 1,
                    )
            arcs.append((src, dst))
    try:
        return graph(nodes, arcs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def render_tgf(g: ArgumentGraph) -> str:
    lines = g.sorted_nodes() + ["#"] + [f"{s} {t}" for s, t in g.sorted_arcs()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# APX: arg(a). and att(a,b). facts


def parse_apx(text: str) -> ArgumentGraph:
    nodes: list[str] = []
    arcs: list[tuple[str, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%") or line.startswith("#"):
            continue
        for statement in filter(None, (part.strip() for part in line.split("."))):
            if statement.startswith("arg(") and statement.endswith(")"):
                nodes.append(statement[4:-1].strip())
            elif statement.startswith("att(") and statement.endswith(")"):
                inner = statement[4:-1]
                parts = [p.strip() for p in inner.split(",")]
                if len(parts) != 2:
                    raise ParseError(f"malformed attack {statement!r}", line=number)
                src, dst = parts
                for name in (src, dst):
                    if name not in nodes:
                        raise ParseError(
                            f"attack endpoint {name!r} is not a declared argument",
                            line=number,
                            column=raw.index(name) + 1 if name in raw else None,
                        )
                arcs.append((src, dst))
            else:
                raise ParseError(f"unrecognized statement {statement!r}", line=number)
    try:
        return graph(nodes, arcs)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def render_apx(g: ArgumentGraph) -> str:
    lines = [f"arg({a})." for a in g.sorted_nodes()]
    lines += [f"att({s},{t})." for s, t in g.sorted_arcs()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, fmt: str) -> ArgumentGraph:
    if fmt == "tgf":
        return parse_tgf(text)
    if fmt == "apx":
        return parse_apx(text)
    raise ValueError(f"unknown graph format {fmt!r}; expected one of {GRAPH_FORMATS}")


def render_graph(g: ArgumentGraph, fmt: str) -> str:
    if fmt == "tgf":
        return render_tgf(g)
    if fmt == "apx":
        return render_apx(g)
    raise ValueError(f"unknown graph format {fmt!r}; expected one of {GRAPH_FORMATS}")


def guess_format(filename: str) -> str:
    lowered = filename.lower()
    if lowered.endswith(".apx"):
        return "apx"
    if lowered.endswith(".inst"):
        return "inst"
    return "tgf"


# ---------------------------------------------------------------------------
# knowledge-base files: one formula per line, '#' comments


def parse_kb(text: str) -> frozenset[Formula]:
    formulas = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            formulas.append(parse_formula(line))
        except ParseError as exc:
            raise ParseError(f"bad formula {line!r}: {exc}", line=number) from exc
    return frozenset(formulas)


def render_kb(formulas: Iterable[Formula]) -> str:
    return "\n".join(sorted(render(f) for f in formulas)) + "\n"


# ---------------------------------------------------------------------------
# instantiated graphs: versioned header, node blocks, arc lines
#
#   argmeter-inst v1
#   node A1
#   support a
#   support a -> b
#   claim b
#   end
#   arc A2 A1 direct-undercut


def parse_instantiated(text: str) -> InstantiatedGraph:
    lines = text.splitlines()
    if not lines or lines[0].strip() != INST_HEADER:
        raise ParseError(f"missing header line {INST_HEADER!r}", line=1)
    binding: dict[str, ClassicalArgument] = {}
    kinds: dict[tuple[str, str], str] = {}
    current: str | None = None
    support: list[Formula] = []
    claim: Formula | None = None

    def finish(number: int) -> None:
        nonlocal current, support, claim
        if current is None:
            return
        if claim is None:
            raise ParseError(f"node {current!r} has no claim", line=number)
        try:
            binding[current] = ClassicalArgument(frozenset(support), claim)
        except ArgumentConstructionError as exc:
            raise ParseError(f"node {current!r} is not a valid argument: {exc}", line=number) from exc
        current, support, claim = None, [], None

    for number, raw in enumerate(lines[1:], start=2):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "node":
            if current is not None:
                raise ParseError(f"node {current!r} not closed with 'end'", line=number)
            if not rest:
                raise ParseError("node line without an id", line=number)
            if rest in binding:
                raise ParseError(f"duplicate node id {rest!r}", line=number)
            current = rest
        elif keyword == "support":
            if current is None:
                raise ParseError("support line outside a node block", line=number)
            support.append(parse_formula(rest))
        elif keyword == "claim":
            if current is None:
                raise ParseError("claim line outside a node block", line=number)
            if claim is not None:
                raise ParseError(f"node {current!r} has two claims", line=number)
            claim = parse_formula(rest)
        elif keyword == "end":
            if current is None:
                raise ParseError("'end' outside a node block", line=number)
            finish(number)
        elif keyword == "arc":
            if current is not None:
                raise ParseError(f"node {current!r} not closed with 'end'", line=number)
            parts = rest.split()
            if len(parts) != 3:
                raise ParseError(f"expected 'arc source target kind', got {line!r}", line=number)
            src, dst, kind = parts
            if kind not in ATTACK_KINDS:
                raise ParseError(f"unknown attack kind {kind!r}", line=number)
            for name in (src, dst):
                if name not in binding:
                    raise ParseError(f"arc endpoint {name!r} is not a declared node", line=number)
            kinds[(src, dst)] = kind
        else:
            raise ParseError(f"unrecognized line {line!r}", line=number)
    if current is not None:
        raise ParseError(f"node {current!r} not closed with 'end'", line=len(lines))
    return InstantiatedGraph(binding, kinds)


def render_instantiated(ig: InstantiatedGraph) -> str:
    lines = [INST_HEADER, ""]
    for name in ig.graph.sorted_nodes():
        argument = ig.binding[name]
        lines.append(f"node {name}")
        for premise in sorted(argument.support, key=render):
            lines.append(f"support {render(premise)}")
        lines.append(f"claim {render(argument.claim)}")
        lines.append("end")
        lines.append("")
    for src, dst in ig.graph.sorted_arcs():
        lines.append(f"arc {src} {dst} {ig.attack_kinds[(src, dst)]}")
    return "\n".join(lines).rstrip("\n") + "\n"


# ---------------------------------------------------------------------------
# measure report


def fraction_str(value: Fraction) -> str:
    """Canonical fraction text: reduced, explicit denominator."""
    return f"{value.numerator}/{value.denominator}"


@dataclass
class MeasureReport:
    graph_id: str
    values: dict[str, Fraction] = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def to_json(self) -> dict:
        return {
            "graph": self.graph_id,
            "measures": {name: fraction_str(v) for name, v in sorted(self.values.items())},
            "approx": {name: float(v) for name, v in sorted(self.values.items())},
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_table(self) -> str:
        width = max((len(name) for name in self.values), default=7)
        rows = [f"{'measure':<{width}}  value      (approx)"]
        for name, value in sorted(self.values.items()):
            rows.append(f"{name:<{width}}  {fraction_str(value):<9}  {float(value):.6g}")
        return "\n".join(rows)


def measure_report(graph_id: str, measures: dict[str, object], item) -> MeasureReport:
    """Evaluate the given measure callables against one graph, timing the run."""
    started = time.perf_counter()
    values = {name: fn(item) for name, fn in measures.items()}
    elapsed = (time.perf_counter() - started) * 1000.0
    return MeasureReport(graph_id, values, elapsed)
