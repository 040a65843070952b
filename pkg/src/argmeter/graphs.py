"""Argument graphs and their structural subroutines.

An argument graph is a finite directed graph: nodes are argument ids, an arc
(A, B) says that A attacks B. Values are immutable; every operation here is a
pure function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .errors import ResourceLimitError, UnknownArgumentError

ArgumentId = str
Arc = tuple[str, str]

#: Node-count guard for the exponential enumerations (cycles, isomorphism).
DEFAULT_NODE_CAP = 20

_ID_RE = re.compile(r"^[A-Za-z0-9_]+$")


@dataclass(frozen=True)
class ArgumentGraph:
    nodes: frozenset[ArgumentId]
    arcs: frozenset[Arc]

    def __post_init__(self) -> None:
        for name in self.nodes:
            if not isinstance(name, str) or not _ID_RE.match(name):
                raise ValueError(f"invalid argument id: {name!r}")
        for arc in self.arcs:
            src, dst = arc
            if src not in self.nodes or dst not in self.nodes:
                raise ValueError(f"arc endpoint outside node set: ({src}, {dst})")

    def sorted_nodes(self) -> list[ArgumentId]:
        return sorted(self.nodes)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def __repr__(self) -> str:  # compact, deterministic
        nodes = ",".join(self.sorted_nodes())
        arcs = ",".join(f"({s},{t})" for s, t in self.sorted_arcs())
        return f"ArgumentGraph([{nodes}], [{arcs}])"


def graph(nodes: Iterable[ArgumentId], arcs: Iterable[Arc] = ()) -> ArgumentGraph:
    """Build a graph from any iterables of node ids and (source, target) pairs."""
    return ArgumentGraph(frozenset(nodes), frozenset((s, t) for s, t in arcs))


EMPTY_GRAPH = graph((), ())


def attackers_of(g: ArgumentGraph) -> dict[ArgumentId, frozenset[ArgumentId]]:
    """Map each node to the set of its attackers."""
    result: dict[ArgumentId, set[ArgumentId]] = {a: set() for a in g.nodes}
    for src, dst in g.arcs:
        result[dst].add(src)
    return {a: frozenset(s) for a, s in result.items()}


def attackees_of(g: ArgumentGraph) -> dict[ArgumentId, frozenset[ArgumentId]]:
    """Map each node to the set of nodes it attacks."""
    result: dict[ArgumentId, set[ArgumentId]] = {a: set() for a in g.nodes}
    for src, dst in g.arcs:
        result[src].add(dst)
    return {a: frozenset(s) for a, s in result.items()}


def _require_nodes(g: ArgumentGraph, xs: Iterable[ArgumentId]) -> None:
    missing = [x for x in xs if x not in g.nodes]
    if missing:
        raise UnknownArgumentError(f"unknown argument(s): {', '.join(sorted(missing))}")


def indegree(g: ArgumentGraph, a: ArgumentId) -> int:
    """Number of arcs into `a`; a self-loop counts once."""
    _require_nodes(g, [a])
    return sum(1 for _, dst in g.arcs if dst == a)


def outdegree(g: ArgumentGraph, a: ArgumentId) -> int:
    """Number of arcs out of `a`; a self-loop counts once."""
    _require_nodes(g, [a])
    return sum(1 for src, _ in g.arcs if src == a)


def is_subgraph(g1: ArgumentGraph, g2: ArgumentGraph) -> bool:
    if not g1.nodes <= g2.nodes:
        return False
    allowed = {(s, t) for s, t in g2.arcs if s in g1.nodes and t in g1.nodes}
    return g1.arcs <= allowed


def induced(g: ArgumentGraph, xs: Iterable[ArgumentId]) -> ArgumentGraph:
    """Subgraph on the node set `xs`, keeping the arcs with both ends in `xs`."""
    wanted = frozenset(xs)
    _require_nodes(g, wanted)
    return ArgumentGraph(wanted, frozenset((s, t) for s, t in g.arcs if s in wanted and t in wanted))


def compose(g1: ArgumentGraph, g2: ArgumentGraph) -> ArgumentGraph:
    return ArgumentGraph(g1.nodes | g2.nodes, g1.arcs | g2.arcs)


def invert(g: ArgumentGraph) -> ArgumentGraph:
    return ArgumentGraph(g.nodes, frozenset((t, s) for s, t in g.arcs))


def is_complete(g: ArgumentGraph) -> bool:
    """True iff every ordered pair of nodes, including (A, A), is an arc."""
    return len(g.arcs) == len(g.nodes) ** 2


def is_disjoint(g1: ArgumentGraph, g2: ArgumentGraph) -> bool:
    return not (g1.nodes & g2.nodes)


def relabel(g: ArgumentGraph, mapping: Mapping[ArgumentId, ArgumentId]) -> ArgumentGraph:
    """Rename nodes through a bijective mapping (must cover every node)."""
    if set(mapping) != set(g.nodes) or len(set(mapping.values())) != len(g.nodes):
        raise ValueError("relabel mapping must be a bijection on the node set")
    return graph(
        (mapping[a] for a in g.nodes),
        ((mapping[s], mapping[t]) for s, t in g.arcs),
    )


def cycles(g: ArgumentGraph, cap: int = DEFAULT_NODE_CAP) -> frozenset[frozenset[ArgumentId]]:
    """All node subsets that carry a directed cycle through every member.

    A subset S qualifies when the subgraph induced on S has a directed closed
    walk visiting each member of S exactly once; a singleton {A} qualifies iff
    (A, A) is an arc. Those subsets are exactly the vertex sets of the
    elementary circuits of the graph, so we enumerate elementary circuits
    (rooted at their least node to visit each once) and collect distinct
    vertex sets.
    """
    if len(g.nodes) > cap:
        raise ResourceLimitError(f"cycle enumeration capped at {cap} nodes, graph has {len(g.nodes)}")
    order = g.sorted_nodes()
    index = {a: i for i, a in enumerate(order)}
    out = attackees_of(g)
    found: set[frozenset[ArgumentId]] = set()
    for start in order:
        # depth-first over simple paths confined to nodes >= start
        stack: list[tuple[ArgumentId, frozenset[ArgumentId]]] = [(start, frozenset([start]))]
        while stack:
            node, on_path = stack.pop()
            for nxt in out[node]:
                if index[nxt] < index[start]:
                    continue
                if nxt == start:
                    found.add(on_path)
                elif nxt not in on_path:
                    stack.append((nxt, on_path | {nxt}))
    return frozenset(found)


def _degree_signature(g: ArgumentGraph) -> dict[ArgumentId, tuple[int, int, int]]:
    ins = attackers_of(g)
    outs = attackees_of(g)
    return {
        a: (len(ins[a]), len(outs[a]), 1 if (a, a) in g.arcs else 0)
        for a in g.nodes
    }


def are_isomorphic(
    g1: ArgumentGraph, g2: ArgumentGraph, cap: int = DEFAULT_NODE_CAP
) -> Optional[dict[ArgumentId, ArgumentId]]:
    """An arc-preserving bijection from g1 onto g2, or None.

    Exhaustive backtracking pruned by (indegree, outdegree, self-loop)
    signatures. Returns the identity whenever the graphs are equal.
    """
    if len(g1.nodes) != len(g2.nodes) or len(g1.arcs) != len(g2.arcs):
        return None
    if max(len(g1.nodes), len(g2.nodes)) > cap:
        raise ResourceLimitError(f"isomorphism search capped at {cap} nodes")
    if g1.nodes == g2.nodes and g1.arcs == g2.arcs:
        return {a: a for a in g1.nodes}

    sig1 = _degree_signature(g1)
    sig2 = _degree_signature(g2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    # rarest signature first keeps the branching factor low
    by_sig: dict[tuple[int, int, int], list[ArgumentId]] = {}
    for b in sorted(g2.nodes):
        by_sig.setdefault(sig2[b], []).append(b)
    order = sorted(g1.nodes, key=lambda a: (len(by_sig[sig1[a]]), a))

    arcs1, arcs2 = g1.arcs, g2.arcs
    mapping: dict[ArgumentId, ArgumentId] = {}
    used: set[ArgumentId] = set()

    def consistent(a: ArgumentId, b: ArgumentId) -> bool:
        for u, v in mapping.items():
            if ((u, a) in arcs1) != ((v, b) in arcs2):
                return False
            if ((a, u) in arcs1) != ((b, v) in arcs2):
                return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        for b in by_sig[sig1[a]]:
            if b in used or not consistent(a, b):
                continue
            mapping[a] = b
            used.add(b)
            if extend(i + 1):
                return True
            del mapping[a]
            used.remove(b)
        return False

    return dict(mapping) if extend(0) else None


def weak_component_blocks(g: ArgumentGraph) -> list[frozenset[ArgumentId]]:
    """Node sets of the weakly-connected components, singletons included."""
    neighbours: dict[ArgumentId, set[ArgumentId]] = {a: set() for a in g.nodes}
    for src, dst in g.arcs:
        neighbours[src].add(dst)
        neighbours[dst].add(src)
    seen: set[ArgumentId] = set()
    blocks: list[frozenset[ArgumentId]] = []
    for a in g.sorted_nodes():
        if a in seen:
            continue
        block = {a}
        frontier = [a]
        while frontier:
            current = frontier.pop()
            for nxt in neighbours[current]:
                if nxt not in block:
                    block.add(nxt)
                    frontier.append(nxt)
        seen |= block
        blocks.append(frozenset(block))
    return blocks


def multi_node_components(g: ArgumentGraph) -> frozenset[ArgumentGraph]:
    """Maximal weakly-connected induced subgraphs with at least two nodes."""
    return frozenset(
        induced(g, block) for block in weak_component_blocks(g) if len(block) >= 2
    )
