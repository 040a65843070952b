"""Graph-structure inconsistency measures.

Each measure maps an argument graph to an exact non-negative rational. All
seven are zero on arcless graphs and unchanged by adding an argument that
attacks nothing (the two basic axioms every measure here must satisfy).
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import (
    DEFAULT_NODE_CAP,
    ArgumentGraph,
    attackers_of,
    attackees_of,
    cycles,
    multi_node_components,
)


def i_dr(g: ArgumentGraph) -> Fraction:
    """1 when the graph has any attack at all, else 0."""
    return Fraction(1 if g.arcs else 0)


def i_in(g: ArgumentGraph) -> Fraction:
    """Sum of the indegrees, i.e. the number of arcs."""
    return Fraction(sum(len(srcs) for srcs in attackers_of(g).values()))


def i_win(g: ArgumentGraph) -> Fraction:
    """Sum of 1/indegree over the attacked nodes: sparse attacks weigh more."""
    return sum(
        (Fraction(1, len(srcs)) for srcs in attackers_of(g).values() if srcs),
        Fraction(0),
    )


def i_wou(g: ArgumentGraph) -> Fraction:
    """Sum of 1/outdegree over the attacking nodes."""
    return sum(
        (Fraction(1, len(dsts)) for dsts in attackees_of(g).values() if dsts),
        Fraction(0),
    )


def i_cc(g: ArgumentGraph, cap: int = DEFAULT_NODE_CAP) -> Fraction:
    """Number of node subsets carrying a directed cycle."""
    return Fraction(len(cycles(g, cap)))


def i_wcc(g: ArgumentGraph, cap: int = DEFAULT_NODE_CAP) -> Fraction:
    """Sum of 1/|C| over the cycles: short cycles weigh more."""
    return sum((Fraction(1, len(c)) for c in cycles(g, cap)), Fraction(0))


def i_ic(g: ArgumentGraph) -> Fraction:
    """Sum of (|X| - 1)^2 over the multi-node components."""
    return sum(
        (Fraction((len(component.nodes) - 1) ** 2) for component in multi_node_components(g)),
        Fraction(0),
    )


STRUCTURE_MEASURES = {
    "dr": i_dr,
    "in": i_in,
    "win": i_win,
    "wou": i_wou,
    "cc": i_cc,
    "wcc": i_wcc,
    "ic": i_ic,
}
