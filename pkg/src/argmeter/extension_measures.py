"""Extension-based inconsistency measures.

These look at the semantics of the graph rather than its shape: how many
credulous viewpoints exist (preferred count), how many arguments the sceptical
viewpoint leaves unsettled (non-grounded count), and how far the graph is
from having a stable extension (unstable count, with a removal certificate).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graphs import (
    DEFAULT_NODE_CAP,
    ArgumentGraph,
    ArgumentId,
    induced,
    weak_component_blocks,
)
from .semantics import extensions, grounded_extension


@dataclass(frozen=True)
class RemovalCertificate:
    """A witness for the unstable count: removing `removed` from the graph
    leaves `remaining_stable_extension` stable in the reduced graph."""

    removed: frozenset[ArgumentId]
    remaining_stable_extension: frozenset[ArgumentId]


def i_pr(g: ArgumentGraph, cap: int = DEFAULT_NODE_CAP) -> Fraction:
    """Number of preferred extensions minus one."""
    return Fraction(len(extensions(g, "pr", cap)) - 1)


def i_ngr(g: ArgumentGraph, cap: int = DEFAULT_NODE_CAP) -> Fraction:
    """Arguments neither in the grounded extension nor attacked by it."""
    grounded = grounded_extension(g)
    attackees = {dst for src, dst in g.arcs if src in grounded}
    return Fraction(len(g.nodes - (grounded | attackees)))


def _ust_connected(
    g: ArgumentGraph, cap: int
) -> tuple[Fraction, RemovalCertificate]:
    """Breadth-first over removal-set size; among same-size sets the
    lexicographically smallest wins, so the certificate is deterministic.
    Removing everything always leaves the empty graph, whose empty extension
    is stable, so the search terminates."""
    order = g.sorted_nodes()
    for size in range(len(order) + 1):
        for removed in combinations(order, size):
            remaining = g.nodes - frozenset(removed)
            stable = extensions(induced(g, remaining), "st", cap)
            if stable:
                witness = min(stable, key=sorted)
                return Fraction(size), RemovalCertificate(frozenset(removed), witness)
    raise AssertionError("unreachable: the empty graph has a stable extension")


def i_ust(
    g: ArgumentGraph, cap: int = DEFAULT_NODE_CAP
) -> tuple[Fraction, RemovalCertificate]:
    """Minimum number of arguments to remove until a stable extension exists.

    Weakly-connected components share no arcs, so a stable extension of the
    whole graph is exactly a union of stable extensions of the components and
    the minimum removal splits additively across them. The search therefore
    runs per component.
    """
    blocks = weak_component_blocks(g)
    if len(blocks) <= 1:
        return _ust_connected(g, cap)
    total = Fraction(0)
    removed: frozenset[ArgumentId] = frozenset()
    stable_union: frozenset[ArgumentId] = frozenset()
    for block in blocks:
        value, certificate = _ust_connected(induced(g, block), cap)
        total += value
        removed |= certificate.removed
        stable_union |= certificate.remaining_stable_extension
    return total, RemovalCertificate(removed, stable_union)


def i_ust_value(g: ArgumentGraph, cap: int = DEFAULT_NODE_CAP) -> Fraction:
    return i_ust(g, cap)[0]


EXTENSION_MEASURES = {
    "pr": i_pr,
    "ngr": i_ngr,
    "ust": i_ust_value,
}
