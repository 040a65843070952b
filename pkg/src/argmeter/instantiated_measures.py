"""Inconsistency measures for graphs instantiated with deductive arguments.

Two families live here. The first grades each attack by how far apart the two
supports' model sets are (degree of undercut, summed into a cumulative
measure). The second plugs knowledge-base measures, built on minimal
inconsistent subsets, into the graph: per-arc on the joined supports, or
globally on the union of all supports. Argument trees and their three
root-conflict measures close the module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Union

from .arguments import (
    ClassicalArgument,
    InstantiatedGraph,
    canonical_undercuts,
    support_conjunction,
)
from .errors import EmptyModelsError
from .logic import (
    DEFAULT_KB_CAP,
    Formula,
    atoms_of,
    dalal,
    min_inconsistent_subsets,
    restricted_models,
)

BaseMeasure = Callable[[Iterable[Formula]], Fraction]


def conflict(
    phi: Iterable[Formula], psi: Iterable[Formula], pi: Iterable[str]
) -> Fraction:
    """Minimum world distance between the two restricted model sets, over |pi|."""
    universe = frozenset(pi)
    models_phi = restricted_models(phi, universe)
    models_psi = restricted_models(psi, universe)
    if not models_phi or not models_psi:
        raise EmptyModelsError("degree of conflict needs both formula sets to have models")
    best = min(dalal(w1, w2) for w1 in models_phi for w2 in models_psi)
    return Fraction(best, len(universe))


def degree_of_undercut(a1: ClassicalArgument, a2: ClassicalArgument) -> Fraction:
    """Conflict between the two supports over the atoms they mention."""
    pi = atoms_of(a1.support | a2.support)
    if not pi:
        # atom-free supports are jointly consistent, so there is no conflict
        return Fraction(0)
    return conflict(a1.support, a2.support, pi)


def i_cu(ig: InstantiatedGraph) -> Fraction:
    """Cumulative degree of undercut over all arcs."""
    return sum(
        (degree_of_undercut(ig.argument(src), ig.argument(dst)) for src, dst in ig.graph.arcs),
        Fraction(0),
    )


def i_m(knowledge: Iterable[Formula], kb_cap: int = DEFAULT_KB_CAP) -> Fraction:
    """Number of minimal inconsistent subsets."""
    return Fraction(len(min_inconsistent_subsets(knowledge, kb_cap)))


def i_sharp(knowledge: Iterable[Formula], kb_cap: int = DEFAULT_KB_CAP) -> Fraction:
    """Sum of 1/|X| over the minimal inconsistent subsets."""
    return sum(
        (Fraction(1, len(mus)) for mus in min_inconsistent_subsets(knowledge, kb_cap)),
        Fraction(0),
    )


#: Pluggable knowledge-base measures; anything mapping a consistent base to 0
#: can be registered under a new key.
BASE_MEASURES: dict[str, BaseMeasure] = {
    "M": i_m,
    "#": i_sharp,
}


def _resolve_base(base: Union[str, BaseMeasure]) -> BaseMeasure:
    if callable(base):
        return base
    try:
        return BASE_MEASURES[base]
    except KeyError:
        raise ValueError(f"unknown base measure {base!r}; registered: {sorted(BASE_MEASURES)}")


def i_attack(ig: InstantiatedGraph, base: Union[str, BaseMeasure] = "M") -> Fraction:
    """Per-arc base measure of the two supports joined, summed over the arcs."""
    measure = _resolve_base(base)
    return sum(
        (
            measure(ig.argument(src).support | ig.argument(dst).support)
            for src, dst in ig.graph.arcs
        ),
        Fraction(0),
    )


def i_support(ig: InstantiatedGraph, base: Union[str, BaseMeasure] = "M") -> Fraction:
    """Base measure of the union of every node's support."""
    measure = _resolve_base(base)
    return measure(ig.support_union())


# ---------------------------------------------------------------------------
# argument trees


@dataclass(frozen=True)
class TreeNode:
    argument: ClassicalArgument
    children: tuple["TreeNode", ...]


@dataclass(frozen=True)
class ArgumentTree:
    """A tree of arguments where every child attacks the whole support of its
    parent, and no child only recycles premises its ancestors already used."""

    root: TreeNode

    def nodes_with_depth(self) -> list[tuple[TreeNode, int]]:
        result: list[tuple[TreeNode, int]] = []

        def walk(node: TreeNode, depth: int) -> None:
            result.append((node, depth))
            for child in node.children:
                walk(child, depth + 1)

        walk(self.root, 1)
        return result

    def height(self) -> int:
        return max(depth for _, depth in self.nodes_with_depth())

    def size(self) -> int:
        return len(self.nodes_with_depth())


def build_argument_tree(
    knowledge: Iterable[Formula],
    root_premise: Formula,
    support_cap: int = DEFAULT_KB_CAP,
) -> ArgumentTree:
    """Exhaustive tree with root <{root_premise}, root_premise>.

    Every full-support attacker found in the knowledge base becomes a child,
    except when its premises all occurred in supports along the path already;
    that exception is what keeps the tree finite.
    """
    base = frozenset(knowledge) | {root_premise}
    root_argument = ClassicalArgument(frozenset([root_premise]), root_premise)

    def expand(argument: ClassicalArgument, used: frozenset[Formula]) -> TreeNode:
        children = []
        for candidate in sorted(
            canonical_undercuts(base, argument, support_cap),
            key=lambda a: sorted(str(f) for f in a.support),
        ):
            if candidate.support <= used:
                continue
            children.append(expand(candidate, used | candidate.support))
        return TreeNode(argument, tuple(children))

    return ArgumentTree(expand(root_argument, root_argument.support))


def i_arg(tree: ArgumentTree, variant: int) -> Fraction:
    """Root-conflict measures: undercut count scaled by a depth statistic.

    Variant 1 divides by the height, variant 2 by the total depth, variant 3
    multiplies by the sum of inverse depths. The root has depth 1.
    """
    if variant not in (1, 2, 3):
        raise ValueError(f"variant must be 1, 2 or 3, got {variant!r}")
    undercut_count = len(tree.root.children)
    depths = [depth for _, depth in tree.nodes_with_depth()]
    if variant == 1:
        factor = Fraction(1, max(depths))
    elif variant == 2:
        factor = Fraction(1, sum(depths))
    else:
        factor = sum((Fraction(1, d) for d in depths), Fraction(0))
    return undercut_count * factor


INSTANTIATED_MEASURES = {
    "cu": i_cu,
    "C_M": lambda ig: i_attack(ig, "M"),
    "C_#": lambda ig: i_attack(ig, "#"),
    "S_M": lambda ig: i_support(ig, "M"),
    "S_#": lambda ig: i_support(ig, "#"),
}
