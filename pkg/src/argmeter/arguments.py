"""Deductive arguments over propositional knowledge bases.

A classical argument is a pair (support, claim) where the support entails the
claim, is consistent, and is minimal for the entailment. All three conditions
are checked on construction. Attacks between arguments are classified into
seven kinds defined by logical relations between the attacker's claim and the
target's premises or claim.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .errors import (
    AttackVerificationError,
    InconsistentSupportError,
    NonMinimalSupportError,
    NotEntailedError,
    ResourceLimitError,
    UnknownArgumentError,
)
from .graphs import Arc, ArgumentGraph, ArgumentId, graph
from .logic import (
    Formula,
    Not,
    conjunction,
    entails,
    equivalent,
    render,
    satisfiable,
)

DEFAULT_SUPPORT_CAP = 12

DEFEATER = "defeater"
DIRECT_DEFEATER = "direct-defeater"
UNDERCUT = "undercut"
DIRECT_UNDERCUT = "direct-undercut"
CANONICAL_UNDERCUT = "canonical-undercut"
REBUTTAL = "rebuttal"
DEFEATING_REBUTTAL = "defeating-rebuttal"

ATTACK_KINDS = (
    DEFEATER,
    DIRECT_DEFEATER,
    UNDERCUT,
    DIRECT_UNDERCUT,
    CANONICAL_UNDERCUT,
    REBUTTAL,
    DEFEATING_REBUTTAL,
)

#: Containment edges between attack kinds: (narrower, wider).
CONTAINMENTS = (
    (CANONICAL_UNDERCUT, UNDERCUT),
    (DIRECT_UNDERCUT, UNDERCUT),
    (UNDERCUT, DEFEATER),
    (DIRECT_DEFEATER, DEFEATER),
    (REBUTTAL, DEFEATING_REBUTTAL),
    (DEFEATING_REBUTTAL, DEFEATER),
)


@dataclass(frozen=True)
class ClassicalArgument:
    support: frozenset[Formula]
    claim: Formula

    def __post_init__(self) -> None:
        support = list(self.support)
        if not satisfiable(support):
            raise InconsistentSupportError(f"inconsistent support: {self.describe()}")
        if not entails(support, self.claim):
            raise NotEntailedError(f"support does not entail claim: {self.describe()}")
        if support:
            for smaller in combinations(support, len(support) - 1):
                if entails(smaller, self.claim):
                    raise NonMinimalSupportError(
                        f"support is not minimal (a proper subset entails the claim): {self.describe()}"
                    )

    def describe(self) -> str:
        premises = ", ".join(sorted(render(f) for f in self.support))
        return f"<{{{premises}}}, {render(self.claim)}>"

    def __repr__(self) -> str:
        return f"ClassicalArgument{self.describe()}"


def make_argument(support: Iterable[Formula], claim: Formula) -> ClassicalArgument:
    """Validate and build an argument from any iterable of premises."""
    return ClassicalArgument(frozenset(support), claim)


def support_conjunction(argument: ClassicalArgument) -> Formula:
    return conjunction(argument.support)


def classify_attack(
    attacker: ClassicalArgument, target: ClassicalArgument
) -> frozenset[str]:
    """Every attack kind whose defining condition holds for the pair."""
    kinds: set[str] = set()
    claim = attacker.claim
    support = sorted(target.support, key=render)

    if entails([claim], Not(conjunction(support))):
        kinds.add(DEFEATER)
        if any(entails([claim], Not(premise)) for premise in support):
            kinds.add(DIRECT_DEFEATER)
        # an undercut's claim is equivalent to the negated conjunction of
        # some premise subset; search smallest subsets first
        for size in range(1, len(support) + 1):
            if UNDERCUT in kinds and size < len(support):
                continue  # only the full-support check is still informative
            for subset in combinations(support, size):
                if equivalent(claim, Not(conjunction(subset))):
                    kinds.add(UNDERCUT)
                    if size == 1:
                        kinds.add(DIRECT_UNDERCUT)
                    if size == len(support):
                        kinds.add(CANONICAL_UNDERCUT)
                    break
    if entails([claim], Not(target.claim)):
        kinds.add(DEFEATING_REBUTTAL)
        kinds.add(DEFEATER)
        if equivalent(claim, Not(target.claim)):
            kinds.add(REBUTTAL)
    return frozenset(kinds)


@dataclass
class ContainmentReport:
    pairs_checked: int = 0
    violations: list[tuple[ClassicalArgument, ClassicalArgument, str, str]] = field(
        default_factory=list
    )

    @property
    def ok(self) -> bool:
        return not self.violations


def check_containment(
    pairs: Iterable[tuple[ClassicalArgument, ClassicalArgument]]
) -> ContainmentReport:
    """Verify the narrower-implies-wider relations between attack kinds."""
    report = ContainmentReport()
    for attacker, target in pairs:
        report.pairs_checked += 1
        kinds = classify_attack(attacker, target)
        for narrow, wide in CONTAINMENTS:
            if narrow in kinds and wide not in kinds:
                report.violations.append((attacker, target, narrow, wide))
    return report


def enumerate_arguments(
    knowledge: Iterable[Formula],
    claim: Formula,
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> frozenset[ClassicalArgument]:
    """All arguments for `claim` whose support is drawn from the knowledge base.

    The claim has to be given: without one the argument space is unbounded.
    The supports returned are exactly the minimal consistent subsets of the
    knowledge base entailing the claim.
    """
    formulas = sorted(frozenset(knowledge), key=render)
    if len(formulas) > support_cap:
        raise ResourceLimitError(
            f"argument enumeration capped at {support_cap} formulas, got {len(formulas)}"
        )
    found: list[frozenset[Formula]] = []
    results: list[ClassicalArgument] = []
    for size in range(0, len(formulas) + 1):
        for combo in combinations(formulas, size):
            support = frozenset(combo)
            if any(previous <= support for previous in found):
                continue  # superset of a known support: not minimal
            if not satisfiable(support):
                continue
            if entails(support, claim):
                found.append(support)
                results.append(ClassicalArgument(support, claim))
    return frozenset(results)


def canonical_undercuts(
    knowledge: Iterable[Formula],
    target: ClassicalArgument,
    support_cap: int = DEFAULT_SUPPORT_CAP,
) -> frozenset[ClassicalArgument]:
    """All arguments from the knowledge base whose claim negates the target's
    whole support conjunction."""
    return enumerate_arguments(knowledge, Not(support_conjunction(target)), support_cap)


class InstantiatedGraph:
    """An argument graph whose nodes carry deductive arguments.

    Every arc carries a declared attack kind, verified on construction: the
    source argument must stand in that relation to the target argument. Two
    distinct nodes may not carry the same (support, claim) pair, so node
    names determine arguments and vice versa.
    """

    def __init__(
        self,
        binding: Mapping[ArgumentId, ClassicalArgument],
        attack_kinds: Mapping[Arc, str],
    ):
        self.binding = dict(binding)
        self.attack_kinds = dict(attack_kinds)
        self.graph = graph(self.binding.keys(), self.attack_kinds.keys())
        seen: dict[tuple[frozenset[Formula], Formula], ArgumentId] = {}
        for name in self.graph.sorted_nodes():
            argument = self.binding[name]
            key = (argument.support, argument.claim)
            if key in seen:
                raise ValueError(
                    f"nodes {seen[key]} and {name} carry the same argument; merge them"
                )
            seen[key] = name
        for (src, dst) in self.graph.sorted_arcs():
            kind = self.attack_kinds[(src, dst)]
            if kind not in ATTACK_KINDS:
                raise ValueError(f"unknown attack kind {kind!r} on arc ({src}, {dst})")
            actual = classify_attack(self.binding[src], self.binding[dst])
            if kind not in actual:
                raise AttackVerificationError(
                    f"arc ({src}, {dst}) declared {kind} but the pair only supports "
                    f"{sorted(actual) if actual else 'no attack at all'}"
                )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, InstantiatedGraph)
            and self.binding == other.binding
            and self.attack_kinds == other.attack_kinds
        )

    def argument(self, name: ArgumentId) -> ClassicalArgument:
        if name not in self.binding:
            raise UnknownArgumentError(f"unknown argument: {name}")
        return self.binding[name]

    def restricted_to(self, names: Iterable[ArgumentId]) -> "InstantiatedGraph":
        wanted = set(names)
        missing = wanted - set(self.binding)
        if missing:
            raise UnknownArgumentError(f"unknown argument(s): {', '.join(sorted(missing))}")
        return InstantiatedGraph(
            {name: self.binding[name] for name in wanted},
            {
                arc: kind
                for arc, kind in self.attack_kinds.items()
                if arc[0] in wanted and arc[1] in wanted
            },
        )

    def support_union(self) -> frozenset[Formula]:
        result: frozenset[Formula] = frozenset()
        for argument in self.binding.values():
            result |= argument.support
        return result


def is_reflective(ig: InstantiatedGraph) -> bool:
    """If the union of all supports is inconsistent, there must be an arc."""
    if satisfiable(ig.support_union()):
        return True
    return bool(ig.graph.arcs)


def instantiated_graph(
    binding: Mapping[ArgumentId, ClassicalArgument],
    attack_kinds: Mapping[Arc, str],
) -> InstantiatedGraph:
    return InstantiatedGraph(binding, attack_kinds)
