"""Randomized property checking for inconsistency measures.

Measures are checked for the two basic axioms (zero on arcless graphs,
indifference to an extra unattacking node) and five optional properties.
Checks are randomized searches for violations over a corpus, deterministic
under a seed, and every report carries concrete witnesses so a violation can
be replayed.

Pair sampling for the additivity properties is deliberately conservative:
disjoint additivity uses node-disjoint pairs (its own precondition), and
super-additivity uses arc-disjoint pairs sharing at most one node, plus the
known witness shapes for the measures that do fail it. Pairs sharing arcs or
whole cycles would make every counting measure "fail" trivially by double
counting the shared part, which is noise, not signal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from . import fixtures
from .arguments import InstantiatedGraph
from .extension_measures import EXTENSION_MEASURES
from .graphs import ArgumentGraph, compose, graph, induced, invert, is_disjoint, relabel
from .instantiated_measures import INSTANTIATED_MEASURES
from .structure_measures import STRUCTURE_MEASURES

ABSTRACT_MEASURES: dict[str, Callable[[ArgumentGraph], Fraction]] = {
    **STRUCTURE_MEASURES,
    **EXTENSION_MEASURES,
}

Measurable = Union[ArgumentGraph, InstantiatedGraph]

OPTIONAL_PROPERTIES = (
    "monotonicity",
    "inversion",
    "isomorphic-invariance",
    "disjoint-additivity",
    "super-additivity",
)

DEFAULT_SEED = 20170810


def resolve_measure(measure: Union[str, Callable]) -> tuple[str, Callable[[Measurable], Fraction]]:
    """Accept a registry id or a callable; ids from the abstract registry are
    applied to the underlying graph when handed an instantiated graph."""
    if callable(measure):
        return getattr(measure, "__name__", "measure"), measure
    if measure in ABSTRACT_MEASURES:
        fn = ABSTRACT_MEASURES[measure]

        def apply_abstract(item: Measurable) -> Fraction:
            if isinstance(item, InstantiatedGraph):
                return fn(item.graph)
            return fn(item)

        return measure, apply_abstract
    if measure in INSTANTIATED_MEASURES:
        fn = INSTANTIATED_MEASURES[measure]

        def apply_instantiated(item: Measurable) -> Fraction:
            if not isinstance(item, InstantiatedGraph):
                raise TypeError(f"measure {measure!r} needs an instantiated graph")
            return fn(item)

        return measure, apply_instantiated
    raise ValueError(f"unknown measure {measure!r}")


# ---------------------------------------------------------------------------
# corpora


def random_graph(rng: random.Random, max_nodes: int = 8, density: float = 0.25) -> ArgumentGraph:
    n = rng.randint(1, max_nodes)
    names = [f"A{i}" for i in range(1, n + 1)]
    arcs = [
        (a, b)
        for a in names
        for b in names
        if rng.random() < density
    ]
    return graph(names, arcs)


def random_corpus(
    count: int,
    max_nodes: int = 8,
    density: float = 0.25,
    seed: int = DEFAULT_SEED,
) -> list[ArgumentGraph]:
    rng = random.Random(seed)
    return [random_graph(rng, max_nodes, density) for _ in range(count)]


def standard_seed_graphs() -> list[ArgumentGraph]:
    """Small named shapes worth having in every corpus."""
    return [
        graph(["A1"]),
        graph(["A1", "A2"], [("A1", "A2")]),
        fixtures.chain(3),
        fixtures.chain(4),
        fixtures.self_loop(),
        fixtures.attacked_self_loop(),
        fixtures.three_self_loops(),
        fixtures.mutual_pair(),
        fixtures.mutual_pair_with_attacker(),
        fixtures.guarded_mutual_pair(),
        fixtures.guard_only(),
        fixtures.two_attacker_star(),
        fixtures.three_attacker_star(),
        fixtures.star_out(2),
        fixtures.three_cycle(),
        fixtures.four_cycle(),
        fixtures.complete_graph(2),
        fixtures.complete_graph(3),
        fixtures.disjoint_mutual_pairs(2),
        fixtures.disjoint_mutual_pairs(3),
        fixtures.hypertension_graph(),
        fixtures.query_demo_graph(),
    ]


def _fresh_names(g: ArgumentGraph, suffix: str) -> dict[str, str]:
    return {a: f"{a}_{suffix}" for a in g.nodes}


def disjoint_copy(g: ArgumentGraph, suffix: str = "r") -> ArgumentGraph:
    return relabel(g, _fresh_names(g, suffix))


# ---------------------------------------------------------------------------
# reports


@dataclass
class Violation:
    property: str
    witness: tuple
    values: tuple

    def __str__(self) -> str:
        return f"{self.property}: witness={self.witness} values={self.values}"


@dataclass
class PropertyReport:
    measure: str
    property: str
    checks: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        return f"{self.measure} / {self.property}: {self.checks} checks, {status}"


def check_basic_axioms(
    measure: Union[str, Callable], corpus: Sequence[ArgumentGraph]
) -> PropertyReport:
    """Zero on the arcless restriction; unchanged by one fresh unattacking node."""
    name, fn = resolve_measure(measure)
    report = PropertyReport(name, "consistency+freeness")
    for g in corpus:
        report.checks += 1
        arcless = ArgumentGraph(g.nodes, frozenset())
        if fn(arcless) != 0:
            report.violations.append(
                Violation("consistency", (arcless,), (fn(arcless),))
            )
        fresh = "F0"
        while fresh in g.nodes:
            fresh += "0"
        extended = ArgumentGraph(g.nodes | {fresh}, g.arcs)
        before, after = fn(g), fn(extended)
        if before != after:
            report.violations.append(Violation("freeness", (g, extended), (before, after)))
    return report


def _sub_sample(rng: random.Random, g: ArgumentGraph) -> ArgumentGraph:
    """A random subgraph: random node subset, then a random arc subset."""
    kept_nodes = frozenset(a for a in g.nodes if rng.random() < 0.7)
    base = induced(g, kept_nodes)
    kept_arcs = frozenset(arc for arc in base.arcs if rng.random() < 0.8)
    return ArgumentGraph(base.nodes, kept_arcs)


def _shuffled_names(rng: random.Random, g: ArgumentGraph) -> dict[str, str]:
    fresh = [f"B{i}" for i in range(1, len(g.nodes) + 1)]
    rng.shuffle(fresh)
    return dict(zip(g.sorted_nodes(), fresh))


def _one_node_merge(
    rng: random.Random, g1: ArgumentGraph, g2: ArgumentGraph
) -> Optional[tuple[ArgumentGraph, ArgumentGraph]]:
    """Relabel g2 apart from g1, then glue the pair at a single shared node.

    Self-loops on the glue point would be shared arcs, so such merges are
    skipped; the result is always arc-disjoint with at most one shared node.
    """
    separate = disjoint_copy(g2, "r")
    if not g1.nodes or rng.random() < 0.4:
        return g1, separate
    target = rng.choice(sorted(g1.nodes))
    source = rng.choice(separate.sorted_nodes())
    if (target, target) in g1.arcs or (source, source) in separate.arcs:
        return g1, separate
    mapping = {a: (target if a == source else a) for a in separate.nodes}
    if len(set(mapping.values())) != len(separate.nodes):
        return None
    return g1, relabel(separate, mapping)


#: Known witness pairs for the properties that fail on overlapping shapes;
#: always folded into the additivity searches.
def seeded_pairs(property_name: str) -> list[tuple[ArgumentGraph, ArgumentGraph]]:
    if property_name == "monotonicity":
        # (subgraph, supergraph) pairs known to flip some measure
        return [
            (fixtures.mutual_pair(), fixtures.guarded_mutual_pair()),
            (fixtures.three_self_loops(), fixtures.silenced_self_loops()),
            (graph(["A1", "T"], [("A1", "T")]), fixtures.two_attacker_star()),
            (graph(["A1", "T"], [("T", "A1")]), fixtures.star_out(2)),
        ]
    if property_name == "disjoint-additivity":
        single = graph(["A1", "A2"], [("A1", "A2")])
        return [
            (single, disjoint_copy(single)),
            (fixtures.mutual_pair(), disjoint_copy(fixtures.mutual_pair())),
            (fixtures.disjoint_mutual_pairs(2), disjoint_copy(fixtures.mutual_pair())),
        ]
    if property_name == "super-additivity":
        # two attackers sharing their target (and its outbound twin)
        left_in = graph(["A1", "T"], [("A1", "T")])
        right_in = graph(["A2", "T"], [("A2", "T")])
        left_out = invert(left_in)
        right_out = invert(right_in)
        # two 4-node chains sharing three nodes, joined into one 5-node block
        chain_a = graph(["A1", "A2", "A3", "A4"], [("A1", "A2"), ("A2", "A3"), ("A3", "A4")])
        chain_b = graph(["A2", "A3", "A4", "A5"], [("A3", "A2"), ("A4", "A3"), ("A4", "A5")])
        # a self-attacker and its outside guard, glued on the self-attacker
        loop = fixtures.self_loop()
        guard = graph(["A1", "A2"], [("A2", "A1")])
        # a mutual pair silenced by a guard attacking both members
        pair = fixtures.mutual_pair()
        guard_both = fixtures.guard_only()
        single = graph(["A1", "A2"], [("A1", "A2")])
        return [
            (left_in, right_in),
            (left_out, right_out),
            (chain_a, chain_b),
            (loop, guard),
            (pair, guard_both),
            (single, disjoint_copy(single)),
        ]
    return []


def check_optional_property(
    measure: Union[str, Callable],
    property_name: str,
    corpus: Sequence[ArgumentGraph],
    seed: int = DEFAULT_SEED,
    pairs_per_graph: int = 2,
    stop_at_first: bool = False,
) -> PropertyReport:
    """Search the corpus for violations of one optional property.

    With stop_at_first the search returns at the first violation found,
    which is the cheap mode for properties expected to fail.
    """
    if property_name not in OPTIONAL_PROPERTIES:
        raise ValueError(
            f"unknown property {property_name!r}; expected one of {OPTIONAL_PROPERTIES}"
        )
    name, fn = resolve_measure(measure)
    rng = random.Random(seed)
    report = PropertyReport(name, property_name)

    def found(witness: tuple, values: tuple) -> bool:
        report.violations.append(Violation(property_name, witness, values))
        return stop_at_first

    if property_name == "monotonicity":
        pairs = list(seeded_pairs(property_name))
        for g in corpus:
            for _ in range(pairs_per_graph):
                pairs.append((_sub_sample(rng, g), g))
        for sub, g in pairs:
            report.checks += 1
            small, big = fn(sub), fn(g)
            if small > big and found((sub, g), (small, big)):
                return report
        return report

    if property_name == "inversion":
        for g in corpus:
            report.checks += 1
            left, right = fn(g), fn(invert(g))
            if left != right and found((g, invert(g)), (left, right)):
                return report
        return report

    if property_name == "isomorphic-invariance":
        for g in corpus:
            report.checks += 1
            twin = relabel(g, _shuffled_names(rng, g))
            left, right = fn(g), fn(twin)
            if left != right and found((g, twin), (left, right)):
                return report
        return report

    if property_name == "disjoint-additivity":
        pairs = list(seeded_pairs(property_name))
        for g in corpus:
            other = rng.choice(list(corpus))
            pairs.append((g, disjoint_copy(other)))
        for g1, g2 in pairs:
            if not is_disjoint(g1, g2):
                continue
            report.checks += 1
            whole, part1, part2 = fn(compose(g1, g2)), fn(g1), fn(g2)
            if whole != part1 + part2 and found((g1, g2), (whole, part1, part2)):
                return report
        return report

    # super-additivity
    pairs = list(seeded_pairs(property_name))
    for g in corpus:
        other = rng.choice(list(corpus))
        merged = _one_node_merge(rng, g, other)
        if merged is not None:
            pairs.append(merged)
    for g1, g2 in pairs:
        if g1.arcs & g2.arcs:
            continue
        report.checks += 1
        whole, part1, part2 = fn(compose(g1, g2)), fn(g1), fn(g2)
        if whole < part1 + part2 and found((g1, g2), (whole, part1, part2)):
            return report
    return report


def order_compatibility(
    measure_x: Union[str, Callable],
    measure_y: Union[str, Callable],
    corpus: Sequence[Measurable],
) -> Optional[tuple[Measurable, Measurable]]:
    """A pair ordered strictly by the first measure but not by the second,
    or None when the corpus holds no such pair."""
    _, fx = resolve_measure(measure_x)
    _, fy = resolve_measure(measure_y)
    values = [(fx(item), fy(item), item) for item in corpus]
    for x1, y1, item1 in values:
        for x2, y2, item2 in values:
            if x1 < x2 and not y1 < y2:
                return item1, item2
    return None
