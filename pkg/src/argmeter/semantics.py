"""Acceptability semantics for argument graphs.

Two independent presentations are implemented side by side: extension-based
(conflict-free subsets and the defended-set fixpoint) and labelling-based
(in/out/undec assignments). They are meant to be cross-checked against each
other, so neither is derived from the other.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import ResourceLimitError, UnknownArgumentError
from .graphs import DEFAULT_NODE_CAP, ArgumentGraph, ArgumentId, attackers_of

IN = "in"
OUT = "out"
UNDEC = "undec"
LABELS = (IN, OUT, UNDEC)

#: The four supported semantics: complete, grounded, preferred, stable.
KINDS = ("co", "gr", "pr", "st")

Extension = frozenset  # frozenset[ArgumentId]


class Labelling(Mapping[ArgumentId, str]):
    """Immutable total map from arguments to in/out/undec."""

    __slots__ = ("_map", "_hash")

    def __init__(self, assignment: Mapping[ArgumentId, str] | Iterable[tuple[ArgumentId, str]]):
        m = dict(assignment)
        for a, label in m.items():
            if label not in LABELS:
                raise ValueError(f"invalid label {label!r} for {a}")
        self._map = m
        self._hash = hash(frozenset(m.items()))

    def __getitem__(self, a: ArgumentId) -> str:
        return self._map[a]

    def __iter__(self) -> Iterator[ArgumentId]:
        return iter(self._map)

    def __len__(self) -> int:
        return len(self._map)

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Labelling) and self._map == other._map

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}:{label}" for a, label in sorted(self._map.items()))
        return f"Labelling({inner})"

    def with_labels(self, updates: Mapping[ArgumentId, str]) -> "Labelling":
        m = dict(self._map)
        m.update(updates)
        return Labelling(m)

    @property
    def in_args(self) -> frozenset[ArgumentId]:
        return frozenset(a for a, label in self._map.items() if label == IN)

    @property
    def out_args(self) -> frozenset[ArgumentId]:
        return frozenset(a for a, label in self._map.items() if label == OUT)

    @property
    def undec_args(self) -> frozenset[ArgumentId]:
        return frozenset(a for a, label in self._map.items() if label == UNDEC)


def all_undec(g: ArgumentGraph) -> Labelling:
    return Labelling({a: UNDEC for a in g.nodes})


def _check_membership(g: ArgumentGraph, args: Iterable[ArgumentId]) -> None:
    missing = sorted(set(args) - g.nodes)
    if missing:
        raise UnknownArgumentError(f"unknown argument(s): {', '.join(missing)}")


def attacks(g: ArgumentGraph, s: Iterable[ArgumentId], a: ArgumentId) -> bool:
    """True iff some member of `s` has an arc to `a`."""
    members = set(s)
    _check_membership(g, members | {a})
    return any((m, a) in g.arcs for m in members)


def defends(g: ArgumentGraph, s: Iterable[ArgumentId], a: ArgumentId) -> bool:
    """True iff every attacker of `a` is attacked by `s`."""
    members = set(s)
    _check_membership(g, members | {a})
    attacked_by_s = {dst for src, dst in g.arcs if src in members}
    return all(src in attacked_by_s for src, dst in g.arcs if dst == a)


def is_conflict_free(g: ArgumentGraph, s: Iterable[ArgumentId]) -> bool:
    members = set(s)
    _check_membership(g, members)
    return not any(src in members and dst in members for src, dst in g.arcs)


def is_admissible(g: ArgumentGraph, s: Iterable[ArgumentId]) -> bool:
    members = set(s)
    if not is_conflict_free(g, members):
        return False
    return all(defends(g, members, a) for a in members)


def defended_set(g: ArgumentGraph, s: Iterable[ArgumentId]) -> frozenset[ArgumentId]:
    """All arguments whose every attacker is attacked by `s`."""
    members = set(s)
    attacked_by_s = {dst for src, dst in g.arcs if src in members}
    attackers = attackers_of(g)
    return frozenset(a for a in g.nodes if attackers[a] <= attacked_by_s)


def _conflict_free_sets(g: ArgumentGraph) -> Iterator[frozenset[ArgumentId]]:
    order = g.sorted_nodes()
    arcs = g.arcs

    def extend(i: int, chosen: tuple[ArgumentId, ...]) -> Iterator[frozenset[ArgumentId]]:
        if i == len(order):
            yield frozenset(chosen)
            return
        a = order[i]
        yield from extend(i + 1, chosen)
        if (a, a) not in arcs and all((a, c) not in arcs and (c, a) not in arcs for c in chosen):
            yield from extend(i + 1, chosen + (a,))

    yield from extend(0, ())


def _check_cap(g: ArgumentGraph, cap: int, what: str) -> None:
    if len(g.nodes) > cap:
        raise ResourceLimitError(f"{what} capped at {cap} nodes, graph has {len(g.nodes)}")


def complete_extensions(g: ArgumentGraph, cap: int = DEFAULT_NODE_CAP) -> frozenset[Extension]:
    """Conflict-free sets equal to the set of arguments they defend."""
    _check_cap(g, cap, "extension enumeration")
    return frozenset(s for s in _conflict_free_sets(g) if s == defended_set(g, s))


def grounded_extension(g: ArgumentGraph) -> Extension:
    """Least fixpoint of the defended-set operator, starting from the empty set."""
    current: frozenset[ArgumentId] = frozenset()
    while True:
        nxt = defended_set(g, current)
        if nxt == current:
            return current
        current = nxt


def extensions(g: ArgumentGraph, kind: str, cap: int = DEFAULT_NODE_CAP) -> frozenset[Extension]:
    """Extensions of the requested kind: co, gr, pr or st."""
    if kind not in KINDS:
        raise ValueError(f"unknown semantics kind {kind!r}; expected one of {KINDS}")
    if kind == "gr":
        # computed by fixpoint; coincides with the unique minimal complete extension
        return frozenset({grounded_extension(g)})
    complete = complete_extensions(g, cap)
    if kind == "co":
        return complete
    preferred = frozenset(s for s in complete if not any(s < t for t in complete))
    if kind == "pr":
        return preferred
    return frozenset(
        s for s in preferred
        if all(attacks(g, s, b) for b in g.nodes - s)
    )


def is_admissible_labelling(g: ArgumentGraph, labelling: Labelling) -> bool:
    """Out nodes have an in attacker; in nodes have only out attackers."""
    attackers = attackers_of(g)
    for a in g.nodes:
        label = labelling[a]
        if label == OUT and not any(labelling[b] == IN for b in attackers[a]):
            return False
        if label == IN and any(labelling[b] != OUT for b in attackers[a]):
            return False
    return True


def is_complete_labelling(g: ArgumentGraph, labelling: Labelling) -> bool:
    """Admissible, and undec nodes are exactly those that cannot be decided."""
    if set(labelling) != set(g.nodes):
        return False
    if not is_admissible_labelling(g, labelling):
        return False
    attackers = attackers_of(g)
    for a in g.nodes:
        if labelling[a] == UNDEC:
            if any(labelling[b] == IN for b in attackers[a]):
                return False
            if not any(labelling[b] != OUT for b in attackers[a]):
                return False
    return True


def complete_labellings(g: ArgumentGraph, cap: int = DEFAULT_NODE_CAP) -> frozenset[Labelling]:
    """All complete labellings, by pruned search over the 3^n assignments."""
    _check_cap(g, cap, "labelling enumeration")
    order = g.sorted_nodes()
    attackers = attackers_of(g)
    attackees: dict[ArgumentId, list[ArgumentId]] = {a: [] for a in g.nodes}
    for src, dst in g.arcs:
        attackees[src].append(dst)

    assignment: dict[ArgumentId, str] = {}
    results: list[Labelling] = []

    def viable(a: ArgumentId, label: str) -> bool:
        # only constraints among already-assigned nodes; the full predicate
        # re-validates each leaf, so pruning just has to be sound
        if label == IN:
            if (a, a) in g.arcs:
                return False
            for b in attackers[a]:
                if b in assignment and assignment[b] != OUT:
                    return False
            for b in attackees[a]:
                if b in assignment and assignment[b] != OUT:
                    return False
        elif label == UNDEC:
            for b in attackers[a]:
                if b in assignment and assignment[b] == IN:
                    return False
            for b in attackees[a]:
                if b in assignment and assignment[b] == IN:
                    return False
        return True

    def search(i: int) -> None:
        if i == len(order):
            candidate = Labelling(assignment)
            if is_complete_labelling(g, candidate):
                results.append(candidate)
            return
        a = order[i]
        for label in LABELS:
            if viable(a, label):
                assignment[a] = label
                search(i + 1)
                del assignment[a]

    search(0)
    return frozenset(results)


def labellings(g: ArgumentGraph, kind: str, cap: int = DEFAULT_NODE_CAP) -> frozenset[Labelling]:
    """Complete labellings filtered by kind, mirroring `extensions`."""
    if kind not in KINDS:
        raise ValueError(f"unknown semantics kind {kind!r}; expected one of {KINDS}")
    complete = complete_labellings(g, cap)
    if kind == "co":
        return complete
    if kind == "gr":
        return frozenset(
            l for l in complete if not any(m.in_args < l.in_args for m in complete)
        )
    if kind == "pr":
        return frozenset(
            l for l in complete if not any(l.in_args < m.in_args for m in complete)
        )
    return frozenset(l for l in complete if not l.undec_args)


def labelling_to_extension(labelling: Labelling) -> Extension:
    return labelling.in_args
