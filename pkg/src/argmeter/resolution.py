"""Resolution through commitment.

Starting from an all-undecided labelling, an analyst is asked about one
argument at a time and answers in or out. An in answer forces every attacker
and every attackee of the queried argument out; an out answer touches nothing
else. Measures are always taken on the reduced graph (out arguments deleted),
and the next query is recommended by the expected drop in the chosen measure,
averaging the in and the out outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import (
    AlreadyCommittedError,
    CommitmentConflictError,
    NoUndecidedError,
    UnknownArgumentError,
)
from .graphs import ArgumentGraph, ArgumentId, induced
from .semantics import IN, OUT, UNDEC, Labelling, all_undec

MeasureFn = Callable[[ArgumentGraph], Fraction]

ANSWERS = (IN, OUT)


@dataclass(frozen=True)
class AnswerEvent:
    query: ArgumentId
    answer: str
    prior: Labelling


@dataclass(frozen=True)
class CommitmentState:
    graph: ArgumentGraph
    labelling: Labelling
    history: tuple[AnswerEvent, ...] = ()


def initial_state(g: ArgumentGraph) -> CommitmentState:
    return CommitmentState(g, all_undec(g))


def is_committed(state: CommitmentState) -> bool:
    """No argument is left undecided."""
    return all(state.labelling[a] != UNDEC for a in state.graph.nodes)


def is_strict(state: CommitmentState) -> bool:
    """Every attackee of an in argument is out."""
    labelling = state.labelling
    return all(
        labelling[dst] == OUT for src, dst in state.graph.arcs if labelling[src] == IN
    )


def new_graph(g: ArgumentGraph, labelling: Labelling) -> ArgumentGraph:
    """Drop the out-labelled arguments and every arc touching them."""
    kept = frozenset(a for a in g.nodes if labelling[a] != OUT)
    return induced(g, kept)


def reduced_graph(state: CommitmentState) -> ArgumentGraph:
    return new_graph(state.graph, state.labelling)


def apply_answer(state: CommitmentState, query: ArgumentId, answer: str) -> CommitmentState:
    """One committed answer; only undecided arguments may be queried.

    An in answer that would force an in-committed neighbour back to out is
    refused rather than silently applied.
    """
    if answer not in ANSWERS:
        raise ValueError(f"answer must be 'in' or 'out', got {answer!r}")
    if query not in state.graph.nodes:
        raise UnknownArgumentError(f"unknown argument: {query}")
    labelling = state.labelling
    if labelling[query] != UNDEC:
        raise AlreadyCommittedError(f"{query} is already committed ({labelling[query]})")

    updates = {query: answer}
    if answer == IN:
        neighbours = {src for src, dst in state.graph.arcs if dst == query}
        neighbours |= {dst for src, dst in state.graph.arcs if src == query}
        for other in neighbours:
            if labelling[other] == IN or other == query:
                raise CommitmentConflictError(
                    f"answering {query} in would force {other} out of its in commitment"
                )
            updates[other] = OUT
    event = AnswerEvent(query, answer, labelling)
    return CommitmentState(state.graph, labelling.with_labels(updates), state.history + (event,))


def undo(state: CommitmentState) -> CommitmentState:
    if not state.history:
        raise ValueError("nothing to undo: the history is empty")
    return CommitmentState(state.graph, state.history[-1].prior, state.history[:-1])


def replay(g: ArgumentGraph, moves: list[tuple[ArgumentId, str]]) -> CommitmentState:
    state = initial_state(g)
    for query, answer in moves:
        state = apply_answer(state, query, answer)
    return state


@dataclass(frozen=True)
class QueryEvaluation:
    query: ArgumentId
    value_if_in: Fraction
    value_if_out: Fraction
    expected_reduction: Fraction


def evaluate_query(
    state: CommitmentState, query: ArgumentId, measure: MeasureFn
) -> QueryEvaluation:
    """Measure of the reduced graph under each hypothetical answer.

    The expected reduction averages the two answers evenly against the
    current value of the reduced graph.
    """
    current = measure(reduced_graph(state))
    value_if_in = measure(reduced_graph(apply_answer(state, query, IN)))
    value_if_out = measure(reduced_graph(apply_answer(state, query, OUT)))
    return QueryEvaluation(
        query, value_if_in, value_if_out, current - Fraction(value_if_in + value_if_out, 2)
    )


def rank_queries(state: CommitmentState, measure: MeasureFn) -> list[QueryEvaluation]:
    """Evaluations for every undecided argument, best reduction first.

    Arguments whose in answer is impossible (self-attackers) are skipped:
    they cannot be committed in, so their expected reduction is undefined.
    """
    rows: list[QueryEvaluation] = []
    for query in sorted(state.graph.nodes):
        if state.labelling[query] != UNDEC:
            continue
        try:
            rows.append(evaluate_query(state, query, measure))
        except CommitmentConflictError:
            continue
    rows.sort(key=lambda row: (-row.expected_reduction, row.query))
    return rows


def recommend_query(state: CommitmentState, measure: MeasureFn) -> ArgumentId:
    """The undecided argument with the greatest expected reduction; ties go to
    the lexicographically smallest id."""
    ranked = rank_queries(state, measure)
    if not ranked:
        raise NoUndecidedError("no undecided argument can be queried")
    return ranked[0].query
