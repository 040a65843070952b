"""HTTP+JSON facade over the resolution engine.

Sessions live in memory; every mutation is serialized through a per-session
lock and bumps a version counter, so two racing answers for the same argument
resolve to exactly one winner and one conflict. Optionally each mutation is
snapshotted to a JSON file per session.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .arguments import InstantiatedGraph
from .errors import (
    AlreadyCommittedError,
    ArgmeterError,
    CommitmentConflictError,
    EmptyHistoryError,
    NoUndecidedError,
    ParseError,
    UnknownArgumentError,
)
from .formats import parse_graph, parse_instantiated
from .graphs import ArgumentGraph
from .instantiated_measures import INSTANTIATED_MEASURES
from .properties import ABSTRACT_MEASURES
from .resolution import (
    CommitmentState,
    apply_answer,
    initial_state,
    is_committed,
    rank_queries,
    reduced_graph,
    replay,
    undo,
)
from .semantics import IN, OUT, UNDEC

MeasureFn = Callable[[ArgumentGraph], Fraction]


def _measure_fn(name: str, instantiated: Optional[InstantiatedGraph]) -> MeasureFn:
    if name in ABSTRACT_MEASURES:
        return ABSTRACT_MEASURES[name]
    if name in INSTANTIATED_MEASURES:
        if instantiated is None:
            raise ArgmeterError(f"measure {name!r} needs an instantiated graph document")
        fn = INSTANTIATED_MEASURES[name]

        def on_reduced(g: ArgumentGraph) -> Fraction:
            return fn(instantiated.restricted_to(g.nodes))

        return on_reduced
    raise ArgmeterError(f"unknown measure {name!r}")


def _fraction_json(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator, "approx": float(value)}


def _graph_json(g: ArgumentGraph) -> dict:
    return {"nodes": g.sorted_nodes(), "arcs": [[s, t] for s, t in g.sorted_arcs()]}


@dataclass
class Session:
    id: str
    state: CommitmentState
    measures: dict[str, MeasureFn]
    instantiated: Optional[InstantiatedGraph] = None
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    version: int = 0
    lock: threading.Lock = field(default_factory=threading.Lock)

    def measure_values(self, state: Optional[CommitmentState] = None) -> dict:
        target = reduced_graph(state or self.state)
        return {name: _fraction_json(fn(target)) for name, fn in self.measures.items()}

    def trajectory(self) -> list[dict]:
        moves = [(event.query, event.answer) for event in self.state.history]
        rows = []
        for step in range(len(moves) + 1):
            prefix = replay(self.state.graph, moves[:step])
            rows.append({"step": step, "measures": self.measure_values(prefix)})
        return rows

    def to_json(self) -> dict:
        state = self.state
        trajectory = self.trajectory()
        # the transcript: each answer carries the measure snapshot it led to
        history = [
            {
                "step": i + 1,
                "query": event.query,
                "answer": event.answer,
                "measures": trajectory[i + 1]["measures"],
            }
            for i, event in enumerate(state.history)
        ]
        return {
            "id": self.id,
            "version": self.version,
            "graph": _graph_json(state.graph),
            "labelling": {a: state.labelling[a] for a in state.graph.sorted_nodes()},
            "reduced_graph": _graph_json(reduced_graph(state)),
            "measures": self.measure_values(),
            "committed": is_committed(state),
            "undecided": sorted(
                a for a in state.graph.nodes if state.labelling[a] == UNDEC
            ),
            "history": history,
            "trajectory": trajectory,
        }


class SessionManager:
    def __init__(self, snapshot_dir: Optional[str] = None):
        self.sessions: dict[str, Session] = {}
        self.snapshot_dir = Path(snapshot_dir) if snapshot_dir else None
        self._registry_lock = threading.Lock()
        if self.snapshot_dir:
            self.snapshot_dir.mkdir(parents=True, exist_ok=True)

    def create(self, document: str, fmt: str, measures: list[str]) -> Session:
        instantiated = None
        if fmt == "inst":
            instantiated = parse_instantiated(document)
            g = instantiated.graph
        else:
            g = parse_graph(document, fmt)
        if not g.nodes:
            raise ParseError("the graph has no arguments; nothing to resolve")
        if not measures:
            measures = ["in"]
        fns = {name: _measure_fn(name, instantiated) for name in measures}
        session = Session(
            id=secrets.token_hex(8),
            state=initial_state(g),
            measures=fns,
            instantiated=instantiated,
        )
        with self._registry_lock:
            self.sessions[session.id] = session
        self._snapshot(session)
        return session

    def get(self, session_id: str) -> Session:
        try:
            return self.sessions[session_id]
        except KeyError:
            raise KeyError(f"unknown session {session_id!r}")

    def answer(self, session_id: str, argument: str, answer: str) -> Session:
        session = self.get(session_id)
        with session.lock:
            session.state = apply_answer(session.state, argument, answer)
            session.version += 1
            session.updated = time.time()
        self._snapshot(session)
        return session

    def undo(self, session_id: str) -> Session:
        session = self.get(session_id)
        with session.lock:
            if not session.state.history:
                raise EmptyHistoryError("the history is empty; nothing to undo")
            session.state = undo(session.state)
            session.version += 1
            session.updated = time.time()
        self._snapshot(session)
        return session

    def recommendation(self, session_id: str, measure: Optional[str]) -> dict:
        session = self.get(session_id)
        if measure is None:
            measure = next(iter(session.measures))
        if measure in session.measures:
            fn = session.measures[measure]
        else:
            fn = _measure_fn(measure, session.instantiated)
        table = rank_queries(session.state, fn)
        if not table:
            raise NoUndecidedError("no undecided argument can be queried")
        best = table[0]
        row_json = lambda row: {
            "argument": row.query,
            "value_if_in": _fraction_json(row.value_if_in),
            "value_if_out": _fraction_json(row.value_if_out),
            "expected_reduction": _fraction_json(row.expected_reduction),
        }
        return {
            "measure": measure,
            **row_json(best),
            "candidates": [row_json(row) for row in table],
        }

    def _snapshot(self, session: Session) -> None:
        if not self.snapshot_dir:
            return
        path = self.snapshot_dir / f"{session.id}.json"
        path.write_text(json.dumps(session.to_json(), sort_keys=True), encoding="utf-8")


# ---------------------------------------------------------------------------
# FastAPI wiring


class CreateSessionBody(BaseModel):
    document: str
    format: str = Field(default="tgf", pattern="^(tgf|apx|inst)$")
    measures: list[str] = Field(default_factory=lambda: ["in"])


class AnswerBody(BaseModel):
    argument: str
    answer: str = Field(pattern=f"^({IN}|{OUT})$")


def create_app(
    allow_origin: Optional[str] = None,
    snapshot_dir: Optional[str] = None,
    ui_dir: Optional[str] = None,
) -> FastAPI:
    app = FastAPI(title="argmeter", version="0.1.0")
    manager = SessionManager(snapshot_dir=snapshot_dir)
    app.state.manager = manager

    if allow_origin:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=[allow_origin],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    def run(fn, *args):
        """Map domain errors onto HTTP statuses."""
        try:
            return fn(*args)
        except KeyError as exc:
            raise HTTPException(404, detail=str(exc))
        except (ParseError, UnknownArgumentError, ValueError) as exc:
            raise HTTPException(400, detail=str(exc))
        except (
            AlreadyCommittedError,
            CommitmentConflictError,
            NoUndecidedError,
            EmptyHistoryError,
        ) as exc:
            raise HTTPException(409, detail=str(exc))
        except ArgmeterError as exc:
            raise HTTPException(400, detail=str(exc))

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        session = run(manager.create, body.document, body.format, body.measures)
        return session.to_json()

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return run(manager.get, session_id).to_json()

    @app.get("/sessions/{session_id}/recommendation")
    def get_recommendation(session_id: str, measure: Optional[str] = None):
        return run(manager.recommendation, session_id, measure)

    @app.post("/sessions/{session_id}/answers")
    def post_answer(session_id: str, body: AnswerBody):
        return run(manager.answer, session_id, body.argument, body.answer).to_json()

    @app.post("/sessions/{session_id}/undo")
    def post_undo(session_id: str):
        return run(manager.undo, session_id).to_json()

    if ui_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def run_server(app: FastAPI, host: str = "127.0.0.1", port: int = 8023) -> None:
    import uvicorn

    uvicorn.run(app, host=host, port=port)
