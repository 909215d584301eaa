"""Asynchronous REST facade over the engine, plus the replay entry point.

POST /projects answers 202 with the fresh project id before any agent
step runs; clients poll the read endpoints or subscribe to the per-project
event stream. Handlers are stateless: they reach project executors only
through the engine's catalogue, ticket queue and event log.
"""

from __future__ import annotations

import importlib.resources
import json
import tempfile
import time
from pathlib import Path
from typing import Any, Optional, Union

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse, StreamingResponse
from pydantic import BaseModel

from . import metrics
from .agents import ScenarioScript, ScriptedBackend
from .catalogue import DocumentMetadata, VisibilityLevel
from .compression import Prices
from .errors import (
    AlreadyTerminal,
    EmptyDocument,
    EmptyRemit,
    EngineError,
    NotPermitted,
    ScenarioParseError,
    TicketAlreadyAnswered,
    UnknownDocument,
    UnknownProject,
    UnknownTicket,
)
from .events import LogicalClock
from .workflow import Engine, ProjectStatus, WorkflowConfig

_NOT_FOUND = (UnknownDocument, UnknownProject, UnknownTicket)
_CONFLICT = (AlreadyTerminal, TicketAlreadyAnswered)
_BAD_REQUEST = (EmptyDocument, EmptyRemit, NotPermitted, ScenarioParseError, ValueError)


def _http_error(exc: Exception) -> HTTPException:
    if isinstance(exc, _NOT_FOUND):
        return HTTPException(status_code=404, detail=str(exc))
    if isinstance(exc, _CONFLICT):
        return HTTPException(status_code=409, detail=str(exc))
    if isinstance(exc, _BAD_REQUEST):
        return HTTPException(status_code=400, detail=str(exc))
    return HTTPException(status_code=500, detail=str(exc))


class DocumentCreate(BaseModel):
    title: str
    content: str
    visibility: str = "candidate"
    metadata: Optional[dict[str, Any]] = None


class PromoteRequest(BaseModel):
    to: str
    actor: str = "user"


class ProjectCreate(BaseModel):
    remit: str
    source_ids: list[str] = []
    config: Optional[dict[str, Any]] = None
    scenario: Optional[Union[dict[str, Any], str]] = None


class AbortRequest(BaseModel):
    reason: str = ""


class AnswerRequest(BaseModel):
    answer: str


def bundled_scenario_path(name: str) -> Path:
    return Path(str(importlib.resources.files("scriptorium") / "scenarios" / f"{name}.json"))


def resolve_scenario(ref: Union[str, dict[str, Any]]) -> ScenarioScript:
    """Accept an inline script object, a file path, or a bundled name."""
    if isinstance(ref, dict):
        return ScenarioScript.from_dict(ref)
    path = Path(ref)
    if path.exists():
        return ScenarioScript.from_file(path)
    bundled = bundled_scenario_path(str(ref))
    if bundled.exists():
        return ScenarioScript.from_file(bundled)
    raise ScenarioParseError(f"no scenario file or bundled scenario named {ref!r}")


def create_app(engine: Engine, backend_factory=None) -> FastAPI:
    app = FastAPI(title="scriptorium", version="0.1.0")
    app.state.engine = engine

    # -- documents -----------------------------------------------------

    @app.post("/documents", status_code=201)
    def create_document(body: DocumentCreate):
        try:
            meta = DocumentMetadata.from_dict(body.metadata or {})
            doc_id = engine.ingest_document(
                body.title, body.content, meta, VisibilityLevel(body.visibility)
            )
        except (EngineError, ValueError) as exc:
            raise _http_error(exc)
        return {"id": doc_id}

    @app.get("/documents")
    def list_documents(visibility: Optional[str] = Query(default=None)):
        try:
            levels = (
                [VisibilityLevel(visibility)] if visibility else list(VisibilityLevel)
            )
        except ValueError as exc:
            raise _http_error(exc)
        documents = []
        for level in levels:
            for summary in engine.catalogue.list_for(level):
                entry = summary.to_dict()
                entry["visibility"] = level.value
                documents.append(entry)
        return {"documents": documents}

    @app.get("/documents/{doc_id}")
    def get_document(doc_id: str):
        try:
            doc = engine.catalogue.get(doc_id)
        except EngineError as exc:
            raise _http_error(exc)
        return {
            "id": doc.id,
            "title": doc.title,
            "content": doc.content,
            "visibility": doc.visibility.value,
            "metadata": doc.metadata.to_dict(),
        }

    @app.post("/documents/{doc_id}/promote")
    def promote_document(doc_id: str, body: PromoteRequest):
        try:
            doc = engine.catalogue.promote(doc_id, VisibilityLevel(body.to), body.actor)
        except (EngineError, ValueError) as exc:
            raise _http_error(exc)
        return {"id": doc.id, "visibility": doc.visibility.value}

    # -- projects ------------------------------------------------------

    @app.post("/projects", status_code=202)
    def create_project(body: ProjectCreate):
        try:
            if body.scenario is not None:
                backend = ScriptedBackend(resolve_scenario(body.scenario))
            elif backend_factory is not None:
                backend = backend_factory()
            else:
                raise ValueError("no scenario given and no default backend configured")
            if backend is None:
                raise ValueError("no scenario given and no default backend configured")
            config = (
                WorkflowConfig.from_dict(body.config) if body.config else None
            )
            project_id = engine.start_project(
                body.remit, body.source_ids, config, backend
            )
        except (EngineError, ValueError) as exc:
            raise _http_error(exc)
        return {"project_id": project_id}

    @app.get("/projects")
    def list_projects():
        projects = [engine.project_view(pid) for pid in engine.project_ids()]
        return {"projects": projects}

    @app.get("/projects/{project_id}")
    def get_project(project_id: str):
        try:
            return engine.project_view(project_id)
        except EngineError as exc:
            raise _http_error(exc)

    @app.get("/projects/{project_id}/events")
    def get_project_events(project_id: str):
        try:
            return {"events": engine.project_events(project_id)}
        except EngineError as exc:
            raise _http_error(exc)

    @app.get("/projects/{project_id}/stream")
    def stream_project_events(project_id: str):
        try:
            engine.project_view(project_id)
        except EngineError as exc:
            raise _http_error(exc)

        def frames():
            seen = 0
            while True:
                records = engine.project_events(project_id)
                for rec in records[seen:]:
                    yield f"data: {json.dumps(rec, ensure_ascii=False)}\n\n"
                seen = len(records)
                view = engine.project_view(project_id)
                if view["status"] != ProjectStatus.ACTIVE.value:
                    if len(engine.project_events(project_id)) == seen:
                        return
                time.sleep(0.1)

        return StreamingResponse(frames(), media_type="text/event-stream")

    @app.post("/projects/{project_id}/abort")
    def abort_project(project_id: str, body: AbortRequest = AbortRequest()):
        try:
            status = engine.abort_project(project_id, body.reason)
        except EngineError as exc:
            raise _http_error(exc)
        return {"project_id": project_id, "status": status.value}

    # -- clarifications --------------------------------------------------

    @app.get("/clarifications")
    def list_clarifications(state: Optional[str] = Query(default=None)):
        return {"tickets": [t.to_dict() for t in engine.tickets(state)]}

    @app.post("/clarifications/{ticket_id}/answer")
    def answer_clarification(ticket_id: str, body: AnswerRequest):
        try:
            ticket = engine.answer_clarification(ticket_id, body.answer)
        except EngineError as exc:
            raise _http_error(exc)
        return ticket.to_dict()

    # -- metrics -----------------------------------------------------------

    @app.get("/metrics")
    def get_metrics(format: Optional[str] = Query(default=None)):
        report = metrics.build_report(
            engine.events.read_all(),
            engine.ledgers_by_project(),
            seed=engine.metrics_seed,
        )
        if format == "text":
            return PlainTextResponse(metrics.render_text_report(report))
        return report

    return app


DEFAULT_REPLAY_SOURCE = (
    "Source material for replay runs: a short collection of reference "
    "notes the composition cycle can cite."
)


def replay(
    scenario_file: Union[str, Path, dict[str, Any]],
    config: Optional[WorkflowConfig] = None,
    seed: int = 0,
    workdir: Optional[Union[str, Path]] = None,
    prices: Prices = Prices(),
) -> dict[str, Any]:
    """Run one scripted project deterministically and return its trace.

    A fresh engine is built in workdir (or a temp directory) with a
    logical clock and the given seed, so two replays of the same scenario
    and seed produce byte-identical event logs and trace JSON.
    """
    script = resolve_scenario(
        scenario_file if isinstance(scenario_file, dict) else str(scenario_file)
    )
    if workdir is None:
        workdir = tempfile.mkdtemp(prefix="replay-")
    engine = Engine(
        Path(workdir) / "catalogue",
        seed=seed,
        clock=LogicalClock(),
        prices=prices,
    )
    source_id = engine.ingest_document("replay source", DEFAULT_REPLAY_SOURCE)
    backend = ScriptedBackend(script)
    project_id = engine.start_project(
        f"replay of scenario {script.name}", [source_id], config, backend
    )
    status = engine.run_project(project_id)
    trace = engine.project_trace(project_id)
    return {
        "project_id": project_id,
        "status": status.value,
        "trace": trace,
        "events_path": str(Path(workdir) / "catalogue" / "events.jsonl"),
    }
