"""Command line mirroring the REST API one-to-one, plus serve and replay.

Client verbs talk to a running server (--server or SCRIPTORIUM_SERVER);
serve and replay run locally.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Optional

from .config import SERVER_ENV, build_engine, default_backend, load_settings
from .workflow import ProjectStatus, WorkflowConfig

DEFAULT_SERVER = "http://127.0.0.1:8466"


def _client(args: argparse.Namespace):
    import httpx

    return httpx.Client(base_url=args.server, timeout=30.0)


def _emit(payload: Any) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _workflow_config(args: argparse.Namespace) -> Optional[dict[str, Any]]:
    overrides = {}
    for key in ("tau", "max_iterations", "token_budget", "context_limit", "comparator"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    return overrides or None


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--tau", type=int)
    parser.add_argument("--max-iterations", dest="max_iterations", type=int)
    parser.add_argument("--token-budget", dest="token_budget", type=int)
    parser.add_argument("--context-limit", dest="context_limit", type=int)
    parser.add_argument("--comparator", choices=[">=", ">"])


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    settings = load_settings(args.config)
    if args.addr:
        settings.listen_addr = args.addr
    engine = build_engine(settings)
    app = create_app(engine, backend_factory=lambda: default_backend(settings, engine))
    host, _, port = settings.listen_addr.partition(":")
    logging.basicConfig(level=logging.INFO)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8466))
    return 0


def cmd_replay(args: argparse.Namespace) -> int:
    from .service import replay

    overrides = _workflow_config(args) or {}
    config = WorkflowConfig.from_dict(overrides)
    result = replay(args.scenario, config, seed=args.seed, workdir=args.workdir)
    _emit(result["trace"] if args.trace_only else result)
    status = result["status"]
    if status == ProjectStatus.COMPLETED.value:
        return 0
    if status == ProjectStatus.ABORTED.value:
        return 2
    return 1


def cmd_ingest(args: argparse.Namespace) -> int:
    content = Path(args.file).read_text(encoding="utf-8") if args.file else args.content
    body = {"title": args.title, "content": content, "visibility": args.visibility}
    with _client(args) as client:
        response = client.post("/documents", json=body)
    _emit(response.json())
    return 0 if response.is_success else 1


def cmd_start(args: argparse.Namespace) -> int:
    body: dict[str, Any] = {"remit": args.remit, "source_ids": args.source or []}
    if args.scenario:
        body["scenario"] = args.scenario
    config = _workflow_config(args)
    if config:
        body["config"] = config
    with _client(args) as client:
        response = client.post("/projects", json=body)
    _emit(response.json())
    return 0 if response.is_success else 1


def cmd_status(args: argparse.Namespace) -> int:
    path = f"/projects/{args.project_id}" if args.project_id else "/projects"
    with _client(args) as client:
        response = client.get(path)
    _emit(response.json())
    return 0 if response.is_success else 1


def cmd_events(args: argparse.Namespace) -> int:
    with _client(args) as client:
        response = client.get(f"/projects/{args.project_id}/events")
    _emit(response.json())
    return 0 if response.is_success else 1


def cmd_abort(args: argparse.Namespace) -> int:
    with _client(args) as client:
        response = client.post(
            f"/projects/{args.project_id}/abort", json={"reason": args.reason}
        )
    _emit(response.json())
    return 0 if response.is_success else 1


def cmd_promote(args: argparse.Namespace) -> int:
    with _client(args) as client:
        response = client.post(
            f"/documents/{args.doc_id}/promote", json={"to": args.to}
        )
    _emit(response.json())
    return 0 if response.is_success else 1


def cmd_clarify_list(args: argparse.Namespace) -> int:
    with _client(args) as client:
        response = client.get("/clarifications", params={"state": "open"})
    _emit(response.json())
    return 0 if response.is_success else 1


def cmd_clarify_answer(args: argparse.Namespace) -> int:
    with _client(args) as client:
        response = client.post(
            f"/clarifications/{args.ticket_id}/answer", json={"answer": args.answer}
        )
    _emit(response.json())
    return 0 if response.is_success else 1


def cmd_metrics(args: argparse.Namespace) -> int:
    params = {"format": "text"} if args.text else {}
    with _client(args) as client:
        response = client.get("/metrics", params=params)
    print(response.text if args.text else json.dumps(response.json(), indent=2))
    return 0 if response.is_success else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scriptorium")
    parser.add_argument(
        "--server",
        default=os.environ.get(SERVER_ENV, DEFAULT_SERVER),
        help="base URL of a running scriptorium server (client verbs)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the REST service")
    p.add_argument("--config", help="path to the engine config file")
    p.add_argument("--addr", help="host:port to listen on")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("replay", help="run a scripted scenario deterministically")
    p.add_argument("scenario", help="scenario file path or bundled name (table1, improving)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workdir", help="directory for the replay catalogue")
    p.add_argument("--trace-only", action="store_true", help="print only the trace JSON")
    _add_config_flags(p)
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("ingest", help="ingest a source document")
    p.add_argument("--title", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--file")
    group.add_argument("--content")
    p.add_argument("--visibility", default="candidate")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("start", help="start a project")
    p.add_argument("--remit", required=True)
    p.add_argument("--source", action="append", help="source document id (repeatable)")
    p.add_argument("--scenario", help="scripted scenario name, path, or omit for the default backend")
    _add_config_flags(p)
    p.set_defaults(func=cmd_start)

    p = sub.add_parser("status", help="project status (all projects when id omitted)")
    p.add_argument("project_id", nargs="?")
    p.set_defaults(func=cmd_status)

    p = sub.add_parser("events", help="full event trace of a project")
    p.add_argument("project_id")
    p.set_defaults(func=cmd_events)

    p = sub.add_parser("abort", help="abort an active project")
    p.add_argument("project_id")
    p.add_argument("--reason", default="")
    p.set_defaults(func=cmd_abort)

    p = sub.add_parser("promote", help="promote a document")
    p.add_argument("doc_id")
    p.add_argument("--to", required=True)
    p.set_defaults(func=cmd_promote)

    p = sub.add_parser("clarify-list", help="list open clarification tickets")
    p.set_defaults(func=cmd_clarify_list)

    p = sub.add_parser("clarify-answer", help="answer a clarification ticket")
    p.add_argument("ticket_id")
    p.add_argument("--answer", required=True)
    p.set_defaults(func=cmd_clarify_answer)

    p = sub.add_parser("metrics", help="operational metrics report")
    p.add_argument("--text", action="store_true", help="render the plain-text tables")
    p.set_defaults(func=cmd_metrics)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
