"""Pluggable agent behaviour.

Two backends speak the same one-action-per-invocation interface: a
deterministic scripted backend that replays per-role action queues (the
test and trace-replay substrate), and a generic chat-completion-shaped
HTTP client for live language models. Feedback-size discipline lives here
too, since it applies to agent output before anything else sees it.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Optional, Protocol, Union

from .errors import (
    BackendUnreachable,
    MalformedReply,
    ScenarioParseError,
    ScriptExhausted,
)
from .roles import AgentRole


class Verdict(str, Enum):
    SUBSTANTIATED = "SUBSTANTIATED"
    FABRICATED = "FABRICATED"


class Route(str, Enum):
    CURATE = "curate"
    COMPOSE = "compose"
    VERIFY_ONLY = "verify_only"


# --- the action union ------------------------------------------------


@dataclass(frozen=True)
class DraftSubmission:
    title: str
    content: str


@dataclass(frozen=True)
class VerdictReport:
    verdict: Verdict
    rationale: str

    def __post_init__(self) -> None:
        if not isinstance(self.verdict, Verdict):
            object.__setattr__(self, "verdict", Verdict(self.verdict))


@dataclass(frozen=True)
class ScoreReport:
    score: int
    feedback: str

    def __post_init__(self) -> None:
        if not isinstance(self.score, int) or isinstance(self.score, bool):
            raise ValueError("score must be an integer")
        if not 0 <= self.score <= 100:
            raise ValueError("score must be in [0, 100]")


@dataclass(frozen=True)
class ClarificationRequest:
    question: str


@dataclass(frozen=True)
class CurationUpdate:
    doc_id: str
    updates: dict[str, Any]


@dataclass(frozen=True)
class CompressionSummary:
    summary: str


@dataclass(frozen=True)
class RouteChoice:
    route: Route

    def __post_init__(self) -> None:
        if not isinstance(self.route, Route):
            object.__setattr__(self, "route", Route(self.route))


AgentAction = Union[
    DraftSubmission,
    VerdictReport,
    ScoreReport,
    ClarificationRequest,
    CurationUpdate,
    CompressionSummary,
    RouteChoice,
]

_ACTION_TAGS: dict[str, type] = {
    "draft_submission": DraftSubmission,
    "verdict_report": VerdictReport,
    "score_report": ScoreReport,
    "clarification_request": ClarificationRequest,
    "curation_update": CurationUpdate,
    "compression_summary": CompressionSummary,
    "route_choice": RouteChoice,
}
_TAG_FOR_TYPE = {cls: tag for tag, cls in _ACTION_TAGS.items()}


def action_to_dict(action: AgentAction) -> dict[str, Any]:
    tag = _TAG_FOR_TYPE[type(action)]
    body: dict[str, Any] = {"type": tag}
    if isinstance(action, DraftSubmission):
        body.update(title=action.title, content=action.content)
    elif isinstance(action, VerdictReport):
        body.update(verdict=action.verdict.value, rationale=action.rationale)
    elif isinstance(action, ScoreReport):
        body.update(score=action.score, feedback=action.feedback)
    elif isinstance(action, ClarificationRequest):
        body.update(question=action.question)
    elif isinstance(action, CurationUpdate):
        body.update(doc_id=action.doc_id, updates=action.updates)
    elif isinstance(action, CompressionSummary):
        body.update(summary=action.summary)
    elif isinstance(action, RouteChoice):
        body.update(route=action.route.value)
    return body


def action_from_dict(raw: dict[str, Any]) -> AgentAction:
    if not isinstance(raw, dict) or "type" not in raw:
        raise MalformedReply(f"no action tag in {raw!r}")
    tag = raw["type"]
    cls = _ACTION_TAGS.get(tag)
    if cls is None:
        raise MalformedReply(f"unknown action tag {tag!r}")
    fields = {k: v for k, v in raw.items() if k != "type"}
    try:
        return cls(**fields)
    except (TypeError, ValueError) as exc:
        raise MalformedReply(f"bad {tag} payload: {exc}") from exc


def action_text(action: AgentAction) -> str:
    """Serialized form used for token estimation and event recording."""
    return json.dumps(action_to_dict(action), ensure_ascii=False, sort_keys=True)


# --- feedback discipline ---------------------------------------------

TRUNCATION_MARKER = "[truncated]"


@dataclass(frozen=True)
class FeedbackPolicy:
    max_words: int = 1000

    def __post_init__(self) -> None:
        if self.max_words <= 0:
            raise ValueError("max_words must be positive")


def clamp_feedback(text: str, policy: FeedbackPolicy = FeedbackPolicy()) -> str:
    """Cap feedback at max_words whitespace-delimited words.

    Over-long text keeps its first max_words words and gains the
    truncation marker; the operation is idempotent.
    """
    words = text.split()
    if len(words) <= policy.max_words:
        return text
    return " ".join(words[: policy.max_words]) + " " + TRUNCATION_MARKER


# --- backends ---------------------------------------------------------

Observation = dict[str, Any]


def observation_text(observation: Observation) -> str:
    return json.dumps(observation, ensure_ascii=False, sort_keys=True)


class AgentBackend(Protocol):
    def next_action(self, role: AgentRole, observation: Observation) -> AgentAction: ...

    def wants_turn(self, role: AgentRole) -> bool: ...


@dataclass
class ScenarioScript:
    """Per-role ordered action queues consumed strictly in order."""

    name: str
    queues: dict[AgentRole, list[AgentAction]]

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> "ScenarioScript":
        try:
            name = raw["name"]
            queues: dict[AgentRole, list[AgentAction]] = {}
            for role_name, actions in raw.get("queues", {}).items():
                role = AgentRole(role_name)
                queues[role] = [action_from_dict(a) for a in actions]
        except (KeyError, TypeError, ValueError, MalformedReply) as exc:
            raise ScenarioParseError(str(exc)) from exc
        return cls(name=name, queues=queues)

    @classmethod
    def from_file(cls, path: Path | str) -> "ScenarioScript":
        try:
            raw = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ScenarioParseError(f"{path}: {exc}") from exc
        return cls.from_dict(raw)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "queues": {
                role.value: [action_to_dict(a) for a in actions]
                for role, actions in self.queues.items()
            },
        }


class ScriptedBackend:
    """Replays a ScenarioScript; deterministic and observation-recording.

    Observations are ignored for action selection but kept verbatim so
    replay assertions can inspect exactly what each role saw.
    """

    def __init__(self, script: ScenarioScript) -> None:
        self.script = script
        self._queues: dict[AgentRole, deque[AgentAction]] = {
            role: deque(actions) for role, actions in script.queues.items()
        }
        self.observations: list[tuple[AgentRole, Observation]] = []

    def next_action(self, role: AgentRole, observation: Observation) -> AgentAction:
        self.observations.append((role, observation))
        queue = self._queues.get(role)
        if not queue:
            raise ScriptExhausted(f"{role.value} queue empty in scenario {self.script.name!r}")
        return queue.popleft()

    def wants_turn(self, role: AgentRole) -> bool:
        return bool(self._queues.get(role))

    def observations_for(self, role: AgentRole) -> list[Observation]:
        return [obs for r, obs in self.observations if r == role]


@dataclass(frozen=True)
class HttpBackendConfig:
    base_url: str
    model: str
    price_per_input_token: float = 0.0
    price_per_output_token: float = 0.0
    cached_input_multiplier: float = 0.1
    consult_concierge: bool = False
    timeout_seconds: float = 60.0

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> "HttpBackendConfig":
        return cls(
            base_url=raw["base_url"],
            model=raw["model"],
            price_per_input_token=raw.get("price_per_input_token", 0.0),
            price_per_output_token=raw.get("price_per_output_token", 0.0),
            cached_input_multiplier=raw.get("cached_input_multiplier", 0.1),
            consult_concierge=raw.get("consult_concierge", False),
            timeout_seconds=raw.get("timeout_seconds", 60.0),
        )


_SYSTEM_PROMPT = (
    "You operate one role inside a compartmentalised composition workflow. "
    "Reply with a single JSON object carrying a \"type\" field naming your "
    "action and its fields; no prose outside the JSON."
)


class HttpBackend:
    """Generic chat-completion-shaped client.

    Vendor-neutral: base URL, model name and per-token prices come from
    config. The tool schema list presented for a role is exactly its grant
    set. A reply must carry a structured action object; anything else is a
    MalformedReply rather than a guess.
    """

    def __init__(
        self,
        config: HttpBackendConfig,
        grant_table: Optional[dict[AgentRole, frozenset[str]]] = None,
    ) -> None:
        from .provisioning import DEFAULT_GRANT_TABLE

        self.config = config
        self._grants = grant_table or DEFAULT_GRANT_TABLE
        self.last_usage: Optional[dict[str, int]] = None

    def tool_schemas(self, role: AgentRole) -> list[dict[str, Any]]:
        return [
            {
                "type": "function",
                "function": {"name": tool, "parameters": {"type": "object"}},
            }
            for tool in sorted(self._grants[role])
        ]

    def next_action(self, role: AgentRole, observation: Observation) -> AgentAction:
        import httpx

        payload = {
            "model": self.config.model,
            "messages": [
                {"role": "system", "content": _SYSTEM_PROMPT},
                {"role": "user", "content": observation_text(observation)},
            ],
            "tools": self.tool_schemas(role),
        }
        try:
            response = httpx.post(
                self.config.base_url.rstrip("/") + "/chat/completions",
                json=payload,
                timeout=self.config.timeout_seconds,
            )
            response.raise_for_status()
        except httpx.HTTPError as exc:
            raise BackendUnreachable(str(exc)) from exc
        body = response.json()
        try:
            content = body["choices"][0]["message"]["content"]
        except (KeyError, IndexError, TypeError) as exc:
            raise MalformedReply(f"no message content: {exc}") from exc
        self.last_usage = _parse_usage(body.get("usage"))
        try:
            raw = json.loads(content)
        except (TypeError, json.JSONDecodeError) as exc:
            raise MalformedReply(f"reply is not a JSON action: {exc}") from exc
        return action_from_dict(raw)

    def wants_turn(self, role: AgentRole) -> bool:
        return role == AgentRole.CONCIERGE and self.config.consult_concierge


def _parse_usage(raw: Any) -> Optional[dict[str, int]]:
    if not isinstance(raw, dict):
        return None
    usage = {}
    for ours, theirs in (
        ("input_tokens", "prompt_tokens"),
        ("output_tokens", "completion_tokens"),
        ("cached_input_tokens", "cached_tokens"),
    ):
        value = raw.get(theirs)
        if isinstance(value, int):
            usage[ours] = value
    return usage or None


class GatedBackend:
    """Wrapper that blocks every call until released; for liveness tests."""

    def __init__(self, inner: AgentBackend) -> None:
        import threading

        self.inner = inner
        self.gate = threading.Event()
        self.calls = 0

    def release(self) -> None:
        self.gate.set()

    def next_action(self, role: AgentRole, observation: Observation) -> AgentAction:
        self.gate.wait()
        self.calls += 1
        return self.inner.next_action(role, observation)

    def wants_turn(self, role: AgentRole) -> bool:
        return self.inner.wants_turn(role)
