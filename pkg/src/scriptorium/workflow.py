"""Layer 3: the directed state machine driving projects to convergence.

A project runs on its own executor thread: optional Concierge
clarification, Commutator triage, optional Curator enrichment, then the
compose -> corroborate -> critique cycle until the Critic's score clears
the threshold, the iteration cap is hit, the budget runs out, or the user
aborts. Every agent consultation flows through one choke point that
records the observation, meters tokens, enforces the action protocol and
honours abort requests, so the event log is a complete replayable trace.
"""

from __future__ import annotations

import random
import re
import threading
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Optional

from .agents import (
    AgentAction,
    AgentBackend,
    ClarificationRequest,
    CompressionSummary,
    CurationUpdate,
    DraftSubmission,
    FeedbackPolicy,
    Observation,
    Route,
    RouteChoice,
    ScoreReport,
    Verdict,
    VerdictReport,
    action_text,
    action_to_dict,
    clamp_feedback,
    observation_text,
)
from .catalogue import Catalogue, DocumentMetadata, VisibilityLevel, seeded_id_factory
from .compression import (
    BudgetWarning,
    CompressionPolicy,
    Estimator,
    Prices,
    TokenLedger,
    budget_signal,
    default_estimator,
    maybe_compress,
)
from .errors import (
    AlreadyTerminal,
    BudgetExhausted,
    CompressionIneffective,
    DownstreamClarification,
    EmptyRemit,
    EngineError,
    MalformedReply,
    ProtocolViolation,
    TicketAlreadyAnswered,
    UnknownDocument,
    UnknownProject,
    UnknownTicket,
)
from .events import Clock, system_clock
from .provisioning import LISTING_TOOLS, ToolGateway
from .roles import AgentRole, ENGINE, USER
from .words import WORDS

PROJECT_ID_PATTERN = re.compile(r"^[a-z]+-[a-z]+-[a-z]+-[a-z]+$")


def generate_project_id(rng: random.Random) -> str:
    """Four dictionary words sampled without replacement, hyphen-joined."""
    return "-".join(rng.sample(WORDS, 4))


class ProjectStatus(str, Enum):
    ACTIVE = "active"
    COMPLETED = "completed"
    FAILED = "failed"
    ABORTED = "aborted"

    @property
    def terminal(self) -> bool:
        return self is not ProjectStatus.ACTIVE


@dataclass
class WorkflowConfig:
    tau: int = 85
    max_iterations: int = 10
    token_budget: int = 1_000_000
    context_limit: int = 200_000
    # Acceptance comparator for score vs tau; ">=" means a score equal to
    # tau converges. Kept configurable because published traces disagree.
    comparator: str = ">="

    def __post_init__(self) -> None:
        if not 0 <= self.tau <= 100:
            raise ValueError("tau must be in [0, 100]")
        if self.max_iterations <= 0:
            raise ValueError("max_iterations must be positive")
        if self.token_budget <= 0:
            raise ValueError("token_budget must be positive")
        if self.context_limit <= 0:
            raise ValueError("context_limit must be positive")
        if self.comparator not in (">=", ">"):
            raise ValueError("comparator must be '>=' or '>'")

    def accepts(self, score: int) -> bool:
        return score >= self.tau if self.comparator == ">=" else score > self.tau

    def to_dict(self) -> dict[str, Any]:
        return {
            "tau": self.tau,
            "max_iterations": self.max_iterations,
            "token_budget": self.token_budget,
            "context_limit": self.context_limit,
            "comparator": self.comparator,
        }

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> "WorkflowConfig":
        base = cls()
        return cls(
            tau=raw.get("tau", base.tau),
            max_iterations=raw.get("max_iterations", base.max_iterations),
            token_budget=raw.get("token_budget", base.token_budget),
            context_limit=raw.get("context_limit", base.context_limit),
            comparator=raw.get("comparator", base.comparator),
        )


@dataclass
class GraphState:
    """Per-project workflow state propagated through the cycle."""

    project_id: str
    config: WorkflowConfig
    iteration: int = 0
    histories: dict[AgentRole, list[dict[str, Any]]] = field(
        default_factory=lambda: {role: [] for role in AgentRole}
    )
    feedback_log: list[dict[str, Any]] = field(default_factory=list)
    score_trace: list[dict[str, Any]] = field(default_factory=list)
    verdict_trace: list[dict[str, Any]] = field(default_factory=list)
    ledger: TokenLedger = field(default_factory=TokenLedger)

    def trace_dict(self, status: ProjectStatus) -> dict[str, Any]:
        return {
            "project_id": self.project_id,
            "status": status.value,
            "config": self.config.to_dict(),
            "verdict_trace": list(self.verdict_trace),
            "score_trace": list(self.score_trace),
            "feedback_log": list(self.feedback_log),
            "ledger": self.ledger.to_dict(),
        }


@dataclass
class ClarificationTicket:
    id: str
    project_id: str
    question: str
    answer: Optional[str] = None
    state: str = "open"

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "project_id": self.project_id,
            "question": self.question,
            "answer": self.answer,
            "state": self.state,
        }


@dataclass(frozen=True)
class IterationOutcome:
    kind: str  # "converged" | "revise" | "failed"
    verdict: Optional[Verdict] = None
    score: Optional[int] = None
    reason: Optional[str] = None


class _Aborted(Exception):
    """Internal: abort honoured at an agent boundary."""


@dataclass
class _Project:
    state: GraphState
    backend: AgentBackend
    remit: str
    source_ids: list[str]
    status: ProjectStatus = ProjectStatus.ACTIVE
    paused: bool = False
    route: Optional[Route] = None
    answers: list[str] = field(default_factory=list)
    finish_reason: Optional[str] = None
    abort_reason: Optional[str] = None
    budget_warned: bool = False
    pending_warning: Optional[BudgetWarning] = None
    seen_observations: set[str] = field(default_factory=set)
    thread: Optional[threading.Thread] = None
    abort_event: threading.Event = field(default_factory=threading.Event)


class Engine:
    """Owns the catalogue, the gateway, tickets and all project executors."""

    def __init__(
        self,
        catalogue_dir: Path | str,
        seed: Optional[int] = None,
        clock: Optional[Clock] = None,
        prices: Prices = Prices(),
        feedback_policy: FeedbackPolicy = FeedbackPolicy(),
        compression_policy: CompressionPolicy = CompressionPolicy(),
        grant_table: Optional[dict[AgentRole, frozenset[str]]] = None,
        estimator: Estimator = default_estimator,
        metrics_seed: int = 20260810,
        default_config: Optional[WorkflowConfig] = None,
    ) -> None:
        self.rng = random.Random(seed)
        clock = clock or system_clock
        id_factory = seeded_id_factory(self.rng) if seed is not None else None
        self.catalogue = Catalogue(catalogue_dir, clock=clock, id_factory=id_factory)
        self.events = self.catalogue.events
        self.prices = prices
        self.feedback_policy = feedback_policy
        self.compression_policy = compression_policy
        self.estimator = estimator
        self.metrics_seed = metrics_seed
        self.default_config = default_config or WorkflowConfig()
        self.gateway = ToolGateway(self._build_registry(), self.events, grant_table)
        self._projects: dict[str, _Project] = {}
        self._tickets: dict[str, ClarificationTicket] = {}
        self._lock = threading.RLock()
        self._cond = threading.Condition(self._lock)

    # -- tool registry ---------------------------------------------------

    def _build_registry(self) -> dict[str, Any]:
        registry: dict[str, Any] = {}
        for level, tool in LISTING_TOOLS.items():
            registry[tool] = self._listing_handler(level)
        registry["query_metadata"] = lambda args: [
            m.to_dict() for m in self.catalogue.query_metadata(args.get("filter") or {})
        ]
        registry["update_metadata"] = lambda args: self.catalogue.enrich_metadata(
            args["doc_id"], args.get("updates") or {}, AgentRole.CURATOR
        ).metadata.to_dict()
        registry["read_history"] = self._read_history
        # Action-shaped tools acknowledge; their payloads reach the engine
        # as AgentActions through the backend interface.
        for tool in (
            "request_clarification",
            "choose_route",
            "submit_draft",
            "submit_verdict",
            "submit_score",
            "write_history",
        ):
            registry[tool] = lambda args, tool=tool: {"accepted": tool}
        return registry

    def _listing_handler(self, level: VisibilityLevel):
        def handler(args: dict[str, Any]) -> list[dict[str, Any]]:
            return [s.to_dict() for s in self.catalogue.list_for(level, args.get("scope"))]

        return handler

    def _read_history(self, args: dict[str, Any]) -> list[str]:
        project_id = args.get("project_id")
        role_name = args.get("role")
        with self._lock:
            proj = self._projects.get(project_id or "")
        if proj is None or role_name is None:
            return []
        history = proj.state.histories.get(AgentRole(role_name), [])
        return [str(m.get("content", "")) for m in history]

    # -- document surface -------------------------------------------------

    def ingest_document(
        self,
        title: str,
        content: str,
        meta: Optional[DocumentMetadata] = None,
        visibility: VisibilityLevel = VisibilityLevel.CANDIDATE,
        actor: str = USER,
    ) -> str:
        return self.catalogue.create_document(title, content, meta, visibility, actor)

    # -- project lifecycle -------------------------------------------------

    def start_project(
        self,
        remit: str,
        source_ids: list[str],
        config: Optional[WorkflowConfig] = None,
        backend: Optional[AgentBackend] = None,
    ) -> str:
        if not remit.strip():
            raise EmptyRemit("remit is empty")
        if backend is None:
            raise ValueError("a backend is required to start a project")
        for doc_id in source_ids:
            if not self.catalogue.exists(doc_id):
                raise UnknownDocument(doc_id)
            visibility = self.catalogue.get(doc_id).visibility
            if visibility not in (VisibilityLevel.CANDIDATE, VisibilityLevel.PUBLIC):
                raise UnknownDocument(
                    f"{doc_id} is at {visibility.value}; sources must be candidate or public"
                )
        config = config or self.default_config
        with self._lock:
            project_id = generate_project_id(self.rng)
            while project_id in self._projects:
                project_id = generate_project_id(self.rng)
            proj = _Project(
                state=GraphState(project_id=project_id, config=config),
                backend=backend,
                remit=remit,
                source_ids=list(source_ids),
            )
            self._projects[project_id] = proj
        self.events.record(
            "project_started",
            USER,
            detail={
                "project_id": project_id,
                "remit": remit,
                "source_ids": list(source_ids),
                "config": config.to_dict(),
            },
        )
        thread = threading.Thread(
            target=self._execute, args=(proj,), name=f"project-{project_id}", daemon=True
        )
        proj.thread = thread
        thread.start()
        return project_id

    def run_project(self, project_id: str, timeout: Optional[float] = None) -> ProjectStatus:
        """Wait for the executor to reach a terminal status and return it."""
        proj = self._get(project_id)
        if proj.thread is not None:
            proj.thread.join(timeout)
        return proj.status

    def abort_project(self, project_id: str, reason: str = "") -> ProjectStatus:
        with self._cond:
            proj = self._get(project_id)
            if proj.status.terminal:
                raise AlreadyTerminal(f"{project_id} is {proj.status.value}")
            proj.abort_reason = reason
            proj.abort_event.set()
            self._cond.notify_all()
        self.events.record(
            "abort_requested", USER, detail={"project_id": project_id, "reason": reason}
        )
        return ProjectStatus.ABORTED

    def clarify(self, project_id: str, role: AgentRole, question: str) -> ClarificationTicket:
        """Route a clarification request; only pre-triage Concierge may ask."""
        proj = self._get(project_id)
        if proj.status.terminal:
            raise AlreadyTerminal(f"{project_id} is {proj.status.value}")
        if role != AgentRole.CONCIERGE:
            self.events.record(
                "protocol_violation",
                role.value,
                detail={
                    "project_id": project_id,
                    "kind": "downstream_clarification",
                    "iteration": proj.state.iteration,
                    "question": question,
                },
            )
            raise DownstreamClarification(f"{role.value} may not request user clarification")
        if proj.route is not None:
            self.events.record(
                "protocol_violation",
                role.value,
                detail={
                    "project_id": project_id,
                    "kind": "clarification_after_triage",
                    "iteration": proj.state.iteration,
                },
            )
            raise ProtocolViolation("clarification after triage")
        return self._open_ticket(proj, question)

    def answer_clarification(self, ticket_id: str, answer: str) -> ClarificationTicket:
        with self._cond:
            ticket = self._tickets.get(ticket_id)
            if ticket is None:
                raise UnknownTicket(ticket_id)
            if ticket.state == "answered":
                raise TicketAlreadyAnswered(ticket_id)
            ticket.answer = answer
            ticket.state = "answered"
            proj = self._projects.get(ticket.project_id)
            if proj is not None:
                proj.answers.append(answer)
                proj.paused = False
            self._cond.notify_all()
        self.events.record(
            "clarification_answered",
            USER,
            detail={"ticket_id": ticket_id, "project_id": ticket.project_id},
        )
        if proj is not None and not proj.status.terminal:
            self.events.record(
                "project_resumed", ENGINE, detail={"project_id": ticket.project_id}
            )
        return ticket

    def tickets(self, state: Optional[str] = None) -> list[ClarificationTicket]:
        with self._lock:
            found = list(self._tickets.values())
        if state is not None:
            found = [t for t in found if t.state == state]
        return found

    def get_ticket(self, ticket_id: str) -> ClarificationTicket:
        with self._lock:
            ticket = self._tickets.get(ticket_id)
        if ticket is None:
            raise UnknownTicket(ticket_id)
        return ticket

    # -- views --------------------------------------------------------------

    def project_ids(self) -> list[str]:
        with self._lock:
            return list(self._projects)

    def project_view(self, project_id: str) -> dict[str, Any]:
        proj = self._get(project_id)
        with self._lock:
            view = proj.state.trace_dict(proj.status)
            view["iteration"] = proj.state.iteration
            view["paused"] = proj.paused
            view["remit"] = proj.remit
            view["source_ids"] = list(proj.source_ids)
            view["route"] = proj.route.value if proj.route else None
            view["finish_reason"] = proj.finish_reason
            trace = proj.state.score_trace
            view["latest_score"] = trace[-1]["score"] if trace else None
            verdicts = proj.state.verdict_trace
            view["latest_verdict"] = verdicts[-1]["verdict"] if verdicts else None
        return view

    def project_events(self, project_id: str) -> list[dict[str, Any]]:
        self._get(project_id)
        return [
            rec
            for rec in self.events.read_all()
            if rec["detail"].get("project_id") == project_id
        ]

    def project_trace(self, project_id: str) -> dict[str, Any]:
        proj = self._get(project_id)
        with self._lock:
            return proj.state.trace_dict(proj.status)

    def ledgers_by_project(self) -> dict[str, tuple[TokenLedger, ProjectStatus]]:
        with self._lock:
            return {
                pid: (proj.state.ledger, proj.status)
                for pid, proj in self._projects.items()
            }

    def _get(self, project_id: str) -> _Project:
        with self._lock:
            proj = self._projects.get(project_id)
        if proj is None:
            raise UnknownProject(project_id)
        return proj

    # -- executor ------------------------------------------------------------

    def _execute(self, proj: _Project) -> None:
        try:
            self._concierge_phase(proj)
            route = self._triage(proj)
            if route == Route.CURATE:
                self._curation_step(proj)
            if route == Route.VERIFY_ONLY:
                self._verify_only(proj)
                return
            while True:
                self._check_abort(proj)
                if proj.state.iteration >= proj.state.config.max_iterations:
                    self._finalize(proj, ProjectStatus.FAILED, "max_iterations_reached")
                    return
                outcome = self._run_iteration(proj)
                if outcome.kind == "converged":
                    self._finalize(proj, ProjectStatus.COMPLETED)
                    return
                if outcome.kind == "failed":
                    self._finalize(proj, ProjectStatus.FAILED, outcome.reason)
                    return
        except _Aborted:
            self._finalize(proj, ProjectStatus.ABORTED, proj.abort_reason or "aborted")
        except EngineError as exc:
            self._finalize(
                proj, ProjectStatus.FAILED, f"{type(exc).__name__}: {exc}"
            )

    def _check_abort(self, proj: _Project) -> None:
        if proj.abort_event.is_set():
            raise _Aborted()

    def _finalize(self, proj: _Project, status: ProjectStatus, reason: Optional[str] = None) -> None:
        with self._cond:
            proj.status = status
            proj.paused = False
            proj.finish_reason = reason
            self._cond.notify_all()
        self.events.record(
            "project_finished",
            ENGINE,
            detail={
                "project_id": proj.state.project_id,
                "status": status.value,
                "reason": reason,
                "trace": proj.state.trace_dict(status),
            },
        )

    # -- observations ----------------------------------------------------------

    def _listings_observed(self, role: AgentRole, scope: Optional[str]) -> dict[str, Any]:
        """Listings a role can see, fetched through the capability gateway."""
        listings: dict[str, Any] = {}
        for level, tool in LISTING_TOOLS.items():
            if not self.gateway.is_granted(role, tool):
                continue
            args: dict[str, Any] = {}
            if level in (VisibilityLevel.DRAFT, VisibilityLevel.FEEDBACK) and scope:
                args["scope"] = scope
            listings[tool] = self.gateway.invoke(role, tool, args).value
        return listings

    def _source_documents(self, proj: _Project, role: AgentRole) -> Optional[list[dict[str, str]]]:
        # Full source bodies ride along only for roles granted the
        # candidate listing; everyone else sees at most summaries.
        if not self.gateway.is_granted(role, LISTING_TOOLS[VisibilityLevel.CANDIDATE]):
            return None
        docs = []
        for doc_id in proj.source_ids:
            doc = self.catalogue.get(doc_id)
            docs.append({"id": doc.id, "title": doc.title, "content": doc.content})
        return docs

    def _base_observation(self, proj: _Project, role: AgentRole) -> Observation:
        obs: Observation = {
            "role": role.value,
            "project_id": proj.state.project_id,
            "remit": proj.remit,
            "listings": self._listings_observed(role, proj.state.project_id),
        }
        sources = self._source_documents(proj, role)
        if sources is not None:
            obs["source_documents"] = sources
        return obs

    # -- the consultation choke point --------------------------------------------

    def _consult(
        self,
        proj: _Project,
        role: AgentRole,
        observation: Observation,
        expected: tuple[type, ...],
        wrong_action: type[EngineError] = ProtocolViolation,
    ) -> AgentAction:
        self._check_abort(proj)
        state = proj.state
        if state.ledger.total_tokens >= state.config.token_budget:
            self.events.record(
                "budget_exhausted",
                ENGINE,
                detail={
                    "project_id": state.project_id,
                    "spent": state.ledger.total_tokens,
                    "budget": state.config.token_budget,
                },
            )
            raise BudgetExhausted(
                f"{state.ledger.total_tokens} tokens spent of {state.config.token_budget}"
            )
        obs_text = observation_text(observation)
        self.events.record(
            "observation",
            role.value,
            detail={"project_id": state.project_id, "observation": observation},
        )
        cached = obs_text in proj.seen_observations
        proj.seen_observations.add(obs_text)

        action = proj.backend.next_action(role, observation)

        usage = getattr(proj.backend, "last_usage", None)
        if usage:
            cached_tokens = min(usage.get("cached_input_tokens", 0), usage.get("input_tokens", 0))
            state.ledger.add_input(
                usage.get("input_tokens", 0) - cached_tokens, self.prices, cached=False
            )
            state.ledger.add_input(cached_tokens, self.prices, cached=True)
            state.ledger.add_output(usage.get("output_tokens", 0), self.prices)
        else:
            state.ledger.add_input(self.estimator(obs_text), self.prices, cached=cached)
            state.ledger.add_output(self.estimator(action_text(action)), self.prices)

        self.events.record(
            "action",
            role.value,
            detail={"project_id": state.project_id, "action": action_to_dict(action)},
        )
        state.histories[role].append({"type": "observation", "content": obs_text})
        state.histories[role].append({"type": "action", "content": action_text(action)})

        warning = budget_signal(state.ledger, state.config, self.compression_policy)
        if warning is not None and not proj.budget_warned:
            proj.budget_warned = True
            proj.pending_warning = warning
            self.events.record(
                "budget_warning",
                ENGINE,
                detail={"project_id": state.project_id, **warning.to_dict()},
            )

        if isinstance(action, ClarificationRequest) and role != AgentRole.CONCIERGE:
            self.events.record(
                "protocol_violation",
                role.value,
                detail={
                    "project_id": state.project_id,
                    "kind": "downstream_clarification",
                    "iteration": state.iteration,
                    "question": action.question,
                },
            )
            raise DownstreamClarification(
                f"{role.value} may not request user clarification"
            )
        if not isinstance(action, expected):
            self.events.record(
                "protocol_violation",
                role.value,
                detail={
                    "project_id": state.project_id,
                    "kind": "unexpected_action",
                    "iteration": state.iteration,
                    "got": action_to_dict(action).get("type"),
                },
            )
            raise wrong_action(
                f"{role.value} returned {type(action).__name__}, expected "
                + " or ".join(t.__name__ for t in expected)
            )
        return action

    # -- workflow stages ------------------------------------------------------------

    def _concierge_phase(self, proj: _Project) -> None:
        while proj.backend.wants_turn(AgentRole.CONCIERGE):
            observation = self._base_observation(proj, AgentRole.CONCIERGE)
            if proj.answers:
                observation["answers"] = list(proj.answers)
            action = self._consult(
                proj, AgentRole.CONCIERGE, observation, (ClarificationRequest,)
            )
            ticket = self._open_ticket(proj, action.question)
            self._await_answer(proj, ticket)

    def _open_ticket(self, proj: _Project, question: str) -> ClarificationTicket:
        with self._cond:
            ticket = ClarificationTicket(
                id=f"{self.rng.getrandbits(64):016x}",
                project_id=proj.state.project_id,
                question=question,
            )
            self._tickets[ticket.id] = ticket
            proj.paused = True
        self.events.record(
            "clarification_requested",
            AgentRole.CONCIERGE.value,
            detail={
                "project_id": proj.state.project_id,
                "ticket_id": ticket.id,
                "question": question,
            },
        )
        self.events.record(
            "project_paused", ENGINE, detail={"project_id": proj.state.project_id}
        )
        return ticket

    def _await_answer(self, proj: _Project, ticket: ClarificationTicket) -> None:
        with self._cond:
            while ticket.state == "open" and not proj.abort_event.is_set():
                self._cond.wait(timeout=0.5)
        self._check_abort(proj)

    def _triage(self, proj: _Project) -> Route:
        observation = self._base_observation(proj, AgentRole.COMMUTATOR)
        if proj.pending_warning is not None:
            observation["budget_warning"] = proj.pending_warning.to_dict()
            proj.pending_warning = None
        action = self._consult(
            proj, AgentRole.COMMUTATOR, observation, (RouteChoice,), MalformedReply
        )
        with self._lock:
            proj.route = action.route
        self.events.record(
            "route_chosen",
            AgentRole.COMMUTATOR.value,
            detail={"project_id": proj.state.project_id, "route": action.route.value},
        )
        return action.route

    def _curation_step(self, proj: _Project) -> None:
        observation = self._base_observation(proj, AgentRole.CURATOR)
        action = self._consult(proj, AgentRole.CURATOR, observation, (CurationUpdate,))
        doc_id = self._resolve_doc_ref(proj, action.doc_id)
        result = self.gateway.invoke(
            AgentRole.CURATOR,
            "update_metadata",
            {"doc_id": doc_id, "updates": action.updates},
        )
        self.events.record(
            "curation_applied",
            AgentRole.CURATOR.value,
            doc_id,
            {"project_id": proj.state.project_id, "denied": result.denied},
        )

    def _resolve_doc_ref(self, proj: _Project, ref: str) -> str:
        # Scripts cannot know generated ids, so "source:N" names the Nth
        # project source.
        if ref.startswith("source:"):
            index = int(ref.split(":", 1)[1])
            try:
                return proj.source_ids[index]
            except IndexError as exc:
                raise UnknownDocument(ref) from exc
        return ref

    def _run_iteration(self, proj: _Project) -> IterationOutcome:
        state = proj.state
        try:
            maybe_compress(
                state,
                proj.backend,
                policy=self.compression_policy,
                estimator=self.estimator,
                consult=lambda role, obs: self._consult(
                    proj, role, obs, (CompressionSummary,)
                ),
                on_event=lambda kind, detail: self.events.record(
                    kind, ENGINE, detail={"project_id": state.project_id, **detail}
                ),
            )
        except CompressionIneffective:
            pass

        observation = self._composer_observation(proj)
        action = self._consult(proj, AgentRole.COMPOSER, observation, (DraftSubmission,))
        state.iteration += 1
        iteration = state.iteration
        draft_meta = DocumentMetadata(
            source_type="draft",
            authorship=AgentRole.COMPOSER.value,
            project_id=state.project_id,
            iteration=iteration,
        )
        doc_id = self.catalogue.create_document(
            title=action.title or f"draft {iteration}",
            content=action.content,
            meta=draft_meta,
            visibility=VisibilityLevel.DRAFT,
            actor=AgentRole.COMPOSER,
        )
        self.events.record(
            "draft_submitted",
            AgentRole.COMPOSER.value,
            doc_id,
            {"project_id": state.project_id, "iteration": iteration},
        )
        return self._verify_draft(proj, doc_id, action.title, action.content)

    def _verify_draft(
        self, proj: _Project, doc_id: str, title: str, content: str
    ) -> IterationOutcome:
        state = proj.state
        iteration = state.iteration
        draft_view = {"id": doc_id, "title": title, "content": content}

        observation = self._base_observation(proj, AgentRole.CORROBORATOR)
        observation["draft"] = draft_view
        report = self._consult(proj, AgentRole.CORROBORATOR, observation, (VerdictReport,))
        verdict: Verdict = report.verdict
        state.verdict_trace.append({"iteration": iteration, "verdict": verdict.value})
        self.catalogue.record_outcome(doc_id, verdict=verdict.value)
        self.events.record(
            "verdict",
            AgentRole.CORROBORATOR.value,
            doc_id,
            {
                "project_id": state.project_id,
                "iteration": iteration,
                "verdict": verdict.value,
            },
        )
        if verdict == Verdict.FABRICATED:
            self._store_feedback(proj, iteration, AgentRole.CORROBORATOR, report.rationale)
            return IterationOutcome("revise", verdict=verdict)

        observation = self._base_observation(proj, AgentRole.CRITIC)
        observation["draft"] = draft_view
        score_report = self._consult(proj, AgentRole.CRITIC, observation, (ScoreReport,))
        score = score_report.score
        state.score_trace.append({"iteration": iteration, "score": score})
        self.catalogue.record_outcome(doc_id, critic_score=score)
        self.events.record(
            "score",
            AgentRole.CRITIC.value,
            doc_id,
            {"project_id": state.project_id, "iteration": iteration, "score": score},
        )
        if state.config.accepts(score):
            return IterationOutcome("converged", verdict=verdict, score=score)

        # One feedback_log entry per revision, from the gating agent; the
        # substantiation rationale still reaches the Composer as guidance.
        self._store_feedback(proj, iteration, AgentRole.CRITIC, score_report.feedback)
        if report.rationale.strip():
            clamped = clamp_feedback(report.rationale, self.feedback_policy)
            state.histories[AgentRole.COMPOSER].append(
                {
                    "type": "guidance",
                    "content": f"[iteration {iteration}] {AgentRole.CORROBORATOR.value}: {clamped}",
                }
            )
        return IterationOutcome("revise", verdict=verdict, score=score)

    def _composer_observation(self, proj: _Project) -> Observation:
        observation = self._base_observation(proj, AgentRole.COMPOSER)
        observation["iteration"] = proj.state.iteration + 1
        observation["guidance"] = [
            m["content"]
            for m in proj.state.histories[AgentRole.COMPOSER]
            if m.get("type") in ("feedback", "guidance", "summary")
        ]
        return observation

    def _store_feedback(
        self, proj: _Project, iteration: int, source: AgentRole, text: str
    ) -> None:
        state = proj.state
        clamped = clamp_feedback(text, self.feedback_policy)
        if clamped != text:
            self.events.record(
                "feedback_truncated",
                source.value,
                detail={
                    "project_id": state.project_id,
                    "iteration": iteration,
                    "original_words": len(text.split()),
                    "max_words": self.feedback_policy.max_words,
                },
            )
        entry = {"iteration": iteration, "source": source.value, "text": clamped}
        state.feedback_log.append(entry)
        doc_id = None
        if clamped.strip():
            meta = DocumentMetadata(
                source_type="feedback",
                authorship=source.value,
                project_id=state.project_id,
                iteration=iteration,
            )
            doc_id = self.catalogue.create_document(
                title=f"feedback on iteration {iteration}",
                content=clamped,
                meta=meta,
                visibility=VisibilityLevel.FEEDBACK,
                actor=source,
            )
        self.events.record(
            "feedback_recorded",
            source.value,
            doc_id,
            {"project_id": state.project_id, "iteration": iteration, "source": source.value},
        )
        state.histories[AgentRole.COMPOSER].append(
            {
                "type": "feedback",
                "content": f"[iteration {iteration}] {source.value}: {clamped}",
            }
        )

    def _verify_only(self, proj: _Project) -> None:
        state = proj.state
        drafts = self.catalogue.list_for(VisibilityLevel.DRAFT)
        if not drafts:
            self.events.record(
                "missing_draft", ENGINE, detail={"project_id": state.project_id}
            )
            self._finalize(proj, ProjectStatus.FAILED, "missing_draft")
            return
        newest = max(drafts, key=lambda s: s.metadata.created_at)
        doc = self.catalogue.get(newest.id)
        state.iteration = 1
        self.events.record(
            "draft_adopted",
            ENGINE,
            doc.id,
            {"project_id": state.project_id, "iteration": 1},
        )
        outcome = self._verify_draft(proj, doc.id, doc.title, doc.content)
        if outcome.kind == "converged":
            self._finalize(proj, ProjectStatus.COMPLETED)
        else:
            self._finalize(proj, ProjectStatus.FAILED, "verification_not_converged")
