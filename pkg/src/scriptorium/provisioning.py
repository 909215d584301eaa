"""Per-role tool grants and the deny-by-construction gateway.

Compartmentalisation here is constitutive, not advisory: a role's grant
set is the complete tool surface it can reach, and the gateway refuses
anything outside it before any handler runs. Denials are structured
results, never exceptions, so agents (scripted or live) can observe the
refusal without crashing the workflow.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional

from .catalogue import VisibilityLevel
from .errors import UnknownTool
from .events import EventLog
from .roles import AgentRole

# One listing function per visibility level; the listing a role lacks is
# the information it cannot reach.
LISTING_TOOLS: dict[VisibilityLevel, str] = {
    VisibilityLevel.PUBLIC: "public_document_list",
    VisibilityLevel.CANDIDATE: "candidate_document_list",
    VisibilityLevel.DRAFT: "draft_document_list",
    VisibilityLevel.FEEDBACK: "feedback_document_list",
    VisibilityLevel.CRITIC: "critic_document_list",
    VisibilityLevel.ARCHIVE: "archive_document_list",
}

ALL_LISTINGS = frozenset(LISTING_TOOLS.values())

REGISTRY_TOOLS = frozenset(
    {
        *ALL_LISTINGS,
        "query_metadata",
        "update_metadata",
        "request_clarification",
        "choose_route",
        "submit_draft",
        "submit_verdict",
        "submit_score",
        "read_history",
        "write_history",
    }
)


def _listings(*levels: VisibilityLevel) -> frozenset[str]:
    return frozenset(LISTING_TOOLS[lvl] for lvl in levels)


DEFAULT_GRANT_TABLE: dict[AgentRole, frozenset[str]] = {
    AgentRole.CONCIERGE: ALL_LISTINGS | {"request_clarification"},
    AgentRole.COMMUTATOR: ALL_LISTINGS | {"choose_route"},
    AgentRole.CURATOR: ALL_LISTINGS | {"update_metadata"},
    AgentRole.COMPOSER: _listings(
        VisibilityLevel.PUBLIC,
        VisibilityLevel.CANDIDATE,
        VisibilityLevel.DRAFT,
        VisibilityLevel.FEEDBACK,
    )
    | {"submit_draft"},
    AgentRole.CORROBORATOR: _listings(
        VisibilityLevel.PUBLIC, VisibilityLevel.CANDIDATE, VisibilityLevel.DRAFT
    )
    | {"submit_verdict"},
    AgentRole.CRITIC: _listings(
        VisibilityLevel.PUBLIC,
        VisibilityLevel.DRAFT,
        VisibilityLevel.FEEDBACK,
        VisibilityLevel.CRITIC,
    )
    | {"submit_score"},
    AgentRole.COMPRESSOR: frozenset({"read_history", "write_history"}),
}


@dataclass(frozen=True)
class CapabilitySet:
    role: AgentRole
    tools: frozenset[str]


def grants_for(
    role: AgentRole, table: Optional[dict[AgentRole, frozenset[str]]] = None
) -> CapabilitySet:
    """The static grant set for a role; pure and stable across calls."""
    table = table if table is not None else DEFAULT_GRANT_TABLE
    return CapabilitySet(role=role, tools=frozenset(table[role]))


def load_grant_table(path: Path | str) -> dict[AgentRole, frozenset[str]]:
    """Load a grant table override: JSON map of role name to tool names."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    table: dict[AgentRole, frozenset[str]] = {}
    for role_name, tools in raw.items():
        role = AgentRole(role_name)
        unknown = set(tools) - REGISTRY_TOOLS
        if unknown:
            raise UnknownTool(f"grant table names unregistered tools: {sorted(unknown)}")
        table[role] = frozenset(tools)
    for role in AgentRole:
        table.setdefault(role, frozenset())
    return table


def grant_table_checksum(table: dict[AgentRole, frozenset[str]]) -> str:
    canonical = json.dumps(
        {role.value: sorted(tools) for role, tools in table.items()},
        sort_keys=True,
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class ToolResult:
    """Outcome of a gateway invocation; denial uses the refusal wire shape."""

    role: str
    tool: str
    denied: bool
    value: Any = None

    def to_dict(self) -> dict[str, Any]:
        if self.denied:
            return {"denied": True, "role": self.role, "tool": self.tool}
        return {"denied": False, "role": self.role, "tool": self.tool, "value": self.value}


ToolHandler = Callable[[dict[str, Any]], Any]


class ToolGateway:
    """Dispatches granted tool calls; refuses everything else side-effect free.

    The grant table is immutable after construction and its checksum is
    written to the event log, making the institutional structure itself
    auditable.
    """

    def __init__(
        self,
        registry: dict[str, ToolHandler],
        events: EventLog,
        table: Optional[dict[AgentRole, frozenset[str]]] = None,
    ) -> None:
        unknown = set(registry) - REGISTRY_TOOLS
        if unknown:
            raise UnknownTool(f"handlers for unregistered tools: {sorted(unknown)}")
        self._registry = dict(registry)
        self._events = events
        self._table = {r: frozenset(t) for r, t in (table or DEFAULT_GRANT_TABLE).items()}
        events.record(
            "grant_table_loaded",
            "engine",
            detail={"checksum": grant_table_checksum(self._table)},
        )

    @property
    def table(self) -> dict[AgentRole, frozenset[str]]:
        return dict(self._table)

    def registry_tools(self) -> frozenset[str]:
        return frozenset(self._registry)

    def grants_for(self, role: AgentRole) -> CapabilitySet:
        return grants_for(role, self._table)

    def is_granted(self, role: AgentRole, tool: str) -> bool:
        return tool in self._table[role]

    def invoke(self, role: AgentRole, tool: str, args: Optional[dict[str, Any]] = None) -> ToolResult:
        args = args or {}
        if tool not in self._registry:
            raise UnknownTool(tool)
        if tool not in self._table[role]:
            self._events.record(
                "tool_denied", role.value, detail={"denied": True, "role": role.value, "tool": tool}
            )
            return ToolResult(role=role.value, tool=tool, denied=True)
        self._events.record("tool_invoked", role.value, detail={"tool": tool})
        value = self._registry[tool](args)
        return ToolResult(role=role.value, tool=tool, denied=False, value=value)
