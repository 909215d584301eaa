"""Agent roles and the user/agent actor distinction."""

from __future__ import annotations

from enum import Enum
from typing import Union


class AgentRole(str, Enum):
    """The seven specialised agent roles."""

    CONCIERGE = "Concierge"
    COMMUTATOR = "Commutator"
    CURATOR = "Curator"
    COMPOSER = "Composer"
    CORROBORATOR = "Corroborator"
    CRITIC = "Critic"
    COMPRESSOR = "Compressor"


# The human operator. Catalogue policy distinguishes the user from every
# agent role; "engine" marks orchestrator-internal bookkeeping in events.
USER = "user"
ENGINE = "engine"

Actor = Union[AgentRole, str]


def actor_name(actor: Actor) -> str:
    return actor.value if isinstance(actor, AgentRole) else str(actor)


def is_agent(actor: Actor) -> bool:
    if isinstance(actor, AgentRole):
        return True
    return actor in {r.value for r in AgentRole}


def as_role(actor: Actor) -> AgentRole | None:
    """Return the AgentRole for an actor, or None for the user/engine."""
    if isinstance(actor, AgentRole):
        return actor
    try:
        return AgentRole(actor)
    except ValueError:
        return None
