"""Token accounting, history compression, and budget signalling.

The estimator is a deterministic proxy (ceil of character count / 4) so
trigger behaviour is exactly testable; live backends that report true
counts can plug in their own. Compression targets the single largest role
history and must strictly shrink it while keeping every feedback entry
representable in the summary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Callable, Optional

from .agents import AgentBackend, CompressionSummary
from .errors import CompressionIneffective, ProtocolViolation
from .roles import AgentRole

if TYPE_CHECKING:
    from .workflow import GraphState, WorkflowConfig

Message = dict[str, Any]
Estimator = Callable[[str], int]


def default_estimator(text: str) -> int:
    return math.ceil(len(text) / 4)


def estimate_tokens(history: list[Message], estimator: Estimator = default_estimator) -> int:
    """Sum of the estimator over message contents; monotone in text length."""
    return sum(estimator(str(m.get("content", ""))) for m in history)


@dataclass(frozen=True)
class Prices:
    input_per_token: float = 0.0
    output_per_token: float = 0.0
    cached_input_multiplier: float = 0.1


@dataclass
class TokenLedger:
    input_tokens: int = 0
    output_tokens: int = 0
    cached_input_tokens: int = 0
    cost_usd: float = 0.0

    def add_input(self, tokens: int, prices: Prices, cached: bool = False) -> None:
        self.input_tokens += tokens
        if cached:
            self.cached_input_tokens += tokens
            self.cost_usd += tokens * prices.input_per_token * prices.cached_input_multiplier
        else:
            self.cost_usd += tokens * prices.input_per_token

    def add_output(self, tokens: int, prices: Prices) -> None:
        self.output_tokens += tokens
        self.cost_usd += tokens * prices.output_per_token

    def expected_cost(self, prices: Prices) -> float:
        """Cost recomputed from counts; must match cost_usd to 1e-9."""
        uncached = self.input_tokens - self.cached_input_tokens
        return (
            uncached * prices.input_per_token
            + self.cached_input_tokens * prices.input_per_token * prices.cached_input_multiplier
            + self.output_tokens * prices.output_per_token
        )

    @property
    def total_tokens(self) -> int:
        return self.input_tokens + self.output_tokens

    def to_dict(self) -> dict[str, Any]:
        return {
            "input_tokens": self.input_tokens,
            "output_tokens": self.output_tokens,
            "cached_input_tokens": self.cached_input_tokens,
            "cost_usd": self.cost_usd,
        }

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> "TokenLedger":
        return cls(
            input_tokens=raw.get("input_tokens", 0),
            output_tokens=raw.get("output_tokens", 0),
            cached_input_tokens=raw.get("cached_input_tokens", 0),
            cost_usd=raw.get("cost_usd", 0.0),
        )


@dataclass(frozen=True)
class CompressionPolicy:
    trigger_ratio: float = 0.75
    budget_signal_ratio: float = 0.90

    def __post_init__(self) -> None:
        if not 0 < self.trigger_ratio < 1:
            raise ValueError("trigger_ratio must be in (0, 1)")
        if not 0 < self.budget_signal_ratio <= 1:
            raise ValueError("budget_signal_ratio must be in (0, 1]")


@dataclass(frozen=True)
class BudgetWarning:
    spent: int
    budget: int

    def to_dict(self) -> dict[str, int]:
        return {"spent": self.spent, "budget": self.budget}


def largest_history(histories: dict[AgentRole, list[Message]]) -> tuple[Optional[AgentRole], list[Message]]:
    best_role: Optional[AgentRole] = None
    best: list[Message] = []
    best_size = -1
    for role in AgentRole:
        history = histories.get(role, [])
        size = estimate_tokens(history)
        if size > best_size:
            best_role, best, best_size = role, history, size
    return best_role, best


Consult = Callable[[AgentRole, dict[str, Any]], Any]


def maybe_compress(
    state: "GraphState",
    backend: AgentBackend,
    policy: CompressionPolicy = CompressionPolicy(),
    estimator: Estimator = default_estimator,
    consult: Optional[Consult] = None,
    on_event: Optional[Callable[[str, dict[str, Any]], None]] = None,
) -> "GraphState":
    """Compress the largest role history once it reaches trigger capacity.

    Below trigger_ratio of the context limit the state passes through
    untouched and the Compressor never runs. Otherwise the Compressor's
    summary replaces the verbatim messages, with a digest line per
    feedback_log entry appended so no feedback marker is lost. A summary
    that fails to shrink the estimate leaves the history intact.
    """
    role, history = largest_history(state.histories)
    if role is None:
        return state
    before = estimate_tokens(history, estimator)
    if before < policy.trigger_ratio * state.config.context_limit:
        return state

    observation = {
        "role": AgentRole.COMPRESSOR.value,
        "task": "compress_history",
        "target_role": role.value,
        "history": [str(m.get("content", "")) for m in history],
    }
    if consult is not None:
        action = consult(AgentRole.COMPRESSOR, observation)
    else:
        action = backend.next_action(AgentRole.COMPRESSOR, observation)
    if not isinstance(action, CompressionSummary):
        raise ProtocolViolation(
            f"Compressor returned {type(action).__name__}, expected CompressionSummary"
        )

    digest = [
        f"[iteration {entry['iteration']}] {entry['source']}: {entry['text']}"
        for entry in state.feedback_log
    ]
    content = "\n".join([action.summary, *digest]) if digest else action.summary
    replacement = [{"type": "summary", "content": content}]
    after = estimate_tokens(replacement, estimator)
    if after >= before:
        if on_event is not None:
            on_event(
                "compression_ineffective",
                {"target_role": role.value, "before": before, "after": after},
            )
        raise CompressionIneffective(
            f"summary estimate {after} >= original {before} for {role.value}"
        )
    state.histories[role] = replacement
    if on_event is not None:
        on_event(
            "compression_applied",
            {"target_role": role.value, "before": before, "after": after},
        )
    return state


def budget_signal(
    ledger: TokenLedger,
    config: "WorkflowConfig",
    policy: CompressionPolicy = CompressionPolicy(),
) -> Optional[BudgetWarning]:
    """BudgetWarning once input+output spend reaches the signal ratio."""
    spent = ledger.total_tokens
    if spent >= policy.budget_signal_ratio * config.token_budget:
        return BudgetWarning(spent=spent, budget=config.token_budget)
    return None
