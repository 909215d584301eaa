from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from scriptorium.agents import CompressionSummary, ScenarioScript, ScriptedBackend
from scriptorium.compression import (
    BudgetWarning,
    CompressionPolicy,
    Prices,
    TokenLedger,
    budget_signal,
    default_estimator,
    estimate_tokens,
    maybe_compress,
)
from scriptorium.errors import CompressionIneffective
from scriptorium.roles import AgentRole
from scriptorium.workflow import GraphState, WorkflowConfig


def compressor_backend(summary: str = "concise summary") -> ScriptedBackend:
    return ScriptedBackend(
        ScenarioScript(
            name="compressor",
            queues={AgentRole.COMPRESSOR: [CompressionSummary(summary=summary)]},
        )
    )


def padded_state(chars: int, context_limit: int = 4000, feedback=None) -> GraphState:
    state = GraphState(
        project_id="test-test-test-test",
        config=WorkflowConfig(context_limit=context_limit, token_budget=10_000_000),
    )
    state.histories[AgentRole.COMPOSER] = [{"type": "observation", "content": "x" * chars}]
    for entry in feedback or []:
        state.feedback_log.append(entry)
    return state


def test_estimate_empty_history_is_zero():
    assert estimate_tokens([]) == 0


def test_estimate_eight_chars_is_two():
    # ceiling(8 / 4) per the stated formula
    assert estimate_tokens([{"content": "abcdefgh"}]) == 2


def test_estimate_rounds_up():
    assert estimate_tokens([{"content": "abcde"}]) == 2
    assert default_estimator("") == 0


@given(
    st.lists(st.text(max_size=50), max_size=8),
    st.lists(st.text(max_size=50), max_size=8),
)
def test_estimate_additive_over_concatenated_histories(a, b):
    ha = [{"content": t} for t in a]
    hb = [{"content": t} for t in b]
    assert estimate_tokens(ha + hb) == estimate_tokens(ha) + estimate_tokens(hb)


@given(st.text(max_size=200), st.text(max_size=200))
def test_default_estimator_monotone_in_length(a, b):
    longer, shorter = (a, b) if len(a) >= len(b) else (b, a)
    assert default_estimator(longer) >= default_estimator(shorter)


@pytest.mark.parametrize(
    "chars,compresses",
    [
        (11984, False),  # 2996 tokens = 74.9% of a 4000-token limit
        (12000, True),   # 3000 tokens = 75.0%
        (12016, True),   # 3004 tokens = 75.1%
    ],
)
def test_trigger_exactness_at_boundary(chars, compresses):
    state = padded_state(chars)
    backend = compressor_backend()
    if compresses:
        maybe_compress(state, backend)
        history = state.histories[AgentRole.COMPOSER]
        assert len(history) == 1
        assert history[0]["type"] == "summary"
        assert backend.observations_for(AgentRole.COMPRESSOR)
    else:
        before = [dict(m) for m in state.histories[AgentRole.COMPOSER]]
        maybe_compress(state, backend)
        assert state.histories[AgentRole.COMPOSER] == before
        assert backend.observations_for(AgentRole.COMPRESSOR) == []


def test_compression_strictly_shrinks_estimate():
    state = padded_state(12000)
    before = estimate_tokens(state.histories[AgentRole.COMPOSER])
    maybe_compress(state, compressor_backend())
    after = estimate_tokens(state.histories[AgentRole.COMPOSER])
    assert after < before


def test_ineffective_compressor_leaves_history_intact():
    state = padded_state(12000)
    original = [dict(m) for m in state.histories[AgentRole.COMPOSER]]
    events = []
    with pytest.raises(CompressionIneffective):
        maybe_compress(
            state,
            compressor_backend(summary="y" * 50_000),
            on_event=lambda kind, detail: events.append(kind),
        )
    assert state.histories[AgentRole.COMPOSER] == original
    assert events == ["compression_ineffective"]


def test_feedback_markers_preserved_in_summary():
    feedback = [
        {"iteration": 1, "source": "Corroborator", "text": "MARK-1 missing citations"},
        {"iteration": 2, "source": "Critic", "text": "MARK-2 weak argument"},
    ]
    state = padded_state(12000, feedback=feedback)
    maybe_compress(state, compressor_backend())
    summary_text = state.histories[AgentRole.COMPOSER][0]["content"]
    assert "MARK-1" in summary_text
    assert "MARK-2" in summary_text


def test_compression_targets_largest_history():
    state = padded_state(12000)
    state.histories[AgentRole.CRITIC] = [{"type": "observation", "content": "short"}]
    maybe_compress(state, compressor_backend())
    assert state.histories[AgentRole.CRITIC] == [{"type": "observation", "content": "short"}]
    assert state.histories[AgentRole.COMPOSER][0]["type"] == "summary"


# --- budget signalling ----------------------------------------------------


def test_budget_signal_below_ratio_is_none():
    ledger = TokenLedger(input_tokens=600, output_tokens=290)  # 89%
    config = WorkflowConfig(token_budget=1000)
    assert budget_signal(ledger, config) is None


def test_budget_signal_at_ratio_warns():
    ledger = TokenLedger(input_tokens=600, output_tokens=300)  # 90%
    config = WorkflowConfig(token_budget=1000)
    warning = budget_signal(ledger, config)
    assert warning == BudgetWarning(spent=900, budget=1000)


def test_budget_signal_custom_ratio():
    ledger = TokenLedger(input_tokens=500, output_tokens=0)
    config = WorkflowConfig(token_budget=1000)
    assert budget_signal(ledger, config, CompressionPolicy(budget_signal_ratio=0.5)) is not None


# --- ledger -----------------------------------------------------------------


def test_ledger_cost_formula_example():
    prices = Prices(input_per_token=3e-6)
    ledger = TokenLedger()
    ledger.add_input(100, prices)
    assert ledger.cost_usd == pytest.approx(0.0003, abs=1e-12)


def test_ledger_fully_cached_costs_one_tenth():
    prices = Prices(input_per_token=3e-6, cached_input_multiplier=0.1)
    uncached = TokenLedger()
    uncached.add_input(1000, prices)
    cached = TokenLedger()
    cached.add_input(1000, prices, cached=True)
    assert cached.cost_usd == pytest.approx(uncached.cost_usd / 10, rel=1e-12)


@given(
    st.lists(
        st.tuples(st.integers(0, 5000), st.booleans(), st.integers(0, 5000)),
        max_size=30,
    )
)
def test_ledger_conservation_invariant(entries):
    prices = Prices(input_per_token=2.5e-6, output_per_token=1e-5, cached_input_multiplier=0.1)
    ledger = TokenLedger()
    for input_tokens, cached, output_tokens in entries:
        ledger.add_input(input_tokens, prices, cached=cached)
        ledger.add_output(output_tokens, prices)
    assert ledger.cached_input_tokens <= ledger.input_tokens
    assert abs(ledger.cost_usd - ledger.expected_cost(prices)) < 1e-9


def test_policy_validation():
    with pytest.raises(ValueError):
        CompressionPolicy(trigger_ratio=0.0)
    with pytest.raises(ValueError):
        CompressionPolicy(trigger_ratio=1.0)
    with pytest.raises(ValueError):
        CompressionPolicy(budget_signal_ratio=1.5)
