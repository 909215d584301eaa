from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from scriptorium.compression import TokenLedger
from scriptorium.errors import EmptyTrace, InsufficientData, NoVerdicts
from scriptorium.metrics import (
    VerdictCategory,
    build_report,
    cost_report,
    improvement_stats,
    project_verdict_category,
    render_text_report,
    verdict_distribution,
)
from scriptorium.workflow import ProjectStatus


def verdict_events(substantiated: int, fabricated: int):
    events = []
    for i in range(substantiated):
        events.append({"kind": "verdict", "detail": {"verdict": "SUBSTANTIATED", "project_id": f"p{i}"}})
    for i in range(fabricated):
        events.append({"kind": "verdict", "detail": {"verdict": "FABRICATED", "project_id": f"q{i}"}})
    return events


def test_distribution_hand_count():
    result = verdict_distribution(verdict_events(1, 2))
    assert result["substantiated"] == 1
    assert result["fabricated"] == 2
    assert result["substantiated_pct"] == 33.3
    assert result["fabricated_pct"] == 66.7


def test_distribution_matches_published_split():
    result = verdict_distribution(verdict_events(352, 381))
    assert result["substantiated_pct"] == 48.0
    assert result["fabricated_pct"] == 52.0


def test_distribution_empty_log_raises():
    with pytest.raises(NoVerdicts):
        verdict_distribution([])
    with pytest.raises(NoVerdicts):
        verdict_distribution([{"kind": "score", "detail": {}}])


@given(st.integers(0, 400), st.integers(0, 400))
def test_percentage_closure(substantiated, fabricated):
    if substantiated + fabricated == 0:
        return
    result = verdict_distribution(verdict_events(substantiated, fabricated))
    assert 99.9 <= result["substantiated_pct"] + result["fabricated_pct"] <= 100.1


# --- categories -------------------------------------------------------------


def test_category_passed():
    assert project_verdict_category(["SUBSTANTIATED", "SUBSTANTIATED"]) == VerdictCategory.PASSED


def test_category_failed():
    assert project_verdict_category(["FABRICATED"]) == VerdictCategory.FAILED


def test_category_mixed_table1_run():
    verdicts = ["FABRICATED", "FABRICATED", "SUBSTANTIATED", "SUBSTANTIATED", "SUBSTANTIATED"]
    assert project_verdict_category(verdicts) == VerdictCategory.MIXED


def test_category_empty_trace():
    with pytest.raises(EmptyTrace):
        project_verdict_category([])


@given(st.lists(st.sampled_from(["SUBSTANTIATED", "FABRICATED"]), min_size=1, max_size=10))
def test_category_partition(verdicts):
    category = project_verdict_category(verdicts)
    assert category in set(VerdictCategory)
    matches = [
        category == VerdictCategory.PASSED,
        category == VerdictCategory.FAILED,
        category == VerdictCategory.MIXED,
    ]
    assert sum(matches) == 1


# --- improvement ---------------------------------------------------------------


def test_single_trace_arithmetic():
    stats = improvement_stats([[28, 85, 92]], seed=0)
    assert stats.mean_absolute == pytest.approx(64.0)
    assert stats.mean_relative == pytest.approx(6400 / 28)
    assert stats.mean_per_iteration == pytest.approx(32.0)
    assert stats.mean_iterations == pytest.approx(3.0)
    assert stats.n_projects == 1


def test_trace_with_iterations_counts_accepted_drafts():
    # the published five-iteration run: scores at iterations 3, 4, 5
    trace = [{"iteration": 3, "score": 28}, {"iteration": 4, "score": 85}, {"iteration": 5, "score": 92}]
    stats = improvement_stats([trace], seed=0)
    assert stats.mean_iterations == pytest.approx(5.0)
    assert stats.mean_per_iteration == pytest.approx(32.0)  # still per scored revision


def test_identical_traces_degenerate_ci():
    stats = improvement_stats([[40, 80], [40, 80]], seed=1)
    assert stats.ci95_absolute == (40.0, 40.0)
    assert stats.ci95_iterations == (2.0, 2.0)


def test_single_score_trace_insufficient():
    with pytest.raises(InsufficientData):
        improvement_stats([[50]], seed=0)


def test_single_score_traces_counted_separately():
    stats = improvement_stats([[50], [10, 30]], seed=0)
    assert stats.n_projects == 1
    assert stats.n_excluded_single_score == 1


def test_zero_initial_excluded_from_relative_only():
    stats = improvement_stats([[0, 50], [10, 60]], seed=0)
    assert stats.n_projects == 2
    assert stats.n_projects_relative == 1
    assert stats.n_excluded_zero_initial == 1
    assert stats.mean_relative == pytest.approx(500.0)
    assert stats.mean_absolute == pytest.approx(50.0)


def test_bootstrap_reproducible_and_brackets_point():
    traces = [[30, 55, 80], [20, 90], [50, 60, 70, 88]]
    a = improvement_stats(traces, seed=42)
    b = improvement_stats(traces, seed=42)
    assert a == b
    c = improvement_stats(traces, seed=43)
    assert c.mean_absolute == a.mean_absolute
    for stats in (a, c):
        for mean, (low, high) in [
            (stats.mean_absolute, stats.ci95_absolute),
            (stats.mean_relative, stats.ci95_relative),
            (stats.mean_per_iteration, stats.ci95_per_iteration),
            (stats.mean_iterations, stats.ci95_iterations),
        ]:
            assert low <= mean <= high


def brute_force_means(traces):
    absolutes, relatives, pers, iters = [], [], [], []
    for trace in traces:
        if len(trace) < 2:
            continue
        initial, final = trace[0], trace[-1]
        absolutes.append(final - initial)
        pers.append((final - initial) / (len(trace) - 1))
        iters.append(len(trace))
        if initial != 0:
            relatives.append((final - initial) / initial * 100.0)
    mean = lambda xs: sum(xs) / len(xs)
    return mean(absolutes), mean(relatives), mean(pers), mean(iters)


def test_means_match_brute_force_on_random_corpora():
    rng = random.Random(2024)
    for _ in range(25):
        traces = [
            [rng.randint(1, 100) for _ in range(rng.randint(2, 8))]
            for _ in range(rng.randint(1, 20))
        ]
        stats = improvement_stats(traces, seed=0)
        expected = brute_force_means(traces)
        assert stats.mean_absolute == pytest.approx(expected[0], abs=1e-9)
        assert stats.mean_relative == pytest.approx(expected[1], abs=1e-9)
        assert stats.mean_per_iteration == pytest.approx(expected[2], abs=1e-9)
        assert stats.mean_iterations == pytest.approx(expected[3], abs=1e-9)


# --- cost -----------------------------------------------------------------------


def test_cost_single_ledger_formula():
    # 100 input tokens at 3e-6 USD/token
    from scriptorium.compression import Prices

    ledger = TokenLedger()
    ledger.add_input(100, Prices(input_per_token=3e-6))
    report = cost_report({"p": (ledger, ProjectStatus.COMPLETED)})
    assert report["total_usd"] == pytest.approx(0.0003)
    assert report["mean_usd_by_status"]["completed"] == pytest.approx(0.0003)
    assert report["total_tokens"] == 100
    assert report["cache_share_pct"] == 0.0


def test_cost_fully_cached_is_one_tenth():
    from scriptorium.compression import Prices

    prices = Prices(input_per_token=3e-6, cached_input_multiplier=0.1)
    plain = TokenLedger()
    plain.add_input(1000, prices)
    cached = TokenLedger()
    cached.add_input(1000, prices, cached=True)
    report = cost_report(
        {
            "a": (plain, ProjectStatus.COMPLETED),
            "b": (cached, ProjectStatus.COMPLETED),
        }
    )
    assert report["mean_usd_by_status"]["completed"] == pytest.approx(
        (plain.cost_usd + plain.cost_usd / 10) / 2
    )
    assert report["cache_share_pct"] == 50.0


def test_cost_empty_map():
    report = cost_report({})
    assert report["total_usd"] == 0.0
    assert report["total_tokens"] == 0
    assert report["mean_usd_by_status"] == {}
    assert report["cache_share_pct"] == 0.0


# --- report pipeline ----------------------------------------------------------------


def synthetic_project_events(project_id, verdicts, scores, status="completed"):
    events = [{"kind": "project_started", "detail": {"project_id": project_id}}]
    iteration = 0
    score_iter = iter(scores)
    for verdict in verdicts:
        iteration += 1
        events.append(
            {
                "kind": "verdict",
                "detail": {"project_id": project_id, "iteration": iteration, "verdict": verdict},
            }
        )
        if verdict == "SUBSTANTIATED":
            events.append(
                {
                    "kind": "score",
                    "detail": {
                        "project_id": project_id,
                        "iteration": iteration,
                        "score": next(score_iter),
                    },
                }
            )
    events.append(
        {
            "kind": "project_finished",
            "detail": {
                "project_id": project_id,
                "status": status,
                "trace": {"ledger": {"input_tokens": 100, "output_tokens": 10, "cached_input_tokens": 40, "cost_usd": 0.0}},
            },
        }
    )
    return events


def test_build_report_end_to_end():
    events = []
    events += synthetic_project_events("p-one-two-three", ["FABRICATED", "SUBSTANTIATED", "SUBSTANTIATED"], [40, 90])
    events += synthetic_project_events("q-one-two-three", ["SUBSTANTIATED", "SUBSTANTIATED"], [70, 95])
    events += synthetic_project_events("r-one-two-three", ["FABRICATED"], [], status="failed")
    report = build_report(events, seed=5)
    assert report["verdict_distribution"]["substantiated"] == 4
    assert report["verdict_distribution"]["fabricated"] == 2
    categories = report["project_verdict_categories"]
    assert categories["mixed"] == 1
    assert categories["passed"] == 1
    assert categories["failed"] == 1
    assert categories["total"] == 3
    assert report["improvement"]["n_projects"] == 2
    assert report["status_breakdown"] == {"completed": 2, "failed": 1}
    assert report["cost"]["total_tokens"] == 330
    assert "definitions" in report
    text = render_text_report(report)
    assert "Verdict distribution" in text
    assert "Mixed (both types)" in text
    assert "95% CI" in text


def test_build_report_without_verdicts():
    report = build_report([{"kind": "project_started", "detail": {"project_id": "x-a-b-c"}}], seed=1)
    assert report["verdict_distribution"] is None
    assert report["project_verdict_categories"]["total"] == 0
    text = render_text_report(report)
    assert "no verdicts recorded" in text
