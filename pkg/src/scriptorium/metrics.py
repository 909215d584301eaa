"""Operational statistics derived from event logs.

Definitions, stated once and printed into every report:

* absolute improvement = final score - initial score per project;
* relative improvement = absolute / initial * 100 (projects whose initial
  score is 0 are excluded from this statistic and counted in the output);
* per-iteration improvement = absolute / (scored_count - 1), i.e. score
  delta per revision step between scored drafts;
* iterations = accepted draft submissions, so Corroborator-rejected
  drafts count toward it even though they carry no score.

95% confidence intervals use a seeded percentile bootstrap with 10,000
resamples of the per-project values; identical seeds give identical
intervals. Rounding to display precision happens only at presentation,
except where the output contract itself is a rounded percentage.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Mapping, Optional, Sequence

import numpy as np

from .compression import TokenLedger
from .errors import EmptyTrace, InsufficientData, NoVerdicts

BOOTSTRAP_RESAMPLES = 10_000

DEFINITIONS = {
    "absolute_improvement": "final score minus initial score per project",
    "relative_improvement": "absolute improvement / initial score * 100; zero-initial projects excluded",
    "per_iteration_improvement": "absolute improvement / (scored draft count - 1)",
    "iterations": "accepted draft submissions per project, including drafts rejected before scoring",
    "cache_share_pct": "cached input tokens / (input + output tokens) * 100",
}


class VerdictCategory(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    MIXED = "mixed"


def verdict_distribution(events: Iterable[Mapping[str, Any]]) -> dict[str, Any]:
    """Counts and one-decimal percentages over document-level verdict events."""
    substantiated = 0
    fabricated = 0
    for rec in events:
        if rec.get("kind") != "verdict":
            continue
        verdict = rec.get("detail", {}).get("verdict")
        if verdict == "SUBSTANTIATED":
            substantiated += 1
        elif verdict == "FABRICATED":
            fabricated += 1
    total = substantiated + fabricated
    if total == 0:
        raise NoVerdicts("event log contains no verdict events")
    return {
        "substantiated": substantiated,
        "fabricated": fabricated,
        "substantiated_pct": round(100.0 * substantiated / total, 1),
        "fabricated_pct": round(100.0 * fabricated / total, 1),
    }


def project_verdict_category(verdicts: Sequence[str]) -> VerdictCategory:
    """All substantiated -> passed; all fabricated -> failed; both -> mixed."""
    if not verdicts:
        raise EmptyTrace("no verdicts for project")
    kinds = {str(v).upper() for v in verdicts}
    if kinds == {"SUBSTANTIATED"}:
        return VerdictCategory.PASSED
    if kinds == {"FABRICATED"}:
        return VerdictCategory.FAILED
    return VerdictCategory.MIXED


@dataclass(frozen=True)
class ImprovementStats:
    mean_absolute: float
    mean_relative: float
    mean_per_iteration: float
    mean_iterations: float
    ci95_absolute: tuple[float, float]
    ci95_relative: tuple[float, float]
    ci95_per_iteration: tuple[float, float]
    ci95_iterations: tuple[float, float]
    n_projects: int
    n_projects_relative: int
    n_excluded_single_score: int
    n_excluded_zero_initial: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "mean_absolute": self.mean_absolute,
            "mean_relative": self.mean_relative,
            "mean_per_iteration": self.mean_per_iteration,
            "mean_iterations": self.mean_iterations,
            "ci95_absolute": list(self.ci95_absolute),
            "ci95_relative": list(self.ci95_relative),
            "ci95_per_iteration": list(self.ci95_per_iteration),
            "ci95_iterations": list(self.ci95_iterations),
            "n_projects": self.n_projects,
            "n_projects_relative": self.n_projects_relative,
            "n_excluded_single_score": self.n_excluded_single_score,
            "n_excluded_zero_initial": self.n_excluded_zero_initial,
        }


def _normalise_trace(trace: Sequence[Any]) -> tuple[list[float], int]:
    """Accept bare scores, (iteration, score) pairs, or event-style dicts.

    Returns the ordered score list and the iteration count: the highest
    iteration number when present, otherwise the number of scores.
    """
    scores: list[float] = []
    max_iteration = 0
    explicit = False
    for item in trace:
        if isinstance(item, Mapping):
            scores.append(float(item["score"]))
            if "iteration" in item:
                explicit = True
                max_iteration = max(max_iteration, int(item["iteration"]))
        elif isinstance(item, (tuple, list)):
            iteration, score = item
            scores.append(float(score))
            max_iteration = max(max_iteration, int(iteration))
            explicit = True
        else:
            scores.append(float(item))
    iterations = max_iteration if explicit else len(scores)
    return scores, iterations


def _percentile_ci(values: np.ndarray, rng: np.random.Generator) -> tuple[float, float]:
    n = len(values)
    idx = rng.integers(0, n, size=(BOOTSTRAP_RESAMPLES, n))
    means = values[idx].mean(axis=1)
    low, high = np.percentile(means, [2.5, 97.5])
    point = float(values.mean())
    # A percentile interval that excludes its own point estimate would be
    # an artefact of resampling noise; widen instead of reporting it.
    return min(float(low), point), max(float(high), point)


def improvement_stats(
    score_traces: Sequence[Sequence[Any]], seed: int
) -> ImprovementStats:
    absolutes: list[float] = []
    relatives: list[float] = []
    per_iterations: list[float] = []
    iterations: list[float] = []
    n_single = 0
    n_zero_initial = 0

    for trace in score_traces:
        scores, iteration_count = _normalise_trace(trace)
        if len(scores) < 2:
            n_single += 1
            continue
        initial, final = scores[0], scores[-1]
        absolute = final - initial
        absolutes.append(absolute)
        per_iterations.append(absolute / (len(scores) - 1))
        iterations.append(float(iteration_count))
        if initial == 0:
            n_zero_initial += 1
        else:
            relatives.append(absolute / initial * 100.0)

    if not absolutes:
        raise InsufficientData("no score trace has at least two scores")

    rng = np.random.default_rng(seed)
    abs_arr = np.asarray(absolutes, dtype=float)
    per_arr = np.asarray(per_iterations, dtype=float)
    iter_arr = np.asarray(iterations, dtype=float)
    rel_arr = np.asarray(relatives, dtype=float)

    ci_abs = _percentile_ci(abs_arr, rng)
    ci_rel = _percentile_ci(rel_arr, rng) if len(rel_arr) else (float("nan"), float("nan"))
    ci_per = _percentile_ci(per_arr, rng)
    ci_iter = _percentile_ci(iter_arr, rng)

    return ImprovementStats(
        mean_absolute=float(abs_arr.mean()),
        mean_relative=float(rel_arr.mean()) if len(rel_arr) else float("nan"),
        mean_per_iteration=float(per_arr.mean()),
        mean_iterations=float(iter_arr.mean()),
        ci95_absolute=ci_abs,
        ci95_relative=ci_rel,
        ci95_per_iteration=ci_per,
        ci95_iterations=ci_iter,
        n_projects=len(absolutes),
        n_projects_relative=len(relatives),
        n_excluded_single_score=n_single,
        n_excluded_zero_initial=n_zero_initial,
    )


def cost_report(
    ledgers: Mapping[str, tuple[TokenLedger, Any]]
) -> dict[str, Any]:
    """Totals and per-status means over project ledgers."""
    total_usd = 0.0
    input_tokens = 0
    output_tokens = 0
    cached = 0
    by_status: dict[str, list[float]] = {}
    for ledger, status in ledgers.values():
        total_usd += ledger.cost_usd
        input_tokens += ledger.input_tokens
        output_tokens += ledger.output_tokens
        cached += ledger.cached_input_tokens
        status_name = status.value if hasattr(status, "value") else str(status)
        by_status.setdefault(status_name, []).append(ledger.cost_usd)
    total_tokens = input_tokens + output_tokens
    return {
        "total_usd": total_usd,
        "mean_usd_by_status": {
            status: sum(costs) / len(costs) for status, costs in by_status.items()
        },
        "total_tokens": total_tokens,
        "cache_share_pct": round(100.0 * cached / total_tokens, 1) if total_tokens else 0.0,
        "n_projects": len(ledgers),
    }


def build_report(
    events: Sequence[Mapping[str, Any]],
    ledgers: Optional[Mapping[str, tuple[TokenLedger, Any]]] = None,
    seed: int = 0,
) -> dict[str, Any]:
    """Full report over an event log: the distribution, category counts,
    improvement statistics and cost accounting, plus the definitions used."""
    per_project_verdicts: dict[str, list[str]] = {}
    per_project_scores: dict[str, list[dict[str, Any]]] = {}
    statuses: dict[str, str] = {}
    for rec in events:
        detail = rec.get("detail", {})
        project_id = detail.get("project_id")
        if project_id is None:
            continue
        kind = rec.get("kind")
        if kind == "verdict":
            per_project_verdicts.setdefault(project_id, []).append(detail["verdict"])
        elif kind == "score":
            per_project_scores.setdefault(project_id, []).append(
                {"iteration": detail["iteration"], "score": detail["score"]}
            )
        elif kind == "project_started":
            statuses.setdefault(project_id, "active")
        elif kind == "project_finished":
            statuses[project_id] = detail["status"]

    try:
        distribution: Optional[dict[str, Any]] = verdict_distribution(events)
    except NoVerdicts:
        distribution = None

    categories = {c.value: 0 for c in VerdictCategory}
    for verdicts in per_project_verdicts.values():
        categories[project_verdict_category(verdicts).value] += 1

    traces = [trace for trace in per_project_scores.values() if len(trace) >= 2]
    improvement: Optional[dict[str, Any]] = None
    if traces:
        improvement = improvement_stats(traces, seed=seed).to_dict()

    if ledgers is None:
        ledgers = _ledgers_from_events(events)
    costs = cost_report(ledgers)

    status_breakdown: dict[str, int] = {}
    for status in statuses.values():
        status_breakdown[status] = status_breakdown.get(status, 0) + 1

    return {
        "verdict_distribution": distribution,
        "project_verdict_categories": {
            **categories,
            "total": sum(categories.values()),
        },
        "improvement": improvement,
        "cost": costs,
        "status_breakdown": status_breakdown,
        "definitions": dict(DEFINITIONS),
        "bootstrap": {"method": "percentile", "resamples": BOOTSTRAP_RESAMPLES, "seed": seed},
    }


def _ledgers_from_events(
    events: Sequence[Mapping[str, Any]]
) -> dict[str, tuple[TokenLedger, str]]:
    ledgers: dict[str, tuple[TokenLedger, str]] = {}
    for rec in events:
        if rec.get("kind") != "project_finished":
            continue
        detail = rec["detail"]
        trace = detail.get("trace", {})
        ledgers[detail["project_id"]] = (
            TokenLedger.from_dict(trace.get("ledger", {})),
            detail["status"],
        )
    return ledgers


def render_text_report(report: dict[str, Any]) -> str:
    """Aligned plain-text tables for terminal output."""
    lines: list[str] = []
    dist = report.get("verdict_distribution")
    lines.append("Verdict distribution")
    if dist is None:
        lines.append("  (no verdicts recorded)")
    else:
        lines.append(
            f"  substantiated  {dist['substantiated']:>6}  ({dist['substantiated_pct']:.1f}%)"
        )
        lines.append(
            f"  fabricated     {dist['fabricated']:>6}  ({dist['fabricated_pct']:.1f}%)"
        )
    lines.append("")

    cats = report["project_verdict_categories"]
    total = cats["total"] or 1
    lines.append("Project verdict categories")
    lines.append(f"  {'Category':<28}{'Projects':>9}  {'Percentage':>10}")
    for key, label in (
        ("passed", "Passed (all substantiated)"),
        ("failed", "Failed (all fabricated)"),
        ("mixed", "Mixed (both types)"),
    ):
        pct = 100.0 * cats[key] / total
        lines.append(f"  {label:<28}{cats[key]:>9}  {pct:>9.1f}%")
    lines.append(f"  {'Total':<28}{cats['total']:>9}  {100.0 if cats['total'] else 0.0:>9.1f}%")
    lines.append("")

    imp = report.get("improvement")
    lines.append("Improvement trajectories")
    if imp is None:
        lines.append("  (no project has two or more scores)")
    else:
        lines.append(f"  {'Metric':<42}{'Mean':>9}  {'95% CI':>18}")
        rows = (
            ("Absolute improvement (points)", "mean_absolute", "ci95_absolute"),
            ("Relative improvement (%)", "mean_relative", "ci95_relative"),
            ("Per-iteration improvement (points)", "mean_per_iteration", "ci95_per_iteration"),
            ("Mean iterations to convergence", "mean_iterations", "ci95_iterations"),
        )
        for label, mean_key, ci_key in rows:
            low, high = imp[ci_key]
            lines.append(
                f"  {label:<42}{imp[mean_key]:>9.2f}  [{low:>7.2f}, {high:>7.2f}]"
            )
        lines.append(f"  projects included: {imp['n_projects']}")
    lines.append("")

    cost = report["cost"]
    lines.append("Cost")
    lines.append(f"  total USD        {cost['total_usd']:.2f}")
    for status, mean in sorted(cost["mean_usd_by_status"].items()):
        lines.append(f"  mean USD ({status:<9}) {mean:.2f}")
    lines.append(f"  total tokens     {cost['total_tokens']}")
    lines.append(f"  cache share      {cost['cache_share_pct']:.1f}%")
    lines.append("")

    lines.append("Status breakdown")
    for status, count in sorted(report["status_breakdown"].items()):
        lines.append(f"  {status:<10} {count}")
    lines.append("")

    lines.append("Definitions")
    for key, text in report["definitions"].items():
        lines.append(f"  {key}: {text}")
    return "\n".join(lines)
