from __future__ import annotations

from typing import Optional, Sequence

import pytest

from scriptorium.agents import (
    DraftSubmission,
    RouteChoice,
    ScenarioScript,
    ScoreReport,
    ScriptedBackend,
    Verdict,
    VerdictReport,
)
from scriptorium.events import LogicalClock
from scriptorium.roles import AgentRole
from scriptorium.workflow import Engine, WorkflowConfig

# One scripted iteration: None means a FABRICATED verdict (no score), an
# int means SUBSTANTIATED followed by that Critic score.
IterationSpec = Optional[int]


def make_script(
    iterations: Sequence[IterationSpec],
    name: str = "generated",
    route: str = "compose",
    feedback_marker: str = "FB",
) -> ScenarioScript:
    queues: dict[AgentRole, list] = {
        AgentRole.COMMUTATOR: [RouteChoice(route=route)],
        AgentRole.COMPOSER: [],
        AgentRole.CORROBORATOR: [],
        AgentRole.CRITIC: [],
    }
    for k, spec in enumerate(iterations, start=1):
        queues[AgentRole.COMPOSER].append(
            DraftSubmission(title=f"draft {k}", content=f"draft body for iteration {k}")
        )
        if spec is None:
            queues[AgentRole.CORROBORATOR].append(
                VerdictReport(
                    verdict=Verdict.FABRICATED,
                    rationale=f"{feedback_marker}-{k} unsupported claims",
                )
            )
        else:
            queues[AgentRole.CORROBORATOR].append(
                VerdictReport(
                    verdict=Verdict.SUBSTANTIATED,
                    rationale=f"claims check out at iteration {k}",
                )
            )
            queues[AgentRole.CRITIC].append(
                ScoreReport(score=spec, feedback=f"{feedback_marker}-{k} quality notes")
            )
    return ScenarioScript(name=name, queues=queues)


def make_engine(tmp_path, *, seed: int = 7, deterministic: bool = False, **kwargs) -> Engine:
    if deterministic:
        kwargs.setdefault("clock", LogicalClock())
    return Engine(tmp_path / "catalogue", seed=seed, **kwargs)


def run_scripted(
    engine: Engine,
    iterations: Sequence[IterationSpec],
    config: Optional[WorkflowConfig] = None,
    source_text: str = "reference notes",
    **script_kwargs,
):
    """Start and finish one scripted project; returns (project_id, backend)."""
    source = engine.ingest_document("source", source_text)
    backend = ScriptedBackend(make_script(iterations, **script_kwargs))
    project_id = engine.start_project("compose a short report", [source], config, backend)
    engine.run_project(project_id, timeout=30)
    return project_id, backend


@pytest.fixture
def engine(tmp_path) -> Engine:
    return make_engine(tmp_path)
