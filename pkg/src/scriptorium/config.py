"""Engine settings: one JSON config file plus environment overrides.

Environment variables SCRIPTORIUM_CONFIG (config path) and
SCRIPTORIUM_ADDR (listen address) override the file; everything else
lives in the file itself.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .agents import FeedbackPolicy, HttpBackend, HttpBackendConfig, ScenarioScript, ScriptedBackend
from .compression import CompressionPolicy, Prices
from .provisioning import load_grant_table
from .workflow import Engine, WorkflowConfig

CONFIG_ENV = "SCRIPTORIUM_CONFIG"
ADDR_ENV = "SCRIPTORIUM_ADDR"
SERVER_ENV = "SCRIPTORIUM_SERVER"

DEFAULT_ADDR = "127.0.0.1:8466"


@dataclass
class EngineSettings:
    catalogue_dir: str = "catalogue"
    listen_addr: str = DEFAULT_ADDR
    seed: Optional[int] = None
    metrics_seed: int = 20260810
    prices: Prices = field(default_factory=Prices)
    feedback_max_words: int = 1000
    compression: CompressionPolicy = field(default_factory=CompressionPolicy)
    workflow: WorkflowConfig = field(default_factory=WorkflowConfig)
    backend: Optional[dict[str, Any]] = None
    grant_table_path: Optional[str] = None

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> "EngineSettings":
        prices_raw = raw.get("prices", {})
        compression_raw = raw.get("compression", {})
        return cls(
            catalogue_dir=raw.get("catalogue_dir", "catalogue"),
            listen_addr=raw.get("listen_addr", DEFAULT_ADDR),
            seed=raw.get("seed"),
            metrics_seed=raw.get("metrics_seed", 20260810),
            prices=Prices(
                input_per_token=prices_raw.get("input_per_token", 0.0),
                output_per_token=prices_raw.get("output_per_token", 0.0),
                cached_input_multiplier=prices_raw.get("cached_input_multiplier", 0.1),
            ),
            feedback_max_words=raw.get("feedback_max_words", 1000),
            compression=CompressionPolicy(
                trigger_ratio=compression_raw.get("trigger_ratio", 0.75),
                budget_signal_ratio=compression_raw.get("budget_signal_ratio", 0.90),
            ),
            workflow=WorkflowConfig.from_dict(raw.get("workflow", {})),
            backend=raw.get("backend"),
            grant_table_path=raw.get("grant_table_path"),
        )


def load_settings(path: Optional[str] = None) -> EngineSettings:
    path = path or os.environ.get(CONFIG_ENV)
    if path:
        settings = EngineSettings.from_dict(
            json.loads(Path(path).read_text(encoding="utf-8"))
        )
    else:
        settings = EngineSettings()
    addr = os.environ.get(ADDR_ENV)
    if addr:
        settings.listen_addr = addr
    return settings


def build_engine(settings: EngineSettings) -> Engine:
    grant_table = (
        load_grant_table(settings.grant_table_path) if settings.grant_table_path else None
    )
    return Engine(
        settings.catalogue_dir,
        seed=settings.seed,
        prices=settings.prices,
        feedback_policy=FeedbackPolicy(max_words=settings.feedback_max_words),
        compression_policy=settings.compression,
        grant_table=grant_table,
        metrics_seed=settings.metrics_seed,
        default_config=settings.workflow,
    )


def default_backend(settings: EngineSettings, engine: Engine):
    """Fresh backend per project from the configured default, or None."""
    raw = settings.backend
    if not raw:
        return None
    kind = raw.get("type")
    if kind == "http":
        return HttpBackend(HttpBackendConfig.from_dict(raw), engine.gateway.table)
    if kind == "scripted":
        return ScriptedBackend(ScenarioScript.from_file(raw["scenario"]))
    raise ValueError(f"unknown backend type {kind!r}")
