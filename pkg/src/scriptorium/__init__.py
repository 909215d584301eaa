"""Compartmentalised multi-agent composition engine.

Three layers: a document catalogue with visibility-scoped listings, a
capability gateway that makes role compartmentalisation structural, and a
workflow state machine that gates every draft through substantiation and
blind quality review until it clears the convergence threshold.
"""

from .agents import (
    AgentAction,
    ClarificationRequest,
    CompressionSummary,
    CurationUpdate,
    DraftSubmission,
    FeedbackPolicy,
    HttpBackend,
    HttpBackendConfig,
    Route,
    RouteChoice,
    ScenarioScript,
    ScoreReport,
    ScriptedBackend,
    Verdict,
    VerdictReport,
    clamp_feedback,
)
from .catalogue import Catalogue, Document, DocumentMetadata, DocumentSummary, VisibilityLevel
from .compression import (
    BudgetWarning,
    CompressionPolicy,
    Prices,
    TokenLedger,
    budget_signal,
    default_estimator,
    estimate_tokens,
    maybe_compress,
)
from .events import EventLog, EventRecord, LogicalClock
from .metrics import (
    ImprovementStats,
    VerdictCategory,
    cost_report,
    improvement_stats,
    project_verdict_category,
    verdict_distribution,
)
from .provisioning import (
    DEFAULT_GRANT_TABLE,
    REGISTRY_TOOLS,
    CapabilitySet,
    ToolGateway,
    ToolResult,
    grants_for,
)
from .roles import AgentRole, USER
from .workflow import (
    ClarificationTicket,
    Engine,
    GraphState,
    IterationOutcome,
    ProjectStatus,
    WorkflowConfig,
    generate_project_id,
)

__version__ = "0.1.0"
