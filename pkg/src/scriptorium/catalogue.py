"""Persistent document catalogue with visibility-scoped listings.

Layer 1 of the engine. Documents live in a catalogue directory: one UTF-8
content file per document (filename = document id), a single JSON metadata
index, and the append-only event log. Visibility levels partition the
catalogue into six listings; reads never expose content bodies, and
visibility changes only happen through ``promote``.
"""

from __future__ import annotations

import os
import json
import threading
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Optional

from .errors import EmptyDocument, NotPermitted, UnknownDocument
from .events import Clock, EventLog, system_clock
from .roles import Actor, AgentRole, USER, actor_name, as_role

INDEX_FILE = "index.json"
EVENTS_FILE = "events.jsonl"


class VisibilityLevel(str, Enum):
    """The six visibility levels regulating information flow."""

    PUBLIC = "public"
    CANDIDATE = "candidate"
    DRAFT = "draft"
    FEEDBACK = "feedback"
    CRITIC = "critic"
    ARCHIVE = "archive"


@dataclass
class DocumentMetadata:
    """Provenance and classification carried by every document."""

    source_type: str = ""
    classification: str = ""
    authorship: str = ""
    created_at: float = 0.0
    updated_at: float = 0.0
    keywords: list[str] = field(default_factory=list)
    group: str = ""
    project_id: Optional[str] = None
    iteration: Optional[int] = None
    verdict: Optional[str] = None
    critic_score: Optional[int] = None

    def validate(self) -> None:
        if self.created_at > self.updated_at:
            raise ValueError("created_at must not exceed updated_at")
        if (self.project_id is None) != (self.iteration is None):
            raise ValueError("iteration present iff project_id present")
        if self.iteration is not None and self.iteration < 0:
            raise ValueError("iteration must be non-negative")
        if self.critic_score is not None and not 0 <= self.critic_score <= 100:
            raise ValueError("critic_score must be in [0, 100]")

    def to_dict(self) -> dict[str, Any]:
        return {
            "source_type": self.source_type,
            "classification": self.classification,
            "authorship": self.authorship,
            "created_at": self.created_at,
            "updated_at": self.updated_at,
            "keywords": list(self.keywords),
            "group": self.group,
            "project_id": self.project_id,
            "iteration": self.iteration,
            "verdict": self.verdict,
            "critic_score": self.critic_score,
        }

    @classmethod
    def from_dict(cls, raw: dict[str, Any]) -> "DocumentMetadata":
        return cls(
            source_type=raw.get("source_type", ""),
            classification=raw.get("classification", ""),
            authorship=raw.get("authorship", ""),
            created_at=raw.get("created_at", 0.0),
            updated_at=raw.get("updated_at", 0.0),
            keywords=list(raw.get("keywords") or []),
            group=raw.get("group", ""),
            project_id=raw.get("project_id"),
            iteration=raw.get("iteration"),
            verdict=raw.get("verdict"),
            critic_score=raw.get("critic_score"),
        )


@dataclass(frozen=True)
class Document:
    id: str
    title: str
    content: str
    visibility: VisibilityLevel
    metadata: DocumentMetadata


@dataclass(frozen=True)
class DocumentSummary:
    """Listing entry: identity and metadata, never the content body."""

    id: str
    title: str
    metadata: DocumentMetadata

    def to_dict(self) -> dict[str, Any]:
        return {"id": self.id, "title": self.title, "metadata": self.metadata.to_dict()}


# Scalar metadata fields usable in equality filters; "keywords" filters by
# containment instead.
_FILTERABLE = (
    "source_type",
    "classification",
    "authorship",
    "group",
    "project_id",
    "iteration",
    "verdict",
    "critic_score",
)

# Visibility levels agents may write documents at. CRITIC routing documents
# are writable only by Concierge and Commutator; CANDIDATE/PUBLIC material
# enters through the user.
_AGENT_WRITABLE: dict[VisibilityLevel, frozenset[AgentRole]] = {
    VisibilityLevel.PUBLIC: frozenset(),
    VisibilityLevel.CANDIDATE: frozenset(),
    VisibilityLevel.DRAFT: frozenset(AgentRole),
    VisibilityLevel.FEEDBACK: frozenset(AgentRole),
    VisibilityLevel.CRITIC: frozenset({AgentRole.CONCIERGE, AgentRole.COMMUTATOR}),
    VisibilityLevel.ARCHIVE: frozenset(),
}


class Catalogue:
    """Document store over a directory, with serialized writes.

    All operations are atomic at the single-document level: the content
    file is written before the index, and index rewrites go through a
    temp-file rename.
    """

    def __init__(
        self,
        root: Path | str,
        clock: Clock = system_clock,
        id_factory: Optional[Callable[[], str]] = None,
        events: Optional[EventLog] = None,
    ) -> None:
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)
        self.clock = clock
        self._id_factory = id_factory or _random_id
        self.events = events or EventLog(self.root / EVENTS_FILE, clock=clock)
        self._lock = threading.RLock()
        self._index: dict[str, dict[str, Any]] = {}
        index_path = self.root / INDEX_FILE
        if index_path.exists():
            self._index = json.loads(index_path.read_text(encoding="utf-8"))

    # -- operations ----------------------------------------------------

    def create_document(
        self,
        title: str,
        content: str,
        meta: Optional[DocumentMetadata] = None,
        visibility: VisibilityLevel = VisibilityLevel.CANDIDATE,
        actor: Actor = USER,
    ) -> str:
        if not content.strip():
            raise EmptyDocument("document content is empty")
        role = as_role(actor)
        if role is not None and role not in _AGENT_WRITABLE[visibility]:
            raise NotPermitted(
                f"{role.value} may not create documents at {visibility.value}"
            )
        meta = meta or DocumentMetadata()
        now = self.clock()
        meta.created_at = now
        meta.updated_at = now
        meta.validate()
        with self._lock:
            doc_id = self._id_factory()
            while doc_id in self._index:
                doc_id = self._id_factory()
            (self.root / doc_id).write_text(content, encoding="utf-8")
            self._index[doc_id] = {
                "title": title,
                "visibility": visibility.value,
                "metadata": meta.to_dict(),
            }
            self._flush_index()
            self.events.record(
                "document_created",
                actor_name(actor),
                doc_id,
                {"title": title, "visibility": visibility.value},
            )
        return doc_id

    def get(self, doc_id: str) -> Document:
        with self._lock:
            entry = self._entry(doc_id)
            content = (self.root / doc_id).read_text(encoding="utf-8")
            return Document(
                id=doc_id,
                title=entry["title"],
                content=content,
                visibility=VisibilityLevel(entry["visibility"]),
                metadata=DocumentMetadata.from_dict(entry["metadata"]),
            )

    def exists(self, doc_id: str) -> bool:
        with self._lock:
            return doc_id in self._index

    def list_for(
        self,
        visibility: VisibilityLevel,
        scope: Optional[str] = None,
    ) -> list[DocumentSummary]:
        """Summaries of exactly the documents at the given visibility.

        DRAFT and FEEDBACK listings are project working material, so a
        scope narrows them to one project; scope is ignored elsewhere.
        """
        scoped = scope is not None and visibility in (
            VisibilityLevel.DRAFT,
            VisibilityLevel.FEEDBACK,
        )
        out: list[DocumentSummary] = []
        with self._lock:
            for doc_id, entry in self._index.items():
                if entry["visibility"] != visibility.value:
                    continue
                meta = DocumentMetadata.from_dict(entry["metadata"])
                if scoped and meta.project_id != scope:
                    continue
                out.append(DocumentSummary(doc_id, entry["title"], meta))
        # canonical creation order, independent of index iteration order
        out.sort(key=lambda s: (s.metadata.created_at, s.id))
        return out

    def promote(self, doc_id: str, to: VisibilityLevel, actor: Actor) -> Document:
        role = as_role(actor)
        with self._lock:
            entry = self._entry(doc_id)
            current = VisibilityLevel(entry["visibility"])
            if current == to:
                return self.get(doc_id)
            if role is not None:
                archival_by_curator = (
                    to == VisibilityLevel.ARCHIVE and role == AgentRole.CURATOR
                )
                if not archival_by_curator:
                    raise NotPermitted(
                        f"{role.value} may not promote documents to {to.value}"
                    )
            entry["visibility"] = to.value
            entry["metadata"]["updated_at"] = self.clock()
            self._flush_index()
            self.events.record(
                "document_promoted",
                actor_name(actor),
                doc_id,
                {"from": current.value, "to": to.value},
            )
            return self.get(doc_id)

    def query_metadata(self, filter: Optional[dict[str, Any]] = None) -> list[DocumentMetadata]:
        """Metadata records matching all filter clauses; content never loads.

        Scalar fields match by equality; "keywords" matches documents whose
        keyword list contains the given value.
        """
        filter = filter or {}
        out: list[DocumentMetadata] = []
        with self._lock:
            for entry in self._index.values():
                meta = DocumentMetadata.from_dict(entry["metadata"])
                if self._matches(meta, filter):
                    out.append(meta)
        return out

    @staticmethod
    def _matches(meta: DocumentMetadata, filter: dict[str, Any]) -> bool:
        for key, wanted in filter.items():
            if key == "keywords":
                if wanted not in meta.keywords:
                    return False
            elif key in _FILTERABLE:
                if getattr(meta, key) != wanted:
                    return False
            else:
                return False
        return True

    def enrich_metadata(
        self, doc_id: str, updates: dict[str, Any], actor: Actor
    ) -> Document:
        """Merge metadata fields; keywords union, scalars replace."""
        role = as_role(actor)
        if role is not None and role != AgentRole.CURATOR:
            raise NotPermitted(f"{role.value} may not enrich metadata")
        with self._lock:
            entry = self._entry(doc_id)
            meta = entry["metadata"]
            applied: dict[str, Any] = {}
            for key, value in updates.items():
                if key == "keywords":
                    merged = list(meta.get("keywords") or [])
                    for kw in value:
                        if kw not in merged:
                            merged.append(kw)
                    meta["keywords"] = merged
                    applied[key] = merged
                elif key in _FILTERABLE:
                    meta[key] = value
                    applied[key] = value
            meta["updated_at"] = self.clock()
            DocumentMetadata.from_dict(meta).validate()
            self._flush_index()
            self.events.record(
                "metadata_enriched", actor_name(actor), doc_id, {"fields": applied}
            )
            return self.get(doc_id)

    def record_outcome(
        self,
        doc_id: str,
        verdict: Optional[str] = None,
        critic_score: Optional[int] = None,
    ) -> None:
        """Engine bookkeeping: stamp verification results onto a document.

        Not part of the user-facing surface; bypasses actor policy because
        the orchestrator, not an agent, owns workflow provenance.
        """
        with self._lock:
            entry = self._entry(doc_id)
            if verdict is not None:
                entry["metadata"]["verdict"] = verdict
            if critic_score is not None:
                entry["metadata"]["critic_score"] = critic_score
            entry["metadata"]["updated_at"] = self.clock()
            self._flush_index()

    # -- internals -----------------------------------------------------

    def _entry(self, doc_id: str) -> dict[str, Any]:
        entry = self._index.get(doc_id)
        if entry is None:
            raise UnknownDocument(doc_id)
        return entry

    def _flush_index(self) -> None:
        tmp = self.root / (INDEX_FILE + ".tmp")
        tmp.write_text(
            json.dumps(self._index, ensure_ascii=False, sort_keys=True, indent=1),
            encoding="utf-8",
        )
        os.replace(tmp, self.root / INDEX_FILE)


def _random_id() -> str:
    return os.urandom(16).hex()


def seeded_id_factory(rng) -> Callable[[], str]:
    """128-bit ids from a seeded random.Random, for deterministic replays."""

    def factory() -> str:
        return f"{rng.getrandbits(128):032x}"

    return factory
