"""Append-only JSON-lines event log.

Every catalogue mutation, tool invocation/denial, agent observation and
workflow transition lands here; metrics and replay assertions are derived
from this log rather than from in-memory state. Records are single-line
JSON objects {seq, timestamp, kind, actor, doc_id, detail} with seq a
strictly increasing integer starting at 1.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional

Clock = Callable[[], float]


def system_clock() -> float:
    return time.time()


class LogicalClock:
    """Deterministic clock for replays: 0.0, 1.0, 2.0, ..."""

    def __init__(self, start: float = 0.0, step: float = 1.0) -> None:
        self._next = start
        self._step = step
        self._lock = threading.Lock()

    def __call__(self) -> float:
        with self._lock:
            value = self._next
            self._next += self._step
        return value


@dataclass(frozen=True)
class EventRecord:
    seq: int
    timestamp: float
    kind: str
    actor: str
    doc_id: Optional[str]
    detail: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return {
            "seq": self.seq,
            "timestamp": self.timestamp,
            "kind": self.kind,
            "actor": self.actor,
            "doc_id": self.doc_id,
            "detail": self.detail,
        }


class EventLog:
    """Single-writer append-only log backed by a JSONL file.

    Concurrent readers are safe: reads snapshot the in-memory mirror under
    the same lock that serialises appends.
    """

    def __init__(self, path: Path, clock: Clock = system_clock) -> None:
        self.path = Path(path)
        self.clock = clock
        self._lock = threading.Lock()
        self._records: list[EventRecord] = []
        if self.path.exists():
            self._load()

    def _load(self) -> None:
        with self.path.open("r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                raw = json.loads(line)
                self._records.append(
                    EventRecord(
                        seq=raw["seq"],
                        timestamp=raw["timestamp"],
                        kind=raw["kind"],
                        actor=raw["actor"],
                        doc_id=raw.get("doc_id"),
                        detail=raw.get("detail") or {},
                    )
                )

    def record(
        self,
        kind: str,
        actor: str,
        doc_id: Optional[str] = None,
        detail: Optional[dict[str, Any]] = None,
    ) -> EventRecord:
        with self._lock:
            rec = EventRecord(
                seq=len(self._records) + 1,
                timestamp=self.clock(),
                kind=kind,
                actor=actor,
                doc_id=doc_id,
                detail=detail or {},
            )
            self._records.append(rec)
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(json.dumps(rec.to_dict(), ensure_ascii=False))
                fh.write("\n")
        return rec

    def read_all(self) -> list[dict[str, Any]]:
        with self._lock:
            return [r.to_dict() for r in self._records]

    def read_since(self, seq: int) -> list[dict[str, Any]]:
        """Records with seq strictly greater than the given value."""
        with self._lock:
            return [r.to_dict() for r in self._records if r.seq > seq]

    def __len__(self) -> int:
        with self._lock:
            return len(self._records)
